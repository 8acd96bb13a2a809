#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frattini/catalog.hpp"
#include "frattini/frattini.hpp"

namespace frattini {

struct SweepCase
{
  std::string group_name;
  std::uint64_t group_order = 0;
  std::string fingerprint; ///< Fingerprint::hex() of the subgroup
  std::uint64_t subgroup_order = 0;
  bool condition_holds = false;
  bool normal = false;
  bool consistent = false;
};

struct SweepTotals
{
  std::size_t groups = 0;
  std::size_t subgroups = 0;
  std::size_t inconsistencies = 0;
};

struct SweepReport
{
  /// Sorted by (group name, subgroup order, fingerprint).
  std::vector<SweepCase> cases;
  SweepTotals totals;
  double runtime_seconds = 0.0;
};

struct SweepOptions
{
  std::uint64_t max_order = 48;
  unsigned threads = 1;
  FrattiniOptions frattini;
};

/**
 * Runs converse_verdict on every subgroup of every source group. Throws
 * CapExceeded if a source is larger than max_order. Inconsistent cases are
 * kept in the report and counted, never dropped.
 */
SweepReport sweep(std::span<CatalogEntry const> sources, SweepOptions const &options = {});

/// Fixed-width table, one row per case, followed by the totals. The runtime
/// line is the only part that varies between identical runs.
std::string format_sweep_report(SweepReport const &report, bool include_runtime = true);

} // namespace frattini
