#pragma once

// Inner loops over image arrays. Every kernel has a portable scalar
// reference; wider variants are selected once at runtime from the host
// CPU and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace frattini::kernels {

using Point = std::uint32_t;

enum class Isa
{
  scalar,
  avx2,
};

std::string_view isa_name(Isa isa);

struct KernelTable
{
  Isa isa;

  /// out[i] = q[p[i]]
  void (*compose)(Point const *p, Point const *q, Point *out, std::size_t n);

  /// out[p[i]] = i
  void (*invert)(Point const *p, Point *out, std::size_t n);

  /// out[g[i]] = g[x[i]], i.e. g^-1 x g
  void (*conjugate)(Point const *x, Point const *g, Point *out, std::size_t n);

  /// p[i] == i for all i
  bool (*is_identity)(Point const *p, std::size_t n);

  /// true iff a[i] == b[i] for all i
  bool (*equal)(Point const *a, Point const *b, std::size_t n);
};

KernelTable const &scalar_table();

/// Null when the build or the host CPU lacks the ISA.
KernelTable const *table_for(Isa isa);

/// ISAs usable on this host, scalar first.
std::vector<Isa> available_isas();

/// The table in use. Picks the widest available ISA on first call unless
/// the FRATTINI_KERNELS environment variable names another ("scalar").
KernelTable const &active();

/// Overrides the active table; returns false if `isa` is unavailable.
/// Not meant to race with concurrent kernel calls.
bool select(Isa isa);

namespace detail {

KernelTable const *avx2_table();

} // namespace detail

} // namespace frattini::kernels
