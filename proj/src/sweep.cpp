#include "frattini/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "frattini/error.hpp"

namespace frattini {

SweepReport sweep(std::span<CatalogEntry const> sources, SweepOptions const &options)
{
  auto const start = std::chrono::steady_clock::now();

  for (auto const &src : sources) {
    if (src.group.order() > options.max_order) {
      throw CapExceeded("group " + src.name + " has order " +
                        std::to_string(src.group.order()) + " > max order " +
                        std::to_string(options.max_order));
    }
  }

  struct Job
  {
    CatalogEntry const *source;
    Subgroup subgroup;
  };
  std::vector<Job> jobs;
  for (auto const &src : sources) {
    for (auto &K : all_subgroups(src.group, std::max<std::uint64_t>(options.max_order, 1)))
      jobs.push_back(Job{&src, std::move(K)});
  }

  SweepReport report;
  report.cases.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        auto const &job = jobs[i];
        auto const v = converse_verdict(job.source->group, job.subgroup, options.frattini);
        report.cases[i] = SweepCase{job.source->name,   job.source->group.order(),
                                    job.subgroup.fingerprint().hex(), job.subgroup.order(),
                                    v.condition_holds, v.normal, v.consistent};
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };

  unsigned const threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  std::sort(report.cases.begin(), report.cases.end(), [](SweepCase const &a, SweepCase const &b) {
    return std::tie(a.group_name, a.subgroup_order, a.fingerprint) <
           std::tie(b.group_name, b.subgroup_order, b.fingerprint);
  });

  report.totals.groups = sources.size();
  report.totals.subgroups = report.cases.size();
  report.totals.inconsistencies = static_cast<std::size_t>(
    std::count_if(report.cases.begin(), report.cases.end(),
                  [](SweepCase const &c) { return !c.consistent; }));

  report.runtime_seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_sweep_report(SweepReport const &report, bool include_runtime)
{
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };

  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %6s %6s %-9s %-6s %-10s  %s\n", "group", "|G|",
                "|K|", "condition", "normal", "consistent", "fingerprint");
  out += line;

  for (auto const &c : report.cases) {
    std::snprintf(line, sizeof line, "%-10s %6llu %6llu %-9s %-6s %-10s  ",
                  c.group_name.c_str(), static_cast<unsigned long long>(c.group_order),
                  static_cast<unsigned long long>(c.subgroup_order), yes_no(c.condition_holds),
                  yes_no(c.normal), c.consistent ? "yes" : "NO");
    out += line;
    out += c.fingerprint;
    out += '\n';
  }

  std::snprintf(line, sizeof line, "groups %zu  subgroups %zu  inconsistencies %zu\n",
                report.totals.groups, report.totals.subgroups, report.totals.inconsistencies);
  out += line;

  if (include_runtime) {
    std::snprintf(line, sizeof line, "runtime %.3f s\n", report.runtime_seconds);
    out += line;
  }
  return out;
}

} // namespace frattini
