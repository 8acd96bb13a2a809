#include "frattini/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace frattini::kernels {

#ifndef FRATTINI_HAVE_AVX2_TU
namespace detail {

KernelTable const *avx2_table()
{
  return nullptr;
}

} // namespace detail
#endif

namespace {

bool host_has_avx2()
{
#if defined(FRATTINI_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

KernelTable const *initial_table()
{
  if (char const *env = std::getenv("FRATTINI_KERNELS")) {
    std::string const want(env);
    if (want == "scalar")
      return &scalar_table();
    if (want == "avx2") {
      if (auto const *t = table_for(Isa::avx2))
        return t;
    }
  }

  auto const isas = available_isas();
  return table_for(isas.back());
}

std::atomic<KernelTable const *> &current()
{
  static std::atomic<KernelTable const *> table{initial_table()};
  return table;
}

} // namespace

std::string_view isa_name(Isa isa)
{
  switch (isa) {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  }
  return "unknown";
}

KernelTable const *table_for(Isa isa)
{
  switch (isa) {
  case Isa::scalar:
    return &scalar_table();
  case Isa::avx2:
    return host_has_avx2() ? detail::avx2_table() : nullptr;
  }
  return nullptr;
}

std::vector<Isa> available_isas()
{
  std::vector<Isa> out{Isa::scalar};
  if (table_for(Isa::avx2))
    out.push_back(Isa::avx2);
  return out;
}

KernelTable const &active()
{
  return *current().load(std::memory_order_relaxed);
}

bool select(Isa isa)
{
  auto const *t = table_for(isa);
  if (!t)
    return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

} // namespace frattini::kernels
