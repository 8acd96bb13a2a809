#include "frattini/kernels.hpp"

namespace frattini::kernels {

namespace {

void compose_scalar(Point const *p, Point const *q, Point *out, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i)
    out[i] = q[p[i]];
}

void invert_scalar(Point const *p, Point *out, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i)
    out[p[i]] = static_cast<Point>(i);
}

void conjugate_scalar(Point const *x, Point const *g, Point *out, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i)
    out[g[i]] = g[x[i]];
}

bool is_identity_scalar(Point const *p, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != i)
      return false;
  }
  return true;
}

bool equal_scalar(Point const *a, Point const *b, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i])
      return false;
  }
  return true;
}

constexpr KernelTable scalar{
  Isa::scalar,
  compose_scalar,
  invert_scalar,
  conjugate_scalar,
  is_identity_scalar,
  equal_scalar,
};

} // namespace

KernelTable const &scalar_table()
{
  return scalar;
}

} // namespace frattini::kernels
