#include "frattini/kernels.hpp"

#include <immintrin.h>

namespace frattini::kernels {

namespace {

constexpr std::size_t lanes = 8;

void compose_avx2(Point const *p, Point const *q, Point *out, std::size_t n)
{
  auto const *base = reinterpret_cast<int const *>(q);

  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(p + i));
    __m256i img = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i *>(out + i), img);
  }

  for (; i < n; ++i)
    out[i] = q[p[i]];
}

// No scatter in AVX2: gather g[x[i]] eight at a time and scatter by hand.
void conjugate_avx2(Point const *x, Point const *g, Point *out, std::size_t n)
{
  auto const *base = reinterpret_cast<int const *>(g);
  alignas(32) Point buf[lanes];

  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(x + i));
    __m256i img = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_store_si256(reinterpret_cast<__m256i *>(buf), img);
    for (std::size_t k = 0; k < lanes; ++k)
      out[g[i + k]] = buf[k];
  }

  for (; i < n; ++i)
    out[g[i]] = g[x[i]];
}

void invert_avx2(Point const *p, Point *out, std::size_t n)
{
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  __m256i const step = _mm256_set1_epi32(static_cast<int>(lanes));
  alignas(32) Point buf[lanes];

  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    _mm256_store_si256(reinterpret_cast<__m256i *>(buf), iota);
    for (std::size_t k = 0; k < lanes; ++k)
      out[p[i + k]] = buf[k];
    iota = _mm256_add_epi32(iota, step);
  }

  for (; i < n; ++i)
    out[p[i]] = static_cast<Point>(i);
}

bool is_identity_avx2(Point const *p, std::size_t n)
{
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  __m256i const step = _mm256_set1_epi32(static_cast<int>(lanes));

  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(p + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(v, iota)) != -1)
      return false;
    iota = _mm256_add_epi32(iota, step);
  }

  for (; i < n; ++i) {
    if (p[i] != i)
      return false;
  }
  return true;
}

bool equal_avx2(Point const *a, Point const *b, std::size_t n)
{
  std::size_t i = 0;
  for (; i + lanes <= n; i += lanes) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<__m256i const *>(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1)
      return false;
  }

  for (; i < n; ++i) {
    if (a[i] != b[i])
      return false;
  }
  return true;
}

constexpr KernelTable avx2{
  Isa::avx2,
  compose_avx2,
  invert_avx2,
  conjugate_avx2,
  is_identity_avx2,
  equal_avx2,
};

} // namespace

namespace detail {

KernelTable const *avx2_table()
{
  return &avx2;
}

} // namespace detail

} // namespace frattini::kernels
