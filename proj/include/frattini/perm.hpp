#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frattini {

/// Index of a point. Points are 0-based internally and 1-based in text.
using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1}.
 *
 * Products are read left to right: `compose(p, q)` applies p first and then
 * q, so the word x1 x2 ... xn is the permutation obtained by applying x1,
 * then x2, and so on. Conjugation follows the same convention:
 * x^g = g^-1 x g.
 *
 * Permutations are ordered lexicographically by their image sequences; this
 * is the canonical order used for every element table in the library.
 */
class Permutation
{
public:
  /// The identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);

  /// Takes 0-based images; throws ParseError unless they form a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::span<Point const> images() const { return _images; }

  bool is_identity() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &lhs,
                                          Permutation const &rhs)
  {
    if (lhs.degree() != rhs.degree())
      return lhs.degree() <=> rhs.degree();
    return lhs._images <=> rhs._images;
  }

  std::size_t hash() const;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : _images(std::move(images)) {}

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);
  friend Permutation conjugate(Permutation const &, Permutation const &);
  friend Permutation power(Permutation const &, long long);

  std::vector<Point> _images;
};

/// p then q: maps t to q(p(t)).
Permutation compose(Permutation const &p, Permutation const &q);

Permutation inverse(Permutation const &p);

/// x^g = g^-1 x g; relabels the cycles of x by g.
Permutation conjugate(Permutation const &x, Permutation const &g);

/// p^k for any integer k (negative powers invert).
Permutation power(Permutation const &p, long long k);

/// Least k >= 1 with p^k = identity (lcm of the cycle lengths).
std::uint64_t element_order(Permutation const &p);

/// Cycle lengths, one entry per cycle including fixed points, sorted.
std::vector<std::size_t> cycle_type(Permutation const &p);

/**
 * Parses a product of cycles over points 1..degree, e.g. "(1 2 3)(4 5)".
 *
 * Whitespace is allowed anywhere between tokens and "()" is the identity.
 * Cycles must be disjoint; a point repeated anywhere is rejected.
 */
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Disjoint-cycle form with 1-based points; fixed points omitted, "()" for
/// the identity. Cycles start at their smallest point, in ascending order.
std::string format_cycles(Permutation const &p);

/// Parses a ";"-separated list of cycle words. Blank entries are skipped.
std::vector<Permutation> parse_generator_list(std::string_view text,
                                              std::size_t degree);

std::string format_generator_list(std::span<Permutation const> gens);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

} // namespace frattini

template<>
struct std::hash<frattini::Permutation>
{
  std::size_t operator()(frattini::Permutation const &p) const { return p.hash(); }
};
