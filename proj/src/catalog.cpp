#include "frattini/catalog.hpp"

#include <array>
#include <charconv>
#include <numeric>
#include <optional>

#include "frattini/error.hpp"

namespace frattini {

namespace {

Permutation from_images(std::vector<Point> images)
{
  return Permutation(std::move(images));
}

Permutation long_cycle(std::size_t n)
{
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((i + 1) % n);
  return from_images(std::move(images));
}

Permutation transposition(std::size_t n, Point a, Point b)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::swap(images[a], images[b]);
  return from_images(std::move(images));
}

void require_positive(std::size_t n, char const *what)
{
  if (n == 0)
    throw PreconditionError(std::string(what) + ": n must be positive");
}

// Quaternion units as (sign, unit) with unit 0..3 = 1, i, j, k.
struct Quaternion
{
  int sign;
  int unit;
};

Quaternion multiply(Quaternion a, Quaternion b)
{
  // unit_table[a][b] = {sign, unit} of e_a e_b.
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_table{{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  auto const [s, u] = unit_table[a.unit][b.unit];
  return {a.sign * b.sign * s, u};
}

Point label(Quaternion q)
{
  return static_cast<Point>(2 * q.unit + (q.sign < 0 ? 1 : 0));
}

/// x -> x q on the 8 labels.
Permutation right_regular(Quaternion q)
{
  std::vector<Point> images(8);
  for (int unit = 0; unit < 4; ++unit) {
    for (int sign : {1, -1}) {
      Quaternion const x{sign, unit};
      images[label(x)] = label(multiply(x, q));
    }
  }
  return from_images(std::move(images));
}

struct FactorName
{
  char kind; ///< 'S', 'A', 'C', 'D' or 'Q'
  std::size_t n;
};

std::optional<FactorName> parse_factor(std::string_view name)
{
  if (name == "Q8")
    return FactorName{'Q', 8};
  if (name.size() < 2)
    return std::nullopt;

  char const kind = name.front();
  if (kind != 'S' && kind != 'A' && kind != 'C' && kind != 'D')
    return std::nullopt;

  std::size_t n = 0;
  auto const digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0)
    return std::nullopt;
  return FactorName{kind, n};
}

std::optional<std::vector<FactorName>> parse_builtin(std::string_view name)
{
  std::vector<FactorName> factors;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    std::size_t end = name.find('x', pos);
    if (end == std::string_view::npos)
      end = name.size();
    auto factor = parse_factor(name.substr(pos, end - pos));
    if (!factor)
      return std::nullopt;
    factors.push_back(*factor);
    pos = end + 1;
  }
  return factors;
}

Group build_factor(FactorName f)
{
  switch (f.kind) {
  case 'S': return make_symmetric(f.n);
  case 'A': return make_alternating(f.n);
  case 'C': return make_cyclic(f.n);
  case 'D': return make_dihedral(f.n);
  default: return make_quaternion();
  }
}

} // namespace

Group make_symmetric(std::size_t n)
{
  require_positive(n, "make_symmetric");
  if (n == 1)
    return build_group(1, {});
  return build_group(n, {long_cycle(n), transposition(n, 0, 1)});
}

Group make_alternating(std::size_t n)
{
  require_positive(n, "make_alternating");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    images[0] = 1;
    images[1] = static_cast<Point>(i);
    images[i] = 0;
    gens.push_back(from_images(std::move(images)));
  }
  return build_group(n, std::move(gens));
}

Group make_cyclic(std::size_t n)
{
  require_positive(n, "make_cyclic");
  if (n == 1)
    return build_group(1, {});
  return build_group(n, {long_cycle(n)});
}

Group make_dihedral(std::size_t n)
{
  require_positive(n, "make_dihedral");
  if (n == 1)
    return build_group(2, {transposition(2, 0, 1)});
  if (n == 2)
    return build_group(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});

  // Reflection fixing point 1: i -> -i mod n.
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<Point>((n - i) % n);
  return build_group(n, {long_cycle(n), from_images(std::move(images))});
}

Group make_quaternion()
{
  return build_group(8, {right_regular({1, 1}), right_regular({1, 2})});
}

Group direct_product(Group const &G, Group const &H)
{
  std::size_t const dg = G.degree();
  std::size_t const n = dg + H.degree();

  std::vector<Permutation> gens;
  for (auto const &g : G.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point x = 0; x < dg; ++x)
      images[x] = g[x];
    gens.push_back(from_images(std::move(images)));
  }
  for (auto const &h : H.generators()) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point x = 0; x < H.degree(); ++x)
      images[dg + x] = static_cast<Point>(dg + h[x]);
    gens.push_back(from_images(std::move(images)));
  }
  return build_group(n, std::move(gens));
}

Group builtin_group(std::string_view name)
{
  auto const factors = parse_builtin(name);
  if (!factors)
    throw ParseError("unknown builtin group \"" + std::string(name) + "\"");

  Group result = build_factor(factors->front());
  for (std::size_t i = 1; i < factors->size(); ++i)
    result = direct_product(result, build_factor((*factors)[i]));
  return result;
}

bool is_builtin_name(std::string_view name)
{
  return parse_builtin(name).has_value();
}

std::vector<CatalogEntry> default_catalog()
{
  std::vector<std::string> names;
  for (int n = 2; n <= 4; ++n)
    names.push_back("S" + std::to_string(n));
  for (int n = 3; n <= 4; ++n)
    names.push_back("A" + std::to_string(n));
  for (int n = 1; n <= 24; ++n)
    names.push_back("C" + std::to_string(n));
  for (int n = 3; n <= 12; ++n)
    names.push_back("D" + std::to_string(n));
  names.insert(names.end(), {"Q8", "C2xC2xC2", "S3xC2", "A4xC2"});

  std::vector<CatalogEntry> out;
  out.reserve(names.size());
  for (auto &name : names) {
    Group g = builtin_group(name);
    out.push_back(CatalogEntry{std::move(name), std::move(g)});
  }
  return out;
}

} // namespace frattini
