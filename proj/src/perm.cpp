#include "frattini/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "frattini/error.hpp"
#include "frattini/kernels.hpp"

namespace frattini {

namespace {

void require_same_degree(Permutation const &p, Permutation const &q, char const *op)
{
  if (p.degree() != q.degree()) {
    throw DegreeMismatch(std::string(op) + ": degrees " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()) + " differ");
  }
}

} // namespace

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw ParseError("image sequence is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const
{
  return kernels::active().is_identity(_images.data(), _images.size());
}

std::size_t Permutation::hash() const
{
  // FNV-1a over the image words.
  std::uint64_t h = 14695981039346656037ull;
  for (Point x : _images) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  require_same_degree(p, q, "compose");
  std::vector<Point> out(p.degree());
  kernels::active().compose(p._images.data(), q._images.data(), out.data(), out.size());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> out(p.degree());
  kernels::active().invert(p._images.data(), out.data(), out.size());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(Permutation const &x, Permutation const &g)
{
  require_same_degree(x, g, "conjugate");
  std::vector<Point> out(x.degree());
  kernels::active().conjugate(x._images.data(), g._images.data(), out.data(), out.size());
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(Permutation const &p, long long k)
{
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? 0ull - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);

  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

std::vector<std::size_t> cycle_type(Permutation const &p)
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);

  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }

  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t element_order(Permutation const &p)
{
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(p))
    order = std::lcm(order, static_cast<std::uint64_t>(len));
  return order;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  if (degree == 0)
    throw ParseError("degree must be positive");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto fail = [&](std::string const &why) {
    throw ParseError("bad cycle notation \"" + std::string(text) + "\": " + why);
  };

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  if (i == text.size())
    fail("empty input");

  std::vector<Point> cycle;
  while (true) {
    skip_space();
    if (i == text.size())
      break;
    if (text[i] != '(')
      fail("expected '('");
    ++i;

    cycle.clear();
    while (true) {
      skip_space();
      if (i == text.size())
        fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(std::string("unexpected character '") + text[i] + "'");

      unsigned long long value = 0;
      auto const *first = text.data() + i;
      auto const *last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{})
        fail("point out of range");
      i += static_cast<std::size_t>(ptr - first);

      if (value < 1 || value > degree)
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      auto const pt = static_cast<Point>(value - 1);
      if (used[pt])
        fail("point " + std::to_string(value) + " repeated");
      used[pt] = true;
      cycle.push_back(pt);
    }

    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }

  return Permutation(std::move(images));
}

std::string format_cycles(Permutation const &p)
{
  std::string out;
  std::vector<bool> seen(p.degree(), false);

  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start)
      continue;
    out += '(';
    for (Point x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (x != start)
        out += ' ';
      out += std::to_string(x + 1);
    }
    out += ')';
  }

  return out.empty() ? "()" : out;
}

std::vector<Permutation> parse_generator_list(std::string_view text, std::size_t degree)
{
  std::vector<Permutation> gens;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos)
      end = text.size();

    auto item = text.substr(pos, end - pos);
    bool const blank = std::all_of(item.begin(), item.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (!blank)
      gens.push_back(parse_cycles(item, degree));

    pos = end + 1;
  }

  return gens;
}

std::string format_generator_list(std::span<Permutation const> gens)
{
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0)
      out += "; ";
    out += format_cycles(gens[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << format_cycles(p);
}

} // namespace frattini
