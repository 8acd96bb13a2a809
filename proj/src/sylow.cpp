#include "frattini/sylow.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>

#include "frattini/error.hpp"

namespace frattini {

namespace {

void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
}

ElementIndex index_in(Group const &G, Permutation const &p)
{
  auto idx = G.index_of(p);
  if (!idx)
    throw InternalError("power of a group element left the group");
  return *idx;
}

std::vector<ElementIndex> generator_indices(Subgroup const &H)
{
  std::vector<ElementIndex> out;
  for (auto const &g : H.generators())
    out.push_back(index_in(H.parent(), g));
  return out;
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  require_prime(p);
  if (n == 0)
    throw PreconditionError("p_part: n must be positive");

  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

std::uint64_t SylowClass::sylow_order() const
{
  std::uint64_t q = 1;
  for (unsigned i = 0; i < exponent; ++i)
    q *= prime;
  return q;
}

Subgroup sylow_subgroup(Subgroup const &K, std::uint64_t p)
{
  require_prime(p);
  if (K.order() % p != 0) {
    throw PreconditionError(std::to_string(p) + " does not divide the subgroup order " +
                            std::to_string(K.order()));
  }

  Group const &G = K.parent();
  std::uint64_t const target = p_part(K.order(), p);

  // Cauchy step: p-power component of the first element of order divisible by p.
  std::vector<ElementIndex> gens;
  for (ElementIndex i : K.element_indices()) {
    auto const &x = G.element(i);
    std::uint64_t const m = element_order(x);
    if (m % p == 0) {
      gens.push_back(index_in(G, power(x, static_cast<long long>(m / p_part(m, p)))));
      break;
    }
  }
  if (gens.empty())
    throw InternalError("no element of order divisible by " + std::to_string(p));

  Subgroup P = Subgroup::generated_by_indices(G, gens);

  while (P.order() < target) {
    Subgroup const N = normalizer(K, P);

    std::optional<ElementIndex> climb;
    for (ElementIndex i : N.element_indices()) {
      if (P.contains_index(i) || !is_power_of(element_order(G.element(i)), p))
        continue;

      Permutation y = G.element(i);
      for (Permutation next = power(y, static_cast<long long>(p)); !P.contains(next);
           next = power(y, static_cast<long long>(p))) {
        y = std::move(next);
      }
      climb = index_in(G, y);
      break;
    }

    if (!climb) {
      throw InternalError("Sylow climb stalled at order " + std::to_string(P.order()) +
                          " below " + std::to_string(target));
    }

    std::uint64_t const before = P.order();
    gens.push_back(*climb);
    P = Subgroup::generated_by_indices(G, gens);
    if (P.order() != before * p) {
      throw InternalError("Sylow climb grew from " + std::to_string(before) + " to " +
                          std::to_string(P.order()));
    }
  }

  if (P.order() != target)
    throw InternalError("Sylow climb overshot the p-part");
  return P;
}

namespace {

std::vector<Subgroup> conjugation_orbit(Subgroup const &K, Subgroup const &P)
{
  Group const &G = K.parent();
  auto const conjugators = generator_indices(K);

  std::vector<Subgroup> orbit{P};
  std::unordered_set<Fingerprint> seen{P.fingerprint()};

  for (std::size_t k = 0; k < orbit.size(); ++k) {
    auto const gens = generator_indices(orbit[k]);
    for (ElementIndex c : conjugators) {
      std::vector<ElementIndex> conj;
      conj.reserve(gens.size());
      for (ElementIndex h : gens)
        conj.push_back(G.conjugate_of(h, c));

      Subgroup Q = Subgroup::generated_by_indices(G, conj);
      if (seen.insert(Q.fingerprint()).second)
        orbit.push_back(std::move(Q));
    }
  }

  std::sort(orbit.begin(), orbit.end(), canonical_less);
  return orbit;
}

} // namespace

std::vector<Subgroup> all_sylow(Subgroup const &K, std::uint64_t p)
{
  return conjugation_orbit(K, sylow_subgroup(K, p));
}

std::vector<SylowClass> sylow_classes(Subgroup const &K)
{
  std::vector<SylowClass> out;
  for (std::uint64_t p : prime_divisors(K.order())) {
    std::uint64_t const q = p_part(K.order(), p);
    unsigned exponent = 0;
    for (std::uint64_t t = q; t > 1; t /= p)
      ++exponent;

    Subgroup representative = sylow_subgroup(K, p);
    auto conjugates = conjugation_orbit(K, representative);
    out.push_back(SylowClass{p, exponent, std::move(representative), std::move(conjugates)});
  }
  return out;
}

std::vector<Subgroup> sylow_family(std::span<SylowClass const> classes)
{
  std::vector<Subgroup> family;
  for (auto const &c : classes)
    family.insert(family.end(), c.conjugates.begin(), c.conjugates.end());
  return family;
}

bool sylows_generate(Subgroup const &K, std::span<SylowClass const> classes)
{
  Group const &G = K.parent();
  std::vector<ElementIndex> gens;
  for (auto const &P : sylow_family(classes)) {
    for (auto const &h : P.generators())
      gens.push_back(index_in(G, h));
  }
  return Subgroup::generated_by_indices(G, gens) == K;
}

} // namespace frattini
