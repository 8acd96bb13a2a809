#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frattini/subgroup.hpp"

namespace frattini {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of the prime p dividing n. Throws PreconditionError if p is
/// not prime or n is zero.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// True iff n is a power of p (including p^0 = 1).
bool is_power_of(std::uint64_t n, std::uint64_t p);

/**
 * A Sylow p-subgroup of K, with the same parent group as K.
 *
 * Starts from the p-power part of the canonically first element whose order
 * is divisible by p, then climbs: inside N_K(P) it takes the canonically
 * first p-element y outside P, replaces y by the last power y^(p^j) still
 * outside P (so y^p lies in P), and sets P = <P, y>. Each round multiplies
 * |P| by p; a round without progress is reported as InternalError.
 */
Subgroup sylow_subgroup(Subgroup const &K, std::uint64_t p);

/// Every Sylow p-subgroup of K: the K-conjugation orbit of sylow_subgroup(K, p),
/// sorted canonically.
std::vector<Subgroup> all_sylow(Subgroup const &K, std::uint64_t p);

struct SylowClass
{
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  Subgroup representative;
  std::vector<Subgroup> conjugates;

  std::size_t count() const { return conjugates.size(); }
  std::uint64_t sylow_order() const;
};

/// One class per prime dividing |K|, primes ascending. Empty for |K| = 1.
std::vector<SylowClass> sylow_classes(Subgroup const &K);

/// P_1, ..., P_n: every Sylow subgroup of K, grouped by ascending prime.
/// Position i - 1 holds P_i.
std::vector<Subgroup> sylow_family(std::span<SylowClass const> classes);

/// True iff the Sylow subgroups together generate K.
bool sylows_generate(Subgroup const &K, std::span<SylowClass const> classes);

} // namespace frattini
