#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frattini/subgroup.hpp"
#include "frattini/sylow.hpp"

namespace frattini {

/// Which Sylow subgroups a report quantifies over.
enum class SylowScope
{
  /// Every Sylow subgroup of K, all primes and all conjugates.
  all_conjugates,
  /// One representative per prime. Equivalent, because N_G(P^k) = N_G(P)^k
  /// and K^k = K for k in K.
  one_per_prime,
};

/// Which order the product set is formed in.
enum class ProductSide
{
  subgroup_first,   ///< K N_G(P)
  normalizer_first, ///< N_G(P) K
};

struct FrattiniOptions
{
  SylowScope scope = SylowScope::all_conjugates;
  ProductSide side = ProductSide::subgroup_first;
};

struct FrattiniEntry
{
  std::uint64_t prime = 0;
  /// 1-based position of the Sylow subgroup in sylow_family().
  std::size_t sylow_index = 0;
  Subgroup sylow;
  std::uint64_t normalizer_order = 0;
  std::uint64_t product_size = 0;
  /// The product set covers G.
  bool holds = false;
};

struct FrattiniReport
{
  std::uint64_t group_order = 0;
  std::uint64_t subgroup_order = 0;
  std::vector<FrattiniEntry> entries;
  /// Conjunction over entries.
  bool condition_holds = true;
  /// K is trivial, so there is nothing to check.
  bool vacuous = false;
};

/**
 * Evaluates G = K N_G(P) for the Sylow subgroups P of K. Only K <= G is
 * assumed. A trivial K gives an empty, vacuously true report. Throws
 * MembershipError if K is not a subgroup of G.
 */
FrattiniReport frattini_condition(Group const &G, Subgroup const &K,
                                  FrattiniOptions const &options = {});

/// Same report for a normal K. Throws PreconditionError if K is not normal
/// and InternalError if any entry fails.
FrattiniReport frattini_forward(Group const &G, Subgroup const &K,
                                FrattiniOptions const &options = {});

struct Verdict
{
  bool condition_holds = false;
  bool normal = false;
  /// condition_holds == normal. A false value is a counterexample.
  bool consistent = false;
  FrattiniReport report;
};

Verdict converse_verdict(Group const &G, Subgroup const &K,
                         FrattiniOptions const &options = {});

/**
 * Writes g = a b with a in N and b in K. a is the canonically first element
 * of N with a^-1 g in K. Throws PreconditionError if g is not in G or no
 * such a exists.
 */
std::pair<Permutation, Permutation> decompose_in_product(Group const &G, Subgroup const &K,
                                                         Subgroup const &N,
                                                         Permutation const &g);

/// One letter of a word over P_1 u ... u P_n.
struct Letter
{
  Permutation element;
  /// 1-based index into sylow_family().
  std::size_t sylow_index = 0;

  friend bool operator==(Letter const &, Letter const &) = default;
};

/**
 * Shortest words for elements of K over the non-identity elements of its
 * Sylow subgroups. Built once per K by breadth-first search of the Cayley
 * graph; letters are tried in canonical order so words are reproducible.
 * A letter lying in several Sylow subgroups is tagged with the first.
 */
class SylowWordTable
{
public:
  SylowWordTable(Subgroup const &K, std::span<Subgroup const> family);

  /// Letters whose left-to-right product is x. Empty for the identity.
  /// Throws MembershipError if x is not in K.
  std::vector<Letter> word(Permutation const &x) const;

  std::size_t max_length() const { return _max_length; }

private:
  struct Edge
  {
    ElementIndex from;
    std::uint32_t letter;
  };

  Subgroup _subgroup;
  std::vector<std::pair<ElementIndex, std::size_t>> _alphabet;
  std::vector<std::optional<Edge>> _edges;
  std::size_t _max_length = 0;
};

/// Convenience form computing the Sylow family on the fly.
std::vector<Letter> sylow_word(Subgroup const &K, Permutation const &x);

} // namespace frattini
