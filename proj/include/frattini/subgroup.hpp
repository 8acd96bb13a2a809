#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frattini/group.hpp"
#include "frattini/perm.hpp"

namespace frattini {

/**
 * Canonical fingerprint of a set of elements of one parent group: a bitset
 * over the parent's element table, element 0 in the most significant bit of
 * the first word. Ordering the words lexicographically matches ordering the
 * hex rendering.
 */
class Fingerprint
{
public:
  Fingerprint() = default;
  explicit Fingerprint(std::size_t universe);

  void set(ElementIndex i);
  bool test(ElementIndex i) const;
  std::size_t count() const;
  std::size_t universe() const { return _universe; }

  std::string hex() const;

  friend bool operator==(Fingerprint const &, Fingerprint const &) = default;
  friend auto operator<=>(Fingerprint const &a, Fingerprint const &b)
  {
    return a._words <=> b._words;
  }

  std::size_t hash() const;

private:
  std::size_t _universe = 0;
  std::vector<std::uint64_t> _words;
};

class Subgroup;
std::vector<Subgroup> all_subgroups(Group const &G, std::size_t cap);

/// A subgroup of a parent Group, stored as a set of parent element indices.
class Subgroup
{
public:
  /// The trivial subgroup of `parent`.
  explicit Subgroup(Group parent);

  Group const &parent() const { return _parent; }
  std::span<Permutation const> generators() const { return _generators; }
  /// Parent indices of the members, ascending (i.e. canonical order).
  std::span<ElementIndex const> element_indices() const { return _members; }
  std::vector<Permutation> elements() const;
  std::uint64_t order() const { return _members.size(); }
  Fingerprint const &fingerprint() const { return _fingerprint; }

  bool contains(Permutation const &p) const;
  bool contains_index(ElementIndex i) const { return _fingerprint.test(i); }

  /// Same parent and same element set.
  friend bool operator==(Subgroup const &a, Subgroup const &b)
  {
    return a._parent.same_as(b._parent) && a._fingerprint == b._fingerprint;
  }

  /// Closure of parent elements given by index. Generators are kept as given.
  static Subgroup generated_by_indices(Group const &parent,
                                       std::span<ElementIndex const> gens);

  /// Wraps a set already known to be a subgroup; picks a small generating
  /// set greedily in canonical order.
  static Subgroup from_member_set(Group const &parent, Fingerprint const &members);

private:
  Subgroup(Group parent, std::vector<Permutation> gens, std::vector<ElementIndex> members);
  friend std::vector<Subgroup> all_subgroups(Group const &, std::size_t);

  Group _parent;
  std::vector<Permutation> _generators;
  std::vector<ElementIndex> _members;
  Fingerprint _fingerprint;
};

/// Canonical ordering used for every list of subgroups: (order, fingerprint).
bool canonical_less(Subgroup const &a, Subgroup const &b);

/// <gens> as a subgroup of G. Throws MembershipError for a generator outside G.
Subgroup generated_subgroup(Group const &G, std::span<Permutation const> gens);

/// G viewed as a subgroup of itself.
Subgroup whole_group(Group const &G);

/// Builds a standalone Group on H's generators.
Group as_group(Subgroup const &H);

/// N_G(H) = { g in G : H^g = H }, by scanning every element of G.
Subgroup normalizer(Group const &G, Subgroup const &H);

/// N_A(H) for an arbitrary subgroup A of the common parent.
Subgroup normalizer(Subgroup const &ambient, Subgroup const &H);

struct ProductSet
{
  Fingerprint members;
  std::uint64_t size = 0;
  bool covers_parent = false;
};

/// { a b : a in A, b in B }, products read left to right.
ProductSet product_set(Subgroup const &A, Subgroup const &B);

Subgroup intersection(Subgroup const &A, Subgroup const &B);
std::uint64_t intersection_order(Subgroup const &A, Subgroup const &B);

/// Conjugates every generator of K by every generator of G.
bool is_normal(Group const &G, Subgroup const &K);

/// H^g, generated by the conjugated generators of H.
Subgroup conjugate_subgroup(Subgroup const &H, Permutation const &g);

/// All subgroups of G, each once, sorted canonically. Throws CapExceeded if
/// |G| > cap.
std::vector<Subgroup> all_subgroups(Group const &G, std::size_t cap = 512);

/// Throws MembershipError unless K's parent is G.
void require_parent(Group const &G, Subgroup const &K, char const *what);

} // namespace frattini

template<>
struct std::hash<frattini::Fingerprint>
{
  std::size_t operator()(frattini::Fingerprint const &f) const { return f.hash(); }
};
