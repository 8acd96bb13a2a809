#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "frattini/perm.hpp"

namespace frattini {

/// Position of an element in its group's canonical element table.
using ElementIndex = std::uint32_t;

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/**
 * A finite permutation group together with its full element table.
 *
 * The table is sorted canonically (lexicographic image order), so index 0 is
 * always the identity. Groups are immutable; copies share one table.
 */
class Group
{
public:
  /// The trivial group on one point.
  Group();

  std::size_t degree() const;
  std::span<Permutation const> generators() const;
  std::span<Permutation const> elements() const;
  std::uint64_t order() const { return elements().size(); }

  Permutation const &element(ElementIndex i) const { return elements()[i]; }

  /// Throws DegreeMismatch for a permutation on a different point set.
  bool contains(Permutation const &p) const;
  std::optional<ElementIndex> index_of(Permutation const &p) const;

  /// Index of element(i) * element(j), read left to right.
  ElementIndex multiply(ElementIndex i, ElementIndex j) const;
  ElementIndex inverse_of(ElementIndex i) const;
  /// Index of element(x)^element(g).
  ElementIndex conjugate_of(ElementIndex x, ElementIndex g) const;

  /// True iff both handles describe the same element table.
  bool same_as(Group const &other) const;

private:
  struct Data;
  explicit Group(std::shared_ptr<Data const> data) : _data(std::move(data)) {}
  friend Group build_group(std::size_t, std::vector<Permutation>, std::size_t);

  std::shared_ptr<Data const> _data;
};

/**
 * Breadth-first closure of `gens` on `degree` points. An empty generating
 * set yields the trivial group. Throws DegreeMismatch if a generator lives on
 * another point set and CapExceeded once the closure passes `cap` elements.
 */
Group build_group(std::size_t degree, std::vector<Permutation> gens,
                  std::size_t cap = default_enumeration_cap);

inline bool contains(Group const &group, Permutation const &p)
{
  return group.contains(p);
}

inline std::span<Permutation const> elements(Group const &group)
{
  return group.elements();
}

/// True iff every generator of `sub` lies in `group`.
bool is_subgroup_of(Group const &sub, Group const &group);

} // namespace frattini
