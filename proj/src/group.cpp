#include "frattini/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "frattini/error.hpp"

namespace frattini {

namespace {

// Groups up to this order get a full Cayley table on first use.
constexpr std::size_t cayley_table_limit = 2048;

} // namespace

struct Group::Data
{
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementIndex> index;
  std::vector<ElementIndex> inverses;

  mutable std::once_flag table_once;
  mutable std::vector<ElementIndex> table;

  ElementIndex lookup(Permutation const &p) const
  {
    auto it = index.find(p);
    if (it == index.end())
      throw InternalError("product left the element table");
    return it->second;
  }

  std::vector<ElementIndex> const *cayley_table() const
  {
    std::size_t const n = elements.size();
    if (n > cayley_table_limit)
      return nullptr;

    std::call_once(table_once, [&] {
      table.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
          table[i * n + j] = lookup(compose(elements[i], elements[j]));
      }
    });
    return &table;
  }
};

Group::Group()
: Group(build_group(1, {}))
{}

std::size_t Group::degree() const
{
  return _data->degree;
}

std::span<Permutation const> Group::generators() const
{
  return _data->generators;
}

std::span<Permutation const> Group::elements() const
{
  return _data->elements;
}

bool Group::contains(Permutation const &p) const
{
  return index_of(p).has_value();
}

std::optional<ElementIndex> Group::index_of(Permutation const &p) const
{
  if (p.degree() != degree()) {
    throw DegreeMismatch("membership test: permutation of degree " +
                         std::to_string(p.degree()) + " against group of degree " +
                         std::to_string(degree()));
  }
  auto it = _data->index.find(p);
  if (it == _data->index.end())
    return std::nullopt;
  return it->second;
}

ElementIndex Group::multiply(ElementIndex i, ElementIndex j) const
{
  if (auto const *table = _data->cayley_table())
    return (*table)[static_cast<std::size_t>(i) * _data->elements.size() + j];
  return _data->lookup(compose(_data->elements[i], _data->elements[j]));
}

ElementIndex Group::inverse_of(ElementIndex i) const
{
  return _data->inverses[i];
}

ElementIndex Group::conjugate_of(ElementIndex x, ElementIndex g) const
{
  return multiply(multiply(inverse_of(g), x), g);
}

bool Group::same_as(Group const &other) const
{
  if (_data == other._data)
    return true;
  return degree() == other.degree() && _data->elements == other._data->elements;
}

Group build_group(std::size_t degree, std::vector<Permutation> gens, std::size_t cap)
{
  if (degree == 0)
    throw PreconditionError("group degree must be positive");

  for (auto const &g : gens) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + format_cycles(g) + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree));
    }
  }

  auto data = std::make_shared<Group::Data>();
  data->degree = degree;
  data->generators = std::move(gens);

  std::unordered_set<Permutation> seen;
  std::deque<Permutation> queue;

  Permutation id(degree);
  seen.insert(id);
  queue.push_back(id);

  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();

    for (auto const &s : data->generators) {
      Permutation next = compose(current, s);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw CapExceeded("group closure exceeds the enumeration cap of " +
                            std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }

  data->elements.assign(seen.begin(), seen.end());
  std::sort(data->elements.begin(), data->elements.end());

  data->index.reserve(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i)
    data->index.emplace(data->elements[i], static_cast<ElementIndex>(i));

  data->inverses.resize(data->elements.size());
  for (std::size_t i = 0; i < data->elements.size(); ++i)
    data->inverses[i] = data->lookup(inverse(data->elements[i]));

  return Group(std::move(data));
}

bool is_subgroup_of(Group const &sub, Group const &group)
{
  if (sub.degree() != group.degree()) {
    throw DegreeMismatch("is_subgroup_of: degrees " + std::to_string(sub.degree()) +
                         " and " + std::to_string(group.degree()) + " differ");
  }
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](Permutation const &g) { return group.contains(g); });
}

} // namespace frattini
