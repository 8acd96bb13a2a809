#include "frattini/frattini.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "frattini/error.hpp"

namespace frattini {

FrattiniReport frattini_condition(Group const &G, Subgroup const &K,
                                  FrattiniOptions const &options)
{
  require_parent(G, K, "frattini_condition");

  FrattiniReport report;
  report.group_order = G.order();
  report.subgroup_order = K.order();
  report.vacuous = K.order() == 1;

  auto const classes = sylow_classes(K);
  auto const family = sylow_family(classes);

  auto evaluate = [&](std::uint64_t prime, std::size_t index) {
    Subgroup const &P = family[index];
    Subgroup const N = normalizer(G, P);
    ProductSet const product = options.side == ProductSide::subgroup_first
                                 ? product_set(K, N)
                                 : product_set(N, K);

    report.entries.push_back(
      FrattiniEntry{prime, index + 1, P, N.order(), product.size, product.covers_parent});
    report.condition_holds = report.condition_holds && product.covers_parent;
  };

  std::size_t offset = 0;
  for (auto const &c : classes) {
    if (options.scope == SylowScope::all_conjugates) {
      for (std::size_t i = 0; i < c.count(); ++i)
        evaluate(c.prime, offset + i);
    } else {
      auto it = std::find(c.conjugates.begin(), c.conjugates.end(), c.representative);
      if (it == c.conjugates.end())
        throw InternalError("Sylow representative missing from its conjugacy class");
      evaluate(c.prime, offset + static_cast<std::size_t>(it - c.conjugates.begin()));
    }
    offset += c.count();
  }

  return report;
}

FrattiniReport frattini_forward(Group const &G, Subgroup const &K,
                                FrattiniOptions const &options)
{
  require_parent(G, K, "frattini_forward");
  if (!is_normal(G, K))
    throw PreconditionError("frattini_forward: the subgroup is not normal");

  auto report = frattini_condition(G, K, options);
  if (!report.condition_holds) {
    for (auto const &e : report.entries) {
      if (!e.holds) {
        throw InternalError("Frattini argument failed for the Sylow " +
                            std::to_string(e.prime) + "-subgroup #" +
                            std::to_string(e.sylow_index) + ": product size " +
                            std::to_string(e.product_size) + " != " +
                            std::to_string(report.group_order));
      }
    }
  }
  return report;
}

Verdict converse_verdict(Group const &G, Subgroup const &K, FrattiniOptions const &options)
{
  Verdict v;
  v.report = frattini_condition(G, K, options);
  v.condition_holds = v.report.condition_holds;
  v.normal = is_normal(G, K);
  v.consistent = v.condition_holds == v.normal;
  return v;
}

std::pair<Permutation, Permutation> decompose_in_product(Group const &G, Subgroup const &K,
                                                         Subgroup const &N,
                                                         Permutation const &g)
{
  require_parent(G, K, "decompose_in_product");
  require_parent(G, N, "decompose_in_product");

  auto const gi = G.index_of(g);
  if (!gi)
    throw PreconditionError("decompose_in_product: " + format_cycles(g) + " is not in the group");

  for (ElementIndex a : N.element_indices()) {
    ElementIndex const b = G.multiply(G.inverse_of(a), *gi);
    if (K.contains_index(b))
      return {G.element(a), G.element(b)};
  }

  throw PreconditionError("decompose_in_product: " + format_cycles(g) +
                          " is not in N K");
}

SylowWordTable::SylowWordTable(Subgroup const &K, std::span<Subgroup const> family)
: _subgroup(K)
{
  Group const &G = K.parent();

  std::map<ElementIndex, std::size_t> letters;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!family[i].parent().same_as(G))
      throw MembershipError("Sylow subgroup from a different parent group");
    for (ElementIndex m : family[i].element_indices()) {
      if (m != 0)
        letters.emplace(m, i + 1);
    }
  }
  _alphabet.assign(letters.begin(), letters.end());

  _edges.assign(G.order(), std::nullopt);
  std::vector<std::size_t> depth(G.order(), 0);
  std::vector<bool> seen(G.order(), false);
  std::vector<ElementIndex> queue{0};
  seen[0] = true;

  for (std::size_t k = 0; k < queue.size(); ++k) {
    ElementIndex const w = queue[k];
    for (std::size_t l = 0; l < _alphabet.size(); ++l) {
      ElementIndex const next = G.multiply(w, _alphabet[l].first);
      if (seen[next])
        continue;
      seen[next] = true;
      _edges[next] = Edge{w, static_cast<std::uint32_t>(l)};
      depth[next] = depth[w] + 1;
      _max_length = std::max(_max_length, depth[next]);
      queue.push_back(next);
    }
  }

  if (queue.size() != K.order())
    throw InternalError("Sylow subgroups do not generate the subgroup");
}

std::vector<Letter> SylowWordTable::word(Permutation const &x) const
{
  Group const &G = _subgroup.parent();
  auto idx = G.index_of(x);
  if (!idx || !_subgroup.contains_index(*idx))
    throw MembershipError("sylow_word: " + format_cycles(x) + " is not in the subgroup");

  std::vector<Letter> out;
  for (ElementIndex at = *idx; at != 0;) {
    Edge const &e = *_edges[at];
    auto const &[elem, sylow] = _alphabet[e.letter];
    out.push_back(Letter{G.element(elem), sylow});
    at = e.from;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Letter> sylow_word(Subgroup const &K, Permutation const &x)
{
  auto const classes = sylow_classes(K);
  auto const family = sylow_family(classes);
  return SylowWordTable(K, family).word(x);
}

} // namespace frattini
