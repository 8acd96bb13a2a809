#include "frattini/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>
#include <tuple>
#include <unordered_set>

#include "frattini/error.hpp"

namespace frattini {

namespace {

constexpr std::size_t word_bits = 64;

ElementIndex index_in(Group const &G, Permutation const &p)
{
  auto idx = G.index_of(p);
  if (!idx)
    throw MembershipError(format_cycles(p) + " is not an element of the group");
  return *idx;
}

/// Right-multiplies the seed set by the generators until closed. The seed
/// must contain the identity.
std::vector<ElementIndex> close(Group const &G, std::vector<ElementIndex> members,
                                Fingerprint &fp, std::span<ElementIndex const> gens)
{
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (ElementIndex s : gens) {
      ElementIndex next = G.multiply(members[k], s);
      if (!fp.test(next)) {
        fp.set(next);
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementIndex> generator_indices(Subgroup const &H)
{
  std::vector<ElementIndex> out;
  out.reserve(H.generators().size());
  for (auto const &g : H.generators())
    out.push_back(index_in(H.parent(), g));
  return out;
}

void require_same_parent(Subgroup const &A, Subgroup const &B, char const *what)
{
  if (!A.parent().same_as(B.parent()))
    throw MembershipError(std::string(what) + ": subgroups of different parent groups");
}

} // namespace

// Fingerprint -------------------------------------------------------------

Fingerprint::Fingerprint(std::size_t universe)
: _universe(universe),
  _words((universe + word_bits - 1) / word_bits, 0)
{}

void Fingerprint::set(ElementIndex i)
{
  _words[i / word_bits] |= std::uint64_t{1} << (word_bits - 1 - i % word_bits);
}

bool Fingerprint::test(ElementIndex i) const
{
  return (_words[i / word_bits] >> (word_bits - 1 - i % word_bits)) & 1u;
}

std::size_t Fingerprint::count() const
{
  std::size_t total = 0;
  for (auto w : _words)
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string Fingerprint::hex() const
{
  static constexpr char digits[] = "0123456789abcdef";
  std::size_t const nibbles = (_universe + 3) / 4;

  std::string out;
  out.reserve(nibbles);
  for (std::size_t n = 0; n < nibbles; ++n) {
    std::uint64_t const w = _words[n / 16];
    out += digits[(w >> (60 - 4 * (n % 16))) & 0xfu];
  }
  return out;
}

std::size_t Fingerprint::hash() const
{
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ _universe;
  for (auto w : _words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// Subgroup ----------------------------------------------------------------

Subgroup::Subgroup(Group parent)
: Subgroup(std::move(parent), {}, {0})
{}

Subgroup::Subgroup(Group parent, std::vector<Permutation> gens,
                   std::vector<ElementIndex> members)
: _parent(std::move(parent)),
  _generators(std::move(gens)),
  _members(std::move(members)),
  _fingerprint(_parent.order())
{
  for (ElementIndex i : _members)
    _fingerprint.set(i);
}

std::vector<Permutation> Subgroup::elements() const
{
  std::vector<Permutation> out;
  out.reserve(_members.size());
  for (ElementIndex i : _members)
    out.push_back(_parent.element(i));
  return out;
}

bool Subgroup::contains(Permutation const &p) const
{
  auto idx = _parent.index_of(p);
  return idx && contains_index(*idx);
}

Subgroup Subgroup::generated_by_indices(Group const &parent,
                                        std::span<ElementIndex const> gens)
{
  Fingerprint fp(parent.order());
  fp.set(0);
  auto members = close(parent, {0}, fp, gens);

  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (ElementIndex g : gens)
    perms.push_back(parent.element(g));

  return Subgroup(parent, std::move(perms), std::move(members));
}

Subgroup Subgroup::from_member_set(Group const &parent, Fingerprint const &members)
{
  std::vector<ElementIndex> gens;
  Fingerprint closure(parent.order());
  closure.set(0);
  std::vector<ElementIndex> current{0};

  for (ElementIndex i = 1; i < parent.order(); ++i) {
    if (!members.test(i) || closure.test(i))
      continue;
    gens.push_back(i);
    current = close(parent, std::move(current), closure, gens);
  }

  if (closure != members)
    throw InternalError("member set is not closed under multiplication");

  std::vector<Permutation> perms;
  for (ElementIndex g : gens)
    perms.push_back(parent.element(g));
  return Subgroup(parent, std::move(perms), std::move(current));
}

bool canonical_less(Subgroup const &a, Subgroup const &b)
{
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.fingerprint() < b.fingerprint();
}

void require_parent(Group const &G, Subgroup const &K, char const *what)
{
  if (!K.parent().same_as(G))
    throw MembershipError(std::string(what) + ": subgroup is not contained in the group");
}

// Operations --------------------------------------------------------------

Subgroup generated_subgroup(Group const &G, std::span<Permutation const> gens)
{
  std::vector<ElementIndex> idx;
  idx.reserve(gens.size());
  for (auto const &g : gens)
    idx.push_back(index_in(G, g));
  return Subgroup::generated_by_indices(G, idx);
}

Subgroup whole_group(Group const &G)
{
  return generated_subgroup(G, G.generators());
}

Group as_group(Subgroup const &H)
{
  return build_group(H.parent().degree(),
                     std::vector<Permutation>(H.generators().begin(), H.generators().end()));
}

Subgroup normalizer(Subgroup const &ambient, Subgroup const &H)
{
  require_same_parent(ambient, H, "normalizer");
  Group const &G = ambient.parent();
  auto const gens = generator_indices(H);

  Fingerprint members(G.order());
  for (ElementIndex g : ambient.element_indices()) {
    bool const normalizes = std::all_of(gens.begin(), gens.end(), [&](ElementIndex h) {
      return H.contains_index(G.conjugate_of(h, g));
    });
    if (normalizes)
      members.set(g);
  }

  return Subgroup::from_member_set(G, members);
}

Subgroup normalizer(Group const &G, Subgroup const &H)
{
  require_parent(G, H, "normalizer");
  return normalizer(whole_group(G), H);
}

ProductSet product_set(Subgroup const &A, Subgroup const &B)
{
  require_same_parent(A, B, "product_set");
  Group const &G = A.parent();

  ProductSet out{Fingerprint(G.order()), 0, false};
  for (ElementIndex a : A.element_indices()) {
    for (ElementIndex b : B.element_indices())
      out.members.set(G.multiply(a, b));
  }
  out.size = out.members.count();
  out.covers_parent = out.size == G.order();
  return out;
}

Subgroup intersection(Subgroup const &A, Subgroup const &B)
{
  require_same_parent(A, B, "intersection");
  auto const &[small, large] = A.order() <= B.order() ? std::tie(A, B) : std::tie(B, A);

  Fingerprint members(A.parent().order());
  for (ElementIndex i : small.element_indices()) {
    if (large.contains_index(i))
      members.set(i);
  }
  return Subgroup::from_member_set(A.parent(), members);
}

std::uint64_t intersection_order(Subgroup const &A, Subgroup const &B)
{
  require_same_parent(A, B, "intersection");
  auto const &[small, large] = A.order() <= B.order() ? std::tie(A, B) : std::tie(B, A);
  return static_cast<std::uint64_t>(
    std::count_if(small.element_indices().begin(), small.element_indices().end(),
                  [&](ElementIndex i) { return large.contains_index(i); }));
}

bool is_normal(Group const &G, Subgroup const &K)
{
  require_parent(G, K, "is_normal");
  for (auto const &g : G.generators()) {
    for (auto const &k : K.generators()) {
      if (!K.contains(conjugate(k, g)))
        return false;
    }
  }
  return true;
}

Subgroup conjugate_subgroup(Subgroup const &H, Permutation const &g)
{
  Group const &G = H.parent();
  if (!G.contains(g))
    throw MembershipError("conjugating element " + format_cycles(g) + " lies outside the group");

  std::vector<ElementIndex> gens;
  gens.reserve(H.generators().size());
  for (auto const &h : H.generators())
    gens.push_back(index_in(G, conjugate(h, g)));
  return Subgroup::generated_by_indices(G, gens);
}

std::vector<Subgroup> all_subgroups(Group const &G, std::size_t cap)
{
  if (G.order() > cap) {
    throw CapExceeded("all_subgroups: group order " + std::to_string(G.order()) +
                      " exceeds the sweep cap of " + std::to_string(cap));
  }

  std::vector<Subgroup> found;
  std::unordered_set<Fingerprint> known;

  auto record = [&](Subgroup s) {
    if (known.insert(s.fingerprint()).second)
      found.push_back(std::move(s));
  };

  for (ElementIndex i = 0; i < G.order(); ++i) {
    ElementIndex const gen[] = {i};
    record(Subgroup::generated_by_indices(G, i == 0 ? std::span<ElementIndex const>{}
                                                    : std::span<ElementIndex const>(gen)));
  }

  // `found` grows while we walk it; every subgroup is extended once.
  for (std::size_t k = 0; k < found.size(); ++k) {
    auto const base_gens = generator_indices(found[k]);
    std::vector<ElementIndex> const base_members(found[k].element_indices().begin(),
                                                 found[k].element_indices().end());

    for (ElementIndex i = 1; i < G.order(); ++i) {
      if (found[k].contains_index(i))
        continue;

      std::vector<ElementIndex> gens = base_gens;
      gens.push_back(i);

      Fingerprint fp = found[k].fingerprint();
      auto members = close(G, base_members, fp, gens);
      if (known.contains(fp))
        continue;

      std::vector<Permutation> perms;
      for (ElementIndex g : gens)
        perms.push_back(G.element(g));
      known.insert(fp);
      found.push_back(Subgroup(G, std::move(perms), std::move(members)));
    }
  }

  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

} // namespace frattini
