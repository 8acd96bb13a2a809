#include <doctest.h>

#include "frattini/catalog.hpp"
#include "frattini/error.hpp"
#include "frattini/subgroup.hpp"
#include "oracles.hpp"

using namespace frattini;

namespace {

Permutation P(char const *text, std::size_t degree)
{
  return parse_cycles(text, degree);
}

Subgroup sub(Group const &G, char const *gens)
{
  return generated_subgroup(G, parse_generator_list(gens, G.degree()));
}

oracle::Set set_of(Subgroup const &H)
{
  return oracle::as_set(H.elements());
}

oracle::Set set_of(Group const &G)
{
  return oracle::as_set({G.elements().begin(), G.elements().end()});
}

} // namespace

TEST_CASE("generated_subgroup")
{
  auto const s3 = make_symmetric(3);
  CHECK(sub(s3, "(1 2 3)").order() == 3);
  CHECK(sub(s3, "").order() == 1);

  auto const s4 = make_symmetric(4);
  auto const klein = sub(s4, "(1 2)(3 4); (1 3)(2 4)");
  CHECK(klein.order() == 4);
  CHECK(set_of(klein) ==
        oracle::closure({P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)}, 4));

  auto const c3 = make_cyclic(3);
  CHECK_THROWS_AS(sub(c3, "(1 2)"), MembershipError);
}

TEST_CASE("normalizer")
{
  auto const s3 = make_symmetric(3);
  CHECK(normalizer(s3, sub(s3, "(1 2 3)")).order() == 6);
  auto const n = normalizer(s3, sub(s3, "(1 2)"));
  CHECK(n.order() == 2);
  CHECK(n == sub(s3, "(1 2)"));
  CHECK(normalizer(s3, whole_group(s3)) == whole_group(s3));

  auto const s4 = make_symmetric(4);
  CHECK(normalizer(s4, sub(s4, "(1 2 3)")).order() == 6);
  CHECK_THROWS_AS(normalizer(s3, sub(s4, "(1 2)")), MembershipError);
}

TEST_CASE("product_set")
{
  auto const s3 = make_symmetric(3);
  auto const k = sub(s3, "(1 2 3)");
  auto const same = product_set(k, k);
  CHECK(same.size == 3);
  CHECK(!same.covers_parent);

  auto const ab = product_set(sub(s3, "(1 2)"), sub(s3, "(1 3)"));
  CHECK(ab.size == 4);
  CHECK(!ab.covers_parent);

  auto const full = product_set(k, sub(s3, "(1 2)"));
  CHECK(full.size == 6);
  CHECK(full.covers_parent);

  CHECK_THROWS_AS(product_set(k, sub(make_symmetric(4), "(1 2)")), MembershipError);
}

TEST_CASE("is_normal")
{
  auto const s3 = make_symmetric(3);
  CHECK(is_normal(s3, sub(s3, "(1 2 3)")));
  CHECK(!is_normal(s3, sub(s3, "(1 2)")));
  CHECK(is_normal(s3, whole_group(s3)));
  CHECK(is_normal(s3, Subgroup(s3)));
}

TEST_CASE("conjugate_subgroup")
{
  auto const s3 = make_symmetric(3);
  auto const h = sub(s3, "(1 2)");
  CHECK(conjugate_subgroup(h, Permutation::identity(3)) == h);
  CHECK(conjugate_subgroup(h, P("(1 2 3)", 3)) == sub(s3, "(2 3)"));
  CHECK_THROWS_AS(conjugate_subgroup(sub(make_cyclic(3), "(1 2 3)"), P("(1 2)", 3)),
                  MembershipError);

  auto const s4 = make_symmetric(4);
  auto const d4 = sub(s4, "(1 2 3 4); (1 3)");
  for (auto const &g : s4.elements())
    CHECK(conjugate_subgroup(d4, g).order() == d4.order());
}

TEST_CASE("all_subgroups counts")
{
  CHECK(all_subgroups(make_cyclic(7)).size() == 2);
  CHECK(all_subgroups(make_cyclic(1)).size() == 1);
  CHECK(all_subgroups(make_symmetric(3)).size() == 6);
  CHECK(all_subgroups(make_symmetric(4)).size() == 30);
  CHECK(all_subgroups(make_alternating(4)).size() == 10);
  CHECK_THROWS_AS(all_subgroups(make_symmetric(4), 20), CapExceeded);
}

TEST_CASE("all_subgroups is sorted and matches the brute-force census")
{
  for (char const *name : {"C12", "S3", "S4", "D4", "Q8", "A4", "C2xC2xC2", "D6"}) {
    CAPTURE(name);
    auto const G = builtin_group(name);
    auto const subs = all_subgroups(G);
    CHECK(std::is_sorted(subs.begin(), subs.end(), canonical_less));

    std::set<oracle::Set> ours;
    for (auto const &H : subs)
      ours.insert(set_of(H));
    CHECK(ours.size() == subs.size());
    CHECK(ours == oracle::subgroups(set_of(G)));
  }
}

TEST_CASE("subgroup pair laws over small groups")
{
  for (char const *name : {"S3", "S4", "D4", "Q8", "A4", "D6"}) {
    CAPTURE(name);
    auto const G = builtin_group(name);
    auto const subs = all_subgroups(G);
    auto const g_set = set_of(G);

    for (auto const &A : subs) {
      auto const a_set = set_of(A);
      CHECK(set_of(normalizer(G, A)) == oracle::normalizer(g_set, a_set));
      CHECK(is_normal(G, A) == oracle::is_normal(g_set, a_set));

      for (auto const &B : subs) {
        auto const prod = product_set(A, B);
        CHECK(prod.size * intersection_order(A, B) == A.order() * B.order());
        CHECK(prod.size == oracle::product(a_set, set_of(B)).size());
        CHECK(product_set(B, A).size == prod.size);
        CHECK(intersection(A, B).order() == intersection_order(A, B));
      }
    }
  }
}

TEST_CASE("fingerprints")
{
  auto const s3 = make_symmetric(3);
  auto const h = sub(s3, "(1 2)");
  CHECK(h.fingerprint().count() == 2);
  CHECK(h.fingerprint().hex().size() == 2);
  CHECK(sub(s3, "").fingerprint().hex() == "80");
  CHECK(whole_group(s3).fingerprint().hex() == "fc");

  Fingerprint a(70), b(70);
  a.set(0);
  b.set(69);
  CHECK(b < a);
  CHECK(b.hex() < a.hex());
}
