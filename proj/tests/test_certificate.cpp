#include <doctest.h>

#include "frattini/catalog.hpp"
#include "frattini/certificate.hpp"
#include "frattini/error.hpp"
#include "tamper.hpp"

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

} // namespace

TEST_CASE("identity certificate")
{
  auto const s3 = make_symmetric(3);
  auto const a3 = sub(s3, "(1 2 3)");
  auto const c = build_certificate(s3, a3, Permutation::identity(3), P("(1 2)", 3));
  CHECK(c.word.empty());
  CHECK(c.decompositions.empty());
  CHECK(c.result.is_identity());
  CHECK(check_certificate(c, s3, a3));
}

TEST_CASE("S3 with A3")
{
  auto const s3 = make_symmetric(3);
  auto const a3 = sub(s3, "(1 2 3)");
  auto const g = P("(1 2)", 3);
  auto const c = build_certificate(s3, a3, P("(1 2 3)", 3), g);

  REQUIRE(c.word.size() == 1);
  REQUIRE(c.decompositions.size() == 1);
  auto const &d = c.decompositions.front();
  CHECK(compose(d.a, d.b) == g);
  CHECK(a3.contains(d.b));
  CHECK(c.result == P("(1 3 2)", 3));
  CHECK(a3.contains(c.result));
  CHECK(check_certificate(c, s3, a3));
}

TEST_CASE("S4 with A4")
{
  auto const s4 = make_symmetric(4);
  auto const a4 = sub(s4, "(1 2 3); (1 2)(3 4)");
  auto const x = P("(1 2)(3 4)", 4);
  auto const g = P("(1 2 3 4)", 4);
  auto const c = build_certificate(s4, a4, x, g);

  REQUIRE(c.word.size() == 1);
  CHECK(c.word[0].element == x);
  CHECK(c.word[0].sylow_index == 1); // the unique Sylow 2-subgroup
  CHECK(c.result == conjugate(x, g));
  CHECK(c.result == P("(1 4)(2 3)", 4));
  CHECK(check_certificate(c, s4, a4));
}

TEST_CASE("build_certificate preconditions")
{
  auto const s3 = make_symmetric(3);
  auto const c2 = sub(s3, "(1 2)");
  CHECK_THROWS_AS(build_certificate(s3, c2, P("(1 2)", 3), P("(1 3)", 3)), PreconditionError);

  auto const a3 = sub(s3, "(1 2 3)");
  CHECK_THROWS_AS(build_certificate(s3, a3, P("(1 2)", 3), P("(1 3)", 3)), PreconditionError);
  auto const c3 = make_cyclic(3);
  CHECK_THROWS_AS(build_certificate(c3, whole_group(c3), P("(1 2 3)", 3), P("(1 2)", 3)),
                  PreconditionError);
}

TEST_CASE("every normal subgroup of S4 certifies every pair")
{
  auto const s4 = make_symmetric(4);
  for (auto const &K : all_subgroups(s4)) {
    if (!is_normal(s4, K))
      continue;
    CertificateBuilder const builder(s4, K);
    for (auto const &x : K.elements()) {
      for (auto const &g : s4.elements()) {
        auto const c = builder.build(x, g);
        auto const verdict = check_certificate(c, s4, K);
        CHECK_MESSAGE(verdict.ok(), to_string(verdict.reason), " ", verdict.detail);
        CHECK(c.result == conjugate(x, g));
      }
    }
  }
}

TEST_CASE("tampering is detected")
{
  auto const s4 = make_symmetric(4);
  auto const a4 = sub(s4, "(1 2 3); (1 2)(3 4)");
  auto const base = build_certificate(s4, a4, P("(1 2 3)", 4), P("(1 4)", 4));
  REQUIRE(check_certificate(base, s4, a4));

  for (auto const &t : tamper::all()) {
    CAPTURE(t.field);
    auto c = base;
    REQUIRE(t.apply(c, s4, a4));
    CHECK(!check_certificate(c, s4, a4));
  }
}

TEST_CASE("specific rejection reasons")
{
  auto const s4 = make_symmetric(4);
  auto const a4 = sub(s4, "(1 2 3); (1 2)(3 4)");
  auto const g = P("(1 2 4)", 4);
  auto const base = build_certificate(s4, a4, P("(1 2 3)", 4), g);
  REQUIRE(check_certificate(base, s4, a4));

  SUBCASE("a outside the normalizer")
  {
    auto c = base;
    auto &d = c.decompositions.front();
    auto const P_i = generated_subgroup(s4, d.sylow_generators);
    auto const N = normalizer(s4, P_i);
    // Since g lies in A4, any a in A4 \ N keeps b = a^-1 g inside A4.
    for (auto const &a : a4.elements()) {
      if (!N.contains(a)) {
        d.a = a;
        d.b = compose(inverse(a), g);
        break;
      }
    }
    auto const r = check_certificate(c, s4, a4);
    CHECK(r.reason == CheckFailure::a_outside_normalizer);
  }

  SUBCASE("wrong conjugated letter")
  {
    auto c = base;
    c.conjugated_letters.front().element = P("(1 3 2)", 4);
    CHECK(check_certificate(c, s4, a4).reason == CheckFailure::conjugated_letter_mismatch);
  }

  SUBCASE("landing subgroup that is not P_i^b")
  {
    auto c = base;
    auto &q = c.conjugated_letters.front().subgroup_generators;
    auto const current = generated_subgroup(s4, q);
    for (char const *cand : {"(1 2 3)", "(1 2 4)", "(1 3 4)", "(2 3 4)"}) {
      if (!current.contains(P(cand, 4))) {
        q = {P(cand, 4)};
        break;
      }
    }
    CHECK(check_certificate(c, s4, a4).reason == CheckFailure::conjugate_subgroup_mismatch);
  }

  SUBCASE("undeclared Sylow index")
  {
    auto c = base;
    c.word.front().sylow_index = 99;
    CHECK(check_certificate(c, s4, a4).reason == CheckFailure::decomposition_set_mismatch);
  }

  SUBCASE("fake Sylow subgroup")
  {
    auto c = base;
    c.decompositions.front().sylow_generators = {P("(1 2)(3 4)", 4)};
    CHECK(check_certificate(c, s4, a4).reason == CheckFailure::not_a_sylow_subgroup);
  }

  SUBCASE("checked against the wrong subgroup")
  {
    auto const v4 = sub(s4, "(1 2)(3 4); (1 3)(2 4)");
    CHECK(check_certificate(base, s4, v4).reason == CheckFailure::subgroup_mismatch);
  }
}

TEST_CASE("serialization round-trips")
{
  auto const G = builtin_group("A4xC2");
  for (auto const &K : all_subgroups(G)) {
    if (!is_normal(G, K) || K.order() < 4)
      continue;
    CertificateBuilder const builder(G, K);
    auto const x = K.elements().back();
    auto const g = G.elements().back();
    auto const c = builder.build(x, g);

    auto const text = serialize_certificate(c);
    auto const back = parse_certificate(text);
    CHECK(back == c);
    CHECK(check_certificate(back, G, K));
    CHECK(serialize_certificate(back) == text);
  }
}

TEST_CASE("serialized field names are stable")
{
  auto const s3 = make_symmetric(3);
  auto const a3 = sub(s3, "(1 2 3)");
  auto const text = serialize_certificate(build_certificate(s3, a3, P("(1 3 2)", 3), P("(2 3)", 3)));
  for (char const *field : {"\"degree\"", "\"group_generators\"", "\"subgroup_generators\"",
                            "\"x\"", "\"g\"", "\"word\"", "\"decompositions\"",
                            "\"conjugated_letters\"", "\"result\""}) {
    CAPTURE(field);
    CHECK(text.find(field) != std::string::npos);
  }
}

TEST_CASE("parse_certificate rejects malformed documents")
{
  CHECK_THROWS_AS(parse_certificate("not json"), ParseError);
  CHECK_THROWS_AS(parse_certificate("{\"degree\": 3}"), ParseError);
  std::string const out_of_range =
    "{\"degree\": 3, \"group_generators\": [\"(1 4)\"], \"subgroup_generators\": [], "
    "\"x\": \"()\", \"g\": \"()\", \"word\": [], \"decompositions\": [], "
    "\"conjugated_letters\": [], \"result\": \"()\"}";
  CHECK_THROWS_AS(parse_certificate(out_of_range), ParseError);
}
