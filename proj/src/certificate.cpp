#include "frattini/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "frattini/error.hpp"

namespace frattini {

// Builder -----------------------------------------------------------------

namespace {

std::vector<Subgroup> normalizers_of(Group const &G, std::span<Subgroup const> family)
{
  std::vector<Subgroup> out;
  out.reserve(family.size());
  for (auto const &P : family)
    out.push_back(normalizer(G, P));
  return out;
}

std::vector<Subgroup> checked_family(Group const &G, Subgroup const &K)
{
  require_parent(G, K, "build_certificate");

  auto const report = frattini_condition(G, K);
  if (!report.condition_holds) {
    throw PreconditionError(
      "build_certificate: G = K N_G(P) fails for some Sylow subgroup P of K");
  }

  auto const classes = sylow_classes(K);
  return sylow_family(classes);
}

} // namespace

CertificateBuilder::CertificateBuilder(Group G, Subgroup K)
: _group(std::move(G)),
  _subgroup(std::move(K)),
  _family(checked_family(_group, _subgroup)),
  _normalizers(normalizers_of(_group, _family)),
  _words(_subgroup, _family)
{}

NormalityCertificate CertificateBuilder::build(Permutation const &x, Permutation const &g) const
{
  if (x.degree() != _group.degree() || !_subgroup.contains(x))
    throw PreconditionError("build_certificate: x = " + format_cycles(x) + " is not in K");
  if (!_group.contains(g))
    throw PreconditionError("build_certificate: g = " + format_cycles(g) + " is not in G");

  NormalityCertificate cert;
  cert.degree = _group.degree();
  cert.group_generators.assign(_group.generators().begin(), _group.generators().end());
  cert.subgroup_generators.assign(_subgroup.generators().begin(),
                                  _subgroup.generators().end());
  cert.x = x;
  cert.g = g;
  cert.word = _words.word(x);

  // g = a_i b_i for every Sylow subgroup the word touches.
  std::map<std::size_t, Subgroup> landing;
  std::set<std::size_t> used;
  for (auto const &letter : cert.word)
    used.insert(letter.sylow_index);

  for (std::size_t i : used) {
    Subgroup const &P = _family[i - 1];
    auto [a, b] = decompose_in_product(_group, _subgroup, _normalizers[i - 1], g);
    landing.emplace(i, conjugate_subgroup(P, b));
    cert.decompositions.push_back(Decomposition{
      i, {P.generators().begin(), P.generators().end()}, std::move(a), std::move(b)});
  }

  // x_i^g = x_i^(a_i b) lies in P_i^(a_i b) = P_i^b, which sits inside K.
  Permutation product(cert.degree);
  for (auto const &letter : cert.word) {
    Subgroup const &Q = landing.at(letter.sylow_index);
    Permutation image = conjugate(letter.element, g);

    if (!Q.contains(image))
      throw InternalError("conjugated letter left P_i^b");
    for (ElementIndex m : Q.element_indices()) {
      if (!_subgroup.contains_index(m))
        throw InternalError("P_i^b is not contained in K");
    }

    product = compose(product, image);
    cert.conjugated_letters.push_back(
      ConjugatedLetter{std::move(image), letter.sylow_index,
                       {Q.generators().begin(), Q.generators().end()}});
  }

  if (product != conjugate(x, g))
    throw InternalError("conjugated letters do not multiply to x^g");
  if (!_subgroup.contains(product))
    throw InternalError("x^g is not in K");

  cert.result = std::move(product);
  return cert;
}

NormalityCertificate build_certificate(Group const &G, Subgroup const &K,
                                       Permutation const &x, Permutation const &g)
{
  return CertificateBuilder(G, K).build(x, g);
}

// Checker -----------------------------------------------------------------

char const *to_string(CheckFailure reason)
{
  switch (reason) {
  case CheckFailure::none: return "ok";
  case CheckFailure::degree_mismatch: return "degree_mismatch";
  case CheckFailure::group_mismatch: return "group_mismatch";
  case CheckFailure::subgroup_mismatch: return "subgroup_mismatch";
  case CheckFailure::x_outside_subgroup: return "x_outside_subgroup";
  case CheckFailure::g_outside_group: return "g_outside_group";
  case CheckFailure::word_product_mismatch: return "word_product_mismatch";
  case CheckFailure::unknown_sylow_index: return "unknown_sylow_index";
  case CheckFailure::letter_outside_sylow: return "letter_outside_sylow";
  case CheckFailure::not_a_sylow_subgroup: return "not_a_sylow_subgroup";
  case CheckFailure::decomposition_set_mismatch: return "decomposition_set_mismatch";
  case CheckFailure::decomposition_product_mismatch: return "decomposition_product_mismatch";
  case CheckFailure::a_outside_normalizer: return "a_outside_normalizer";
  case CheckFailure::b_outside_subgroup: return "b_outside_subgroup";
  case CheckFailure::conjugated_letter_count: return "conjugated_letter_count";
  case CheckFailure::conjugated_letter_mismatch: return "conjugated_letter_mismatch";
  case CheckFailure::conjugate_subgroup_mismatch: return "conjugate_subgroup_mismatch";
  case CheckFailure::conjugated_letter_outside: return "conjugated_letter_outside";
  case CheckFailure::conjugate_subgroup_outside_subgroup:
    return "conjugate_subgroup_outside_subgroup";
  case CheckFailure::result_mismatch: return "result_mismatch";
  case CheckFailure::result_outside_subgroup: return "result_outside_subgroup";
  }
  return "unknown";
}

namespace {

CheckResult fail(CheckFailure reason, std::string detail)
{
  return CheckResult{reason, std::move(detail)};
}

bool same_degree(std::span<Permutation const> perms, std::size_t degree)
{
  return std::all_of(perms.begin(), perms.end(),
                     [&](Permutation const &p) { return p.degree() == degree; });
}

bool same_elements(Group const &table, std::span<Permutation const> expected)
{
  auto const elems = table.elements();
  return std::equal(elems.begin(), elems.end(), expected.begin(), expected.end());
}

} // namespace

CheckResult check_certificate(NormalityCertificate const &cert, Group const &G,
                              Subgroup const &K)
{
  if (!K.parent().same_as(G))
    return fail(CheckFailure::subgroup_mismatch, "K is not a subgroup of G");

  std::size_t const n = G.degree();
  if (cert.degree != n || cert.x.degree() != n || cert.g.degree() != n ||
      cert.result.degree() != n || !same_degree(cert.group_generators, n) ||
      !same_degree(cert.subgroup_generators, n)) {
    return fail(CheckFailure::degree_mismatch, "certificate degree differs from the group");
  }
  for (auto const &l : cert.word) {
    if (l.element.degree() != n)
      return fail(CheckFailure::degree_mismatch, "word letter of wrong degree");
    if (l.sylow_index == 0)
      return fail(CheckFailure::unknown_sylow_index, "Sylow indices start at 1");
  }
  for (auto const &d : cert.decompositions) {
    if (d.a.degree() != n || d.b.degree() != n || !same_degree(d.sylow_generators, n))
      return fail(CheckFailure::degree_mismatch, "decomposition of wrong degree");
  }
  for (auto const &c : cert.conjugated_letters) {
    if (c.element.degree() != n || !same_degree(c.subgroup_generators, n))
      return fail(CheckFailure::degree_mismatch, "conjugated letter of wrong degree");
  }

  // The certificate names G and K by generators; both must match the tables
  // supplied by the caller. Generators are screened for membership first so
  // that every closure below stays inside G.
  auto in_g = [&](Permutation const &p) { return G.contains(p); };
  if (!std::all_of(cert.group_generators.begin(), cert.group_generators.end(), in_g))
    return fail(CheckFailure::group_mismatch, "group_generators leave G");
  Group const cert_group = build_group(n, cert.group_generators);
  if (!same_elements(cert_group, G.elements()))
    return fail(CheckFailure::group_mismatch, "group_generators do not generate G");

  auto in_given_k = [&](Permutation const &p) { return K.contains(p); };
  if (!std::all_of(cert.subgroup_generators.begin(), cert.subgroup_generators.end(), in_given_k))
    return fail(CheckFailure::subgroup_mismatch, "subgroup_generators leave K");
  Group const cert_subgroup = build_group(n, cert.subgroup_generators);
  if (!same_elements(cert_subgroup, K.elements()))
    return fail(CheckFailure::subgroup_mismatch, "subgroup_generators do not generate K");

  auto in_k = [&](Permutation const &p) { return cert_subgroup.contains(p); };

  if (!in_k(cert.x))
    return fail(CheckFailure::x_outside_subgroup, "x = " + format_cycles(cert.x));
  if (!cert_group.contains(cert.g))
    return fail(CheckFailure::g_outside_group, "g = " + format_cycles(cert.g));

  Permutation product(n);
  for (auto const &l : cert.word)
    product = compose(product, l.element);
  if (product != cert.x)
    return fail(CheckFailure::word_product_mismatch, "word multiplies to " + format_cycles(product));

  // Every Sylow subgroup the word uses has exactly one decomposition.
  std::set<std::size_t> used;
  for (auto const &l : cert.word)
    used.insert(l.sylow_index);
  std::set<std::size_t> declared;
  for (auto const &d : cert.decompositions) {
    if (!declared.insert(d.sylow_index).second)
      return fail(CheckFailure::decomposition_set_mismatch, "duplicate decomposition");
  }
  if (used != declared)
    return fail(CheckFailure::decomposition_set_mismatch,
                "decompositions do not match the Sylow subgroups used by the word");

  struct Replayed
  {
    Group sylow;
    Permutation const *b;
    std::vector<Permutation> const *generators;
  };
  std::map<std::size_t, Replayed> replay;

  for (auto const &d : cert.decompositions) {
    std::string const tag = "P_" + std::to_string(d.sylow_index);
    if (!std::all_of(d.sylow_generators.begin(), d.sylow_generators.end(), in_k))
      return fail(CheckFailure::not_a_sylow_subgroup, tag + " is not contained in K");

    Group P = build_group(n, d.sylow_generators);
    auto const primes = prime_divisors(P.order());
    if (primes.size() != 1 || P.order() != p_part(K.order(), primes.front()))
      return fail(CheckFailure::not_a_sylow_subgroup, tag + " is not a Sylow subgroup of K");

    if (compose(d.a, d.b) != cert.g)
      return fail(CheckFailure::decomposition_product_mismatch, tag + ": a b != g");

    bool const normalizes =
      cert_group.contains(d.a) &&
      std::all_of(d.sylow_generators.begin(), d.sylow_generators.end(),
                  [&](Permutation const &h) { return P.contains(conjugate(h, d.a)); });
    if (!normalizes)
      return fail(CheckFailure::a_outside_normalizer, tag + ": a does not normalize P");

    if (!in_k(d.b))
      return fail(CheckFailure::b_outside_subgroup, tag + ": b is not in K");

    replay.emplace(d.sylow_index, Replayed{std::move(P), &d.b, &d.sylow_generators});
  }

  for (auto const &l : cert.word) {
    if (!replay.at(l.sylow_index).sylow.contains(l.element)) {
      return fail(CheckFailure::letter_outside_sylow,
                  format_cycles(l.element) + " is not in P_" + std::to_string(l.sylow_index));
    }
  }

  if (cert.conjugated_letters.size() != cert.word.size())
    return fail(CheckFailure::conjugated_letter_count, "one conjugated letter per word letter");

  Permutation image_product(n);
  for (std::size_t k = 0; k < cert.word.size(); ++k) {
    auto const &letter = cert.word[k];
    auto const &c = cert.conjugated_letters[k];
    std::string const tag = "letter " + std::to_string(k + 1);

    if (c.sylow_index != letter.sylow_index || c.element != conjugate(letter.element, cert.g))
      return fail(CheckFailure::conjugated_letter_mismatch, tag + " is not letter^g");

    // The declared landing subgroup must be exactly P_i^b.
    if (!std::all_of(c.subgroup_generators.begin(), c.subgroup_generators.end(), in_k))
      return fail(CheckFailure::conjugate_subgroup_outside_subgroup, tag + ": P_i^b is not in K");

    auto const &r = replay.at(letter.sylow_index);
    std::vector<Permutation> moved;
    for (auto const &h : *r.generators)
      moved.push_back(conjugate(h, *r.b));
    Group const expected = build_group(n, std::move(moved));
    Group const declared_q = build_group(n, c.subgroup_generators);
    if (!same_elements(declared_q, expected.elements()))
      return fail(CheckFailure::conjugate_subgroup_mismatch, tag + ": subgroup is not P_i^b");

    if (!declared_q.contains(c.element))
      return fail(CheckFailure::conjugated_letter_outside, tag + " is not in P_i^b");

    image_product = compose(image_product, c.element);
  }

  if (image_product != cert.result || cert.result != conjugate(cert.x, cert.g))
    return fail(CheckFailure::result_mismatch, "result is not x^g");
  if (!in_k(cert.result))
    return fail(CheckFailure::result_outside_subgroup, "x^g is not in K");

  return {};
}

// Serialization -----------------------------------------------------------

namespace {

using nlohmann::ordered_json;

ordered_json perm_list(std::span<Permutation const> perms)
{
  auto out = ordered_json::array();
  for (auto const &p : perms)
    out.push_back(format_cycles(p));
  return out;
}

} // namespace

std::string serialize_certificate(NormalityCertificate const &cert)
{
  ordered_json doc;
  doc["degree"] = cert.degree;
  doc["group_generators"] = perm_list(cert.group_generators);
  doc["subgroup_generators"] = perm_list(cert.subgroup_generators);
  doc["x"] = format_cycles(cert.x);
  doc["g"] = format_cycles(cert.g);

  doc["word"] = ordered_json::array();
  for (auto const &l : cert.word)
    doc["word"].push_back({{"element", format_cycles(l.element)}, {"sylow_index", l.sylow_index}});

  doc["decompositions"] = ordered_json::array();
  for (auto const &d : cert.decompositions) {
    doc["decompositions"].push_back({{"sylow_index", d.sylow_index},
                                     {"sylow_generators", perm_list(d.sylow_generators)},
                                     {"a", format_cycles(d.a)},
                                     {"b", format_cycles(d.b)}});
  }

  doc["conjugated_letters"] = ordered_json::array();
  for (auto const &c : cert.conjugated_letters) {
    doc["conjugated_letters"].push_back(
      {{"element", format_cycles(c.element)},
       {"sylow_index", c.sylow_index},
       {"subgroup_generators", perm_list(c.subgroup_generators)}});
  }

  doc["result"] = format_cycles(cert.result);
  return doc.dump(2) + "\n";
}

NormalityCertificate parse_certificate(std::string_view text)
{
  using nlohmann::json;

  try {
    json const doc = json::parse(text);
    NormalityCertificate cert;

    cert.degree = doc.at("degree").get<std::size_t>();
    if (cert.degree == 0)
      throw ParseError("certificate degree must be positive");

    auto perm = [&](json const &v) { return parse_cycles(v.get<std::string>(), cert.degree); };
    auto perms = [&](json const &v) {
      std::vector<Permutation> out;
      for (auto const &item : v)
        out.push_back(perm(item));
      return out;
    };

    cert.group_generators = perms(doc.at("group_generators"));
    cert.subgroup_generators = perms(doc.at("subgroup_generators"));
    cert.x = perm(doc.at("x"));
    cert.g = perm(doc.at("g"));

    for (auto const &l : doc.at("word"))
      cert.word.push_back(Letter{perm(l.at("element")), l.at("sylow_index").get<std::size_t>()});

    for (auto const &d : doc.at("decompositions")) {
      cert.decompositions.push_back(Decomposition{d.at("sylow_index").get<std::size_t>(),
                                                  perms(d.at("sylow_generators")),
                                                  perm(d.at("a")), perm(d.at("b"))});
    }

    for (auto const &c : doc.at("conjugated_letters")) {
      cert.conjugated_letters.push_back(
        ConjugatedLetter{perm(c.at("element")), c.at("sylow_index").get<std::size_t>(),
                         perms(c.at("subgroup_generators"))});
    }

    cert.result = perm(doc.at("result"));
    return cert;
  } catch (json::exception const &e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace frattini
