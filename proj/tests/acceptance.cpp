// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "frattini/catalog.hpp"
#include "frattini/certificate.hpp"
#include "frattini/frattini.hpp"
#include "frattini/sweep.hpp"
#include "frattini/sylow.hpp"
#include "oracles.hpp"
#include "tamper.hpp"

using namespace frattini;

namespace {

constexpr std::size_t min_sweep_cases = 300;
constexpr double max_sweep_seconds = 60.0;
constexpr std::size_t min_certificates = 100;
constexpr std::uint64_t oracle_max_order = 24;

int failures = 0;

void report(bool ok, char const *id, std::string const &what)
{
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  if (!ok)
    ++failures;
}

struct Pair
{
  CatalogEntry const *entry;
  Subgroup subgroup;
};

std::vector<Pair> sweep_pairs(std::vector<CatalogEntry> const &catalog)
{
  std::vector<Pair> out;
  for (auto const &e : catalog) {
    for (auto &K : all_subgroups(e.group))
      out.push_back(Pair{&e, std::move(K)});
  }
  return out;
}

oracle::Set set_of(Subgroup const &H)
{
  return oracle::as_set(H.elements());
}

oracle::Set set_of(Group const &G)
{
  return oracle::as_set({G.elements().begin(), G.elements().end()});
}

void biconditional(std::vector<CatalogEntry> const &catalog)
{
  SweepReport const r = sweep(catalog);
  bool const ok = r.totals.inconsistencies == 0 && r.cases.size() >= min_sweep_cases &&
                  r.runtime_seconds < max_sweep_seconds;
  report(ok, "AC1",
         "biconditional sweep: " + std::to_string(r.cases.size()) + " (G,K) cases over " +
           std::to_string(r.totals.groups) + " groups, " +
           std::to_string(r.totals.inconsistencies) + " inconsistencies, " +
           std::to_string(r.runtime_seconds) + " s single-threaded");
}

void forward(std::vector<Pair> const &pairs)
{
  std::size_t checked = 0, violations = 0;
  for (auto const &[entry, K] : pairs) {
    Group const &G = entry->group;
    if (!is_normal(G, K))
      continue;
    auto const r = frattini_condition(G, K);
    for (auto const &e : r.entries) {
      ++checked;
      if (e.product_size != G.order())
        ++violations;
    }
  }
  report(violations == 0 && checked > 0, "AC2",
         "forward Frattini |K N_G(P)| = |G|: " + std::to_string(checked) +
           " (normal K, Sylow P) entries, " + std::to_string(violations) + " violations");
}

void sylow_laws(std::vector<Pair> const &pairs)
{
  std::size_t checked = 0, violations = 0;
  for (auto const &[entry, K] : pairs) {
    auto const classes = sylow_classes(K);
    if (!sylows_generate(K, classes))
      ++violations;
    for (auto const &c : classes) {
      ++checked;
      std::uint64_t const q = p_part(K.order(), c.prime);
      bool ok = c.representative.order() == q && c.count() % c.prime == 1 % c.prime &&
                (K.order() / q) % c.count() == 0;
      for (auto const &P : c.conjugates)
        ok = ok && P.order() == q;
      violations += !ok;
    }
  }
  report(violations == 0, "AC3",
         "Sylow laws (|P| = p-part, n_p = 1 mod p, n_p | |K|/|P|, <P_1..P_n> = K): " +
           std::to_string(checked) + " (K, p) classes, " + std::to_string(violations) +
           " violations");
}

void one_per_prime(std::vector<Pair> const &pairs)
{
  std::size_t disagreements = 0;
  for (auto const &[entry, K] : pairs) {
    bool const all = frattini_condition(entry->group, K).condition_holds;
    bool const fast =
      frattini_condition(entry->group, K, {SylowScope::one_per_prime}).condition_holds;
    disagreements += all != fast;
  }
  report(disagreements == 0, "AC4",
         "one-per-prime equals all-conjugates on " + std::to_string(pairs.size()) +
           " pairs, " + std::to_string(disagreements) + " disagreements");
}

void certificates(std::vector<Pair> const &pairs)
{
  std::mt19937_64 rng(48);
  auto const tampers = tamper::all();

  std::size_t built = 0, accepted = 0, tamper_tries = 0, tamper_caught = 0;
  for (auto const &[entry, K] : pairs) {
    Group const &G = entry->group;
    if (K.order() == 1 || G.degree() < 2 || !is_normal(G, K))
      continue;

    CertificateBuilder const builder(G, K);
    auto const k_elems = K.elements();
    for (int sample = 0; sample < 2; ++sample) {
      Permutation const x = k_elems[1 + rng() % (k_elems.size() - 1)];
      Permutation const g = G.element(static_cast<ElementIndex>(rng() % G.order()));

      ++built;
      auto const cert = parse_certificate(serialize_certificate(builder.build(x, g)));
      bool const ok = check_certificate(cert, G, K).ok() && cert.result == conjugate(x, g) &&
                      K.contains(cert.result);
      accepted += ok;

      for (auto const &t : tampers) {
        auto bad = cert;
        if (!t.apply(bad, G, K))
          continue;
        ++tamper_tries;
        tamper_caught += !check_certificate(bad, G, K).ok();
      }
    }
  }

  bool const ok = built >= min_certificates && accepted == built && tamper_caught == tamper_tries;
  report(ok, "AC5",
         "certificates: " + std::to_string(accepted) + "/" + std::to_string(built) +
           " accepted with result = x^g in K; " + std::to_string(tamper_caught) + "/" +
           std::to_string(tamper_tries) + " single-field tampers rejected");
}

void oracle_equivalence(std::vector<CatalogEntry> const &catalog)
{
  std::size_t groups = 0, comparisons = 0, mismatches = 0;
  for (auto const &e : catalog) {
    Group const &G = e.group;
    if (G.order() > oracle_max_order)
      continue;
    ++groups;

    auto const g_set = set_of(G);
    auto const census = oracle::subgroups(g_set);
    auto const subs = all_subgroups(G);

    std::vector<oracle::Set> sets;
    for (auto const &H : subs)
      sets.push_back(set_of(H));

    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto const &A = subs[i];
      comparisons += 2;
      mismatches += set_of(normalizer(G, A)) != oracle::normalizer(g_set, sets[i]);
      mismatches += is_normal(G, A) != oracle::is_normal(g_set, sets[i]);

      for (std::size_t j = 0; j < subs.size(); ++j) {
        ++comparisons;
        mismatches += product_set(A, subs[j]).size != oracle::product(sets[i], sets[j]).size();
      }

      for (auto p : prime_divisors(A.order())) {
        ++comparisons;
        std::set<oracle::Set> expected;
        for (auto const &s : oracle::of_order(census, oracle::prime_power_part(A.order(), p))) {
          if (std::includes(sets[i].begin(), sets[i].end(), s.begin(), s.end()))
            expected.insert(s);
        }
        std::set<oracle::Set> ours;
        for (auto const &P : all_sylow(A, p))
          ours.insert(set_of(P));
        mismatches += ours != expected;
      }
    }
  }
  report(mismatches == 0, "AC6",
         "oracle equivalence (normalizer, is_normal, product size, all_sylow) on " +
           std::to_string(groups) + " groups of order <= 24: " + std::to_string(comparisons) +
           " comparisons, " + std::to_string(mismatches) + " mismatches");
}

void spot_values()
{
  auto const s3 = make_symmetric(3);
  auto const s4 = make_symmetric(4);
  auto const a4_group = make_alternating(4);

  // Brute-force recomputation first.
  auto const s3_census = oracle::subgroups(set_of(s3));
  auto const s4_census = oracle::subgroups(set_of(s4));
  auto const a4_census = oracle::subgroups(set_of(a4_group));
  auto const p3 = oracle::closure({parse_cycles("(1 2 3)", 4)}, 4);
  auto const a4_in_s4 = oracle::closure({parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)}, 4);
  auto const n_oracle = oracle::normalizer(set_of(s4), p3);
  auto const t12 = oracle::closure({parse_cycles("(1 2)", 3)}, 3);

  bool const oracle_ok =
    s3_census.size() == 6 && s4_census.size() == 30 &&
    oracle::of_order(a4_census, 3).size() == 4 && oracle::of_order(a4_census, 4).size() == 1 &&
    n_oracle.size() == 6 && oracle::product(a4_in_s4, n_oracle).size() == 24 &&
    oracle::product(t12, oracle::normalizer(set_of(s3), t12)).size() == 2 &&
    !oracle::is_normal(set_of(s3), t12);

  // Then the library.
  auto const a4 = whole_group(a4_group);
  auto const K = generated_subgroup(s4, parse_generator_list("(1 2 3); (1 2)(3 4)", 4));
  auto const N = normalizer(s4, generated_subgroup(s4, parse_generator_list("(1 2 3)", 4)));
  auto const T = generated_subgroup(s3, parse_generator_list("(1 2)", 3));
  auto const t_report = frattini_condition(s3, T);

  bool const lib_ok =
    all_subgroups(s3).size() == 6 && all_subgroups(s4).size() == 30 &&
    all_sylow(a4, 3).size() == 4 && all_sylow(a4, 2).size() == 1 && N.order() == 6 &&
    product_set(K, N).size == 24 && t_report.entries.size() == 1 &&
    t_report.entries[0].product_size == 2 && !t_report.condition_holds && !is_normal(s3, T);

  report(oracle_ok && lib_ok, "AC7",
         "spot values: S3 has 6 subgroups, S4 has 30, A4 n3 = 4 n2 = 1, "
         "|N_S4(<(1 2 3)>)| = 6, |A4 N| = 24, S3 <(1 2)> product 2 != 6 and not normal");
}

} // namespace

int main()
{
  auto const catalog = default_catalog();
  auto const pairs = sweep_pairs(catalog);

  biconditional(catalog);
  forward(pairs);
  sylow_laws(pairs);
  one_per_prime(pairs);
  certificates(pairs);
  oracle_equivalence(catalog);
  spot_values();

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
