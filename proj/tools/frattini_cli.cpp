// Command-line front end: verify, certify, check-cert, sylow, normalizer,
// sweep. Exit codes: 0 success, 1 usage or input error, 2 counterexample,
// rejected certificate or internal verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frattini/catalog.hpp"
#include "frattini/certificate.hpp"
#include "frattini/error.hpp"
#include "frattini/frattini.hpp"
#include "frattini/group_file.hpp"
#include "frattini/kernels.hpp"
#include "frattini/sweep.hpp"
#include "frattini/sylow.hpp"

namespace {

using namespace frattini;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_counterexample = 2;

Group resolve_group(std::string const &spec)
{
  if (is_builtin_name(spec))
    return builtin_group(spec);
  return load_group_file(spec);
}

Subgroup resolve_subgroup(Group const &G, std::string const &gens)
{
  auto const perms = parse_generator_list(gens, G.degree());
  return generated_subgroup(G, perms);
}

std::string describe(Subgroup const &H)
{
  auto const gens = format_generator_list(H.generators());
  return "<" + (gens.empty() ? std::string("()") : gens) + "> order " +
         std::to_string(H.order());
}

void print_report(FrattiniReport const &r)
{
  std::printf("%-5s %-5s %-6s %-9s %-10s %-5s  %s\n", "prime", "index", "|P|", "|N_G(P)|",
              "|K N_G(P)|", "holds", "generators");
  for (auto const &e : r.entries) {
    std::printf("%-5llu %-5zu %-6llu %-9llu %-10llu %-5s  %s\n",
                static_cast<unsigned long long>(e.prime), e.sylow_index,
                static_cast<unsigned long long>(e.sylow.order()),
                static_cast<unsigned long long>(e.normalizer_order),
                static_cast<unsigned long long>(e.product_size), e.holds ? "yes" : "no",
                format_generator_list(e.sylow.generators()).c_str());
  }
  std::printf("condition  %s%s\n", r.condition_holds ? "holds" : "fails",
              r.vacuous ? " (vacuous: trivial subgroup)" : "");
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Common
{
  std::string group;
  std::string subgroup;
};

void add_common(CLI::App *cmd, Common &c)
{
  cmd->add_option("--group", c.group, "builtin name (S4, A4, C6, D4, Q8, S3xC2, ...) or group file")
    ->required();
  cmd->add_option("--subgroup", c.subgroup, "generators in cycle notation, separated by ';'")
    ->required();
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Frattini argument and its converse for finite permutation groups"};
  app.require_subcommand(1);

  std::string kernels_choice;
  app.add_option("--kernels", kernels_choice, "force a kernel ISA (scalar, avx2)");

  bool fast = false;
  app.add_flag("--one-per-prime", fast, "check one Sylow subgroup per prime instead of all");

  Common verify_args;
  auto *verify = app.add_subcommand("verify", "evaluate G = K N_G(P) and compare with normality");
  add_common(verify, verify_args);

  Common certify_args;
  std::string x_text, g_text, out_path;
  auto *certify = app.add_subcommand("certify", "emit a normality certificate for x^g");
  add_common(certify, certify_args);
  certify->add_option("--x", x_text, "element of K")->required();
  certify->add_option("--g", g_text, "element of G")->required();
  certify->add_option("--out", out_path, "write the certificate here instead of stdout");

  Common check_args;
  std::string cert_path;
  auto *check = app.add_subcommand("check-cert", "replay a certificate");
  check->add_option("path", cert_path, "certificate file")->required();
  add_common(check, check_args);

  Common sylow_args;
  std::uint64_t prime = 0;
  auto *sylow = app.add_subcommand("sylow", "list the Sylow subgroups of K");
  add_common(sylow, sylow_args);
  sylow->add_option("--prime", prime, "restrict to one prime");

  Common normalizer_args;
  auto *norm = app.add_subcommand("normalizer", "compute N_G(K)");
  add_common(norm, normalizer_args);

  std::uint64_t max_order = 48;
  unsigned threads = 1;
  std::vector<std::string> sweep_groups;
  bool no_runtime = false;
  auto *sweep_cmd = app.add_subcommand("sweep", "check the biconditional over a catalog");
  sweep_cmd->add_option("--max-order", max_order, "largest group order to include");
  sweep_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--group", sweep_groups, "groups to sweep (default: builtin catalog)");
  sweep_cmd->add_flag("--no-runtime", no_runtime, "omit the runtime line");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (!kernels_choice.empty()) {
    bool ok = false;
    for (auto isa : kernels::available_isas()) {
      if (kernels::isa_name(isa) == kernels_choice)
        ok = kernels::select(isa);
    }
    if (!ok) {
      std::cerr << "error: kernel ISA \"" << kernels_choice << "\" is not available\n";
      return exit_usage;
    }
  }

  FrattiniOptions options;
  if (fast)
    options.scope = SylowScope::one_per_prime;

  try {
    if (*verify) {
      Group const G = resolve_group(verify_args.group);
      Subgroup const K = resolve_subgroup(G, verify_args.subgroup);
      auto const v = converse_verdict(G, K, options);

      std::printf("group      degree %zu order %llu\n", G.degree(),
                  static_cast<unsigned long long>(G.order()));
      std::printf("subgroup   %s\n", describe(K).c_str());
      print_report(v.report);
      std::printf("normal     %s\n", v.normal ? "yes" : "no");
      std::printf("consistent %s\n", v.consistent ? "yes" : "NO (counterexample)");
      return v.consistent ? exit_ok : exit_counterexample;
    }

    if (*certify) {
      Group const G = resolve_group(certify_args.group);
      Subgroup const K = resolve_subgroup(G, certify_args.subgroup);
      auto const cert = build_certificate(G, K, parse_cycles(x_text, G.degree()),
                                          parse_cycles(g_text, G.degree()));
      auto const text = serialize_certificate(cert);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return exit_usage;
        }
        out << text;
      }
      return exit_ok;
    }

    if (*check) {
      Group const G = resolve_group(check_args.group);
      Subgroup const K = resolve_subgroup(G, check_args.subgroup);
      auto const cert = parse_certificate(read_file(cert_path));
      auto const result = check_certificate(cert, G, K);
      if (result) {
        std::printf("accepted: %s^%s = %s lies in K\n", format_cycles(cert.x).c_str(),
                    format_cycles(cert.g).c_str(), format_cycles(cert.result).c_str());
        return exit_ok;
      }
      std::printf("rejected: %s (%s)\n", to_string(result.reason), result.detail.c_str());
      return exit_counterexample;
    }

    if (*sylow) {
      Group const G = resolve_group(sylow_args.group);
      Subgroup const K = resolve_subgroup(G, sylow_args.subgroup);
      if (prime != 0 && K.order() % prime != 0)
        throw PreconditionError(std::to_string(prime) + " does not divide |K|");

      std::printf("subgroup %s\n", describe(K).c_str());
      std::size_t index = 0;
      for (auto const &c : sylow_classes(K)) {
        if (prime != 0 && c.prime != prime) {
          index += c.count();
          continue;
        }
        std::printf("p = %llu  |P| = %llu  n_p = %zu  representative %s\n",
                    static_cast<unsigned long long>(c.prime),
                    static_cast<unsigned long long>(c.sylow_order()), c.count(),
                    describe(c.representative).c_str());
        for (auto const &P : c.conjugates)
          std::printf("  P_%zu %s\n", ++index, describe(P).c_str());
      }
      return exit_ok;
    }

    if (*norm) {
      Group const G = resolve_group(normalizer_args.group);
      Subgroup const K = resolve_subgroup(G, normalizer_args.subgroup);
      Subgroup const N = normalizer(G, K);
      std::printf("subgroup   %s\n", describe(K).c_str());
      std::printf("normalizer %s\n", describe(N).c_str());
      std::printf("index      %llu\n", static_cast<unsigned long long>(G.order() / N.order()));
      return exit_ok;
    }

    if (*sweep_cmd) {
      std::vector<CatalogEntry> sources;
      if (sweep_groups.empty()) {
        for (auto &entry : default_catalog()) {
          if (entry.group.order() <= max_order)
            sources.push_back(std::move(entry));
        }
      } else {
        for (auto const &name : sweep_groups)
          sources.push_back(CatalogEntry{name, resolve_group(name)});
      }

      SweepOptions sweep_options;
      sweep_options.max_order = max_order;
      sweep_options.threads = threads;
      sweep_options.frattini = options;

      auto const report = sweep(sources, sweep_options);
      std::cout << format_sweep_report(report, !no_runtime);
      return report.totals.inconsistencies == 0 ? exit_ok : exit_counterexample;
    }
  } catch (InternalError const &e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return exit_counterexample;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  return exit_usage;
}
