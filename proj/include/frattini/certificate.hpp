#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frattini/frattini.hpp"

namespace frattini {

struct Decomposition
{
  std::size_t sylow_index = 0;
  std::vector<Permutation> sylow_generators;
  Permutation a; ///< in N_G(P_i)
  Permutation b; ///< in K, with g = a b

  friend bool operator==(Decomposition const &, Decomposition const &) = default;
};

struct ConjugatedLetter
{
  Permutation element; ///< letter^g
  std::size_t sylow_index = 0;
  /// Generators of P_i^b, the subgroup the conjugated letter lands in.
  std::vector<Permutation> subgroup_generators;

  friend bool operator==(ConjugatedLetter const &, ConjugatedLetter const &) = default;
};

/**
 * Transcript showing x^g in K for one pair (x, g): x is written as a word
 * in Sylow elements of K, g is split as a_i b per Sylow subgroup used, each
 * letter is conjugated into P_i^b, and the conjugated letters multiply back
 * to x^g.
 */
struct NormalityCertificate
{
  std::size_t degree = 0;
  std::vector<Permutation> group_generators;
  std::vector<Permutation> subgroup_generators;
  Permutation x;
  Permutation g;
  std::vector<Letter> word;
  std::vector<Decomposition> decompositions;
  std::vector<ConjugatedLetter> conjugated_letters;
  Permutation result;

  friend bool operator==(NormalityCertificate const &, NormalityCertificate const &) = default;
};

/**
 * Caches everything that depends only on (G, K): the Sylow family, the
 * normalizers and the word table. Construction throws PreconditionError
 * unless G = K N_G(P) holds for every Sylow subgroup P of K.
 */
class CertificateBuilder
{
public:
  CertificateBuilder(Group G, Subgroup K);

  /// Throws PreconditionError if x is not in K or g is not in G, and
  /// InternalError if the transcript fails its own verification.
  NormalityCertificate build(Permutation const &x, Permutation const &g) const;

  std::span<Subgroup const> sylow_family() const { return _family; }

private:
  Group _group;
  Subgroup _subgroup;
  std::vector<Subgroup> _family;
  std::vector<Subgroup> _normalizers;
  SylowWordTable _words;
};

NormalityCertificate build_certificate(Group const &G, Subgroup const &K,
                                       Permutation const &x, Permutation const &g);

enum class CheckFailure
{
  none,
  degree_mismatch,
  group_mismatch,
  subgroup_mismatch,
  x_outside_subgroup,
  g_outside_group,
  word_product_mismatch,
  unknown_sylow_index,
  letter_outside_sylow,
  not_a_sylow_subgroup,
  decomposition_set_mismatch,
  decomposition_product_mismatch,
  a_outside_normalizer,
  b_outside_subgroup,
  conjugated_letter_count,
  conjugated_letter_mismatch,
  conjugate_subgroup_mismatch,
  conjugated_letter_outside,
  conjugate_subgroup_outside_subgroup,
  result_mismatch,
  result_outside_subgroup,
};

char const *to_string(CheckFailure reason);

struct CheckResult
{
  CheckFailure reason = CheckFailure::none;
  std::string detail;

  bool ok() const { return reason == CheckFailure::none; }
  explicit operator bool() const { return ok(); }
};

/**
 * Replays a certificate against G and K from scratch, using only products,
 * inverses, conjugation and membership in element tables built from the
 * generators written in the certificate.
 */
CheckResult check_certificate(NormalityCertificate const &cert, Group const &G,
                              Subgroup const &K);

/// JSON text with the fields degree, group_generators, subgroup_generators,
/// x, g, word, decompositions, conjugated_letters and result. Permutations
/// are written in cycle notation.
std::string serialize_certificate(NormalityCertificate const &cert);

/// Throws ParseError on malformed input.
NormalityCertificate parse_certificate(std::string_view text);

} // namespace frattini
