#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frattini/group.hpp"

namespace frattini {

/// S_n from (1 2 ... n) and (1 2).
Group make_symmetric(std::size_t n);

/// A_n from the 3-cycles (1 2 i); trivial on n points for n <= 2.
Group make_alternating(std::size_t n);

/// C_n from (1 2 ... n).
Group make_cyclic(std::size_t n);

/// Dihedral group of order 2n. Acts on n points for n >= 3; D_1 and D_2 are
/// realized as C_2 on 2 points and the Klein group on 4 points.
Group make_dihedral(std::size_t n);

/// Q_8 in its regular representation on 8 points.
Group make_quaternion();

/// G x H acting on disjoint point sets, G first.
Group direct_product(Group const &G, Group const &H);

struct CatalogEntry
{
  std::string name;
  Group group;
};

/**
 * Resolves names such as "S4", "A5", "C12", "D6", "Q8" and products of them
 * joined by 'x' ("S3xC2", "C2xC2xC2"). Throws ParseError for unknown names.
 */
Group builtin_group(std::string_view name);

/// True iff `name` parses as a builtin.
bool is_builtin_name(std::string_view name);

/// S2-S4, A3-A4, C1-C24, D3-D12, Q8, C2xC2xC2, S3xC2, A4xC2.
std::vector<CatalogEntry> default_catalog();

} // namespace frattini
