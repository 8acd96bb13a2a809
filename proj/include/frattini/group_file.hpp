#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "frattini/group.hpp"

namespace frattini {

// Group files are line oriented:
//
//   # comment
//   degree 4
//   (1 2 3 4)
//   (1 2)
//
// The first non-blank line is "degree n"; every later non-blank line is one
// generator in cycle notation. '#' starts a comment anywhere on a line.

/// Throws ParseError (with the offending line number) on malformed input.
Group parse_group_text(std::string_view text);

Group load_group_file(std::filesystem::path const &path);

std::string format_group_file(Group const &G);

void save_group_file(Group const &G, std::filesystem::path const &path);

} // namespace frattini
