#include "frattini/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "frattini/error.hpp"

namespace frattini {

namespace {

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

Group parse_group_text(std::string_view text)
{
  std::size_t degree = 0;
  std::vector<Permutation> gens;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;

    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (degree == 0) {
      constexpr std::string_view keyword = "degree";
      if (line.substr(0, keyword.size()) != keyword)
        throw ParseError("expected \"degree n\"", line_no);
      auto const number = trim(line.substr(keyword.size()));
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), degree);
      if (ec != std::errc{} || ptr != number.data() + number.size() || degree == 0)
        throw ParseError("degree must be a positive integer", line_no);
      continue;
    }

    try {
      gens.push_back(parse_cycles(line, degree));
    } catch (ParseError const &e) {
      throw ParseError(e.what(), line_no);
    }
  }

  if (degree == 0)
    throw ParseError("missing \"degree n\" line");
  return build_group(degree, std::move(gens));
}

Group load_group_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

std::string format_group_file(Group const &G)
{
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (auto const &g : G.generators())
    out += format_cycles(g) + "\n";
  return out;
}

void save_group_file(Group const &G, std::filesystem::path const &path)
{
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write group file " + path.string());
  out << format_group_file(G);
}

} // namespace frattini
