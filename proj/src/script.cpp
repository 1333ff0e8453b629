#include "dict2d/script.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "dict2d/core.hpp"

namespace dict2d {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

TextGrid load_grid(const std::filesystem::path& base, std::string_view arg) {
  std::filesystem::path p(arg);
  if (p.is_relative()) p = base / p;
  return parse_matrix(read_file(p));
}

}  // namespace

int run_script(const std::filesystem::path& script, Engine engine,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(script);
  if (!in) {
    err << "error: cannot open script " << script.string() << "\n";
    return 2;
  }
  const std::filesystem::path base = script.parent_path();
  Dictionary2D dict;
  dict.set_engine(engine);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd) || cmd.front() == '#') continue;
    try {
      if (cmd == "add" || cmd == "search") {
        std::string arg;
        if (!(ls >> arg)) throw std::runtime_error("missing file argument");
        const TextGrid grid = load_grid(base, arg);
        if (cmd == "add") {
          out << dict.insert_pattern(grid.rows) << "\n";
        } else {
          out << format_occurrences(dict.search(grid));
        }
      } else if (cmd == "remove") {
        std::string arg;
        if (!(ls >> arg)) throw std::runtime_error("missing id argument");
        int id = 0;
        const auto res =
            std::from_chars(arg.data(), arg.data() + arg.size(), id);
        if (res.ec != std::errc{} || res.ptr != arg.data() + arg.size())
          throw std::runtime_error("bad id '" + arg + "'");
        dict.remove_pattern(id);
      } else if (cmd == "stats") {
        const auto s = dict.stats();
        out << "d=" << s.d << "\n"
            << "ell=" << s.ell << "\n"
            << "m_bar=" << s.m_bar << "\n"
            << "m_prime=" << s.m_prime << "\n"
            << "tau=" << s.tau << "\n"
            << "comparisons=" << s.comparisons << "\n";
      } else {
        throw std::runtime_error("unknown command '" + cmd + "'");
      }
    } catch (const std::exception& e) {
      err << "error: " << script.filename().string() << ":" << lineno << ": "
          << e.what() << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace dict2d
