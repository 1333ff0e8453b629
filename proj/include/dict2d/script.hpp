#pragma once

#include <filesystem>
#include <iosfwd>

#include "dict2d/dictionary.hpp"

namespace dict2d {

// Executes a command script against a fresh dictionary. Commands, one per
// line (blank lines and lines starting with '#' are skipped):
//   add <matrix-file>      insert; prints the new pattern id
//   remove <id>            remove that pattern
//   search <matrix-file>   print "MATCH <id> <row> <col>" per occurrence,
//                          sorted by (row, col, id), 1-based
//   stats                  print d, ell, m_bar, m_prime, tau, comparisons
//                          as key=value lines
// Relative matrix paths resolve against the script's directory. Returns 0,
// or 2 after printing a one-line diagnostic to `err`.
int run_script(const std::filesystem::path& script, Engine engine,
               std::ostream& out, std::ostream& err);

}  // namespace dict2d
