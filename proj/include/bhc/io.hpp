#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bhc/codes.hpp"
#include "bhc/logmatrix.hpp"
#include "bhc/propelinear.hpp"

namespace bhc {

/// Matrix file grammar (bit-exact): UTF-8, LF line endings; lines whose first
/// character is '#' are ignored; first significant line "n k"; then exactly n
/// lines of n base-10 integers in [0,k), single spaces, no trailing
/// whitespace. parse(emit(m)) == m.
LogMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const LogMatrix& m);

/// Code file: first significant line "n k M", then M codeword lines.
Code parse_code(const std::string& text);
std::string emit_code(const Code& c);

/// Assignment file: first significant line "n k M", then one line per
/// codeword: the codeword followed by its permutation in disjoint-cycle
/// notation (1-based, cycles sorted by smallest element; "id" for identity).
PropelinearStructure parse_assignment(const std::string& text);
std::string emit_assignment(const PropelinearStructure& ps);

/// Accepts either a plain code file or an assignment file (the cycles column
/// is ignored); lets assignment files double as code files in the CLI.
Code parse_code_flexible(const std::string& text);

std::string read_file(const std::string& path);

} // namespace bhc
