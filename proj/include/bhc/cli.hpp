#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhc {

/// Dispatches one command. Reports go to out as deterministic "key: value"
/// lines (matrices/codes/assignments in their file grammar, prefixed by a
/// comment echo of the command). Errors go to err.
/// Exit status: 0 success (and verdict true, when there is one); 1 verdict
/// false; 2 usage, parse or domain errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bhc
