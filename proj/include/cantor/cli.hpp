#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantor::cli {

/// Runs one command. Exit codes: 0 success, 1 parse/validation failure or a
/// failed check, 2 when the level search is exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
