#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ajima {

// Exit codes: 0 all pass, 1 a check failed, 2 configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands id prefixes ("T01" -> "T01_tangents"); throws UnknownCheckId.
std::vector<std::string> resolve_check_ids(const std::vector<std::string>& tokens);

}  // namespace ajima
