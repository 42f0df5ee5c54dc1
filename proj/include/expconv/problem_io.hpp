#pragma once

#include <string>

#include "expconv/ivp.hpp"

namespace expconv {

/// Parse a JSON problem file; unknown keys are rejected. Throws ParseError.
IvpProblem parse_problem_json(const std::string& text);
IvpProblem parse_problem_file(const std::string& path);

/// Canonical JSON: sugar atoms expanded to raw exponential atoms, keys
/// sorted; parsing the dump reproduces the same dump byte for byte.
std::string dump_normalized(const IvpProblem& p);

} // namespace expconv
