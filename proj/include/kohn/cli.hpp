#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kohn/group_catalog.hpp"

namespace kohn::cli {

/// Parses the group grammar
///   cyclic:m | lens:m:q1,...,qn | bindih:2m | Q | 2T | 2O | 2I
///   | <base>xC:l | qsemi:l | cycsemi:m:l
/// Throws ParseError on malformed text and ConstraintError (or NonFreeAction)
/// when the family's parameter constraints fail.
QuotientGroup parse_group_spec(const std::string& text);

/// Canonical spelling: parse_group_spec(text).name().
std::string canonical_spec(const std::string& text);

/// Runs one command line (without the program name). Writes the result
/// document to out and diagnostics to err. Returns 0 on success, 1 on user
/// error, 2 on internal invariant violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kohn::cli
