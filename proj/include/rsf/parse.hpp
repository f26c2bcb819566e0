#pragma once

#include <string>
#include <vector>

#include "rsf/applications.hpp"
#include "rsf/nice_rational.hpp"

namespace rsf {

/// Parses an expression over integers and variables with + - * / ^ and
/// parentheses. Every divisor must factor as c * X^a * prod (1 - X^b)^k, where
/// (1 + m) and geometric sums are accepted and rewritten over (1 - m) factors.
NiceRational parse_expr(const std::string& text);

/// Parses "3", "2,1", "(2,1)", "3 + 2", "2*(1,1)"; "0" is the trivial module.
ModuleSpec parse_module(const std::string& text, int d);

/// Parses a comma- or space-separated list of positive integers.
std::vector<int> parse_int_list(const std::string& text);

/// Parses a comma-separated list of variable names.
std::vector<VarId> parse_var_list(const std::string& text);

}  // namespace rsf
