#pragma once

#include <map>
#include <string>

namespace cslce {

// Evaluates arithmetic such as "5*log(n)/n" or "log(n)^2/n": numbers,
// named variables, + - * / ^, parentheses, unary minus, and the functions
// log (natural), log2, sqrt, exp. Throws ConfigError on malformed input or
// unknown names.
double eval_expression(const std::string& text, const std::map<std::string, double>& vars = {});

}  // namespace cslce
