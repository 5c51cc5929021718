#pragma once

#include <functional>
#include <string>

namespace cosserat {

/// Parses a scalar expression in the variables x1, x2 (aliases x, y).
/// Grammar: + - * / ^, parentheses, unary minus, numeric literals, the
/// constant pi, and the functions sin cos tan exp log sqrt abs.
/// Throws std::invalid_argument with position context on malformed input.
std::function<double(double, double)> parse_expression(const std::string& text);

}  // namespace cosserat
