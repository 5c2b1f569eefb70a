#pragma once

#include <string>

namespace faraday {

// Shortest decimal representation that round-trips the double exactly
// (std::to_chars with no precision argument). Deterministic, locale-free.
std::string format_double(double v);

}  // namespace faraday
