#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace squarefold {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1. Exact round trip.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);  // throws validation_error

inline BigInt rat_num(const Rat& r) { return numerator(r); }
inline BigInt rat_den(const Rat& r) { return denominator(r); }

}  // namespace squarefold
