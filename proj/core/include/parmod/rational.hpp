#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

// Exact arithmetic used throughout. Stability logic never touches floating
// point; coefficients that can grow under iterated products use Int.
namespace parmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat make_rat(const Int& p, const Int& q) { return Rat(p, q); }

// Parses "p/q" or "p" (optional leading '-'). Raises a parse DomainError on
// malformed input or zero denominator.
Rat parse_rational(std::string_view text);

// Renders reduced form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rat& q);

std::string int_to_string(const Int& v);

}  // namespace parmod
