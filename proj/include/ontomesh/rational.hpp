#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ontomesh {

// All arithmetic in this project is exact. cpp_rational keeps values
// normalized: lowest terms, denominator > 0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts an integer ("7", "-3"), a fraction ("p/q" with q > 0), or a
// decimal ("0.05", ".2", "-1.5"). Decimals convert exactly: 0.05 -> 1/20.
std::optional<Rational> try_parse_rational(std::string_view text);

// Same grammar; throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q"; plain "p" when the denominator is 1.
std::string format_rational(const Rational& value);

} // namespace ontomesh
