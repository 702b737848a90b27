#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b", an integer, or a plain decimal ("0.125") into an exact rational.
/// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

BigInt pow_int(const BigInt& base, std::uint64_t exponent);
Rational pow_rational(const Rational& base, std::uint64_t exponent);

/// Smallest integer >= r.
BigInt ceil_rational(const Rational& r);

std::string to_string(const Rational& r);

} // namespace hcolor
