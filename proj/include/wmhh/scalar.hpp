#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wmhh {

/// Exact rational scalar. Always in lowest terms with positive denominator.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string to_string(const Scalar& s);

/// Parses "p" or "p/q". Rejects zero denominators and malformed literals.
Scalar parse_scalar(const std::string& text);

}  // namespace wmhh
