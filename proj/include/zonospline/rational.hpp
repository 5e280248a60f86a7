#ifndef ZONOSPLINE_RATIONAL_HPP
#define ZONOSPLINE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zonospline {

// Exact rational scalar. All combinatorial decisions (signs, memberships,
// genericity) are made in this type; floating point appears only in spline
// values.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Parses "12", "-3/4" or a plain decimal such as "0.25" / "-1.5".
Rational parse_rational(const std::string& text);

// Canonical form: "p" or "p/q" with q > 1 and gcd(p,q) = 1.
std::string rational_to_string(const Rational& q);

}  // namespace zonospline

#endif
