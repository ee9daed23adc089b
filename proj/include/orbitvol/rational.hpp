#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace orbitvol {

/// Exact rational scalar used throughout; every geometric quantity in this
/// project is computed over Q, floats appear only in Monte Carlo estimates
/// and human-readable output.
using Rat = boost::multiprecision::mpq_rational;
using RatVec = std::vector<Rat>;

/// Canonical "p/q" rendering ("p" when the value is integral).
std::string rat_to_string(const Rat& q);

/// Decimal rendering at `sig` significant digits (convenience output only).
std::string rat_to_decimal_string(const Rat& q, int sig = 12);

double rat_to_double(const Rat& q);

/// Parses "p", "-p" or "p/q". Throws ValidationError on anything else.
Rat parse_rat(const std::string& s);

/// "a,b,c" <-> vector helpers used by the CLI and fixtures.
std::string vec_to_string(const RatVec& v);
RatVec parse_rat_vector(const std::string& s);

}  // namespace orbitvol
