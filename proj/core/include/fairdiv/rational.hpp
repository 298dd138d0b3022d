#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {

using Int = boost::multiprecision::cpp_int;

// Always stored in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Floor toward negative infinity (plain integer division truncates).
Int rat_floor(const Rat& q);

/// n-th harmonic number 1 + 1/2 + ... + 1/n, exact.
Rat harmonic(int n);

/// Canonical "num/den" form, e.g. "3/2", "5/1", "-1/3".
std::string rat_string(const Rat& q);

/// Accepts "num/den" or a bare integer.
Rat parse_rat(const std::string& text);

double rat_double(const Rat& q);

}  // namespace fairdiv
