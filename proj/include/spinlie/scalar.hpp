#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>

namespace spinlie {

using BigInt = boost::multiprecision::cpp_int;
// Exact coefficients. Brackets only ever scale by +-2, so closures over
// rational inputs stay rational and rank decisions need no tolerance.
using Rat = boost::multiprecision::cpp_rational;

using Cx = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static bool is_zero(const Rat& v) { return v.is_zero(); }
  static double to_double(const Rat& v) { return v.template convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
  static bool is_zero(double v) { return v == 0.0; }
  static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Cx> {
  static bool is_zero(const Cx& v) { return v == Cx(0.0, 0.0); }
};

// Every double is mantissa*2^e, hence an exact rational.
Rat rat_from_double(double v);

// Accepts "3", "-2", "3/2", "1.5", ".25", "-0.75".
Rat rat_from_string(const std::string& text);

std::string rat_to_string(const Rat& v);

}  // namespace spinlie
