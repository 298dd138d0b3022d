#include "fairdiv/rational.hpp"

#include <sstream>

namespace fairdiv {

Int rat_floor(const Rat& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  Int t = num / den;
  if (num < 0 && t * den != num) --t;
  return t;
}

Rat harmonic(int n) {
  if (n < 1) raise(Errc::zero_n, "harmonic requires n >= 1, got " + std::to_string(n));
  Rat h;
  for (int j = 1; j <= n; ++j) h += Rat(1, j);
  return h;
}

std::string rat_string(const Rat& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(text);
    } else {
      num = Int(text.substr(0, slash));
      den = Int(text.substr(slash + 1));
    }
  } catch (const std::exception& e) {
    raise(Errc::parse_error, "bad rational '" + text + "': " + e.what());
  }
  if (den == 0) raise(Errc::parse_error, "rational with zero denominator: " + text);
  return Rat(num, den);
}

double rat_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace fairdiv
