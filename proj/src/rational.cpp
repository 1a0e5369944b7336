#include "rembed/rational.hpp"

#include <stdexcept>

namespace rembed {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational{BigInt{text}};
    BigInt p{text.substr(0, slash)};
    BigInt q{text.substr(slash + 1)};
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational{p, q};
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace rembed
