#include "fdc/rational.hpp"

#include <stdexcept>

namespace fdc {

Rational rationalFromString(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("rationalFromString: malformed rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rationalFromString: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

}  // namespace fdc
