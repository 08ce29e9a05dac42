#include "hgl/rational.hpp"

#include <stdexcept>

namespace hgl {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace hgl
