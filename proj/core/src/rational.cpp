#include "superpres/rational.hpp"

#include <stdexcept>

namespace superpres {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

} // namespace superpres
