#include "olr/core/rational.hpp"

namespace olr {

std::int64_t floor_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace olr
