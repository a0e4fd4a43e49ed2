#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace olr {

using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);
// "7/5", or "3" for integers.
std::string to_string(const Rational& r);

}  // namespace olr
