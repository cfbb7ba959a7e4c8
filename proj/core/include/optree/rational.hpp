#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace optree {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  return q.str();
}

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace optree
