#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

// All lattice and boundary-operator arithmetic is done with arbitrary
// precision integers; rationals appear only in Fourier-Motzkin feasibility
// and in intermediate incidence-degree computations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

inline int sign_int(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace toric
