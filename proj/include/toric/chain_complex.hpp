#pragma once

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

/// Graded cell counts with integer boundary matrices d[k] : C_k -> C_{k-1}.
/// d[0] is the zero map (empty matrix).
struct ChainComplex {
  std::vector<int> dims;
  std::vector<IntMatrix> d;  // d.size() == dims.size(); d[k] is dims[k-1] x dims[k]

  int top() const { return int(dims.size()) - 1; }

  bool dd_zero() const {
    for (size_t k = 2; k < d.size(); ++k)
      if (!(d[k - 1] * d[k]).is_zero()) return false;
    return true;
  }

  /// Rational Betti numbers b_0 .. b_top.
  std::vector<int> betti() const {
    const int t = top();
    std::vector<int> rk(t + 2, 0);
    for (int k = 1; k <= t; ++k) rk[k] = rank_q(d[k]);
    std::vector<int> b(t + 1);
    for (int k = 0; k <= t; ++k) b[k] = dims[k] - rk[k] - rk[k + 1];
    return b;
  }

  long long euler() const {
    long long chi = 0;
    for (int k = 0; k <= top(); ++k) chi += (k % 2 ? -1 : 1) * (long long)dims[k];
    return chi;
  }
};

}  // namespace toric
