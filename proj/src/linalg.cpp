#include "toric/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

int rank_q(const IntMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  Int prev = 1;
  int r = 0;  // pivots placed so far; pivot lives at (r, r)
  while (r < rows && r < cols) {
    // Pivot of minimal absolute value in the remaining submatrix keeps the
    // fraction-free entries small.
    int pi = -1, pj = -1;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pi < 0 || abs_int(a(i, j)) < abs_int(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    a.swap_rows(r, pi);
    a.swap_cols(r, pj);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / prev;
      a(i, r) = 0;
    }
    prev = a(r, r);
    ++r;
  }
  return r;
}

int kernel_dim_q(const IntMatrix& m) { return m.cols() - rank_q(m); }

Int det(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int r = 0; r < n; ++r) {
    int pi = -1;
    for (int i = r; i < n; ++i)
      if (a(i, r) != 0 && (pi < 0 || abs_int(a(i, r)) < abs_int(a(pi, r)))) pi = i;
    if (pi < 0) return 0;
    if (pi != r) {
      a.swap_rows(r, pi);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / prev;
      a(i, r) = 0;
    }
    prev = a(r, r);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// g = p*x + q*y with g = gcd(x,y) >= 0.
void gcdext(const Int& x, const Int& y, Int& g, Int& p, Int& q) {
  Int old_r = x, r = y;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  p = old_s;
  q = old_t;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const int n = std::min(rows, cols);

  // Combined 2x2 unimodular transforms (extended gcd) put the gcd at the
  // pivot in one step with Bezout-sized coefficients.
  auto row_gcd_op = [&](int t, int i) {  // acts on rows t (pivot) and i
    Int g, p, q;
    gcdext(a(t, t), a(i, t), g, p, q);
    Int at_g = a(t, t) / g, ai_g = a(i, t) / g;
    for (auto* mat : {&a, &left}) {
      IntMatrix& x = *mat;
      for (int c = 0; c < x.cols(); ++c) {
        Int xt = x(t, c), xi = x(i, c);
        x(t, c) = p * xt + q * xi;
        x(i, c) = at_g * xi - ai_g * xt;
      }
    }
  };
  auto col_gcd_op = [&](int t, int j) {
    Int g, p, q;
    gcdext(a(t, t), a(t, j), g, p, q);
    Int at_g = a(t, t) / g, aj_g = a(t, j) / g;
    for (auto* mat : {&a, &right}) {
      IntMatrix& x = *mat;
      for (int r = 0; r < x.rows(); ++r) {
        Int xt = x(r, t), xj = x(r, j);
        x(r, t) = p * xt + q * xj;
        x(r, j) = at_g * xj - aj_g * xt;
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pi < 0 || abs_int(a(i, j)) < abs_int(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    a.swap_rows(t, pi);
    left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      for (int i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) {
          if (a(i, t) % a(t, t) == 0) {
            Int q = a(i, t) / a(t, t);
            a.add_row(i, t, -q);
            left.add_row(i, t, -q);
          } else {
            row_gcd_op(t, i);
          }
        }
      bool col_clean = true;
      for (int j = t + 1; j < cols; ++j)
        if (a(t, j) != 0) {
          if (a(t, j) % a(t, t) == 0) {
            Int q = a(t, j) / a(t, t);
            a.add_col(j, t, -q);
            right.add_col(j, t, -q);
          } else {
            col_gcd_op(t, j);
          }
        }
      for (int i = t + 1; i < rows && col_clean; ++i)
        if (a(i, t) != 0) col_clean = false;
      if (!col_clean) continue;

      // Divisibility chain: fold any non-divisible entry into the pivot.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            left.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SmithForm f;
  f.left = std::move(left);
  f.right = std::move(right);
  for (int t = 0; t < n; ++t) {
    if (a(t, t) == 0) break;
    f.diagonal.push_back(a(t, t));
  }
  return f;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  if (g == 0) throw std::invalid_argument("primitive: zero vector has no direction");
  IntVec r = v;
  for (auto& x : r) x /= g;
  return r;
}

IntMatrix rows_matrix(const std::vector<IntVec>& rows) {
  const int r = int(rows.size());
  const int c = r ? int(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    assert(int(rows[i].size()) == c);
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

// Inverse of a 3x3 unimodular matrix via the adjugate.
IntMatrix inverse3_unimodular(const IntMatrix& r) {
  assert(r.rows() == 3 && r.cols() == 3);
  Int d = det(r);
  assert(d == 1 || d == -1);
  IntMatrix inv(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // adj(r)(j,i): cofactor with rows/cols cyclic keeps signs uniform
      inv(j, i) = (r(r0, c0) * r(r1, c1) - r(r0, c1) * r(r1, c0)) / d;
    }
  return inv;
}

}  // namespace

std::vector<IntVec> saturation_basis(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("saturation_basis: empty input");
  for (const auto& v : vs) assert(v.size() == 3);
  IntMatrix a = rows_matrix(vs);
  SmithForm f = smith_normal_form(a);
  const int r = int(f.diagonal.size());
  if (r == 0) throw std::invalid_argument("saturation_basis: all vectors zero");
  // left * a * right = D  =>  a = left^{-1} D right^{-1}; the row space of a
  // is spanned by the first r rows of right^{-1} scaled by the d_i, so those
  // rows without the scaling are a basis of the saturated lattice.
  IntMatrix rinv = inverse3_unimodular(f.right);
  std::vector<IntVec> basis;
  for (int i = 0; i < r; ++i) basis.push_back({rinv(i, 0), rinv(i, 1), rinv(i, 2)});
  return basis;
}

std::optional<RatVec> solve_exact(const IntMatrix& a, const RatVec& b) {
  assert(int(b.size()) == a.rows());
  const int rows = a.rows(), cols = a.cols();
  // Rational Gauss elimination on the augmented system.
  std::vector<RatVec> m(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = Rat(a(i, j));
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols] / m[i][pivot_col[i]];
  return x;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
  assert(a.size() == 3 && b.size() == 3);
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool fm_feasible(const std::vector<RatVec>& ineq_lhs, const std::vector<Rat>& ineq_rhs,
                 const std::vector<RatVec>& eq_lhs, const std::vector<Rat>& eq_rhs) {
  assert(ineq_lhs.size() == ineq_rhs.size());
  assert(eq_lhs.size() == eq_rhs.size());
  // Represent every constraint as lhs . x >= rhs; equalities become two rows.
  std::vector<RatVec> lhs = ineq_lhs;
  std::vector<Rat> rhs = ineq_rhs;
  for (size_t i = 0; i < eq_lhs.size(); ++i) {
    lhs.push_back(eq_lhs[i]);
    rhs.push_back(eq_rhs[i]);
    RatVec neg = eq_lhs[i];
    for (auto& v : neg) v = -v;
    lhs.push_back(neg);
    rhs.push_back(-eq_rhs[i]);
  }
  const int nvars = lhs.empty() ? 0 : int(lhs[0].size());

  for (int v = nvars - 1; v >= 0; --v) {
    std::vector<RatVec> pos, neg, zero;
    std::vector<Rat> pos_rhs, neg_rhs, zero_rhs;
    for (size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i][v] > 0) {
        pos.push_back(lhs[i]);
        pos_rhs.push_back(rhs[i]);
      } else if (lhs[i][v] < 0) {
        neg.push_back(lhs[i]);
        neg_rhs.push_back(rhs[i]);
      } else {
        zero.push_back(lhs[i]);
        zero_rhs.push_back(rhs[i]);
      }
    }
    std::vector<RatVec> next = zero;
    std::vector<Rat> next_rhs = zero_rhs;
    for (size_t p = 0; p < pos.size(); ++p)
      for (size_t q = 0; q < neg.size(); ++q) {
        // pos row gives x_v >= (...), neg row gives x_v <= (...): combine.
        Rat cp = pos[p][v], cq = -neg[q][v];
        RatVec row(v, Rat(0));
        for (int j = 0; j < v; ++j) row[j] = pos[p][j] * cq + neg[q][j] * cp;
        next.push_back(std::move(row));
        next_rhs.push_back(pos_rhs[p] * cq + neg_rhs[q] * cp);
      }
    for (auto& row : next) row.resize(v);
    lhs = std::move(next);
    rhs = std::move(next_rhs);
  }
  for (size_t i = 0; i < lhs.size(); ++i)
    if (rhs[i] > 0) return false;  // 0 >= rhs violated
  return true;
}

}  // namespace toric
