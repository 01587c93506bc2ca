#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

/// Rank over Q, computed by fraction-free (Bareiss) elimination on integers.
int rank_q(const IntMatrix& m);

/// Kernel dimension over Q: cols - rank.
int kernel_dim_q(const IntMatrix& m);

/// Exact determinant of a square matrix (Bareiss).
Int det(const IntMatrix& m);

/// Smith normal form: diagonal d1 | d2 | ... with unimodular transforms,
/// left * m * right == diagonal padded with zeros, det(left), det(right) = +-1.
struct SmithForm {
  std::vector<Int> diagonal;  // nonnegative, divisibility chain
  IntMatrix left;             // rows x rows
  IntMatrix right;            // cols x cols
};

SmithForm smith_normal_form(const IntMatrix& m);

/// v / gcd(entries). Throws std::invalid_argument on the zero vector.
IntVec primitive(const IntVec& v);

/// Z-basis of Z^3 intersected with the real span of the given 3-vectors.
/// Inputs must not all be zero.
std::vector<IntVec> saturation_basis(const std::vector<IntVec>& vs);

/// Exact rational solve A x = b. Returns nullopt when inconsistent; when the
/// solution space is positive-dimensional an arbitrary solution is returned.
std::optional<RatVec> solve_exact(const IntMatrix& a, const RatVec& b);

/// Stack vectors as matrix rows.
IntMatrix rows_matrix(const std::vector<IntVec>& rows);

IntVec cross3(const IntVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

/// Feasibility of { x : a_i . x >= b_i } over Q by Fourier-Motzkin
/// elimination. `eqs` rows are equality constraints a_i . x == b_i.
bool fm_feasible(const std::vector<RatVec>& ineq_lhs, const std::vector<Rat>& ineq_rhs,
                 const std::vector<RatVec>& eq_lhs = {}, const std::vector<Rat>& eq_rhs = {});

}  // namespace toric
