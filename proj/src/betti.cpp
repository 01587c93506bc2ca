#include "toric/betti.hpp"

#include <algorithm>
#include <sstream>

#include "toric/link5.hpp"

namespace toric {

std::string BExpr::str() const {
  std::ostringstream os;
  if (c1 == 0) {
    os << c0;
    return os.str();
  }
  if (c0 != 0) os << c0;
  if (c1 == 1)
    os << (c0 != 0 ? "+b" : "b");
  else if (c1 == -1)
    os << "-b";
  else {
    if (c1 > 0 && c0 != 0) os << "+";
    os << c1 << "b";
  }
  return os.str();
}

namespace {

const char* kind_name(BettiErrorKind k) {
  switch (k) {
    case BettiErrorKind::PolicyInapplicable: return "PolicyInapplicable";
    case BettiErrorKind::OutOfRange: return "OutOfRange";
    case BettiErrorKind::NegativeBetti: return "NegativeBetti";
  }
  return "?";
}

Int admissible_max(int f1, int f2) {
  Int h2max = f1 - 3;
  Int h3max = 3 * Int(f1) - f2 - 6;
  return std::min(h2max, h3max);
}

}  // namespace

BettiError::BettiError(BettiErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind) {}

ResolvedB resolve_b(const Fan& fan3, const BPolicy& policy) {
  auto f = fan3.f_vector();
  const int f1 = f[0], f2 = f[1], f3 = f[2];
  const Int bmax = admissible_max(f1, f2);
  switch (policy.mode) {
    case BPolicyMode::Simplicial:
      if (!fan3.is_simplicial())
        throw BettiError(BettiErrorKind::PolicyInapplicable,
                         "Simplicial policy on a non-simplicial fan");
      return Int(0);
    case BPolicyMode::H3Zero: {
      Int b = 2 * Int(f2) - 3 * Int(f3);
      if (b < 0 || b > bmax)
        throw BettiError(BettiErrorKind::OutOfRange,
                         "H3Zero resolves b = " + b.str() + " outside [0, " + bmax.str() + "]");
      return b;
    }
    case BPolicyMode::UserValue:
      if (policy.value < 0 || policy.value > bmax)
        throw BettiError(BettiErrorKind::OutOfRange,
                         "b = " + policy.value.str() + " outside [0, " + bmax.str() + "]");
      return policy.value;
    case BPolicyMode::Symbolic: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

BExpr bexpr_b(const ResolvedB& b) {
  if (b) return BExpr(*b);
  return BExpr(0, 1);
}

void check_nonnegative(const SymbolicBettiTable& t) {
  for (const auto& e : t.entries)
    if (e.is_constant() && e.c0 < 0)
      throw BettiError(BettiErrorKind::NegativeBetti,
                       "table entry " + e.str() + " is negative");
}

}  // namespace

SymbolicBettiTable ordinary_h_table(int f1, int f2, const ResolvedB& b) {
  BExpr bb = bexpr_b(b);
  SymbolicBettiTable t;
  t.reduced = false;
  t.entries[0] = BExpr(1);
  t.entries[1] = BExpr(0);
  t.entries[2] = BExpr(f1 - 3) - bb;
  t.entries[3] = BExpr(3 * Int(f1) - f2 - 6) - bb;
  t.entries[4] = BExpr(f1 - 3);
  t.entries[5] = BExpr(0);
  t.entries[6] = BExpr(1);
  check_nonnegative(t);
  return t;
}

std::vector<int> ih_table(int f1) {
  return {1, 0, f1 - 3, 0, f1 - 3, 0, 1};
}

SymbolicBettiTable hi_table(int f1, int f2, int m, const ResolvedB& b) {
  BExpr bb = bexpr_b(b);
  SymbolicBettiTable t;
  t.reduced = true;
  t.entries[0] = BExpr(0);
  t.entries[1] = BExpr(m - 1);
  t.entries[2] = BExpr(f1 - 3) - bb;
  t.entries[3] = BExpr(2 * (3 * Int(f1) - f2 - 6)) - bb - bb;
  t.entries[4] = BExpr(f1 - 3) - bb;
  t.entries[5] = BExpr(m - 1);
  t.entries[6] = BExpr(0);
  if (m >= 1) check_nonnegative(t);
  return t;
}

SingularityCensus singularity_census(const Fan& fan3) {
  SingularityCensus census;
  for (int cid : fan3.maximal_cones()) {
    VertexCensusEntry v;
    v.cone3_id = cid;
    v.f_x1 = fan3.vertex_star(cid).f_x1();
    v.q_singular = v.f_x1 > 3;
    if (v.q_singular) census.m++;
    v.det_abs = 0;
    v.z_smooth = false;
    if (v.f_x1 == 3) {
      v.det_abs = abs_int(det(rows_matrix(fan3.generators(cid))));
      v.z_smooth = v.det_abs == 1;
    }
    census.vertices.push_back(std::move(v));
  }
  for (int cid : fan3.cones_of_dim(2)) {
    EdgeLinkAnalysis el = edge_link_homology(fan3, cid);
    census.edges.push_back({cid, el.det_abs, el.z_sphere});
  }
  return census;
}

std::vector<CheckResult> check_invariants(const Fan& fan3, const SingularityCensus& census) {
  auto f = fan3.f_vector();
  const int f1 = f[0], f2 = f[1], f3 = f[2];
  const int m = census.m;
  std::vector<CheckResult> out;

  auto push = [&](const std::string& name, const std::string& lhs, const std::string& rhs,
                  bool pass, const std::string& note = "") {
    out.push_back({name, lhs, rhs, pass, note});
  };

  // (i) Euler formula of the fan.
  push("euler_f_vector", std::to_string(f1 - f2 + f3), "2", f1 - f2 + f3 == 2);

  SymbolicBettiTable hi = hi_table(f1, f2, m, std::nullopt);
  std::vector<int> ih = ih_table(f1);
  SymbolicBettiTable h = ordinary_h_table(f1, f2, std::nullopt);

  // (ii) Reduced Euler characteristic of the intersection space.
  {
    BExpr chi = hi.chi();
    Int want = 2 * (-2 * Int(f1) + f2 - m + 4);
    bool pass = chi.is_constant() && chi.c0 == want && chi.c0 % 2 == 0;
    push("chi_hi_reduced", chi.str(), want.str() + " (even)", pass,
         m == 0 ? "m=0: identity checked on the formula table (analyze reports HI=H)" : "");
  }

  // (iii) Euler-characteristic difference against the truncated links, and the r identity.
  {
    Int chi_ih = 0;
    for (int r = 0; r <= 6; ++r) chi_ih += (r % 2 ? -1 : 1) * Int(ih[size_t(r)]);
    BExpr chi_hi = hi.chi();
    Int sum_sing = 0, sum_all = 0;
    for (const auto& v : census.vertices) {
      sum_all += v.f_x1 - 3;
      if (v.q_singular) sum_sing += 1 + (v.f_x1 - 3);
    }
    BExpr diff = chi_hi - BExpr(chi_ih);
    Int want = -2 * sum_sing;
    bool pass = diff.is_constant() && diff.c0 == want;
    push("chi_difference_vs_links", diff.str(), want.str(), pass);
    Int r_combinatorial = 2 * Int(f2) - 3 * Int(f3);
    push("star_excess_identity", sum_all.str(), r_combinatorial.str(), sum_all == r_combinatorial);
  }

  // (iv) HI duality entry(r) = entry(6-r), as affine expressions in b.
  {
    bool pass = true;
    for (int r = 0; r <= 6; ++r)
      pass = pass && hi.entries[size_t(r)] == hi.entries[size_t(6 - r)];
    std::ostringstream l, rr;
    for (int r = 0; r <= 6; ++r) l << (r ? "," : "") << hi.entries[size_t(r)].str();
    for (int r = 6; r >= 0; --r) rr << (r != 6 ? "," : "") << hi.entries[size_t(r)].str();
    push("hi_duality", l.str(), rr.str(), pass);
  }

  // (v) Euler characteristic of ordinary homology: f3, independent of b.
  {
    BExpr chi = h.chi();
    bool pass = chi.is_constant() && chi.c0 == f3;
    push("chi_h_is_f3", chi.str(), std::to_string(f3), pass);
  }

  // (vi) Degree-3 identity: rk H~3(IX) + rk IH3 = rk H3(M) + rk H3(M,dM).
  {
    BExpr lhs = hi.entries[3] + BExpr(ih[3]);
    BExpr h3m = BExpr(3 * Int(f1) - f2 - 6) - BExpr(0, 1);
    BExpr rhs = h3m + h3m;
    push("degree3_identity", lhs.str(), rhs.str(), lhs == rhs);
  }

  return out;
}

}  // namespace toric
