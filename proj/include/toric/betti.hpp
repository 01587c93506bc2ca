#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Affine expression c0 + c1*b in the non-combinatorial parameter b.
struct BExpr {
  Int c0, c1;

  BExpr() : c0(0), c1(0) {}
  BExpr(Int constant) : c0(std::move(constant)), c1(0) {}
  BExpr(Int constant, Int b_coeff) : c0(std::move(constant)), c1(std::move(b_coeff)) {}

  Int eval(const Int& b) const { return c0 + c1 * b; }
  bool is_constant() const { return c1 == 0; }
  bool operator==(const BExpr&) const = default;
  BExpr operator+(const BExpr& o) const { return {c0 + o.c0, c1 + o.c1}; }
  BExpr operator-(const BExpr& o) const { return {c0 - o.c0, c1 - o.c1}; }

  std::string str() const;
};

/// Per-degree ranks 0..6, possibly symbolic in b.
struct SymbolicBettiTable {
  std::array<BExpr, 7> entries;
  bool reduced = false;

  BExpr chi() const {
    BExpr s;
    for (int r = 0; r <= 6; ++r) {
      BExpr e = entries[size_t(r)];
      s = (r % 2 == 0) ? s + e : s - e;
    }
    return s;
  }
};

enum class BPolicyMode { Simplicial, H3Zero, UserValue, Symbolic };

struct BPolicy {
  BPolicyMode mode = BPolicyMode::Symbolic;
  Int value;  // for UserValue

  static BPolicy simplicial() { return {BPolicyMode::Simplicial, 0}; }
  static BPolicy h3zero() { return {BPolicyMode::H3Zero, 0}; }
  static BPolicy user(Int v) { return {BPolicyMode::UserValue, std::move(v)}; }
  static BPolicy symbolic() { return {BPolicyMode::Symbolic, 0}; }
};

enum class BettiErrorKind { PolicyInapplicable, OutOfRange, NegativeBetti };

class BettiError : public std::runtime_error {
 public:
  BettiError(BettiErrorKind kind, const std::string& detail);
  BettiErrorKind kind() const { return kind_; }

 private:
  BettiErrorKind kind_;
};

/// nullopt means symbolic.
using ResolvedB = std::optional<Int>;

/// Admissible range 0 <= b <= min(f1-3, 3f1-f2-6); policies resolve inside it.
ResolvedB resolve_b(const Fan& fan3, const BPolicy& policy);

/// Ordinary rational homology (1, 0, f1-3-b, 3f1-f2-b-6, f1-3, 0, 1).
SymbolicBettiTable ordinary_h_table(int f1, int f2, const ResolvedB& b);

/// Middle-perversity intersection homology (1, 0, f1-3, 0, f1-3, 0, 1).
std::vector<int> ih_table(int f1);

/// Reduced intersection-space homology
/// (0, m-1, f1-3-b, 2(3f1-f2-b-6), f1-3-b, m-1, 0). Requires m >= 1.
SymbolicBettiTable hi_table(int f1, int f2, int m, const ResolvedB& b);

struct VertexCensusEntry {
  int cone3_id = -1;
  int f_x1 = 0;
  bool q_singular = false;  // f_x1 > 3
  bool z_smooth = false;    // simplicial with unimodular generators
  Int det_abs;              // |det| of the generators for simplicial cones, 0 otherwise
};

struct EdgeCensusEntry {
  int cone2_id = -1;
  Int torsion;  // order of H_1 of the 3-dimensional link
  bool smooth = false;
};

struct SingularityCensus {
  std::vector<VertexCensusEntry> vertices;
  std::vector<EdgeCensusEntry> edges;
  int m = 0;  // Q-isolated singular vertices
};

SingularityCensus singularity_census(const Fan& fan3);

struct CheckResult {
  std::string name;
  std::string lhs, rhs;
  bool pass = false;
  std::string note;
};

/// The invariant and consistency suite: Euler formula, Euler-characteristic
/// identities, HI duality, degree-3 identity. All identities are evaluated
/// symbolically in b.
std::vector<CheckResult> check_invariants(const Fan& fan3, const SingularityCensus& census);

}  // namespace toric
