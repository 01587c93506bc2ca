#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

enum class FanErrorKind {
  NotPrimitiveRay,
  NotProper,
  FaceClosureViolation,
  NotComplete,
  ImproperIntersection,
  CycleBroken,
  DuplicateRay,
};

const char* to_string(FanErrorKind k);

/// Structured validation diagnostic: which condition failed, for which ids.
class FanError : public std::runtime_error {
 public:
  FanError(FanErrorKind kind, std::vector<int> ids, const std::string& detail);
  FanErrorKind kind() const { return kind_; }
  const std::vector<int>& ids() const { return ids_; }

 private:
  FanErrorKind kind_;
  std::vector<int> ids_;
};

struct Ray {
  int id = -1;
  IntVec gen;  // primitive integer vector
};

struct Cone {
  int id = -1;
  std::vector<int> ray_ids;  // sorted
  int dim = 0;
};

/// Cyclically ordered alternating (ray, 2-cone) sequence around a 3-cone.
/// faces2[j] is the 2-cone spanned by rays[j] and rays[(j+1) % f].
struct VertexStar {
  int cone3_id = -1;
  std::vector<int> rays;    // ray ids
  std::vector<int> faces2;  // cone ids of the 2-faces
  int f_x1() const { return int(rays.size()); }
};

/// Unvalidated input: maximal cones only, faces are synthesized.
struct FanCandidate {
  int ambient_dim = 0;  // 2 or 3
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> max_cones;  // ray indices
  std::string name;
};

/// A validated complete rational fan in R^2 or R^3. Immutable after
/// validation; all queries are pure.
class Fan {
 public:
  static Fan validate(const FanCandidate& cand, bool normalize_rays = false);

  int ambient_dim() const { return ambient_dim_; }
  const std::string& name() const { return name_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  const Cone& cone(int id) const { return cones_.at(size_t(id)); }
  const std::vector<int>& cones_of_dim(int d) const { return by_dim_.at(size_t(d)); }
  const std::vector<int>& maximal_cones() const { return by_dim_.at(size_t(ambient_dim_)); }

  /// (f1, f2) for 2D fans, (f1, f2, f3) for 3D fans.
  std::vector<int> f_vector() const;

  bool is_simplicial_cone(int cone_id) const;
  bool is_simplicial() const;

  /// 3D only. Single-cycle ordering of the rays and 2-faces of a 3-cone.
  VertexStar vertex_star(int cone3_id) const;

  /// 3D only: for a 2-cone, the ids of the two maximal cones containing it.
  const std::vector<int>& cofaces_of_2cone(int cone2_id) const;

  /// 3D only: alternating cycle (2-cone, 3-cone) around a ray; drives the
  /// boundary cycle of the dual 2-cell.
  std::vector<std::pair<int, int>> ray_star(int ray_id) const;

  /// Counts of rays with all coordinates nonzero (gamma) vs. at least one
  /// zero (omega); gamma + omega = f1. 3D only.
  std::pair<int, int> gamma_omega() const;

  /// Geometric point-membership spot check with random rational directions.
  /// Returns the number of sampled directions not covered by any maximal
  /// cone (0 for a complete fan).
  int deep_check(unsigned seed = 7u, int samples = 32) const;

  /// Generators of a cone, as rows.
  std::vector<IntVec> generators(int cone_id) const;

 private:
  Fan() = default;

  int ambient_dim_ = 0;
  std::string name_;
  std::vector<Ray> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<int>> by_dim_;            // [d] -> cone ids
  std::map<std::vector<int>, int> cone_by_rays_;    // sorted ray ids -> cone id
  std::vector<std::vector<int>> faces2_of_3cone_;   // indexed by position in by_dim_[3]
  std::map<int, std::vector<int>> cofaces_of_2cone_;
  std::map<int, VertexStar> stars_;

  friend class FanBuilder;
};

/// True iff a proper cone (strict separating functional exists) whose listed
/// generators are all extreme.
bool cone_is_proper(const std::vector<IntVec>& gens);

}  // namespace toric
