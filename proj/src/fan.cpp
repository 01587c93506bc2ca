#include "toric/fan.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <sstream>

namespace toric {

const char* to_string(FanErrorKind k) {
  switch (k) {
    case FanErrorKind::NotPrimitiveRay: return "NotPrimitiveRay";
    case FanErrorKind::NotProper: return "NotProper";
    case FanErrorKind::FaceClosureViolation: return "FaceClosureViolation";
    case FanErrorKind::NotComplete: return "NotComplete";
    case FanErrorKind::ImproperIntersection: return "ImproperIntersection";
    case FanErrorKind::CycleBroken: return "CycleBroken";
    case FanErrorKind::DuplicateRay: return "DuplicateRay";
  }
  return "?";
}

namespace {

std::string format_error(FanErrorKind kind, const std::vector<int>& ids,
                         const std::string& detail) {
  std::ostringstream os;
  os << to_string(kind);
  if (!ids.empty()) {
    os << " [";
    for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    os << "]";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace

FanError::FanError(FanErrorKind kind, std::vector<int> ids, const std::string& detail)
    : std::runtime_error(format_error(kind, ids, detail)), kind_(kind), ids_(std::move(ids)) {}

namespace {

// Strict one-side witness: exists c with c . g >= 1 for all generators.
bool strictly_one_sided(const std::vector<IntVec>& gens) {
  std::vector<RatVec> lhs;
  std::vector<Rat> rhs;
  for (const auto& g : gens) {
    RatVec row;
    for (const auto& x : g) row.emplace_back(x);
    lhs.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  return fm_feasible(lhs, rhs);
}

// Supporting hyperplane vanishing exactly on `zero_set` (indices into gens)
// and strictly positive on the rest.
bool has_supporting_plane(const std::vector<IntVec>& gens, const std::vector<int>& zero_set) {
  std::vector<RatVec> lhs, eq;
  std::vector<Rat> rhs, eq_rhs;
  std::set<int> zs(zero_set.begin(), zero_set.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    RatVec row;
    for (const auto& x : gens[i]) row.emplace_back(x);
    if (zs.count(int(i))) {
      eq.push_back(std::move(row));
      eq_rhs.emplace_back(0);
    } else {
      lhs.push_back(std::move(row));
      rhs.emplace_back(1);
    }
  }
  return fm_feasible(lhs, rhs, eq, eq_rhs);
}

// Exact CCW angular order on nonzero 2-vectors.
bool angle_less(const IntVec& a, const IntVec& b) {
  auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cr = a[0] * b[1] - a[1] * b[0];
  return cr > 0;
}

}  // namespace

bool cone_is_proper(const std::vector<IntVec>& gens) {
  if (gens.empty()) return false;
  if (!strictly_one_sided(gens)) return false;
  if (gens.size() == 1) return true;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!has_supporting_plane(gens, {int(i)})) return false;
  return true;
}

class FanBuilder {
 public:
  static Fan build(const FanCandidate& cand, bool normalize_rays) {
    Fan fan;
    fan.ambient_dim_ = cand.ambient_dim;
    fan.name_ = cand.name;
    if (cand.ambient_dim != 2 && cand.ambient_dim != 3)
      throw FanError(FanErrorKind::NotComplete, {}, "ambient dimension must be 2 or 3");

    check_rays(cand, fan, normalize_rays);
    if (cand.ambient_dim == 3)
      build3d(cand, fan);
    else
      build2d(cand, fan);
    return fan;
  }

 private:
  static void check_rays(const FanCandidate& cand, Fan& fan, bool normalize_rays) {
    std::map<IntVec, int> seen;
    for (size_t i = 0; i < cand.rays.size(); ++i) {
      const IntVec& v = cand.rays[i];
      if (int(v.size()) != cand.ambient_dim)
        throw FanError(FanErrorKind::NotPrimitiveRay, {int(i)}, "wrong dimension");
      bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
      if (zero) throw FanError(FanErrorKind::NotPrimitiveRay, {int(i)}, "zero vector");
      IntVec p = primitive(v);
      if (p != v && !normalize_rays)
        throw FanError(FanErrorKind::NotPrimitiveRay, {int(i)},
                       "generator is not primitive (use --normalize to divide by gcd)");
      auto [it, fresh] = seen.emplace(p, int(i));
      if (!fresh)
        throw FanError(FanErrorKind::DuplicateRay, {it->second, int(i)},
                       "rays share a direction");
      fan.rays_.push_back(Ray{int(i), std::move(p)});
    }
    for (const auto& c : cand.max_cones)
      for (int r : c)
        if (r < 0 || r >= int(fan.rays_.size()))
          throw FanError(FanErrorKind::ImproperIntersection, {r}, "ray index out of range");
  }

  static std::vector<IntVec> gens_of(const Fan& fan, const std::vector<int>& ray_ids) {
    std::vector<IntVec> g;
    for (int r : ray_ids) g.push_back(fan.rays_[size_t(r)].gen);
    return g;
  }

  static void build3d(const FanCandidate& cand, Fan& fan) {
    const int f1 = int(fan.rays_.size());
    std::vector<std::vector<int>> maxc;
    for (size_t ci = 0; ci < cand.max_cones.size(); ++ci) {
      std::vector<int> rs = cand.max_cones[ci];
      std::sort(rs.begin(), rs.end());
      if (std::adjacent_find(rs.begin(), rs.end()) != rs.end())
        throw FanError(FanErrorKind::NotProper, {int(ci)}, "repeated ray in cone");
      if (rs.size() < 3)
        throw FanError(FanErrorKind::NotComplete, {int(ci)},
                       "maximal cone has fewer than 3 rays");
      auto gens = gens_of(fan, rs);
      if (rank_q(rows_matrix(gens)) != 3)
        throw FanError(FanErrorKind::NotComplete, {int(ci)},
                       "maximal cone is not full-dimensional");
      if (!strictly_one_sided(gens))
        throw FanError(FanErrorKind::NotProper, {int(ci)},
                       "generators do not lie strictly on one side of a hyperplane");
      for (size_t i = 0; i < rs.size(); ++i)
        if (!has_supporting_plane(gens, {int(i)}))
          throw FanError(FanErrorKind::NotProper, {int(ci), rs[i]},
                         "listed generator is not an extreme ray");
      maxc.push_back(std::move(rs));
    }
    // Nested or duplicated maximal cones break the face poset.
    for (size_t i = 0; i < maxc.size(); ++i)
      for (size_t j = 0; j < maxc.size(); ++j)
        if (i != j && std::includes(maxc[j].begin(), maxc[j].end(), maxc[i].begin(), maxc[i].end()))
          throw FanError(FanErrorKind::FaceClosureViolation, {int(i), int(j)},
                         "maximal cone contained in another");

    // Synthesize 2-faces of each maximal cone via supporting hyperplanes.
    std::vector<std::vector<std::pair<int, int>>> faces_of(maxc.size());
    std::map<std::pair<int, int>, std::vector<int>> cofaces;  // ray pair -> 3-cones
    for (size_t ci = 0; ci < maxc.size(); ++ci) {
      const auto& rs = maxc[ci];
      auto gens = gens_of(fan, rs);
      for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = i + 1; j < rs.size(); ++j) {
          if (rank_q(rows_matrix({gens[i], gens[j]})) != 2) continue;
          if (!has_supporting_plane(gens, {int(i), int(j)})) continue;
          auto pr = std::make_pair(rs[i], rs[j]);
          faces_of[ci].push_back(pr);
          cofaces[pr].push_back(int(ci));
        }
      // Each ray of the cone must lie in exactly two of its 2-faces and the
      // incidence graph must close into a single cycle.
      std::map<int, int> deg;
      for (auto& pr : faces_of[ci]) {
        deg[pr.first]++;
        deg[pr.second]++;
      }
      for (int r : rs)
        if (deg[r] != 2)
          throw FanError(FanErrorKind::NotComplete, {int(ci), r},
                         "ray star of maximal cone is not a single cycle");
      if (faces_of[ci].size() != rs.size())
        throw FanError(FanErrorKind::NotComplete, {int(ci)}, "face count mismatch");
    }

    // Pairwise intersections must be common faces.
    for (size_t i = 0; i < maxc.size(); ++i)
      for (size_t j = i + 1; j < maxc.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(maxc[i].begin(), maxc[i].end(), maxc[j].begin(), maxc[j].end(),
                              std::back_inserter(common));
        if (common.size() >= 3)
          throw FanError(FanErrorKind::ImproperIntersection, {int(i), int(j)},
                         "maximal cones share three or more rays");
        if (common.size() == 2) {
          auto pr = std::make_pair(common[0], common[1]);
          auto is_face = [&](size_t c) {
            return std::find(faces_of[c].begin(), faces_of[c].end(), pr) != faces_of[c].end();
          };
          if (!is_face(i) || !is_face(j))
            throw FanError(FanErrorKind::ImproperIntersection, {int(i), int(j)},
                           "shared ray pair is not a face of both cones");
        }
      }

    // Completeness: every 2-cone in exactly two maximal cones.
    for (const auto& [pr, cf] : cofaces)
      if (cf.size() != 2)
        throw FanError(FanErrorKind::NotComplete, {pr.first, pr.second},
                       "2-cone lies in " + std::to_string(cf.size()) +
                           " maximal cones (expected 2)");

    std::vector<bool> used(size_t(f1), false);
    for (const auto& rs : maxc)
      for (int r : rs) used[size_t(r)] = true;
    for (int r = 0; r < f1; ++r)
      if (!used[size_t(r)])
        throw FanError(FanErrorKind::ImproperIntersection, {r},
                       "ray is not a face of any maximal cone");

    const int f2 = int(cofaces.size());
    const int f3 = int(maxc.size());
    if (f1 - f2 + f3 != 2)
      throw FanError(FanErrorKind::NotComplete, {},
                     "Euler count f1-f2+f3 = " + std::to_string(f1 - f2 + f3));

    // Assemble the face poset: 1-cones, 2-cones, 3-cones.
    fan.by_dim_.assign(4, {});
    for (int r = 0; r < f1; ++r) {
      Cone c{int(fan.cones_.size()), {r}, 1};
      fan.by_dim_[1].push_back(c.id);
      fan.cone_by_rays_[c.ray_ids] = c.id;
      fan.cones_.push_back(std::move(c));
    }
    std::map<std::pair<int, int>, int> id2;
    for (const auto& [pr, cf] : cofaces) {
      Cone c{int(fan.cones_.size()), {pr.first, pr.second}, 2};
      id2[pr] = c.id;
      fan.by_dim_[2].push_back(c.id);
      fan.cone_by_rays_[c.ray_ids] = c.id;
      fan.cones_.push_back(std::move(c));
    }
    fan.faces2_of_3cone_.resize(maxc.size());
    for (size_t ci = 0; ci < maxc.size(); ++ci) {
      Cone c{int(fan.cones_.size()), maxc[ci], 3};
      fan.by_dim_[3].push_back(c.id);
      fan.cone_by_rays_[c.ray_ids] = c.id;
      for (auto& pr : faces_of[ci]) {
        fan.faces2_of_3cone_[ci].push_back(id2[pr]);
        fan.cofaces_of_2cone_[id2[pr]].push_back(c.id);
      }
      fan.cones_.push_back(std::move(c));
    }

    // Vertex stars: single-cycle orderings, computed once.
    for (size_t ci = 0; ci < maxc.size(); ++ci) {
      int cone_id = fan.by_dim_[3][ci];
      fan.stars_[cone_id] = make_star(fan, cone_id, int(ci));
    }
  }

  static VertexStar make_star(const Fan& fan, int cone3_id, int pos) {
    const Cone& omega = fan.cones_[size_t(cone3_id)];
    const auto& face_ids = fan.faces2_of_3cone_[size_t(pos)];
    // ray -> its two incident 2-faces within omega
    std::map<int, std::vector<int>> inc;
    for (int f : face_ids)
      for (int r : fan.cones_[size_t(f)].ray_ids) inc[r].push_back(f);
    for (int r : omega.ray_ids)
      if (inc[r].size() != 2)
        throw FanError(FanErrorKind::CycleBroken, {cone3_id, r}, "ray not in exactly two faces");

    VertexStar star;
    star.cone3_id = cone3_id;
    int start = omega.ray_ids.front();
    int ray = start;
    // Deterministic direction: leave the start ray through its smaller face id.
    int face = std::min(inc[start][0], inc[start][1]);
    for (size_t step = 0; step < omega.ray_ids.size(); ++step) {
      star.rays.push_back(ray);
      star.faces2.push_back(face);
      const auto& frs = fan.cones_[size_t(face)].ray_ids;
      int next_ray = frs[0] == ray ? frs[1] : frs[0];
      const auto& nf = inc[next_ray];
      int next_face = nf[0] == face ? nf[1] : nf[0];
      ray = next_ray;
      face = next_face;
    }
    if (ray != start || int(star.rays.size()) != int(omega.ray_ids.size()))
      throw FanError(FanErrorKind::CycleBroken, {cone3_id}, "star did not close into one cycle");
    std::set<int> distinct(star.rays.begin(), star.rays.end());
    if (distinct.size() != star.rays.size())
      throw FanError(FanErrorKind::CycleBroken, {cone3_id}, "star cycle revisits a ray");
    return star;
  }

  static void build2d(const FanCandidate& cand, Fan& fan) {
    const int f1 = int(fan.rays_.size());
    if (f1 < 3) throw FanError(FanErrorKind::NotComplete, {}, "fewer than 3 rays");
    std::set<std::pair<int, int>> listed;
    for (size_t ci = 0; ci < cand.max_cones.size(); ++ci) {
      std::vector<int> rs = cand.max_cones[ci];
      std::sort(rs.begin(), rs.end());
      if (rs.size() != 2 || rs[0] == rs[1])
        throw FanError(FanErrorKind::NotProper, {int(ci)}, "2D maximal cone needs two rays");
      auto gens = gens_of(fan, rs);
      if (rank_q(rows_matrix(gens)) != 2)
        throw FanError(FanErrorKind::NotProper, {int(ci)}, "cone generators are dependent");
      listed.emplace(rs[0], rs[1]);
    }
    if (listed.size() != cand.max_cones.size())
      throw FanError(FanErrorKind::FaceClosureViolation, {}, "duplicate maximal cone");

    // Sort rays by angle; consecutive pairs must be exactly the listed cones.
    std::vector<int> order(size_t(f1), 0);
    for (int i = 0; i < f1; ++i) order[size_t(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return angle_less(fan.rays_[size_t(a)].gen, fan.rays_[size_t(b)].gen);
    });
    std::set<std::pair<int, int>> adjacent;
    for (int k = 0; k < f1; ++k) {
      int a = order[size_t(k)], b = order[size_t((k + 1) % f1)];
      const IntVec& ga = fan.rays_[size_t(a)].gen;
      const IntVec& gb = fan.rays_[size_t(b)].gen;
      Int cr = ga[0] * gb[1] - ga[1] * gb[0];
      if (cr <= 0)
        throw FanError(FanErrorKind::NotComplete, {a, b},
                       "consecutive rays do not span a proper sector");
      adjacent.emplace(std::min(a, b), std::max(a, b));
    }
    for (const auto& pr : adjacent)
      if (!listed.count(pr))
        throw FanError(FanErrorKind::NotComplete, {pr.first, pr.second},
                       "adjacent ray pair missing from the cone list");
    for (const auto& pr : listed)
      if (!adjacent.count(pr))
        throw FanError(FanErrorKind::ImproperIntersection, {pr.first, pr.second},
                       "listed cone spans non-adjacent rays");

    fan.by_dim_.assign(3, {});
    for (int r = 0; r < f1; ++r) {
      Cone c{int(fan.cones_.size()), {r}, 1};
      fan.by_dim_[1].push_back(c.id);
      fan.cone_by_rays_[c.ray_ids] = c.id;
      fan.cones_.push_back(std::move(c));
    }
    // 2-cones in angular order: cone k spans order[k], order[k+1].
    for (int k = 0; k < f1; ++k) {
      int a = order[size_t(k)], b = order[size_t((k + 1) % f1)];
      std::vector<int> rs{std::min(a, b), std::max(a, b)};
      Cone c{int(fan.cones_.size()), rs, 2};
      fan.by_dim_[2].push_back(c.id);
      fan.cone_by_rays_[c.ray_ids] = c.id;
      fan.cones_.push_back(std::move(c));
    }
  }
};

Fan Fan::validate(const FanCandidate& cand, bool normalize_rays) {
  return FanBuilder::build(cand, normalize_rays);
}

std::vector<int> Fan::f_vector() const {
  std::vector<int> f;
  for (int d = 1; d <= ambient_dim_; ++d) f.push_back(int(by_dim_[size_t(d)].size()));
  return f;
}

bool Fan::is_simplicial_cone(int cone_id) const {
  const Cone& c = cones_.at(size_t(cone_id));
  return int(c.ray_ids.size()) == c.dim;
}

bool Fan::is_simplicial() const {
  for (int id : maximal_cones())
    if (!is_simplicial_cone(id)) return false;
  return true;
}

VertexStar Fan::vertex_star(int cone3_id) const {
  auto it = stars_.find(cone3_id);
  if (it == stars_.end())
    throw FanError(FanErrorKind::CycleBroken, {cone3_id}, "not a maximal 3-cone");
  return it->second;
}

const std::vector<int>& Fan::cofaces_of_2cone(int cone2_id) const {
  return cofaces_of_2cone_.at(cone2_id);
}

std::vector<std::pair<int, int>> Fan::ray_star(int ray_id) const {
  // 2-cones containing the ray, each in exactly two 3-cones; walk the cycle.
  std::vector<int> edges;
  for (int id : by_dim_[2]) {
    const auto& rs = cones_[size_t(id)].ray_ids;
    if (rs[0] == ray_id || rs[1] == ray_id) edges.push_back(id);
  }
  std::map<int, std::vector<int>> around;  // 3-cone -> incident 2-cones (with ray)
  for (int e : edges)
    for (int c3 : cofaces_of_2cone_.at(e)) around[c3].push_back(e);
  for (auto& [c3, es] : around)
    if (es.size() != 2)
      throw FanError(FanErrorKind::CycleBroken, {ray_id, c3}, "broken ray star");

  std::vector<std::pair<int, int>> cycle;  // (2-cone, following 3-cone)
  int e = *std::min_element(edges.begin(), edges.end());
  int c3 = std::min(cofaces_of_2cone_.at(e)[0], cofaces_of_2cone_.at(e)[1]);
  for (size_t step = 0; step < edges.size(); ++step) {
    cycle.emplace_back(e, c3);
    const auto& es = around[c3];
    int next_e = es[0] == e ? es[1] : es[0];
    const auto& cf = cofaces_of_2cone_.at(next_e);
    int next_c3 = cf[0] == c3 ? cf[1] : cf[0];
    e = next_e;
    c3 = next_c3;
  }
  if (cycle.front().first != e)
    throw FanError(FanErrorKind::CycleBroken, {ray_id}, "ray star did not close");
  return cycle;
}

std::pair<int, int> Fan::gamma_omega() const {
  int gamma = 0, omega = 0;
  for (const auto& r : rays_) {
    bool has_zero = std::any_of(r.gen.begin(), r.gen.end(), [](const Int& x) { return x == 0; });
    (has_zero ? omega : gamma)++;
  }
  return {gamma, omega};
}

std::vector<IntVec> Fan::generators(int cone_id) const {
  std::vector<IntVec> g;
  for (int r : cones_.at(size_t(cone_id)).ray_ids) g.push_back(rays_[size_t(r)].gen);
  return g;
}

int Fan::deep_check(unsigned seed, int samples) const {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-19, 19);
  const int n = ambient_dim_;
  int misses = 0;
  for (int s = 0; s < samples; ++s) {
    IntVec d(size_t(n), Int(0));
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      d[size_t(i)] = coord(rng);
      if (d[size_t(i)] != 0) zero = false;
    }
    if (zero) continue;
    bool covered = false;
    for (int cid : maximal_cones()) {
      if (n == 2) {
        auto g = generators(cid);
        IntMatrix a = rows_matrix(g).transposed();
        auto sol = solve_exact(a, {Rat(d[0]), Rat(d[1])});
        if (sol && (*sol)[0] >= 0 && (*sol)[1] >= 0) covered = true;
      } else {
        // Triangulate the 3-cone along its star cycle.
        VertexStar st = vertex_star(cid);
        for (size_t j = 1; j + 1 < st.rays.size() && !covered; ++j) {
          IntMatrix a = rows_matrix({rays_[size_t(st.rays[0])].gen,
                                     rays_[size_t(st.rays[j])].gen,
                                     rays_[size_t(st.rays[j + 1])].gen})
                            .transposed();
          auto sol = solve_exact(a, {Rat(d[0]), Rat(d[1]), Rat(d[2])});
          if (sol && (*sol)[0] >= 0 && (*sol)[1] >= 0 && (*sol)[2] >= 0) covered = true;
        }
      }
      if (covered) break;
    }
    if (!covered) ++misses;
  }
  return misses;
}

}  // namespace toric
