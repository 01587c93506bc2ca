#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "toric/fan.hpp"
#include "toric/fanio.hpp"

using namespace toric;

namespace {

Fan sigma3() { return Fan::validate(builtin_fan("p3")); }
Fan pyramid() { return Fan::validate(builtin_fan("pyramid")); }
Fan p1cubed() { return Fan::validate(builtin_fan("p1cubed")); }

FanCandidate octahedron() {
  FanCandidate f;
  f.name = "octahedron";
  f.ambient_dim = 3;
  f.rays = {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1},
            {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, -1}};
  // cones over the six cube facets
  f.max_cones = {{0, 1, 2, 4}, {0, 1, 3, 5}, {0, 2, 3, 6},
                 {1, 4, 5, 7}, {2, 4, 6, 7}, {3, 5, 6, 7}};
  return f;
}

}  // namespace

TEST_CASE("sigma3 validates with f-vector (4,6,4)") {
  Fan fan = sigma3();
  CHECK(fan.f_vector() == std::vector<int>{4, 6, 4});
  CHECK(fan.is_simplicial());
  CHECK(fan.deep_check() == 0);
}

TEST_CASE("sigma2 validates") {
  Fan fan = Fan::validate(builtin_fan("p1p1"));
  CHECK(fan.f_vector() == std::vector<int>{4, 4});
  CHECK(fan.is_simplicial());
  CHECK(fan.deep_check() == 0);
}

TEST_CASE("sigma3 with a cone removed is not complete") {
  FanCandidate cand = builtin_fan("p3");
  cand.max_cones.pop_back();
  try {
    Fan::validate(cand);
    FAIL("expected NotComplete");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::NotComplete);
  }
}

TEST_CASE("pyramid fan of the apex example") {
  Fan fan = pyramid();
  CHECK(fan.f_vector() == std::vector<int>{5, 8, 5});
  CHECK_FALSE(fan.is_simplicial());
  int nonsimp = 0;
  for (int cid : fan.maximal_cones())
    if (!fan.is_simplicial_cone(cid)) {
      ++nonsimp;
      CHECK(fan.cone(cid).ray_ids == std::vector<int>{0, 1, 2, 3});
      VertexStar star = fan.vertex_star(cid);
      CHECK(star.f_x1() == 4);
      CHECK(star.faces2.size() == 4);
    }
  CHECK(nonsimp == 1);
  CHECK(fan.deep_check() == 0);
}

TEST_CASE("coordinate fan has cube combinatorics") {
  Fan fan = p1cubed();
  CHECK(fan.f_vector() == std::vector<int>{6, 12, 8});
  CHECK(fan.is_simplicial());
  auto [gamma, omega] = fan.gamma_omega();
  CHECK(gamma == 0);
  CHECK(omega == 6);
}

TEST_CASE("octahedron fan: all maximal cones non-simplicial") {
  Fan fan = Fan::validate(octahedron());
  CHECK(fan.f_vector() == std::vector<int>{8, 12, 6});
  for (int cid : fan.maximal_cones()) {
    CHECK_FALSE(fan.is_simplicial_cone(cid));
    CHECK(fan.vertex_star(cid).f_x1() == 4);
  }
  CHECK(fan.deep_check() == 0);
}

TEST_CASE("simpliciality flags per cone") {
  Fan fan = pyramid();
  int simplicial_count = 0;
  for (int cid : fan.maximal_cones())
    if (fan.is_simplicial_cone(cid)) ++simplicial_count;
  CHECK(simplicial_count == 4);
  // every 2-cone is simplicial by construction
  for (int cid : fan.cones_of_dim(2)) CHECK(fan.is_simplicial_cone(cid));
}

TEST_CASE("vertex star of a simplicial cone is a 3-cycle") {
  Fan fan = sigma3();
  for (int cid : fan.maximal_cones()) {
    VertexStar star = fan.vertex_star(cid);
    CHECK(star.f_x1() == 3);
    // the star enumerates exactly the cone's rays and 2-faces
    std::set<int> rays(star.rays.begin(), star.rays.end());
    CHECK(rays == std::set<int>(fan.cone(cid).ray_ids.begin(), fan.cone(cid).ray_ids.end()));
    for (size_t j = 0; j < star.rays.size(); ++j) {
      const Cone& face = fan.cone(star.faces2[j]);
      int r1 = star.rays[j], r2 = star.rays[(j + 1) % star.rays.size()];
      CHECK(std::set<int>(face.ray_ids.begin(), face.ray_ids.end()) == std::set<int>{r1, r2});
    }
  }
}

TEST_CASE("star of omega_xyz runs x, sigma_xy, y, sigma_yz, z, sigma_xz") {
  // direct face enumeration for the cone on e1, e2, e3 of sigma3
  Fan fan = sigma3();
  // rays of p3: 0=(0,0,1)=z, 1=(1,0,0)=x, 2=(0,1,0)=y; cone {0,1,2}
  int target = -1;
  for (int cid : fan.maximal_cones())
    if (fan.cone(cid).ray_ids == std::vector<int>{0, 1, 2}) target = cid;
  REQUIRE(target >= 0);
  VertexStar star = fan.vertex_star(target);
  REQUIRE(star.f_x1() == 3);
  // cyclic sequence alternates each ray with the 2-face it shares with the next
  for (size_t j = 0; j < 3; ++j) {
    const auto& face = fan.cone(star.faces2[j]).ray_ids;
    CHECK(std::set<int>(face.begin(), face.end()) ==
          std::set<int>{star.rays[j], star.rays[(j + 1) % 3]});
  }
}

TEST_CASE("euler and incidence invariants on the corpus") {
  for (const auto& cand : {builtin_fan("p3"), builtin_fan("p1cubed"), builtin_fan("pyramid"),
                           octahedron()}) {
    Fan fan = Fan::validate(cand);
    auto f = fan.f_vector();
    CHECK(f[0] - f[1] + f[2] == 2);
    for (int cid : fan.cones_of_dim(2)) CHECK(fan.cofaces_of_2cone(cid).size() == 2);
    int star_sum = 0;
    for (int cid : fan.maximal_cones()) star_sum += fan.vertex_star(cid).f_x1();
    CHECK(star_sum == 2 * f[1]);
    auto [gamma, omega] = fan.gamma_omega();
    CHECK(gamma + omega == f[0]);
  }
}

TEST_CASE("non-primitive ray is rejected unless normalized") {
  FanCandidate cand = builtin_fan("p3");
  cand.rays[1] = {2, 0, 0};
  try {
    Fan::validate(cand);
    FAIL("expected NotPrimitiveRay");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::NotPrimitiveRay);
    CHECK(e.ids() == std::vector<int>{1});
  }
  Fan fan = Fan::validate(cand, /*normalize_rays=*/true);
  CHECK(fan.rays()[1].gen == IntVec{1, 0, 0});
}

TEST_CASE("duplicate ray direction is rejected") {
  FanCandidate cand = builtin_fan("p3");
  cand.rays.push_back({0, 0, 2});  // same direction as ray 0
  CHECK_THROWS_AS(Fan::validate(cand, true), FanError);
}

TEST_CASE("improper cone is rejected") {
  FanCandidate cand;
  cand.ambient_dim = 3;
  cand.rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  cand.max_cones = {{0, 1, 2, 3}};  // contains a line: not proper
  try {
    Fan::validate(cand);
    FAIL("expected NotProper");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::NotProper);
  }
}

TEST_CASE("non-extreme listed generator is rejected") {
  FanCandidate cand;
  cand.ambient_dim = 3;
  // (0,0,1) = ((1,0,1)+(0,1,1)+(-1,-1,1))/3 is interior to the cone
  cand.rays = {{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}, {0, 0, 1}};
  cand.max_cones = {{0, 1, 2, 3}};
  try {
    Fan::validate(cand);
    FAIL("expected NotProper");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::NotProper);
  }
}

TEST_CASE("splitting the pyramid base along a diagonal is a valid refinement") {
  FanCandidate cand = builtin_fan("pyramid");
  cand.max_cones = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}, {0, 1, 2}, {0, 2, 3}};
  Fan fan = Fan::validate(cand);
  CHECK(fan.f_vector() == std::vector<int>{5, 9, 6});
  CHECK(fan.is_simplicial());
}

TEST_CASE("diagonal crossing a listed cone is an improper intersection") {
  // the pyramid base kept whole next to a cone whose 2-face slices it
  FanCandidate cand = builtin_fan("pyramid");
  cand.rays.push_back({0, 1, -1});
  cand.max_cones = {{0, 1, 2, 3}, {0, 2, 5}};
  try {
    Fan::validate(cand);
    FAIL("expected ImproperIntersection");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::ImproperIntersection);
  }
}

TEST_CASE("2D fan with a sector gap is rejected") {
  FanCandidate cand;
  cand.ambient_dim = 2;
  cand.rays = {{1, 0}, {0, 1}, {-1, 0}};
  cand.max_cones = {{0, 1}, {1, 2}};  // lower half plane uncovered
  try {
    Fan::validate(cand);
    FAIL("expected NotComplete");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanErrorKind::NotComplete);
  }
}

TEST_CASE("2D fan listing a non-adjacent pair is rejected") {
  FanCandidate cand = builtin_fan("p1p1");
  cand.max_cones.push_back({0, 2});  // opposite rays
  CHECK_THROWS_AS(Fan::validate(cand), FanError);
}

TEST_CASE("P2 fan validates") {
  FanCandidate cand;
  cand.ambient_dim = 2;
  cand.rays = {{1, 0}, {0, 1}, {-1, -1}};
  cand.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  Fan fan = Fan::validate(cand);
  CHECK(fan.f_vector() == std::vector<int>{3, 3});
  CHECK(fan.deep_check() == 0);
}

TEST_CASE("every 2D fan is simplicial") {
  for (const char* name : {"p1p1"}) {
    Fan fan = Fan::validate(builtin_fan(name));
    CHECK(fan.is_simplicial());
    for (const auto& c : fan.cones()) CHECK(fan.is_simplicial_cone(c.id));
  }
}

TEST_CASE("ray star cycles close") {
  Fan fan = pyramid();
  for (const auto& r : fan.rays()) {
    auto cycle = fan.ray_star(r.id);
    CHECK(cycle.size() >= 3);
    std::set<int> edges, verts;
    for (auto& [e, v] : cycle) {
      edges.insert(e);
      verts.insert(v);
    }
    CHECK(edges.size() == cycle.size());
    CHECK(verts.size() == cycle.size());
  }
}
