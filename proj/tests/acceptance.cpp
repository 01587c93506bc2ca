// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected to finish in a few seconds.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fan_fixtures.hpp"
#include "toric/betti.hpp"
#include "toric/cli.hpp"
#include "toric/fanio.hpp"
#include "toric/link5.hpp"
#include "toric/polytope_cw.hpp"
#include "toric/report.hpp"
#include "toric/surface.hpp"

using namespace toric;
using namespace toric_test;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::vector<Fan> corpus3d() {
  std::vector<Fan> fans;
  for (const char* n : {"p3", "p1cubed", "pyramid"}) fans.push_back(Fan::validate(builtin_fan(n)));
  fans.push_back(Fan::validate(octahedron_fan()));
  return fans;
}

struct Cli {
  int code;
  std::string out, err;
};

Cli cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<int> eval_entries(const SymbolicBettiTable& t, const Int& b) {
  std::vector<int> v;
  for (const auto& e : t.entries) v.push_back(int(e.eval(b)));
  return v;
}

}  // namespace

int main() {
  criterion(1, "P^3 reproduction: H = IH = (1,0,1,0,1,0,1), m = 0, b = 0", [](std::string& d) {
    Fan fan = Fan::validate(builtin_fan("p3"));
    SingularityCensus census = singularity_census(fan);
    ResolvedB b = resolve_b(fan, BPolicy::simplicial());
    if (!b || *b != 0) return false;
    auto h = eval_entries(ordinary_h_table(4, 6, b), 0);
    auto ih = ih_table(4);
    std::vector<int> want{1, 0, 1, 0, 1, 0, 1};
    d = "m=" + std::to_string(census.m) + ", b=0";
    return h == want && ih == want && census.m == 0;
  });

  criterion(2, "surface reproduction: p1p1 H=(1,0,2,0,1), links S^3; P^2 H=(1,0,1,0,1)",
            [](std::string& d) {
    Fan p1p1 = Fan::validate(builtin_fan("p1p1"));
    SurfaceComplex sc = build_surface_complex(p1p1);
    if (sc.betti != std::vector<int>{1, 0, 2, 0, 1}) return false;
    int spheres = 0;
    for (int cid : p1p1.maximal_cones()) {
      SurfaceLink link = vertex_link_surface(p1p1, cid);
      if (link.det_abs == 1 && link.z_sphere) ++spheres;
    }
    FanCandidate p2;
    p2.ambient_dim = 2;
    p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
    p2.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    SurfaceComplex sc2 = build_surface_complex(Fan::validate(p2));
    d = "p1p1 links S^3: " + std::to_string(spheres) + "/4";
    return spheres == 4 && sc2.betti == std::vector<int>{1, 0, 1, 0, 1};
  });

  criterion(3, "link betti from matrices equals (1,0,f-3,f-3,0,1) on apex + 25 random stars",
            [](std::string& d) {
    Fan pyramid = Fan::validate(builtin_fan("pyramid"));
    for (int cid : pyramid.maximal_cones()) {
      Link5Complex link = build_link5_complex(pyramid, cid);
      if (link.betti != link5_betti_formula(link.star.f_x1())) return false;
    }
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> size(3, 8);
    int checked = 0, with_a = 0, with_b = 0;
    while (checked < 25) {
      int f = size(rng);
      Fan fan = Fan::validate(polygon_star_fan(rng, f, checked % 2 == 0), true);
      for (int cid : fan.maximal_cones()) {
        if (fan.vertex_star(cid).f_x1() != f) continue;
        Link5Complex link = build_link5_complex(fan, cid);
        if (link.betti != link5_betti_formula(f)) return false;
        if (link.a > 0) ++with_a;
        if (link.b > 0) ++with_b;
        ++checked;
        break;
      }
    }
    d = std::to_string(checked) + " stars, " + std::to_string(with_a) + " with A rays, " +
        std::to_string(with_b) + " with B rays";
    return with_a > 0 && with_b > 0;
  });

  criterion(4, "dd = 0 for every constructed complex on the corpus and 100 random fans",
            [](std::string& d) {
    int complexes = 0;
    auto check3d = [&](const Fan& fan) {
      if (!build_dual_cw(fan).complex.dd_zero()) return false;
      ++complexes;
      for (int cid : fan.maximal_cones()) {
        Link5Complex link = build_link5_complex(fan, cid);
        if (!link.cx.dd_zero()) return false;
        if (!moore_truncate_link(link).cx.dd_zero()) return false;
        complexes += 2;
      }
      PartialSixOperators ops = partial_sixfold_operators(fan);
      if (!(ops.d4 * ops.d5).is_zero()) return false;
      ++complexes;
      return true;
    };
    auto check2d = [&](const Fan& fan) {
      if (!build_dual_cw(fan).complex.dd_zero()) return false;
      SurfaceComplex sc = build_surface_complex(fan);
      if (!sc.cx.dd_zero()) return false;
      complexes += 2;
      return true;
    };
    for (const Fan& fan : corpus3d())
      if (!check3d(fan)) return false;
    if (!check2d(Fan::validate(builtin_fan("p1p1")))) return false;
    std::mt19937 rng(4242);
    for (int i = 0; i < 70; ++i)
      if (!check3d(random_3d_fan(rng))) return false;
    std::uniform_int_distribution<int> nrays(3, 9), coord(-7, 7);
    int made2d = 0;
    while (made2d < 30) {
      std::set<IntVec> dirs;
      int want = nrays(rng);
      for (int t = 0; t < 300 && int(dirs.size()) < want; ++t) {
        IntVec v{coord(rng), coord(rng)};
        if (v[0] != 0 || v[1] != 0) dirs.insert(primitive(v));
      }
      FanCandidate cand;
      cand.ambient_dim = 2;
      cand.rays.assign(dirs.begin(), dirs.end());
      std::vector<IntVec> rays = cand.rays;
      std::vector<int> order(rays.size());
      for (size_t i = 0; i < rays.size(); ++i) order[i] = int(i);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
        if (half(rays[size_t(a)]) != half(rays[size_t(b)]))
          return half(rays[size_t(a)]) < half(rays[size_t(b)]);
        return rays[size_t(a)][0] * rays[size_t(b)][1] - rays[size_t(a)][1] * rays[size_t(b)][0] > 0;
      });
      for (size_t k = 0; k < order.size(); ++k)
        cand.max_cones.push_back({order[k], order[(k + 1) % order.size()]});
      try {
        Fan fan = Fan::validate(cand);
        if (!check2d(fan)) return false;
        ++made2d;
      } catch (const FanError&) {
        continue;
      }
    }
    d = std::to_string(complexes) + " complexes checked";
    return true;
  });

  criterion(5, "rank identities: rk Im d5 = 3, rk ker d4 = gamma+omega, rk Im d4 = gamma+3, H4 = f1-3",
            [](std::string& d) {
    int fans = 0;
    for (const Fan& fan : corpus3d()) {
      PartialSixOperators ops = partial_sixfold_operators(fan);  // throws RankMismatch on failure
      if (ops.h4 != fan.f_vector()[0] - 3) return false;
      ++fans;
    }
    std::mt19937 rng(5151);
    for (int i = 0; i < 20; ++i) {
      Fan fan = random_3d_fan(rng);
      PartialSixOperators ops = partial_sixfold_operators(fan);
      if (ops.h4 != fan.f_vector()[0] - 3) return false;
      ++fans;
    }
    d = std::to_string(fans) + " fans";
    return true;
  });

  criterion(6, "Moore truncation: H_j preserved for j <= 2, zero above, ker d3' = 0",
            [](std::string& d) {
    int links = 0;
    auto check = [&](const Fan& fan) {
      for (int cid : fan.maximal_cones()) {
        Link5Complex link = build_link5_complex(fan, cid);
        TruncatedLink tr = moore_truncate_link(link);  // verifies ker/im internally
        for (int j = 0; j <= 2; ++j)
          if (tr.betti[size_t(j)] != link.betti[size_t(j)]) return false;
        if (tr.betti[3] != 0) return false;
        if (rank_q(tr.cx.d[3]) != tr.cx.d[3].cols()) return false;
        ++links;
      }
      return true;
    };
    for (const Fan& fan : corpus3d())
      if (!check(fan)) return false;
    std::mt19937 rng(66);
    for (int i = 0; i < 10; ++i)
      if (!check(random_3d_fan(rng))) return false;
    d = std::to_string(links) + " links";
    return true;
  });

  criterion(7, "intersection-space table: pyramid HI = (0,0,2-b,2-2b,2-b,0,0); h3zero b=1 -> (0,0,1,0,1,0,0); duality",
            [](std::string& d) {
    Fan pyramid = Fan::validate(builtin_fan("pyramid"));
    SymbolicBettiTable hi = hi_table(5, 8, 1, std::nullopt);
    std::array<BExpr, 7> want{BExpr(0), BExpr(0), BExpr(2, -1), BExpr(2, -2),
                              BExpr(2, -1), BExpr(0), BExpr(0)};
    if (hi.entries != want) return false;
    ResolvedB b = resolve_b(pyramid, BPolicy::h3zero());
    if (!b || *b != 1) return false;
    if (eval_entries(hi_table(5, 8, 1, b), *b) != std::vector<int>{0, 0, 1, 0, 1, 0, 0})
      return false;
    for (const Fan& fan : corpus3d()) {
      auto f = fan.f_vector();
      int m = singularity_census(fan).m;
      SymbolicBettiTable t = hi_table(f[0], f[1], m, std::nullopt);
      for (int r = 0; r <= 6; ++r)
        if (!(t.entries[size_t(r)] == t.entries[size_t(6 - r)])) return false;
    }
    d = "b(h3zero) = 1";
    return true;
  });

  criterion(8, "Euler identities on every corpus fan", [](std::string& d) {
    int fans = 0;
    for (const Fan& fan : corpus3d()) {
      auto f = fan.f_vector();
      if (f[0] - f[1] + f[2] != 2) return false;
      SingularityCensus census = singularity_census(fan);
      SymbolicBettiTable hi = hi_table(f[0], f[1], census.m, std::nullopt);
      BExpr chi_hi = hi.chi();
      Int want = 2 * (-2 * Int(f[0]) + f[1] - census.m + 4);
      if (!chi_hi.is_constant() || chi_hi.c0 != want || chi_hi.c0 % 2 != 0) return false;
      Int chi_ih = 0;
      auto ih = ih_table(f[0]);
      for (int r = 0; r <= 6; ++r) chi_ih += (r % 2 ? -1 : 1) * Int(ih[size_t(r)]);
      Int sum_sing = 0;
      for (const auto& v : census.vertices)
        if (v.q_singular) sum_sing += v.f_x1 - 2;
      if (chi_hi.c0 - chi_ih != -2 * sum_sing) return false;
      BExpr chi_h = ordinary_h_table(f[0], f[1], std::nullopt).chi();
      if (!chi_h.is_constant() || chi_h.c0 != f[2]) return false;
      ++fans;
    }
    // the pyramid instance quoted in the criterion: 2 - 6 = -4
    SymbolicBettiTable hi = hi_table(5, 8, 1, std::nullopt);
    if (!(hi.chi() == BExpr(2))) return false;
    d = std::to_string(fans) + " fans; pyramid: chi(HI)=2, chi(IH)=6";
    return true;
  });

  criterion(9, "edge links: Q-betti (1,0,0,1) and Z-verdict matches the SNF oracle on 25+ cones",
            [](std::string& d) {
    std::mt19937 rng(99);
    int checked = 0;
    while (checked < 25) {
      Fan fan = random_3d_fan(rng);
      for (int cid : fan.cones_of_dim(2)) {
        EdgeLinkAnalysis el = edge_link_homology(fan, cid);
        if (el.betti != std::vector<int>{1, 0, 0, 1}) return false;
        SmithForm f = smith_normal_form(rows_matrix(fan.generators(cid)));
        if (f.diagonal.size() != 2) return false;
        if (el.det_abs != f.diagonal[0] * f.diagonal[1]) return false;
        if (el.z_sphere != (f.diagonal[0] == 1 && f.diagonal[1] == 1)) return false;
        ++checked;
      }
    }
    d = std::to_string(checked) + " edge links";
    return true;
  });

  criterion(10, "convention robustness: permuted ids, swapped surface convention, flipped B signs",
            [](std::string& d) {
    for (const Fan& fan : corpus3d()) {
      LinkBuildOptions flip;
      flip.flip_b_sign = true;
      for (int cid : fan.maximal_cones()) {
        Link5Complex a = build_link5_complex(fan, cid);
        Link5Complex b = build_link5_complex(fan, cid, flip);
        if (a.betti != b.betti) return false;
        if (moore_truncate_link(a).betti != moore_truncate_link(b).betti) return false;
        for (unsigned seed : {3u, 7u}) {
          ChainComplex p = permute_cells(a.cx, seed);
          if (!p.dd_zero() || p.betti() != a.betti) return false;
        }
      }
      PartialSixOperators p1 = partial_sixfold_operators(fan);
      PartialSixOperators p2 = partial_sixfold_operators(fan, flip);
      if (p1.h4 != p2.h4 || p1.rk_im_d4 != p2.rk_im_d4) return false;
      DualCW cw = build_dual_cw(fan);
      for (unsigned seed : {5u, 9u}) {
        ChainComplex p = permute_cells(cw.complex, seed);
        if (!p.dd_zero() || p.betti() != cw.complex.betti()) return false;
      }
    }
    Fan p1p1 = Fan::validate(builtin_fan("p1p1"));
    SurfaceComplex s1 = build_surface_complex(p1p1, false);
    SurfaceComplex s2 = build_surface_complex(p1p1, true);
    if (s1.betti != s2.betti) return false;
    for (unsigned seed : {11u, 13u}) {
      ChainComplex p = permute_cells(s1.cx, seed);
      if (!p.dd_zero() || p.betti() != s1.betti) return false;
    }
    return true;
  });

  criterion(11, "CLI/IO: round trips, positioned diagnostics, exit codes, golden bytes",
            [](std::string& d) {
    for (const auto& name : builtin_names()) {
      FanCandidate f = builtin_fan(name);
      std::string text = serialize_fan(f);
      FanCandidate g = parse_fan_file(text);
      if (serialize_fan(g) != text) return false;
      Cli demo = cli({"demo", "--builtin", name});
      if (demo.code != 0) return false;
      Cli analyze = cli({"analyze", "--b", "auto", "--output", "json"}, demo.out);
      if (analyze.code != 0) return false;
      std::ifstream golden("tests/golden/" + name + ".json");
      if (!golden.good()) {
        d = "golden file missing for " + name;
        return false;
      }
      std::ostringstream ss;
      ss << golden.rdbuf();
      if (analyze.out != ss.str()) {
        d = "golden mismatch for " + name;
        return false;
      }
    }
    Cli syn = cli({"validate"}, "{\"dimension\":3,");
    if (syn.code != 1 || syn.err.find("SyntaxError at line") == std::string::npos) return false;
    Cli invalid = cli({"validate"},
                      R"({"dimension":3,"rays":[[0,0,1],[1,0,0],[0,1,0]],"cones":[[0,1,2]]})");
    if (invalid.code != 1 || invalid.err.find("NotComplete") == std::string::npos) return false;
    if (cli({"frobnicate"}).code != 2) return false;
    if (cli({"demo", "--builtin", "zzz"}).code != 2) return false;
    return true;
  });

  std::cout << (g_failures == 0 ? "all criteria passed\n"
                                : std::to_string(g_failures) + " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
