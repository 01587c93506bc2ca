#include "toric/link5.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toric {

RayClass classify_ray(const IntVec& g) {
  assert(g.size() == 3);
  RayClass c;
  for (int i = 0; i < 3; ++i)
    if (g[size_t(i)] == 0) c.zeros.push_back(i);
  c.type = c.zeros.empty() ? RayType::AType : RayType::BType;
  return c;
}

namespace {

// Per-ray fiber cell data shared by the link complex and the partial
// 6-dimensional operators. Each 1-cell of the quotient torus carries a
// template vector: its incidence degrees against the three T^3 1-cell
// columns. The 2-cell rows of the higher operator are copies of the
// generator itself.
struct FiberCells {
  bool is_a = false;
  int sign = 1;           // -1 when BType rows are sign-flipped
  std::vector<IntVec> t;  // one template per fiber 1-cell (3 for A, 2 for B)
};

FiberCells fiber_cells(const IntVec& g, bool flip_b_sign) {
  FiberCells fc;
  RayClass cls = classify_ray(g);
  fc.is_a = cls.type == RayType::AType;
  if (!fc.is_a && flip_b_sign) fc.sign = -1;
  if (fc.is_a) {
    // (n,m,l): 1-cell k receives the product of the other two components.
    fc.t = {IntVec{g[1] * g[2], 0, 0}, IntVec{0, g[0] * g[2], 0}, IntVec{0, 0, g[0] * g[1]}};
    return fc;
  }
  if (cls.zeros.size() == 1) {
    int z = cls.zeros[0];
    int p = (z == 0) ? 1 : 0;
    int q = (z == 2) ? 1 : 2;
    IntVec tu(3, Int(0)), tz(3, Int(0));
    tu[size_t(p)] = -g[size_t(q)];
    tu[size_t(q)] = g[size_t(p)];
    tz[size_t(z)] = 1;
    fc.t = {tu, tz};
  } else {
    // +-e_p: the surviving coordinate placed on the two complementary cells.
    int p = (cls.zeros[0] != 0 && cls.zeros[1] != 0) ? 0 : (cls.zeros[0] != 1 && cls.zeros[1] != 1) ? 1 : 2;
    int p1 = (p == 0) ? 1 : 0;
    int q1 = (p == 2) ? 1 : 2;
    IntVec t1(3, Int(0)), t2(3, Int(0));
    t1[size_t(p1)] = -g[size_t(p)];
    t2[size_t(q1)] = g[size_t(p)];
    fc.t = {t1, t2};
  }
  if (flip_b_sign)
    for (auto& t : fc.t)
      for (auto& x : t) x = -x;
  return fc;
}

// Rows: 3 zero rows for the T^3 1-cell products, then per ray one row per
// fiber 2-cell, each equal to the generator. Columns: the three T^3 2-cell
// products. This is d4 of a link and d5 of the total 6-complex.
IntMatrix build_high_operator(const std::vector<IntVec>& gens, const std::vector<FiberCells>& fc) {
  int rows = 3;
  for (const auto& c : fc) rows += c.is_a ? 2 : 1;
  IntMatrix m(rows, 3);
  int r = 3;
  for (size_t i = 0; i < gens.size(); ++i) {
    int copies = fc[i].is_a ? 2 : 1;
    for (int c = 0; c < copies; ++c, ++r)
      for (int k = 0; k < 3; ++k) m(r, k) = fc[i].sign * gens[i][size_t(k)];
  }
  return m;
}

// Rows: one zero row for the fiber 0-cell product, then per ray its fiber
// 1-cells. Columns: three T^3 1-cell products carrying the templates, then
// per ray the fiber 2-cell columns (+1/-1 against its own 1-cells for AType,
// zero for BType). This is d3 of a link and d4 of the total 6-complex.
IntMatrix build_mid_operator(const std::vector<FiberCells>& fc, std::vector<int>* col_start,
                             std::vector<int>* col_count, std::vector<int>* row_start) {
  int rows = 1, cols = 3;
  for (const auto& c : fc) {
    rows += int(c.t.size());
    cols += c.is_a ? 2 : 1;
  }
  IntMatrix m(rows, cols);
  int r = 1, c = 3;
  for (size_t i = 0; i < fc.size(); ++i) {
    if (row_start) row_start->push_back(r);
    if (col_start) col_start->push_back(c);
    if (col_count) col_count->push_back(fc[i].is_a ? 2 : 1);
    for (size_t l = 0; l < fc[i].t.size(); ++l)
      for (int k = 0; k < 3; ++k) m(r + int(l), k) = fc[i].t[l][size_t(k)];
    if (fc[i].is_a) {
      for (size_t l = 0; l < 3; ++l) {
        m(r + int(l), c) = 1;
        m(r + int(l), c + 1) = -1;
      }
      c += 2;
    } else {
      c += 1;  // zero column
    }
    r += int(fc[i].t.size());
  }
  return m;
}

}  // namespace

Link5Complex build_link5_complex(const Fan& fan3, int cone3_id, const LinkBuildOptions& opts) {
  if (fan3.ambient_dim() != 3)
    throw std::invalid_argument("build_link5_complex: 3D fan required");
  Link5Complex link;
  link.cone3_id = cone3_id;
  link.star = fan3.vertex_star(cone3_id);
  const int f = link.star.f_x1();

  std::vector<IntVec> gens;
  std::vector<FiberCells> fc;
  for (int r : link.star.rays) {
    gens.push_back(fan3.rays()[size_t(r)].gen);
    fc.push_back(fiber_cells(gens.back(), opts.flip_b_sign));
    (fc.back().is_a ? link.a : link.b)++;
  }
  link.edge_is_a.resize(size_t(f));
  for (int j = 0; j < f; ++j) link.edge_is_a[size_t(j)] = fc[size_t(j)].is_a;

  // Primitive normal of each star vertex (2-cone between consecutive rays).
  std::vector<IntVec> normals;
  for (int v = 0; v < f; ++v)
    normals.push_back(primitive(cross3(gens[size_t(v)], gens[size_t((v + 1) % f)])));

  const int a = link.a, b = link.b;
  ChainComplex cx;
  cx.dims = {f, 2 * f, 1 + 3 * a + 2 * b, 3 + 2 * a + b, 3, 1};
  cx.d.resize(6);
  cx.d[0] = IntMatrix(0, f);
  cx.d[5] = IntMatrix(3, 1);

  std::vector<int> row_start;  // first C2 row of each edge block
  cx.d[4] = build_high_operator(gens, fc);
  cx.d[3] = build_mid_operator(fc, &link.c3_col_start, &link.c3_col_count, &row_start);

  // d1: the fiber 0-cell over edge j flows from its tail vertex (j-1) to its
  // head vertex (j); the circle 1-cells over vertices have no boundary.
  {
    IntMatrix d1(f, 2 * f);
    for (int j = 0; j < f; ++j) {
      d1(j, j) += 1;                // head: vertex j
      d1((j - 1 + f) % f, j) -= 1;  // tail: vertex j-1
    }
    cx.d[1] = std::move(d1);
  }

  // d2: the fiber 0-cell against the polygon 2-cell hits every edge cell
  // once; each fiber 1-cell collapses into the circle over its two endpoint
  // vertices with exact lattice degrees.
  {
    const int c2 = cx.dims[2];
    std::vector<RatVec> bracket(size_t(f), RatVec(size_t(c2), Rat(0)));
    for (int j = 0; j < f; ++j) {
      int head = j, tail = (j - 1 + f) % f;
      for (size_t l = 0; l < fc[size_t(j)].t.size(); ++l) {
        const IntVec& t = fc[size_t(j)].t[l];
        int col = row_start[size_t(j)] + int(l);
        for (int vtx : {head, tail}) {
          // Degree d with t * d = normal component-wise on the support of t;
          // consistency is forced by normal . generator = 0.
          Rat d(0);
          bool set = false;
          for (int k = 0; k < 3; ++k) {
            if (t[size_t(k)] == 0) continue;
            Rat cand = Rat(normals[size_t(vtx)][size_t(k)]) / Rat(t[size_t(k)]);
            if (set && cand != d)
              throw std::logic_error("link d2: inconsistent collapse degree");
            d = cand;
            set = true;
          }
          bracket[size_t(vtx)][size_t(col)] += (vtx == head ? d : -d);
        }
      }
    }
    IntMatrix d2(2 * f, c2);
    for (int j = 0; j < f; ++j) d2(j, 0) = 1;
    for (int v = 0; v < f; ++v) {
      Int denom_lcm = 1;
      for (const auto& q : bracket[size_t(v)])
        denom_lcm = lcm_int(denom_lcm, Int(boost::multiprecision::denominator(q)));
      Int g = 0;
      IntVec row(size_t(c2), Int(0));
      for (int c = 0; c < c2; ++c) {
        Rat scaled = bracket[size_t(v)][size_t(c)] * Rat(denom_lcm);
        row[size_t(c)] = Int(boost::multiprecision::numerator(scaled));
        g = gcd_int(g, row[size_t(c)]);
      }
      if (g == 0) throw std::logic_error("link d2: zero collapse row");
      for (int c = 0; c < c2; ++c) d2(f + v, c) = row[size_t(c)] / g;
    }
    cx.d[2] = std::move(d2);
  }

  if (!cx.dd_zero()) throw std::logic_error("link complex: dd != 0");
  link.betti = cx.betti();
  if (cx.euler() != 0) throw std::logic_error("link complex: euler != 0");
  link.cx = std::move(cx);
  return link;
}

std::vector<int> link5_betti_formula(int f_x1) {
  if (f_x1 < 3)
    throw std::invalid_argument("link5_betti_formula: vertex star needs at least 3 rays");
  return {1, 0, f_x1 - 3, f_x1 - 3, 0, 1};
}

TruncatedLink moore_truncate_link(const Link5Complex& link) {
  TruncatedLink tr;
  tr.cone3_id = link.cone3_id;
  const ChainComplex& cx = link.cx;
  const int f = link.star.f_x1();

  std::vector<int> keep;  // C3 columns that survive
  for (int k = 0; k < 3; ++k) keep.push_back(k);
  tr.removed_cells.push_back("e3_T3 x e2_M");
  for (int k = 1; k <= 3; ++k)
    tr.removed_cells.push_back("e2_T3_" + std::to_string(k) + " x e2_M");
  for (int j = 0; j < f; ++j) {
    std::ostringstream label;
    if (link.edge_is_a[size_t(j)]) {
      keep.push_back(link.c3_col_start[size_t(j)]);  // positive-signed 2-cell
      label << "e2_(T2_a)_2 x e1_" << j;
    } else {
      label << "e2_T2_b x e1_" << j;
    }
    tr.removed_cells.push_back(label.str());
  }
  std::sort(keep.begin(), keep.end());

  IntMatrix d3p(cx.d[3].rows(), int(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c)
    for (int r = 0; r < cx.d[3].rows(); ++r) d3p(r, int(c)) = cx.d[3](r, keep[c]);

  int rk_full = rank_q(cx.d[3]);
  int rk_trunc = rank_q(d3p);
  if (rk_trunc != d3p.cols())
    throw TruncationDegenerate("truncated d3 has nontrivial kernel");
  if (rk_trunc != rk_full)
    throw TruncationDegenerate("truncated d3 does not span Im(d3)");

  tr.cx.dims = {cx.dims[0], cx.dims[1], cx.dims[2], int(keep.size())};
  tr.cx.d = {cx.d[0], cx.d[1], cx.d[2], std::move(d3p)};
  if (!tr.cx.dd_zero()) throw std::logic_error("truncated link: dd != 0");
  tr.betti = tr.cx.betti();
  return tr;
}

EdgeLinkAnalysis edge_link_homology(const Fan& fan3, int cone2_id) {
  const Cone& sigma = fan3.cone(cone2_id);
  if (sigma.dim != 2) throw std::invalid_argument("edge_link_homology: 2-cone required");
  const IntVec& g1 = fan3.rays()[size_t(sigma.ray_ids[0])].gen;
  const IntVec& g2 = fan3.rays()[size_t(sigma.ray_ids[1])].gen;

  EdgeLinkAnalysis el;
  el.cone2_id = cone2_id;
  el.basis = saturation_basis({g1, g2});
  assert(el.basis.size() == 2);

  IntMatrix bt = rows_matrix(el.basis).transposed();  // 3x2
  el.coords = IntMatrix(2, 2);
  for (int i = 0; i < 2; ++i) {
    const IntVec& g = i == 0 ? g1 : g2;
    auto sol = solve_exact(bt, {Rat(g[0]), Rat(g[1]), Rat(g[2])});
    if (!sol) throw std::logic_error("edge link: generator outside its own span");
    for (int j = 0; j < 2; ++j) {
      const Rat& x = (*sol)[size_t(j)];
      if (boost::multiprecision::denominator(x) != 1)
        throw std::logic_error("edge link: non-integer coordinates in saturated basis");
      el.coords(i, j) = Int(boost::multiprecision::numerator(x));
    }
  }

  // Same chain complex as a surface vertex link, in the saturated lattice.
  IntMatrix d2{{0, 0},
               {-el.coords(0, 0), el.coords(0, 1)},
               {-el.coords(1, 0), el.coords(1, 1)}};
  IntMatrix d1{{1, 0, 0}, {-1, 0, 0}};
  ChainComplex cx;
  cx.dims = {2, 3, 2, 1};
  cx.d = {IntMatrix(0, 2), d1, d2, IntMatrix(2, 1)};
  if (!cx.dd_zero()) throw std::logic_error("edge link: dd != 0");
  el.betti = cx.betti();
  el.det_abs = abs_int(det(el.coords));
  el.z_sphere = el.det_abs == 1;
  return el;
}

PartialSixOperators partial_sixfold_operators(const Fan& fan3, const LinkBuildOptions& opts) {
  if (fan3.ambient_dim() != 3)
    throw std::invalid_argument("partial_sixfold_operators: 3D fan required");
  PartialSixOperators ops;
  std::vector<IntVec> gens;
  std::vector<FiberCells> fc;
  for (const auto& r : fan3.rays()) {
    gens.push_back(r.gen);
    fc.push_back(fiber_cells(r.gen, opts.flip_b_sign));
    (fc.back().is_a ? ops.gamma : ops.omega)++;
  }
  ops.d5 = build_high_operator(gens, fc);
  ops.d4 = build_mid_operator(fc, nullptr, nullptr, nullptr);
  if (!(ops.d4 * ops.d5).is_zero())
    throw std::logic_error("partial six operators: d4 d5 != 0");

  const int f1 = int(gens.size());
  ops.rk_im_d5 = rank_q(ops.d5);
  ops.rk_im_d4 = rank_q(ops.d4);
  ops.rk_ker_d4 = ops.d4.cols() - ops.rk_im_d4;
  ops.h6 = 1;  // single top cell, d6 = 0
  ops.h5 = (3 - ops.rk_im_d5);
  ops.h4 = ops.rk_ker_d4 - ops.rk_im_d5;

  if (ops.rk_im_d5 != 3)
    throw RankMismatch("rk Im d5 = " + std::to_string(ops.rk_im_d5) + ", expected 3");
  if (ops.rk_ker_d4 != ops.gamma + ops.omega)
    throw RankMismatch("rk ker d4 = " + std::to_string(ops.rk_ker_d4) + ", expected gamma+omega");
  if (ops.rk_im_d4 != ops.gamma + 3)
    throw RankMismatch("rk Im d4 = " + std::to_string(ops.rk_im_d4) + ", expected gamma+3");
  if (ops.h4 != f1 - 3)
    throw RankMismatch("rk H4 = " + std::to_string(ops.h4) + ", expected f1-3");
  return ops;
}

}  // namespace toric
