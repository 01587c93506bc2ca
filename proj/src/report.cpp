#include "toric/report.hpp"

#include <algorithm>
#include <sstream>

#include "toric/link5.hpp"
#include "toric/surface.hpp"

namespace toric {

using nlohmann::json;

namespace {

json json_int(const Int& x) {
  // Desk-scale values fit; keep exactness for outliers by switching to text.
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return (long long)x;
  return x.str();
}

json json_bexpr(const BExpr& e) { return json{{"b_coeff", json_int(e.c1)}, {"const", json_int(e.c0)}}; }

json json_table(const SymbolicBettiTable& t) {
  json a = json::array();
  for (const auto& e : t.entries) a.push_back(json_bexpr(e));
  return a;
}

json json_ray(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(json_int(x));
  return a;
}

std::string policy_name(const BPolicy& p) {
  switch (p.mode) {
    case BPolicyMode::Simplicial: return "simplicial";
    case BPolicyMode::H3Zero: return "h3zero";
    case BPolicyMode::UserValue: return "user";
    case BPolicyMode::Symbolic: return "symbolic";
  }
  return "?";
}

json report3d(const Fan& fan, const BPolicy& policy) {
  json doc;
  auto f = fan.f_vector();
  const int f1 = f[0], f2 = f[1];
  auto [gamma, omega] = fan.gamma_omega();
  doc["gamma"] = gamma;
  doc["omega"] = omega;
  doc["simplicial"] = fan.is_simplicial();

  ResolvedB b = resolve_b(fan, policy);
  doc["b_policy"] = policy_name(policy);
  doc["b"] = b ? json_int(*b) : json("symbolic");

  SingularityCensus census = singularity_census(fan);
  doc["m"] = census.m;
  {
    json vj = json::array();
    for (const auto& v : census.vertices)
      vj.push_back(json{{"cone", v.cone3_id},
                        {"det", json_int(v.det_abs)},
                        {"f_x1", v.f_x1},
                        {"q_singular", v.q_singular},
                        {"z_smooth", v.z_smooth}});
    json ej = json::array();
    for (const auto& e : census.edges)
      ej.push_back(json{{"cone", e.cone2_id}, {"smooth", e.smooth}, {"torsion", json_int(e.torsion)}});
    doc["census"] = json{{"edges", std::move(ej)}, {"vertices", std::move(vj)}};
  }

  json tables;
  tables["H"] = json_table(ordinary_h_table(f1, f2, b));
  {
    json ihj = json::array();
    for (int x : ih_table(f1)) ihj.push_back(x);
    tables["IH"] = std::move(ihj);
  }
  if (census.m >= 1) {
    tables["HI"] = json_table(hi_table(f1, f2, census.m, b));
    tables["HI_reduced"] = true;
  } else {
    // No Q-isolated singularities: X is a rational homology manifold and the
    // intersection space is X itself.
    tables["HI"] = json_table(ordinary_h_table(f1, f2, b));
    tables["HI_reduced"] = false;
    tables["HI_note"] = "NoSingularities: m=0, HI coincides with ordinary homology";
  }
  doc["tables"] = std::move(tables);

  {
    json links = json::array();
    for (int cid : fan.maximal_cones()) {
      Link5Complex link = build_link5_complex(fan, cid);
      TruncatedLink tr = moore_truncate_link(link);
      json lj;
      lj["cone"] = cid;
      lj["f_x1"] = link.star.f_x1();
      lj["a"] = link.a;
      lj["b"] = link.b;
      lj["betti"] = link.betti;
      lj["truncated_betti"] = tr.betti;
      links.push_back(std::move(lj));
    }
    doc["links"] = std::move(links);
  }

  {
    json checks = json::array();
    for (const auto& c : check_invariants(fan, census))
      checks.push_back(json{{"lhs", c.lhs}, {"name", c.name}, {"pass", c.pass}, {"rhs", c.rhs}});
    doc["checks"] = std::move(checks);
  }
  return doc;
}

json report2d(const Fan& fan, const BPolicy&) {
  json doc;
  SurfaceComplex sc = build_surface_complex(fan);
  doc["tables"] = json{{"H", sc.betti}};
  SurfaceCensus census = surface_singularity_census(fan);
  {
    json vj = json::array();
    for (const auto& v : census.vertices)
      vj.push_back(json{{"cone", v.cone2_id}, {"det", json_int(v.det_abs)}, {"smooth", v.smooth}});
    doc["census"] = json{{"all_smooth", census.all_smooth}, {"vertices", std::move(vj)}};
  }
  {
    json links = json::array();
    for (int cid : fan.maximal_cones()) {
      SurfaceLink link = vertex_link_surface(fan, cid);
      json lj;
      lj["betti"] = link.betti;
      lj["cone"] = cid;
      lj["det"] = json_int(link.det_abs);
      lj["z_sphere"] = link.z_sphere;
      json tor = json::array();
      for (const auto& t : link.torsion) tor.push_back(json_int(t));
      lj["torsion"] = std::move(tor);
      links.push_back(std::move(lj));
    }
    doc["links"] = std::move(links);
  }
  return doc;
}

std::string render_bexpr(const json& e) {
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  BExpr x;
  x.c0 = Int(e["const"].is_string() ? Int(e["const"].get<std::string>())
                                    : Int(e["const"].get<long long>()));
  x.c1 = Int(e["b_coeff"].is_string() ? Int(e["b_coeff"].get<std::string>())
                                      : Int(e["b_coeff"].get<long long>()));
  return x.str();
}

}  // namespace

json build_report(const Fan& fan, const BPolicy& policy) {
  json doc = fan.ambient_dim() == 3 ? report3d(fan, policy) : report2d(fan, policy);
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = "toric-engine";
  doc["tool_version"] = kToolVersion;
  doc["name"] = fan.name();
  doc["dimension"] = fan.ambient_dim();
  doc["f_vector"] = fan.f_vector();
  return doc;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "fan: " << report["name"].get<std::string>() << "  (dimension "
     << report["dimension"].get<int>() << ")\n";
  os << "f-vector: (";
  const auto& fv = report["f_vector"];
  for (size_t i = 0; i < fv.size(); ++i) os << (i ? "," : "") << fv[i].get<int>();
  os << ")\n";

  if (report["dimension"].get<int>() == 2) {
    os << "H: (";
    const auto& h = report["tables"]["H"];
    for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i].get<int>();
    os << ")\n";
    os << "vertex links:\n";
    for (const auto& l : report["links"])
      os << "  cone " << l["cone"].get<int>() << ": |det| = " << render_bexpr(l["det"])
         << (l["z_sphere"].get<bool>() ? "  (S^3)" : "  (Q-sphere, not Z-sphere)") << "\n";
    return os.str();
  }

  os << "gamma/omega: " << report["gamma"].get<int>() << "/" << report["omega"].get<int>()
     << "   simplicial: " << (report["simplicial"].get<bool>() ? "yes" : "no")
     << "   m: " << report["m"].get<int>() << "\n";
  os << "b: " << (report["b"].is_string() ? report["b"].get<std::string>()
                                          : std::to_string(report["b"].get<long long>()))
     << "  (policy " << report["b_policy"].get<std::string>() << ")\n\n";

  const auto& t = report["tables"];
  os << "  deg |     H~(IX) |     IH |      H\n";
  os << "  ----+------------+--------+--------\n";
  for (int r = 6; r >= 0; --r) {
    std::string hi = render_bexpr(t["HI"][size_t(r)]);
    std::string ih = std::to_string(t["IH"][size_t(r)].get<long long>());
    std::string h = render_bexpr(t["H"][size_t(r)]);
    os << "   " << r << "  | " << std::string(hi.size() < 10 ? 10 - hi.size() : 0, ' ') << hi
       << " | " << std::string(ih.size() < 6 ? 6 - ih.size() : 0, ' ') << ih << " | "
       << std::string(h.size() < 6 ? 6 - h.size() : 0, ' ') << h << "\n";
  }
  if (t.contains("HI_note")) os << "  note: " << t["HI_note"].get<std::string>() << "\n";
  os << "\nvertex links:\n";
  for (const auto& l : report["links"]) {
    os << "  cone " << l["cone"].get<int>() << ": f_x1 = " << l["f_x1"].get<int>() << ", betti (";
    const auto& bb = l["betti"];
    for (size_t i = 0; i < bb.size(); ++i) os << (i ? "," : "") << bb[i].get<int>();
    os << "), truncated (";
    const auto& tb = l["truncated_betti"];
    for (size_t i = 0; i < tb.size(); ++i) os << (i ? "," : "") << tb[i].get<int>();
    os << ")\n";
  }
  os << "\nchecks:\n";
  for (const auto& c : report["checks"])
    os << "  [" << (c["pass"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>()
       << ": " << c["lhs"].get<std::string>() << " == " << c["rhs"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace toric
