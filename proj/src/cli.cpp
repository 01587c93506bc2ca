#include "toric/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/betti.hpp"
#include "toric/fanio.hpp"
#include "toric/link5.hpp"
#include "toric/report.hpp"
#include "toric/surface.hpp"

namespace toric {

namespace {

struct CliFailure {
  int code;
};

int log_level() {
  const char* v = std::getenv("TORIC_LOG");
  if (!v) return 0;
  std::string s(v);
  if (s == "debug") return 2;
  if (s == "info") return 1;
  return 0;
}

std::string read_input(const std::string& file, std::istream& in, std::ostream& err) {
  if (file.empty() || file == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(file);
  if (!f) {
    err << "error: cannot open '" << file << "'\n";
    throw CliFailure{1};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Fan load_fan(const std::string& file, bool normalize, std::istream& in, std::ostream& err) {
  std::string text = read_input(file, in, err);
  try {
    FanCandidate cand = parse_fan_file(text);
    if (log_level() >= 1)
      err << "info: parsed " << cand.rays.size() << " rays, " << cand.max_cones.size()
          << " maximal cones\n";
    return Fan::validate(cand, normalize);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    throw CliFailure{1};
  } catch (const FanError& e) {
    err << "error: " << e.what() << "\n";
    throw CliFailure{1};
  }
}

BPolicy parse_policy(const std::string& mode, const Fan& fan, std::ostream& err) {
  if (mode == "auto")
    return fan.ambient_dim() == 3 && fan.is_simplicial() ? BPolicy::simplicial()
                                                         : BPolicy::symbolic();
  if (mode == "h3zero") return BPolicy::h3zero();
  if (mode == "symbolic") return BPolicy::symbolic();
  try {
    size_t pos = 0;
    long long v = std::stoll(mode, &pos);
    if (pos == mode.size()) return BPolicy::user(Int(v));
  } catch (...) {
  }
  err << "error: --b expects auto|h3zero|symbolic|INT, got '" << mode << "'\n";
  throw CliFailure{2};
}

int resolve_vertex(const Fan& fan, const std::string& sel, std::ostream& err) {
  if (sel == "apex") {
    int found = -1;
    for (int cid : fan.maximal_cones())
      if (!fan.is_simplicial_cone(cid)) {
        if (found >= 0) {
          err << "error: --vertex apex is ambiguous (several non-simplicial cones)\n";
          throw CliFailure{2};
        }
        found = cid;
      }
    if (found < 0) {
      err << "error: --vertex apex: no non-simplicial maximal cone\n";
      throw CliFailure{2};
    }
    return found;
  }
  try {
    size_t pos = 0;
    int id = std::stoi(sel, &pos);
    if (pos == sel.size()) {
      const auto& mc = fan.maximal_cones();
      if (std::find(mc.begin(), mc.end(), id) != mc.end()) return id;
      err << "error: cone " << id << " is not a maximal cone\n";
      throw CliFailure{2};
    }
  } catch (const CliFailure&) {
    throw;
  } catch (...) {
  }
  err << "error: --vertex expects a maximal cone id or 'apex'\n";
  throw CliFailure{2};
}

void print_betti(std::ostream& out, const std::vector<int>& b) {
  out << "(";
  for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ")";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact rational-homology engine for compact toric varieties"};
  app.require_subcommand(1);

  std::string file, bmode = "auto", output = "text", vertex_spec, builtin;
  bool normalize = false, deep = false, integral = false;

  auto add_file = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("file", file, "fan file (JSON); '-' or absent reads stdin");
    if (required) opt->required();
    sub->add_flag("--normalize", normalize, "divide non-primitive rays by their gcd");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a fan file");
  add_file(validate, false);
  validate->add_flag("--deep-check", deep, "geometric point-membership spot check");

  CLI::App* analyze = app.add_subcommand("analyze", "compute H/IH/HI tables and the census");
  add_file(analyze, false);
  analyze->add_option("--b", bmode, "b policy: auto|h3zero|symbolic|INT")->capture_default_str();
  analyze->add_option("--output", output, "text|json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* links = app.add_subcommand("links", "analyze singularity links");
  add_file(links, false);
  links->add_option("--vertex", vertex_spec, "restrict to one maximal cone (id or 'apex')");
  links->add_flag("--integral", integral, "include integral edge-link classification");

  CLI::App* truncate = app.add_subcommand("truncate", "Moore-truncate a vertex link");
  add_file(truncate, false);
  truncate->add_option("--vertex", vertex_spec, "maximal cone id or 'apex'")->required();

  CLI::App* check = app.add_subcommand("check", "run the invariant suite");
  add_file(check, false);

  CLI::App* demo = app.add_subcommand("demo", "print a built-in fan");
  demo->add_option("--builtin", builtin, "p3|p1p1|p1cubed|pyramid")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (demo->parsed()) {
      try {
        out << serialize_fan(builtin_fan(builtin));
      } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
      }
      return 0;
    }

    Fan fan = load_fan(file, normalize, in, err);

    if (validate->parsed()) {
      auto f = fan.f_vector();
      out << "valid " << fan.ambient_dim() << "D fan";
      if (!fan.name().empty()) out << " '" << fan.name() << "'";
      out << ": f-vector (";
      for (size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << "), " << (fan.is_simplicial() ? "simplicial" : "non-simplicial") << "\n";
      if (deep) {
        int misses = fan.deep_check();
        if (misses > 0) {
          err << "error: NotComplete: " << misses << " sampled directions uncovered\n";
          return 1;
        }
        out << "deep check: all sampled directions covered\n";
      }
      return 0;
    }

    if (analyze->parsed()) {
      BPolicy policy = parse_policy(bmode, fan, err);
      if (log_level() >= 2 && fan.ambient_dim() == 3)
        for (int cid : fan.maximal_cones())
          err << "debug: vertex star of cone " << cid << " has "
              << fan.vertex_star(cid).f_x1() << " rays\n";
      try {
        nlohmann::json report = build_report(fan, policy);
        out << (output == "json" ? render_json(report) : render_text(report));
      } catch (const BettiError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }

    if (links->parsed()) {
      if (fan.ambient_dim() == 2) {
        for (int cid : fan.maximal_cones()) {
          SurfaceLink l = vertex_link_surface(fan, cid);
          out << "cone " << cid << ": betti ";
          print_betti(out, l.betti);
          out << ", |det| = " << l.det_abs.str() << (l.z_sphere ? " (S^3)" : "") << "\n";
        }
        return 0;
      }
      std::vector<int> targets;
      if (!vertex_spec.empty())
        targets.push_back(resolve_vertex(fan, vertex_spec, err));
      else
        targets = fan.maximal_cones();
      for (int cid : targets) {
        Link5Complex l = build_link5_complex(fan, cid);
        out << "cone " << cid << ": f_x1 = " << l.star.f_x1() << ", a/b = " << l.a << "/" << l.b
            << ", betti ";
        print_betti(out, l.betti);
        if (integral && l.star.f_x1() == 3) {
          Int d = abs_int(det(rows_matrix(fan.generators(cid))));
          out << ", |det| = " << d.str() << (d == 1 ? " (S^5)" : "");
        }
        out << "\n";
      }
      if (integral) {
        out << "edge links:\n";
        for (int cid : fan.cones_of_dim(2)) {
          EdgeLinkAnalysis e = edge_link_homology(fan, cid);
          out << "  cone " << cid << ": betti ";
          print_betti(out, e.betti);
          out << ", torsion " << e.det_abs.str() << (e.z_sphere ? " (S^3)" : "") << "\n";
        }
      }
      return 0;
    }

    if (truncate->parsed()) {
      if (fan.ambient_dim() != 3) {
        err << "error: truncate requires a 3D fan\n";
        return 2;
      }
      int cid = resolve_vertex(fan, vertex_spec, err);
      Link5Complex l = build_link5_complex(fan, cid);
      TruncatedLink tr = moore_truncate_link(l);
      out << "cone " << cid << ": link betti ";
      print_betti(out, l.betti);
      out << ", truncated betti ";
      print_betti(out, tr.betti);
      out << "\nremoved cells:\n";
      for (const auto& c : tr.removed_cells) out << "  " << c << "\n";
      return 0;
    }

    if (check->parsed()) {
      if (fan.ambient_dim() != 3) {
        err << "error: check requires a 3D fan\n";
        return 2;
      }
      SingularityCensus census = singularity_census(fan);
      bool all = true;
      for (const auto& c : check_invariants(fan, census)) {
        out << "[" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.lhs
            << " == " << c.rhs << "\n";
        all = all && c.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const CliFailure& f) {
    return f.code;
  }
  return 2;
}

}  // namespace toric
