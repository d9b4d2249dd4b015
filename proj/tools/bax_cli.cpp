#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bax/cone.hpp"
#include "bax/ktheory.hpp"
#include "bax/laurent.hpp"
#include "bax/rootdata.hpp"
#include "bax/runconfig.hpp"
#include "bax/spherical.hpp"
#include "bax/torus.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

std::string weyl_label(const bax::RootDatum& rd, int w) {
  const auto& word = rd.weyl[w].word;
  if (word.empty()) return "e";
  std::string s;
  for (size_t j = 0; j < word.size(); ++j) {
    if (j) s += ".";
    s += "s" + std::to_string(word[j] + 1);
  }
  return s;
}

ordered_json series_terms(const bax::ConeSeries& s, bool rational, const mpq_class& vq) {
  ordered_json terms = ordered_json::array();
  for (const auto& [g, c] : s.entries()) {
    if (c.is_zero()) continue;
    ordered_json t;
    t["gamma"] = g;
    t["coeff"] = c.str();
    if (rational) t["value_at_v"] = c.eval(vq).get_str();
    terms.push_back(t);
  }
  return terms;
}

void emit(const ordered_json& j, const std::string& output_path) {
  std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot write to " + output_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bax: lattice expansions, wall-crossing operators, and their verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file");

  bax::RunConfig rc;
  long oracle_p = 3;
  int oracle_m = 3;
  app.add_option("--group", rc.group, "Cartan label (A1, A2, B2, C2, G2, A3)")
      ->capture_default_str();
  app.add_option("--depth", rc.depth, "truncation depth")->capture_default_str();
  app.add_option("--v_mode", rc.v_mode, "formal | rational")->capture_default_str();
  app.add_option("--v_value", rc.v_value, "value substituted for v in rational mode")
      ->capture_default_str();
  app.add_option("--suite", rc.suite, "verification suite or 'all'")->capture_default_str();
  app.add_option("--output", rc.output, "also write the JSON output to this path");
  auto* opt_p = app.add_option("--oracle_p", oracle_p, "finite-model prime (group A1)");
  auto* opt_m = app.add_option("--oracle_m", oracle_m, "finite-model level (group A1)");

  auto* cmd_kostant =
      app.add_subcommand("kostant", "table of q-weighted coroot partition counts");
  std::string what;
  std::vector<int> mu;
  int index = 0;
  auto* cmd_expand = app.add_subcommand("expand", "expand an element in the basis of the cone");
  cmd_expand->add_option("--what", what, "c | delta | phi | delta_in_c")
      ->required()
      ->check(CLI::IsMember({"c", "delta", "phi", "delta_in_c"}));
  cmd_expand->add_option("--mu", mu, "lattice point (defaults to the origin)");
  cmd_expand->add_option("--index", index, "simple-root index for phi")->capture_default_str();
  auto* cmd_verify = app.add_subcommand("verify", "run the verification suites");
  auto* cmd_complex = app.add_subcommand("complex", "permutohedron boundary complex report");
  auto* cmd_ktheory = app.add_subcommand("ktheory", "dump the standard localized classes");
  for (auto* sub : {cmd_kostant, cmd_expand, cmd_verify, cmd_complex, cmd_ktheory})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (opt_p->count() > 0 || opt_m->count() > 0) rc.oracle = bax::OracleParams{oracle_p, oracle_m};
    bax::validate_config(rc);
    bax::RootDatum rd = bax::build_root_datum(bax::parse_cartan(rc.group));
    bool rational = rc.v_mode == "rational";
    mpq_class vq;
    if (rational) {
      vq = mpq_class(rc.v_value);
      vq.canonicalize();
    }

    if (*cmd_kostant) {
      ordered_json j;
      j["schema_version"] = "1";
      j["command"] = "kostant";
      j["group"] = rc.group;
      j["depth"] = rc.depth;
      ordered_json rows = ordered_json::array();
      for (const auto& [g, c] : bax::kostant_table(rd, rc.depth)) {
        ordered_json r;
        r["gamma"] = g;
        r["value"] = c.str();
        if (rational) r["value_at_v"] = c.eval(vq).get_str();
        rows.push_back(r);
      }
      j["rows"] = rows;
      emit(j, rc.output);
      return 0;
    }

    if (*cmd_expand) {
      bax::IVec point(rd.rank, 0);
      if (!mu.empty()) {
        if (static_cast<int>(mu.size()) != rd.rank)
          throw std::invalid_argument("--mu needs exactly " + std::to_string(rd.rank) +
                                      " coordinates for " + rc.group);
        point = mu;
      }
      if (index < 0 || index >= rd.rank)
        throw std::invalid_argument("--index must name a simple root of " + rc.group);
      ordered_json j;
      j["schema_version"] = "1";
      j["command"] = "expand";
      j["group"] = rc.group;
      j["what"] = what;
      j["mu"] = point;
      if (what == "phi") j["index"] = index;
      j["depth"] = rc.depth;
      if (what == "delta_in_c") {
        ordered_json terms = ordered_json::array();
        for (const auto& [g, c] : bax::delta_in_c(rd, point)) {
          ordered_json t;
          t["gamma"] = g;
          t["coeff"] = c.str();
          if (rational) t["value_at_v"] = c.eval(vq).get_str();
          terms.push_back(t);
        }
        j["exact"] = true;
        j["apexes"] = ordered_json::array();
        j["terms"] = terms;
      } else {
        bax::SphericalElement f = what == "c" ? bax::c_elem(rd, point)
                                 : what == "delta"
                                     ? bax::delta_elem(rd, point)
                                     : bax::phi_simple(rd, bax::delta_elem(rd, point), index);
        bax::ConeSeries s = bax::expand(rd, f, rc.depth);
        j["exact"] = s.is_exact();
        ordered_json apexes = ordered_json::array();
        for (const auto& a : s.apexes()) apexes.push_back(a);
        j["apexes"] = apexes;
        j["terms"] = series_terms(s, rational, vq);
      }
      emit(j, rc.output);
      return 0;
    }

    if (*cmd_verify) {
      std::vector<bax::SuiteReport> reports = bax::run_suites(rc);
      ordered_json j;
      j["schema_version"] = "1";
      j["command"] = "verify";
      j["group"] = rc.group;
      j["depth"] = rc.depth;
      j["suite"] = rc.suite;
      j["v_mode"] = rc.v_mode;
      if (rc.oracle || (rc.group == "A1" && (rc.suite == "all" || rc.suite == "oracle"))) {
        bax::OracleParams op = rc.oracle.value_or(bax::OracleParams{});
        j["oracle"] = ordered_json{{"p", op.p}, {"M", op.M}};
      } else {
        j["oracle"] = nullptr;
      }
      bool all_pass = true;
      ordered_json suites = ordered_json::array();
      for (const auto& rep : reports) {
        ordered_json s;
        s["name"] = rep.suite;
        s["pass"] = rep.pass();
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
          ordered_json cj;
          cj["name"] = c.name;
          cj["pass"] = c.pass;
          cj["detail"] = c.detail;
          checks.push_back(cj);
        }
        s["checks"] = checks;
        suites.push_back(s);
        all_pass = all_pass && rep.pass();
      }
      j["suites"] = suites;
      j["pass"] = all_pass;
      emit(j, rc.output);
      return all_pass ? 0 : 1;
    }

    if (*cmd_complex) {
      bax::ChainComplex cc = bax::permutohedron_complex(rd);
      ordered_json j;
      j["schema_version"] = "1";
      j["command"] = "complex";
      j["group"] = rc.group;
      j["counts"] = cc.counts;
      j["d2_zero"] = cc.d2_zero;
      j["exact"] = cc.exact;
      long alt = 0;
      for (size_t d = 0; d < cc.counts.size(); ++d)
        alt += (d % 2 == 0 ? 1 : -1) * cc.counts[d];
      j["alternating_sum"] = alt;
      emit(j, rc.output);
      return 0;
    }

    if (*cmd_ktheory) {
      ordered_json j;
      j["schema_version"] = "1";
      j["command"] = "ktheory";
      j["group"] = rc.group;
      ordered_json classes = ordered_json::array();
      auto dump = [&](const std::string& name, const bax::KClass& f) {
        ordered_json c;
        c["name"] = name;
        ordered_json comps;
        for (int w = 0; w < static_cast<int>(f.size()); ++w) {
          bax::RationalTorusFunction g = f[w];
          g.normalize_display();
          comps[weyl_label(rd, w)] = g.str();
        }
        c["components"] = comps;
        classes.push_back(c);
      };
      dump("unit", bax::unit_class(rd));
      dump("line_two_rho", bax::line_class(rd, bax::doubled(rd.two_rho_vee)));
      for (int w = 0; w < rd.order(); ++w) dump("kappa_" + weyl_label(rd, w), bax::kappa(rd, w));
      for (int i = 0; i < rd.rank; ++i)
        dump("crossed_kappa_s" + std::to_string(i + 1),
             bax::dl_action(rd, i, bax::kappa(rd, 0)));
      j["classes"] = classes;
      emit(j, rc.output);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
