// Command-line front end: invariants of PD files and tangle expressions,
// family generation, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skein/bracket.hpp"
#include "skein/conway.hpp"
#include "skein/diagram.hpp"
#include "skein/expr.hpp"
#include "skein/families.hpp"
#include "skein/laurent.hpp"
#include "skein/tangle.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

struct GlobalOpts {
  std::string format = "text";
  int max_crossings = 32;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::string json_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

void emit_poly(const GlobalOpts& g, const std::string& kind,
               const LaurentPoly& p, const char* var,
               bool quarter_exponents = false) {
  if (g.format == "json") {
    std::cout << "{\"" << kind << "\":" << p.to_json() << ",\"rendered\":\""
              << json_escape(p.to_string(var, quarter_exponents)) << "\"}\n";
  } else {
    std::cout << p.to_string(var, quarter_exponents) << "\n";
  }
}

LinkDiagram load_pd(const GlobalOpts& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  LinkDiagram d = LinkDiagram::parse_pd(buf.str());
  if ((int)d.crossing_count() > g.max_crossings)
    throw std::runtime_error(
        "diagram exceeds --max-crossings (" +
        std::to_string(d.crossing_count()) + " > " +
        std::to_string(g.max_crossings) + ")");
  return d;
}

void emit_diagram(const GlobalOpts& g, const LinkDiagram& d) {
  if (g.format == "json") {
    std::ostringstream os;
    os << "{\"crossings\":" << d.crossing_count()
       << ",\"components\":" << d.components() << ",\"pd\":\""
       << json_escape(d.render_pd()) << "\"}";
    std::cout << os.str() << "\n";
  } else {
    std::cout << d.render_pd();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kauffman bracket, Jones, and Conway invariants of "
               "link diagrams and 2-string tangles"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-crossings", g.max_crossings,
                 "Refuse direct evaluation of larger diagrams");
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (reserved)");

  std::string pd_path, expr_text, tangle_op, orient = "";
  int fam_n = 1, fam_m = 0;
  bool deep = false;
  std::string suite = "all";

  auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket <L>");
  cmd_bracket->add_option("file", pd_path, "PD file")->required();
  auto* cmd_kauffman =
      app.add_subcommand("kauffman", "Kauffman polynomial (-A^3)^-w <L>");
  cmd_kauffman->add_option("file", pd_path, "PD file")->required();
  auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial V(L)");
  cmd_jones->add_option("file", pd_path, "PD file")->required();
  auto* cmd_conway = app.add_subcommand("conway", "Conway polynomial");
  cmd_conway->add_option("file", pd_path, "PD file")->required();

  auto* cmd_tangle = app.add_subcommand("tangle", "Tangle invariants");
  cmd_tangle->add_option("op", tangle_op, "br | con | frac")
      ->required()
      ->check(CLI::IsMember({"br", "con", "frac"}));
  cmd_tangle->add_option("expr", expr_text, "Tangle expression")->required();

  auto* cmd_family = app.add_subcommand("family", "Family constructors");
  auto* fam_c = cmd_family->add_subcommand("C", "C(T) with T from --tangle");
  fam_c->add_option("--tangle", expr_text, "Tangle expression")->required();
  fam_c->add_option("--orient", orient, "Meridian orientation")
      ->check(CLI::IsMember({"+", "-"}));
  auto* fam_u = cmd_family->add_subcommand("U", "U(n, m) = C(TU(n, m))");
  fam_u->add_option("--n", fam_n, "n twists")->required();
  fam_u->add_option("--m", fam_m, "m twists")->required();
  auto* fam_js = cmd_family->add_subcommand("jslink", "C(1*T0(n))");
  fam_js->add_option("--n", fam_n, "number of T0 summands")->required();

  auto* cmd_verify = app.add_subcommand("verify", "Run verification suites");
  cmd_verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember(verify::suite_names()));
  cmd_verify->add_flag("--deep", deep, "Include slow direct evaluations");
  bool json_flag = false;
  cmd_verify->add_flag("--json", json_flag, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_bracket->parsed()) {
      emit_poly(g, "bracket", kauffman_bracket(load_pd(g, pd_path)), "A");
    } else if (cmd_kauffman->parsed()) {
      emit_poly(g, "kauffman", kauffman_polynomial(load_pd(g, pd_path)), "A");
    } else if (cmd_jones->parsed()) {
      emit_poly(g, "jones", jones_polynomial(load_pd(g, pd_path)), "t",
                /*quarter_exponents=*/true);
    } else if (cmd_conway->parsed()) {
      emit_poly(g, "conway", conway_polynomial(load_pd(g, pd_path)), "z");
    } else if (cmd_tangle->parsed()) {
      Tangle t = parse_tangle(expr_text);
      if (tangle_op == "br") {
        BracketVector v = bracket_vector(t);
        if (g.format == "json")
          std::cout << "{\"f\":" << v.f.to_json() << ",\"g\":" << v.g.to_json()
                    << "}\n";
        else
          std::cout << "(" << v.f.to_string("A") << ", " << v.g.to_string("A")
                    << ")\n";
      } else if (tangle_op == "con") {
        ConwayVector v =
            conway_vector(t.oriented_as(OrientClass::left_right));
        if (g.format == "json")
          std::cout << "{\"p\":" << v.p.to_json() << ",\"q\":" << v.q.to_json()
                    << "}\n";
        else
          std::cout << "(" << v.p.to_string("z") << ", " << v.q.to_string("z")
                    << ")\n";
      } else {
        Tangle d;
        try {
          d = t.oriented_as(OrientClass::diagonal_a);
        } catch (const std::exception&) {
          d = t.oriented_as(OrientClass::diagonal_b);
        }
        TangleFraction f = tangle_fraction(d);
        if (g.format == "json")
          std::cout << "{\"num\":" << f.num.to_json()
                    << ",\"den\":" << f.den.to_json() << "}\n";
        else
          std::cout << f.num.to_string("z") << " / " << f.den.to_string("z")
                    << "\n";
      }
    } else if (fam_c->parsed()) {
      Tangle t = parse_tangle(expr_text);
      if (orient.empty()) {
        emit_diagram(g, c_of(t));
      } else {
        emit_diagram(g, c_of(t.oriented_as(OrientClass::left_right),
                             orient == "+" ? COrient::plus : COrient::minus));
      }
    } else if (fam_u->parsed()) {
      emit_diagram(g, u(fam_n, fam_m));
    } else if (fam_js->parsed()) {
      emit_diagram(g, js_link(fam_n));
    } else if (cmd_verify->parsed()) {
      verify::Options opt;
      opt.deep = deep;
      verify::Report rep = verify::run(suite, opt);
      if (json_flag || g.format == "json") {
        std::cout << rep.to_json() << "\n";
      } else {
        for (const auto& c : rep.checks)
          std::printf("%-4s %-12s %-34s expected: %s  actual: %s\n",
                      c.pass ? "ok" : "FAIL", c.suite.c_str(), c.name.c_str(),
                      c.expected.c_str(), c.actual.c_str());
        std::printf("%d/%zu checks passed\n", rep.passed(),
                    rep.checks.size());
      }
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const ExprError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
