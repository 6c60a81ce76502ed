// mtk: command-line driver for the multitree K-theory library.

#include "mtk/errors.hpp"
#include "mtk/json_io.hpp"
#include "mtk/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool certificate = false;
  std::size_t depth = 3;
  std::size_t max_nodes = mtk::LiftTree::kDefaultMaxNodes;
  std::size_t max_atoms = mtk::SetFamily::kDefaultMaxAtoms;
  std::string vertex;
  bool verify = false;
  bool dot = false;
  std::vector<std::string> suites;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> only;
};

// Text goes to stdout as built; JSON gets the schema tag.
struct Report {
  json data = json::object();
  std::ostringstream text;
  int status = 0;
};

void emit(const Options& o, Report& r) {
  if (o.format == "json") {
    json out = {{"schema", 1}};
    out.update(r.data);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
  }
}

std::string list(const std::vector<std::string>& xs, const std::string& sep = " ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool is_gog(const json& j) { return j.contains("alpha"); }

// ---- validate ----

void cmd_validate(const Options& o, Report& r) {
  const json j = mtk::read_json_file(o.input);
  const mtk::ValidationReport v =
      is_gog(j) ? mtk::validate(mtk::gog_from_json(j)) : mtk::validate(mtk::presentation_from_json(j));
  r.data["kind"] = is_gog(j) ? "graph-of-groups" : "presentation";
  r.data["validation"] = mtk::to_json(v);
  if (v.ok()) {
    r.text << "ok\n";
  } else {
    r.text << v.violations.size() << " violation(s)\n" << v.to_string();
    if (!v.to_string().empty() && v.to_string().back() != '\n') r.text << "\n";
    r.status = 1;
  }
}

mtk::QuotientPresentation load_presentation(const Options& o) {
  auto p = mtk::presentation_from_json(mtk::read_json_file(o.input));
  mtk::require_valid(p);
  return p;
}

// ---- ktheory / sixterm ----

void cmd_ktheory(const Options& o, Report& r) {
  const auto p = load_presentation(o);
  const auto k = mtk::k_theory(p);
  r.data["ktheory"] = mtk::to_json(k);
  for (std::size_t c = 0; c < k.components.size(); ++c) {
    const auto& comp = k.components[c];
    r.text << "component " << c + 1 << " (" << mtk::to_string(comp.kind) << "): " << list(comp.vertices) << "\n"
           << "  K0 = " << comp.K0.to_string() << "\n"
           << "  K1 = " << comp.K1.to_string() << "\n";
  }
  r.text << "K0 = " << k.K0.to_string() << "\nK1 = " << k.K1.to_string() << "\n";
}

void cmd_sixterm(const Options& o, Report& r) {
  const auto p = load_presentation(o);
  const auto s = mtk::six_term_report(p);
  r.data["sixterm"] = mtk::to_json(s);
  r.text << "K0 basis: " << list(s.k0_basis) << "\n"
         << "K1 basis: " << list(s.k1_basis) << "\n"
         << "1 - alpha0:\n" << s.id_minus_alpha0.to_string() << "\n"
         << "1 - alpha1:\n" << s.id_minus_alpha1.to_string() << "\n"
         << "coker(1 - alpha0) = " << s.coker0.to_string() << "\n"
         << "ker(1 - alpha0) = " << s.ker0.to_string() << "\n"
         << "coker(1 - alpha1) = " << s.coker1.to_string() << "\n"
         << "ker(1 - alpha1) = " << s.ker1.to_string() << "\n"
         << "K0 = " << s.K0.to_string() << "\nK1 = " << s.K1.to_string() << "\n";
}

// ---- dynamics ----

void cmd_dynamics(const Options& o, Report& r) {
  const auto p = load_presentation(o);
  const auto cof = mtk::cofinality_certificate(p.graph);
  const auto ap = mtk::aperiodicity_certificate(p.graph);
  const auto lc = mtk::local_contractivity_certificate(p);
  const auto tf = mtk::topological_freeness_certificate(p);

  r.data["cofinal"] = cof.cofinal;
  r.data["aperiodic"] = ap.aperiodic;
  r.data["locally_contractive"] = mtk::to_json(lc.verdict);
  r.data["topologically_free"] = mtk::to_json(tf.verdict);
  r.text << "cofinal: " << yes_no(cof.cofinal) << "\n"
         << "aperiodic: " << yes_no(ap.aperiodic) << "\n"
         << "topologically free: " << tf.verdict.to_string() << "\n"
         << "locally contractive: " << lc.verdict.to_string() << "\n";
  if (!o.certificate) return;

  json cert;
  cert["cofinal"] = cof.cofinal ? json{{"kind", "every cycle reaches every vertex"}}
                                : json{{"cycle", cof.cycle}, {"unreachable", cof.unreachable}};
  cert["aperiodic"] = ap.aperiodic ? json{{"kind", "every cycle has an entrance"}} : json{{"cycle", ap.cycle}};
  r.text << "\ncertificates:\n";
  if (!cof.cofinal) r.text << "  cycle " << list(cof.cycle) << " does not reach " << cof.unreachable << "\n";
  if (!ap.aperiodic) r.text << "  cycle without entrance: " << list(ap.cycle) << "\n";

  json good = json::array();
  for (const auto& c : lc.cycles) {
    good.push_back(c);
    r.text << "  contracting cycle: " << list(c) << "\n";
  }
  cert["locally_contractive"] = {{"cycles", good}, {"uncovered", lc.uncovered}};
  if (!lc.uncovered.empty()) r.text << "  not reached by a contracting cycle: " << list(lc.uncovered) << "\n";

  json comps = json::array();
  for (const auto& c : tf.components) {
    json jc = {{"vertices", c.vertices}, {"case", c.cyclic ? "infinite-cyclic" : "free"}, {"verdict", mtk::to_json(c.verdict)}};
    if (!c.cyclic) {
      if (!c.periodic_cycle.empty()) {
        jc["periodic_cycle"] = c.periodic_cycle;
        r.text << "  periodic cycle: " << list(c.periodic_cycle) << "\n";
      }
    } else {
      if (!c.bounded_vertex.empty()) {
        jc["bounded_vertex"] = c.bounded_vertex;
        r.text << "  every path into " << c.bounded_vertex << " has bounded denominators\n";
      }
      json witnesses = json::object();
      for (const auto& v : c.vertices) {
        const auto d = mtk::denominator_certificate(p, v);
        if (!d.unbounded) continue;
        witnesses[v] = {{"factor", d.factor.get_str()}, {"prefix", d.prefix}, {"cycle", d.cycle}};
        r.text << "  " << v << ": factor " << d.factor.get_str() << ", prefix [" << list(d.prefix) << "], cycle ["
               << list(d.cycle) << "]\n";
      }
      jc["unbounded"] = witnesses;
    }
    comps.push_back(std::move(jc));
  }
  cert["topologically_free"] = comps;
  r.data["certificates"] = cert;
}

// ---- dual ----

void cmd_dual(const Options& o, Report& r) {
  const auto gog = mtk::gog_from_json(mtk::read_json_file(o.input));
  const auto v = mtk::validate(gog);
  if (!v.ok()) {
    r.data["validation"] = mtk::to_json(v);
    r.text << v.to_string() << "\n";
    r.status = 1;
    return;
  }
  const auto q = mtk::dual_quotient(gog);
  const mtk::DiGraph& g = gog.graph.graph();
  bool identity = true;
  json checks = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    long expected = -1;
    for (std::size_t f : g.in_edges(g.source_of(e))) expected += std::labs(gog.alpha_of(f));
    long got = 0;
    for (std::size_t d : q.graph.in_edges(q.graph.vertex_index(g.edges()[e].id))) got += std::labs(q.omega_of(d).range);
    identity = identity && got == expected;
    checks.push_back({{"vertex", g.edges()[e].id}, {"in_degree", got}, {"expected", expected}});
  }
  r.data.update(mtk::to_json(q));
  r.data["in_degree_identity"] = {{"holds", identity}, {"checks", checks}};
  r.text << "dual vertices: " << list(q.graph.vertices()) << "\n";
  for (std::size_t e = 0; e < q.graph.edge_count(); ++e) {
    const auto& ed = q.graph.edges()[e];
    r.text << "  " << ed.id << ": " << ed.range << " <- " << ed.source;
    if (q.class_of(q.graph.vertex_index(ed.range)) == mtk::StabiliserClass::InfiniteCyclic) {
      const auto w = q.omega_of(e);
      r.text << "  omega (" << w.range << ", " << w.source << ")";
    }
    r.text << "\n";
  }
  r.text << "in-degree identity: " << (identity ? "holds" : "FAILS") << "\n";
  if (!identity) throw mtk::CertificationError("dual in-degree identity fails");
}

// ---- multitree ----

void cmd_multitree(const Options& o, Report& r) {
  const json j = mtk::read_json_file(o.input);
  mtk::DiGraph g;
  if (j.contains("bar")) {
    g = mtk::dual_graph(mtk::undirected_from_json(j));
    r.data["dual"] = mtk::to_json(g);
    r.text << "dual graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (const auto& e : g.edges()) r.text << "  " << e.id << ": " << e.range << " <- " << e.source << "\n";
  } else {
    g = mtk::graph_from_json(j);
  }
  const bool mt = mtk::is_multitree(g);
  r.data["multitree"] = mt;
  r.text << "multitree: " << yes_no(mt) << "\n";
  if (!mt) return;
  json pairs = json::array();
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
      const auto& v = g.vertices()[a];
      const auto& w = g.vertices()[b];
      const auto d = mtk::decompose_cylinder_intersection(g, v, w);
      if (d.intersection.empty()) continue;
      pairs.push_back({{"v", v}, {"w", w}, {"bounds", d.bounds}, {"intersection", d.intersection}});
      r.text << "  Z(" << v << ") & Z(" << w << ") = ";
      std::vector<std::string> parts;
      for (const auto& u : d.bounds) parts.push_back("Z(" + u + ")");
      r.text << list(parts, " + ") << "\n";
    }
  r.data["intersections"] = pairs;
}

// ---- setfamily ----

void cmd_setfamily(const Options& o, Report& r) {
  const auto in = mtk::setfamily_from_json(mtk::read_json_file(o.input), o.max_atoms);
  const auto& f = in.family;
  const bool indep = mtk::is_independent(f);
  const bool aligned = mtk::is_finitely_aligned(f);
  const auto cond = mtk::verify_prop_equivalence(f);
  r.data["independent"] = indep;
  r.data["finitely_aligned"] = aligned;
  r.data["condition_a"] = cond.condition_a;
  r.data["condition_b"] = cond.condition_b;
  r.text << "members: " << f.size() << ", atoms: " << f.universe().size() << "\n"
         << "independent: " << yes_no(indep) << "\n"
         << "finitely aligned: " << yes_no(aligned) << "\n"
         << "primitive parts cover: " << yes_no(cond.condition_a) << "\n"
         << "intersections are unions of members: " << yes_no(cond.condition_b) << "\n";

  json decomps = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t k = i + 1; k < f.size(); ++k) {
      if ((f.member(i) & f.member(k)) == 0) continue;
      const auto d = mtk::decompose_intersection(f, i, k);
      std::vector<std::string> ids;
      if (d)
        for (std::size_t x : *d) ids.push_back(f.ids()[x]);
      decomps.push_back({{"pair", {f.ids()[i], f.ids()[k]}}, {"partition", d ? json(ids) : json(nullptr)}});
      r.text << "  " << f.ids()[i] << " & " << f.ids()[k] << " = " << (d ? list(ids, " + ") : "(no partition)") << "\n";
    }
  r.data["intersections"] = decomps;

  const auto prims = mtk::primitive_parts(f);
  json jp = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) jp[f.ids()[i]] = f.atoms_of(prims[i]);
  r.data["primitive_parts"] = jp;

  if (cond.condition_b) {
    const auto t = mtk::transition_matrix(f);
    std::vector<std::string> order;
    for (std::size_t x : t.order) order.push_back(f.ids()[x]);
    r.data["transition"] = {{"order", order}, {"matrix", mtk::to_json(t.gamma)}};
    r.text << "transition matrix (" << list(order) << "):\n" << t.gamma.to_string() << "\n";
  }
  if (!in.action.generators.empty()) {
    const bool compat = mtk::is_compatible(f, in.action);
    r.data["action_compatible"] = compat;
    r.text << "action compatible: " << yes_no(compat) << "\n";
  }
  if (in.saturate) {
    const auto J = mtk::saturate(f, *in.saturate, in.action);
    std::vector<std::string> ids;
    for (std::size_t x : J) ids.push_back(f.ids()[x]);
    const bool inv = mtk::is_invariant(J, in.action);
    const bool fa = mtk::is_finitely_aligned_within(f, J);
    r.data["saturation"] = {{"members", ids}, {"invariant", inv}, {"finitely_aligned", fa}};
    r.text << "saturation: " << list(ids) << "\n"
           << "  invariant: " << yes_no(inv) << ", finitely aligned: " << yes_no(fa) << "\n";
    if (!inv || !fa) throw mtk::CertificationError("saturation failed its own checks");
  }
}

// ---- lifttree ----

void cmd_lifttree(const Options& o, Report& r) {
  const auto p = load_presentation(o);
  const std::string base = o.vertex.empty() ? p.graph.vertices().front() : o.vertex;
  p.graph.vertex_index(base);
  const mtk::LiftTree t(p, base, o.depth, o.max_nodes);
  if (o.dot) {
    r.text << mtk::to_dot(t);
    r.data["dot"] = mtk::to_dot(t);
    return;
  }
  json nodes = json::array();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mtk::Path path{base, {}};
    for (std::size_t e : t.nodes()[i].path) path.edges.push_back(p.graph.edges()[e].id);
    const mtk::Integer m = mtk::lift_stabiliser_generator(p, path);
    json node = {{"label", t.label(i)}, {"vertex", p.graph.vertices()[t.vertex_of(i)]}, {"stabiliser", m.get_str()}};
    if (o.verify) {
      const mtk::Integer b = mtk::brute_stabiliser(t, i);
      node["brute_stabiliser"] = b.get_str();
      if (b != m) ++mismatches;
    }
    if (t.size() <= 200) {
      r.text << "  [" << t.label(i) << "] over " << p.graph.vertices()[t.vertex_of(i)] << ", stabiliser " << m.get_str()
             << "Z\n";
    }
    nodes.push_back(std::move(node));
  }
  r.data["base"] = base;
  r.data["depth"] = o.depth;
  r.data["nodes"] = nodes;
  r.text << "lift tree over " << base << " to depth " << o.depth << ": " << t.size() << " nodes\n";
  if (!o.verify) return;
  const auto report = mtk::verify_lift_invariants(t);
  r.data["verify"] = {{"ok", report.ok() && mismatches == 0}, {"violations", report.violations}, {"stabiliser_mismatches", mismatches}};
  for (const auto& v : report.violations) r.text << "violation: " << v << "\n";
  r.text << "verify: " << (report.ok() && mismatches == 0 ? "ok" : "FAILED") << " (" << mismatches
         << " stabiliser mismatches)\n";
  if (!report.ok() || mismatches) r.status = 2;
}

// ---- oracle ----

void cmd_oracle(const Options& o, Report& r) {
  std::vector<std::string> names = o.suites;
  if (names.empty())
    for (const auto& s : mtk::oracle::suites()) names.push_back(s.name);
  json results = json::array();
  for (const auto& name : names) {
    const auto& all = mtk::oracle::suites();
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.name == name; });
    if (it == all.end()) throw mtk::ValidationError("unknown suite '" + name + "'");
    const auto res = mtk::oracle::run_suite(name, o.seed, o.cases.value_or(it->default_cases), o.only);
    json jr = {{"suite", name}, {"cases", res.cases}, {"failures", res.failures}};
    if (!res.ok()) jr["first_failure"] = res.first_failure, jr["repro"] = res.repro;
    results.push_back(std::move(jr));
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", res.seconds);
    r.text << (res.ok() ? "PASS " : "FAIL ") << name << ": " << res.cases << " cases, " << res.failures
           << " failures (" << secs << ")\n";
    if (!res.ok()) {
      r.text << "  " << res.first_failure << "\n  reproduce: " << res.repro << "\n";
      r.status = 2;
      // fail loudly on the first violation
      break;
    }
  }
  r.data["seed"] = o.seed;
  r.data["suites"] = results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtk: K-theory and boundary dynamics of group actions on multitrees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomised suites");
  app.add_flag("--certificate", o.certificate, "Emit witnesses for each decision");
  app.add_option("--depth", o.depth, "Lift tree depth");
  app.add_option("--max-nodes", o.max_nodes, "Lift tree size guard");
  app.add_option("--max-atoms", o.max_atoms, "Set family size guard (at most 64)");

  using Handler = void (*)(const Options&, Report&);
  Handler handler = nullptr;
  auto command = [&](const char* name, const char* help, Handler h, bool needs_input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_input) sub->add_option("input", o.input, "Input JSON file")->required();
    sub->callback([&handler, h] { handler = h; });
    return sub;
  };
  command("validate", "Validate a quotient presentation or graph of groups", cmd_validate);
  command("ktheory", "K-theory of the boundary crossed product", cmd_ktheory);
  command("sixterm", "Six-term sequence data", cmd_sixterm);
  command("dynamics", "Minimality, aperiodicity, contractivity and freeness", cmd_dynamics);
  command("dual", "Dual quotient presentation of a graph of groups", cmd_dual);
  command("multitree", "Multitree check and cylinder decompositions (dual graph for undirected input)", cmd_multitree);
  command("setfamily", "Set family conditions, decompositions and saturation", cmd_setfamily);
  CLI::App* lift = command("lifttree", "Lift tree over a base vertex", cmd_lifttree);
  lift->add_option("--vertex", o.vertex, "Base vertex (default: first vertex)");
  lift->add_flag("--verify", o.verify, "Check tree invariants and brute-force stabilisers");
  lift->add_flag("--dot", o.dot, "Emit Graphviz DOT");
  CLI::App* orc = command("oracle", "Seeded brute-force cross-check suites", cmd_oracle, false);
  orc->add_option("--suite", o.suites, "Suite name (repeatable; default all)");
  orc->add_option("--cases", o.cases, "Cases per suite");
  orc->add_option("--case", o.only, "Run a single case index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (o.max_atoms > mtk::SetFamily::kHardMaxAtoms) {
    std::cerr << "error: --max-atoms exceeds the hard limit of " << mtk::SetFamily::kHardMaxAtoms << "\n";
    return 1;
  }

  Report report;
  try {
    handler(o, report);
  } catch (const mtk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const mtk::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 1;
  } catch (const mtk::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const mtk::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  emit(o, report);
  return report.status;
}
