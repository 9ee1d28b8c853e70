#include "lpa/cli.hpp"

#include <fstream>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "lpa/json_io.hpp"

namespace lpa::cli {

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string describe_group(const FgAbelianGroup& g) { return g.to_string(); }

CoefficientData load_coefficients(const std::string& coeff_file,
                                  const std::string& preset) {
  if (!coeff_file.empty()) {
    std::ifstream f(coeff_file);
    if (!f) throw ParseError("cannot open coefficient file: " + coeff_file);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad coefficient json: ") + e.what());
    }
    return coefficients_from_json(j);
  }
  CoefficientData c;
  SigmaModule zero = SigmaModule::with_trivial_sigma(FgAbelianGroup::trivial());
  if (preset == "field") {
    // Witt-Grothendieck ring Z[s] in degree 0, nothing elsewhere.
    c.kh[0] = coker_sigma(SigmaMatrix(IntMatrix(1, 0)));
    c.kh[-1] = zero;
    c.kh[1] = zero;
  } else if (preset == "integral") {
    c.kh[0] = SigmaModule::with_trivial_sigma(FgAbelianGroup::make(1, {}));
    c.kh[1] = SigmaModule::with_trivial_sigma(FgAbelianGroup::make(1, {}));
    c.kh[-1] = zero;
  } else {
    throw ParseError("unknown coefficient preset: " + preset);
  }
  return c;
}

void print_ends(std::ostream& out, const SequenceEnds& e, bool as_json) {
  if (as_json) {
    out << dump(sequence_ends_to_json(e));
    return;
  }
  out << "left:   " << describe_group(e.left) << "\n";
  out << "right:  " << describe_group(e.right) << "\n";
  if (e.middle)
    out << "middle: " << describe_group(*e.middle) << "\n";
  else
    out << "middle: undetermined\n";
  out << "note:   " << e.split_reason << "\n";
}

int selftest(unsigned long seed, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-6, 6);
  std::uniform_int_distribution<size_t> dim(1, 5);
  for (int t = 0; t < 50; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    SnfResult s = snf(m);
    internal_check(s.U * m * s.V == s.D, "selftest: smith witnesses");
    internal_check(abs(det(s.U)) == 1 && abs(det(s.V)) == 1,
                   "selftest: unimodularity");
  }
  std::uniform_int_distribution<int> nv(1, 4), ne(0, 8);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::string> verts;
    int n = nv(rng);
    for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int m = ne(rng);
    for (int k = 0; k < m; ++k)
      edges.push_back({"e" + std::to_string(k), verts[pick(rng)],
                       verts[pick(rng)]});
    Graph g(verts, edges);
    internal_check(
        bf(g.out_split_graph()).group.same_structure(bf(g).group),
        "selftest: out-split invariance");
    internal_check(bf_twisted(g).module.underlying.same_structure(
                       bf(g.double_cover()).group),
                   "selftest: double cover identity");
    if (g.is_regular())
      internal_check(verify_minus_one_identity(g), "selftest: term identity");
  }
  out << "selftest passed (seed " << seed << ")\n";
  return 0;
}

struct Options {
  bool as_json = false;
  std::string graph_path, graph_path2, out_path, vertex, op;
  std::string expr, ambient = "leavitt";
  std::string coeff_file, preset = "field";
  int degree = 0;
  bool twisted = false;
  RingFlags flags;
  unsigned long seed = 20260811;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact Bowen-Franks and path-algebra calculator"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.as_json, "machine-readable output");
  };

  CLI::App* info = app.add_subcommand("info", "invariant report for a graph");
  info->add_option("graph", o.graph_path)->required();
  add_json(info);

  CLI::App* bfc = app.add_subcommand("bf", "Bowen-Franks group");
  bfc->add_option("graph", o.graph_path)->required();
  add_json(bfc);

  CLI::App* bft = app.add_subcommand("bf-twisted", "twisted Bowen-Franks module");
  bft->add_option("graph", o.graph_path)->required();
  add_json(bft);

  CLI::App* moves = app.add_subcommand("moves", "apply a graph move");
  moves->add_option("--op", o.op, "splice|outsplit|dual|cover|square|elim")
      ->required()
      ->check(CLI::IsMember({"splice", "outsplit", "dual", "cover", "square",
                             "elim"}));
  moves->add_option("--vertex", o.vertex, "vertex for splice/elim");
  moves->add_option("graph", o.graph_path)->required();
  moves->add_option("-o,--output", o.out_path, "write the graph here");
  add_json(moves);

  CLI::App* kh = app.add_subcommand("kh", "K-homology sequence end terms");
  kh->add_option("graph", o.graph_path)->required();
  kh->add_option("-n,--degree", o.degree, "homological degree");
  kh->add_flag("--twisted", o.twisted);
  kh->add_option("--coeff", o.coeff_file, "coefficient data json");
  kh->add_option("--preset", o.preset, "field|integral");
  add_json(kh);

  CLI::App* uct = app.add_subcommand("uct", "universal-coefficient end terms");
  uct->add_option("graph", o.graph_path)->required();
  uct->add_flag("--twisted", o.twisted);
  uct->add_option("--coeff", o.coeff_file, "coefficient data json");
  uct->add_option("--preset", o.preset, "field|integral");
  add_json(uct);

  CLI::App* lift = app.add_subcommand("lift", "quasi-isomorphism certificate");
  lift->add_option("graphE", o.graph_path)->required();
  lift->add_option("graphF", o.graph_path2)->required();
  lift->add_flag("--twisted", o.twisted);
  add_json(lift);

  CLI::App* cls = app.add_subcommand("classify", "classification hypotheses");
  cls->add_option("graphE", o.graph_path)->required();
  cls->add_option("graphF", o.graph_path2)->required();
  cls->add_flag("--assume-regular-supercoherent", o.flags.regular_supercoherent);
  cls->add_flag("--assume-2-invertible", o.flags.two_invertible);
  cls->add_flag("--assume-minus-one-positive", o.flags.minus_one_positive);
  add_json(cls);

  CLI::App* obs = app.add_subcommand("obstruct", "graded homomorphism obstruction");
  obs->add_option("graphE", o.graph_path)->required();
  obs->add_option("graphF", o.graph_path2)->required();
  add_json(obs);

  CLI::App* term = app.add_subcommand("term", "evaluate a path-algebra term");
  term->add_option("graph", o.graph_path)->required();
  term->add_option("expr", o.expr)->required();
  term->add_option("--ambient", o.ambient)->check(CLI::IsMember({"cohn", "leavitt"}));
  add_json(term);

  CLI::App* st = app.add_subcommand("selftest", "randomized property checks");
  st->add_option("--seed", o.seed, "random seed");
  st->group("");  // hidden

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (st->parsed()) return selftest(o.seed, out);

    if (info->parsed()) {
      Graph g = load_graph_file(o.graph_path);
      json rep = invariant_report(o.graph_path, g);
      if (o.as_json) {
        out << dump(rep);
      } else {
        out << "vertices: " << g.vertices().size()
            << "  edges: " << g.edges().size() << "\n";
        out << "BF:          " << describe_group(bf(g).group) << "\n";
        out << "BF twisted:  "
            << describe_group(bf_twisted(g).module.underlying) << "\n";
        PisReport pis = g.is_purely_infinite_simple();
        out << "purely infinite simple: " << (pis.value ? "yes" : "no");
        if (!pis.value)
          out << " (" << pis.failed_condition << ": " << pis.witness << ")";
        out << "\n";
      }
      return 0;
    }

    if (bfc->parsed()) {
      Graph g = load_graph_file(o.graph_path);
      BFData data = bf(g);
      if (o.as_json) {
        json j = group_to_json(data.group);
        j["unit_class"] = coords_to_json(data.unit_class);
        j["presentation"] = matrix_to_json(g.bf_matrix());
        out << dump(j);
      } else {
        out << "BF = " << describe_group(data.group) << "\n";
        out << "unit class: " << coords_to_json(data.unit_class).dump() << "\n";
      }
      return 0;
    }

    if (bft->parsed()) {
      Graph g = load_graph_file(o.graph_path);
      TwistedBFData tw = bf_twisted(g);
      if (o.as_json) {
        json j = sigma_module_to_json(tw.module);
        j["unit_class"] = coords_to_json(tw.unit_class);
        if (g.is_regular())
          j["det_sigma"] = sigma_scalar_to_json(det_sigma(twisted_bf_matrix(g)));
        out << dump(j);
      } else {
        out << "BF twisted = " << describe_group(tw.module.underlying) << "\n";
        out << "sigma action: " << tw.module.sigma_action.matrix().to_string()
            << "\n";
      }
      return 0;
    }

    if (moves->parsed()) {
      Graph g = load_graph_file(o.graph_path);
      Graph result = g;
      if (o.op == "splice") {
        if (o.vertex.empty()) throw Error("splice needs --vertex");
        result = g.cuntz_splice(o.vertex);
      } else if (o.op == "outsplit") {
        result = g.out_split_graph();
      } else if (o.op == "dual") {
        result = g.dual_graph();
      } else if (o.op == "cover") {
        result = g.double_cover();
      } else if (o.op == "square") {
        result = g.square_graph();
      } else if (o.op == "elim") {
        if (o.vertex.empty()) throw Error("elim needs --vertex");
        result = g.source_eliminate(o.vertex);
      }
      std::string text =
          o.as_json ? dump(graph_to_json(result)) : print_graph_text(result);
      if (o.out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out_path);
        if (!f) throw Error("cannot write " + o.out_path);
        f << text;
      }
      return 0;
    }

    if (kh->parsed() || uct->parsed()) {
      Graph g = load_graph_file(o.graph_path);
      CoefficientData c = load_coefficients(o.coeff_file, o.preset);
      SequenceEnds e = kh->parsed() ? kh_ends(g, c, o.degree, o.twisted)
                                    : uct_ends(g, c, o.twisted);
      print_ends(out, e, o.as_json);
      return 0;
    }

    if (lift->parsed()) {
      Graph e = load_graph_file(o.graph_path);
      Graph f = load_graph_file(o.graph_path2);
      if (o.twisted) {
        TwistedLiftOutcome got = kk_iso_exists_twisted(e, f);
        if (o.as_json) {
          json j;
          j["reason"] = got.reason;
          j["certificate"] =
              got.certificate ? certificate_to_json(*got.certificate) : json();
          out << dump(j);
        } else if (got.certificate) {
          out << "certificate found; verified: "
              << (verify_certificate_sigma(*got.certificate) ? "yes" : "no")
              << "\n";
        } else {
          out << "no certificate: " << got.reason << "\n";
        }
      } else {
        LiftOutcome got = kk_iso_exists(e, f);
        if (o.as_json) {
          json j;
          j["reason"] = got.reason;
          j["certificate"] =
              got.certificate ? certificate_to_json(*got.certificate) : json();
          out << dump(j);
        } else if (got.certificate) {
          out << "certificate found; verified: "
              << (verify_certificate(*got.certificate) ? "yes" : "no") << "\n";
        } else {
          out << "no certificate: " << got.reason << "\n";
        }
      }
      return 0;
    }

    if (cls->parsed()) {
      Graph e = load_graph_file(o.graph_path);
      Graph f = load_graph_file(o.graph_path2);
      ClassificationReport rep = classify_pair(e, f, o.flags);
      if (o.as_json) {
        out << dump(classification_to_json(rep));
      } else {
        out << "purely infinite simple: E "
            << (rep.pis_e.value ? "yes" : "no") << ", F "
            << (rep.pis_f.value ? "yes" : "no") << "\n";
        out << "BF(E) = " << describe_group(rep.bf_e.group)
            << ", BF(F) = " << describe_group(rep.bf_f.group) << "\n";
        out << "BF isomorphism: " << (rep.bf_iso ? "yes" : "no") << "\n";
        out << "unit-preserving isomorphism: "
            << (rep.unital_iso ? "yes" : "no");
        if (!rep.unital_note.empty()) out << " (" << rep.unital_note << ")";
        out << "\n";
        for (const auto& t : rep.theorems)
          out << (t.applicable ? "[applies] " : "[blocked] ") << t.name
              << ": " << t.conclusion << "\n";
      }
      return 0;
    }

    if (obs->parsed()) {
      Graph e = load_graph_file(o.graph_path);
      Graph f = load_graph_file(o.graph_path2);
      ObstructionReport rep = graded_hom_obstruction(e, f);
      if (o.as_json) {
        out << dump(obstruction_to_json(rep));
      } else {
        out << "possible: " << (rep.possible ? "true" : "false") << "\n";
        out << rep.detail << "\n";
      }
      return 0;
    }

    if (term->parsed()) {
      auto g = std::make_shared<const Graph>(load_graph_file(o.graph_path));
      Ambient amb = o.ambient == "cohn" ? Ambient::Cohn : Ambient::Leavitt;
      Term t = parse_term(o.expr, g, amb);
      if (o.as_json) {
        json j;
        j["normal_form"] = print_term(t);
        GradeInfo gi = grade(t);
        j["degree"] = gi.degree ? json(*gi.degree) : json();
        j["degree_mod2"] = gi.degree_mod2 ? json(*gi.degree_mod2) : json();
        j["star"] = print_term(star(t));
        j["bar"] = print_term(bar(t));
        out << dump(j);
      } else {
        out << print_term(t) << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace lpa::cli
