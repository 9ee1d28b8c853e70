// Acceptance suite: one check per shipping criterion, one line per result.
// All arithmetic is exact; every comparison is equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "lpa/classify.hpp"
#include "lpa/homology.hpp"
#include "lpa/terms.hpp"

using namespace lpa;
using namespace fixtures;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void()> body;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

Graph rose2minus() { return rose(2).cuntz_splice("v"); }

// --- 1 -----------------------------------------------------------------

void headline_value_regression() {
  auto start = std::chrono::steady_clock::now();
  require(bf_twisted(rose(2)).module.underlying.same_structure(
              FgAbelianGroup::make(0, {Int(3)})),
          "twisted BF of the 2-rose must be Z/3");
  require(bf_twisted(rose2minus()).module.underlying.same_structure(
              FgAbelianGroup::make(0, {Int(7)})),
          "twisted BF of the spliced 2-rose must be Z/7");
  require(bf(rose(2)).group.is_trivial(), "BF of the 2-rose must vanish");
  require(bf(rose2minus()).group.is_trivial(),
          "BF of the spliced 2-rose must vanish");
  auto elapsed = std::chrono::steady_clock::now() - start;
  require(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                  .count() < 1000,
          "regression values must compute in under one second");
}

// --- 2 -----------------------------------------------------------------

void looped_cycle_example() {
  SigmaScalar d = det_sigma(twisted_bf_matrix(looped_cycle()));
  require(d == SigmaScalar(Int(0), Int(-1)),
          "determinant over Z[s] must be -s");
  JhVanishing v = jh_vanishes(looped_cycle(), CoeffRing::Zsigma);
  require(v.untwisted && v.twisted, "both vanishing criteria must hold");
  require(looped_cycle().is_purely_infinite_simple().value,
          "the two-vertex graph must be purely infinite simple");
}

// --- 3 -----------------------------------------------------------------

void obstruction() {
  require(!graded_hom_obstruction(rose(2), rose2minus()).possible,
          "forward unital graded homomorphism must be obstructed");
  require(!graded_hom_obstruction(rose2minus(), rose(2)).possible,
          "backward unital graded homomorphism must be obstructed");
}

// --- 4 -----------------------------------------------------------------

void determinant_criterion() {
  Graph g = graph1311();
  BfOlbfCriterion c = bfolbf_criterion(g);
  require(c.det_plus == 1, "det(I+A) must be 1");
  require(c.det_minus == -3, "det(I-A) must be -3");
  require(c.holds, "the determinant criterion must hold");
  auto iso = sigma_iso_decide(bf_twisted(g).module,
                              SigmaModule::with_trivial_sigma(bf(g).group));
  require(iso.has_value(),
          "twisted and plain groups must be equivariantly isomorphic");

  std::mt19937_64 rng(9201);
  int used = 0, tries = 0;
  while (used < 200 && ++tries < 20000) {
    Graph h = random_regular_graph(rng, 4, 3);
    FgAbelianGroup b = bf(h).group;
    if (!b.is_finite() || b.is_trivial() || *b.order() > 50) continue;
    ++used;
    SigmaModule tw = bf_twisted(h).module;
    bool iso_exists =
        tw.underlying.is_finite() &&
        sigma_iso_decide(tw, SigmaModule::with_trivial_sigma(b)).has_value();
    require(bfolbf_criterion(h).holds == iso_exists,
            "criterion and equivariant isomorphism existence must agree");
  }
  require(used == 200, "corpus must reach 200 qualifying graphs");
}

// --- 5 -----------------------------------------------------------------

void doubling_cover_identity() {
  std::mt19937_64 rng(9202);
  for (int t = 0; t < 500; ++t) {
    Graph g = random_graph(rng, 5, 10);
    SigmaModule tw = bf_twisted(g).module;
    require(tw.underlying.same_structure(bf(g.double_cover()).group),
            "twisted group must match the double cover");
    require(mod_sigma_minus_one(tw).same_structure(bf(g).group),
            "coinvariants must recover the plain group");
    if (g.is_regular()) {
      IntMatrix at = g.incidence_matrix().transpose();
      require(tw.underlying.same_structure(
                  cokernel(IntMatrix::identity(at.rows()) - at * at)),
              "regular graphs must match the squared presentation");
    }
  }
}

// --- 6 -----------------------------------------------------------------

void move_invariance() {
  std::mt19937_64 rng(9203);
  int splits = 0, elims = 0, duals = 0;
  for (int t = 0; t < 400; ++t) {
    Graph g = random_graph(rng, 5, 10);
    if (splits < 150) {
      ++splits;
      require(bf(g.out_split_graph()).group.same_structure(bf(g).group),
              "out-splitting must preserve the group");
    }
    auto cls = g.classify_vertices();
    for (const auto& s : cls.sources) {
      bool is_sink = false;
      for (const auto& k : cls.sinks) is_sink = is_sink || k == s;
      if (is_sink || g.vertices().size() == 1) continue;
      ++elims;
      require(bf(g.source_eliminate(s)).group.same_structure(bf(g).group),
              "source elimination must preserve the group");
      break;
    }
    if (g.is_essential()) {
      ++duals;
      require(bf_dual(g).group.same_structure(bf(g.dual_graph()).group),
              "dual presentation must match the dual graph");
    }
  }
  require(splits >= 150 && elims >= 40 && duals >= 40,
          "move corpora must be exercised");
}

// --- 7 -----------------------------------------------------------------

Graph random_bf_preserving_moves(std::mt19937_64& rng, Graph g, int count) {
  std::uniform_int_distribution<int> which(0, 2);
  for (int i = 0; i < count; ++i) {
    switch (which(rng)) {
      case 0: {
        auto reg = g.regular_indices();
        if (reg.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, reg.size() - 1);
        g = g.cuntz_splice(g.vertices()[reg[pick(rng)]]);
        break;
      }
      case 1:
        if (g.edges().size() <= 8) g = g.out_split_graph();
        break;
      default: {
        auto cls = g.classify_vertices();
        for (const auto& s : cls.sources) {
          bool is_sink = false;
          for (const auto& k : cls.sinks) is_sink = is_sink || k == s;
          if (!is_sink && g.vertices().size() > 1) {
            g = g.source_eliminate(s);
            break;
          }
        }
        break;
      }
    }
  }
  return g;
}

void lifting_certificates() {
  std::mt19937_64 rng(9204);
  int built = 0, tries = 0;
  while (built < 100 && ++tries < 2000) {
    Graph e = random_regular_graph(rng, 3, 2);
    Graph f = random_bf_preserving_moves(rng, e, 2);
    if (e.sink_indices().size() != f.sink_indices().size()) continue;
    if (!bf(e).group.same_structure(bf(f).group)) continue;
    LiftOutcome got = kk_iso_exists(e, f);
    require(got.certificate.has_value(), "certificate must exist");
    const ChainMapCertificate& c = *got.certificate;
    require(verify_certificate(c), "independent re-verification must pass");
    require(c.g0 && c.g1 && c.homotopy,
            "reverse map and homotopy must be attached");
    size_t m0 = c.mat_a.rows(), m1 = c.mat_a.cols();
    require(*c.homotopy * c.mat_a ==
                IntMatrix::identity(m1) - *c.g1 * c.f1,
            "homotopy identity on degree one must hold");
    require(c.mat_a * *c.homotopy ==
                IntMatrix::identity(m0) - *c.g0 * c.f0,
            "homotopy identity on degree zero must hold");
    ++built;
  }
  require(built == 100, "corpus must reach 100 certified pairs");
}

// --- 8 -----------------------------------------------------------------

void normal_form_witnesses() {
  std::mt19937_64 rng(9205);
  std::uniform_int_distribution<size_t> dim(1, 6);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 1000; ++t) {
    IntMatrix m(dim(rng), dim(rng));
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    SnfResult s = snf(m);
    require(s.U * m * s.V == s.D, "witness identity must be exact");
    require(abs(det(s.U)) == 1 && abs(det(s.V)) == 1,
            "witnesses must be unimodular");
    auto d = s.diagonal();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      require(d[i] >= 0, "diagonal must be nonnegative");
      require(d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0,
              "divisibility chain must hold");
    }
    if (m.rows() == m.cols()) {
      Int dm = det(m);
      if (dm != 0) {
        FgAbelianGroup cok = cokernel(m);
        require(cok.is_finite() && *cok.order() == abs(dm),
                "torsion order must equal |det|");
      }
    }
  }
}

// --- 9 -----------------------------------------------------------------

void term_engine() {
  std::vector<Graph> corpus{rose(1), rose(2), rose(3),  rose(4),
                            looped_cycle(), graph1311(), rose2minus()};
  std::mt19937_64 rng(9206);
  for (int t = 0; t < 10; ++t) corpus.push_back(random_regular_graph(rng, 4, 2));
  for (const Graph& g : corpus)
    if (g.is_regular())
      require(verify_minus_one_identity(g),
              "the edge pairing must sum to minus one");

  auto g = std::make_shared<const Graph>(looped_cycle());
  std::uniform_int_distribution<int> cpick(-3, 3);
  std::uniform_int_distribution<size_t> vpick(0, 1);
  auto random_path = [&](int maxlen) {
    Path p{vpick(rng), {}};
    std::uniform_int_distribution<int> lpick(0, maxlen);
    int len = lpick(rng);
    size_t cur = p.start;
    for (int i = 0; i < len; ++i) {
      const auto& out = g->out_edges(cur);
      if (out.empty()) break;
      std::uniform_int_distribution<size_t> epick(0, out.size() - 1);
      size_t e = out[epick(rng)];
      p.edges.push_back(e);
      cur = g->vertex_index(g->edges()[e].dst);
    }
    return p;
  };
  auto random_term = [&](Ambient amb) {
    Term t = Term::zero(g, amb);
    for (int i = 0; i < 3; ++i) {
      Path alpha = random_path(2);
      size_t range = alpha.edges.empty()
                         ? alpha.start
                         : g->vertex_index(g->edges()[alpha.edges.back()].dst);
      // walk backwards into `range` for the ghost leg
      Path beta{range, {}};
      std::vector<size_t> rev;
      size_t cur = range;
      std::uniform_int_distribution<int> lpick(0, 2);
      int len = lpick(rng);
      for (int k = 0; k < len; ++k) {
        std::vector<size_t> in;
        for (size_t e = 0; e < g->edges().size(); ++e)
          if (g->vertex_index(g->edges()[e].dst) == cur) in.push_back(e);
        if (in.empty()) break;
        std::uniform_int_distribution<size_t> epick(0, in.size() - 1);
        size_t e = in[epick(rng)];
        rev.push_back(e);
        cur = g->vertex_index(g->edges()[e].src);
      }
      beta.start = cur;
      for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        beta.edges.push_back(*it);
      t.add_monomial({alpha, beta}, Int(cpick(rng)));
    }
    return amb == Ambient::Leavitt ? normal_form(t) : t;
  };

  for (int t = 0; t < 500; ++t) {
    Term x = random_term(Ambient::Cohn);
    Term y = random_term(Ambient::Cohn);
    PathVector vec;
    for (int k = 0; k < 3; ++k) {
      Path p = random_path(3);
      vec[p] += 1;
      if (vec[p] == 0) vec.erase(p);
    }
    require(rho_apply(x * y, vec) == rho_apply(x, rho_apply(y, vec)),
            "the path representation must be multiplicative");
  }

  for (int t = 0; t < 100; ++t) {
    for (Ambient amb : {Ambient::Cohn, Ambient::Leavitt}) {
      Term x = random_term(amb);
      Term y = random_term(amb);
      require(star(star(x)) == x && bar(bar(x)) == x,
              "involutions must square to the identity");
      require(star(x * y) == star(y) * star(x),
              "star must be an anti-homomorphism");
      require(bar(x * y) == bar(y) * bar(x),
              "bar must be an anti-homomorphism");
    }
  }

  for (int t = 0; t < 100; ++t) {
    Term x = random_term(Ambient::Cohn);
    Term nf = normal_form(x);
    require(normal_form(nf) == nf, "normal form must be idempotent");
    for (int perm = 0; perm < 3; ++perm) {
      std::mt19937_64 prng(10 * t + perm);
      Term alt = normal_form_with_choice(x, [&](size_t n) {
        return std::uniform_int_distribution<size_t>(0, n - 1)(prng);
      });
      require(alt == nf, "rewriting must be confluent");
    }
  }
}

// --- 10 ----------------------------------------------------------------

void sequence_end_terms() {
  CoefficientData c;
  c.kh[0] = coker_sigma(SigmaMatrix(IntMatrix(1, 0)));  // Z[s]
  c.kh[-1] = SigmaModule::with_trivial_sigma(FgAbelianGroup::trivial());

  SequenceEnds r4 = kh_ends(rose(4), c, 0, false);
  require(r4.middle.has_value() &&
              r4.middle->same_structure(
                  FgAbelianGroup::make(0, {Int(3), Int(3)})),
          "middle for the 4-rose must be (Z/3)^2");

  SequenceEnds ups = kh_ends(looped_cycle(), c, 0, false);
  require(ups.middle.has_value() && ups.middle->is_trivial(),
          "middle for the two-vertex graph must vanish");

  SequenceEnds r92 = kh_ends(graph1311(), c, 0, false);
  require(r92.middle.has_value() &&
              r92.middle->same_structure(
                  FgAbelianGroup::make(0, {Int(3), Int(3)})),
          "middle for the [[1,3],[1,1]] graph must be (Z/3)^2");

  FgAbelianGroup z3 = FgAbelianGroup::make(0, {Int(3)});
  FgAbelianGroup z7 = FgAbelianGroup::make(0, {Int(7)});
  require(hom_group(z3, z7).is_trivial(), "Hom(Z/3, Z/7) must vanish");
  require(tensor_group(z3, z7).is_trivial(), "Z/3 (x) Z/7 must vanish");
  // brute-force enumeration of homomorphisms as the oracle
  Int count = 0;
  for (const auto& x : z7.elements())
    if (z7.coords_are_zero(vec_scale(Int(3), x))) count += 1;
  require(count == 1, "only the zero map exists, by enumeration");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> criteria{
      {1, "headline values: twisted groups Z/3 and Z/7, plain groups trivial",
       headline_value_regression},
      {2, "two-vertex example: det -s, vanishing, pure infinite simplicity",
       looped_cycle_example},
      {3, "graded unital homomorphisms obstructed both ways", obstruction},
      {4, "determinant criterion matches equivariant isomorphism existence",
       determinant_criterion},
      {5, "double cover and coinvariant identities on 500 random graphs",
       doubling_cover_identity},
      {6, "move invariance of the Bowen-Franks group", move_invariance},
      {7, "100 lifted certificates verify with reverse maps and homotopies",
       lifting_certificates},
      {8, "Smith/Hermite witnesses on 1000 random matrices",
       normal_form_witnesses},
      {9, "term engine: pairing identity, representation, involutions, "
          "confluence",
       term_engine},
      {10, "sequence end terms and Hom/tensor against enumeration",
       sequence_end_terms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.body();
      std::cout << "PASS  " << c.number << ": " << c.title << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  " << c.number << ": " << c.title << " -- "
                << e.what() << "\n";
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << (failures ? "FAILED" : "OK") << " (" << criteria.size()
            << " criteria, " << secs << "s)\n";
  return failures == 0 ? 0 : 1;
}
