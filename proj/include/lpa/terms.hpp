#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "lpa/graph.hpp"

namespace lpa {

enum class Ambient { Cohn, Leavitt };

/// Finite path: a start vertex plus a composable edge index sequence.  A
/// vertex path has no edges.  Source and range are derived.
struct Path {
  size_t start = 0;
  std::vector<size_t> edges;

  size_t length() const { return edges.size(); }
  bool operator==(const Path& o) const = default;
  auto operator<=>(const Path& o) const = default;
};

/// alpha * beta-ghost with r(alpha) = r(beta).
struct Monomial {
  Path alpha;
  Path beta;
  bool operator==(const Monomial& o) const = default;
  auto operator<=>(const Monomial& o) const = default;
};

/// Exact integer-linear combination of monomials in the Cohn or Leavitt
/// path algebra of a fixed graph.  Leavitt terms are kept in normal form
/// (no monomial has both legs ending in the special edge of a vertex).
class Term {
 public:
  Term(std::shared_ptr<const Graph> g, Ambient amb)
      : graph_(std::move(g)), ambient_(amb) {}

  static Term zero(std::shared_ptr<const Graph> g, Ambient amb);
  static Term vertex(std::shared_ptr<const Graph> g, Ambient amb,
                     const std::string& id);
  static Term edge(std::shared_ptr<const Graph> g, Ambient amb,
                   const std::string& id);
  static Term ghost_edge(std::shared_ptr<const Graph> g, Ambient amb,
                         const std::string& id);
  /// c times the unit sum_v v of the (finite) graph.
  static Term scalar(std::shared_ptr<const Graph> g, Ambient amb,
                     const Int& c);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  Ambient ambient() const { return ambient_; }
  const std::map<Monomial, Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Term operator+(const Term& o) const;
  Term operator-(const Term& o) const;
  Term operator-() const;
  Term operator*(const Term& o) const;
  Term times(const Int& c) const;
  bool operator==(const Term& o) const;

  /// Add c * monomial without normalization (internal and test use).
  void add_monomial(const Monomial& m, const Int& c);

  /// Source and range of a path.
  size_t path_source(const Path& p) const;
  size_t path_range(const Path& p) const;

 private:
  friend Term normal_form(const Term&);
  friend Term normal_form_with_choice(const Term&,
                                      const std::function<size_t(size_t)>&);
  std::shared_ptr<const Graph> graph_;
  Ambient ambient_ = Ambient::Cohn;
  std::map<Monomial, Int> coeffs_;
};

/// Standard involution: alpha beta-ghost goes to beta alpha-ghost.
Term star(const Term& x);
/// Signed involution: star twisted by the parity (-1)^(|alpha|+|beta|).
Term bar(const Term& x);

/// Confluent rewriting into the classical basis of the Leavitt path
/// algebra: at each regular vertex the special (last-listed) edge pair
/// rewrites to the vertex minus the other edge pairs.
Term normal_form(const Term& x);
/// Same fixpoint, but the redex picked at each step is chosen by `pick`
/// (given the redex count); exercises confluence.
Term normal_form_with_choice(const Term& x,
                             const std::function<size_t(size_t)>& pick);

struct GradeInfo {
  std::optional<long> degree;
  std::optional<int> degree_mod2;
};
/// Common degree |alpha| - |beta| when homogeneous; absent otherwise, with
/// the mod-2 reduction supplied alongside.
GradeInfo grade(const Term& x);

/// Finitely supported integer path vector.
using PathVector = std::map<Path, Int>;

/// Action of a Cohn-algebra term on path vectors: a vertex acts as the
/// projection onto paths it emits, an edge prepends itself, a ghost edge
/// strips it.
PathVector rho_apply(const Term& x, const PathVector& vec);

/// Checks sum_e e * bar(e) = -1 in the Leavitt algebra of a finite regular
/// graph.
bool verify_minus_one_identity(const Graph& g);

/// Parse a term expression: generators by id, ghost edges as `id*`,
/// juxtaposition products, integer scalars, + and -, parentheses.
Term parse_term(const std::string& expr, std::shared_ptr<const Graph> g,
                Ambient amb);
std::string print_term(const Term& x);

}  // namespace lpa
