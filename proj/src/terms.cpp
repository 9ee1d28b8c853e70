#include "lpa/terms.hpp"

#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

// Path invariant: `start` is the source vertex even for nonempty paths.
size_t source_of(const Graph&, const Path& p) { return p.start; }

size_t range_of(const Graph& g, const Path& p) {
  if (p.edges.empty()) return p.start;
  return g.vertex_index(g.edges()[p.edges.back()].dst);
}

Path vertex_path(size_t v) { return {v, {}}; }

Path compose(const Graph& g, const Path& a, const Path& b) {
  internal_check(range_of(g, a) == source_of(g, b),
                 "paths do not compose");
  Path r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

Path append_edge(const Graph& g, const Path& a, size_t e) {
  internal_check(range_of(g, a) == g.vertex_index(g.edges()[e].src),
                 "edge does not extend the path");
  Path r = a;
  r.edges.push_back(e);
  return r;
}

Path drop_last(const Path& a) {
  Path r = a;
  r.edges.pop_back();
  return r;
}

/// (a b*)(c d*): strip the common prefix of b and c; zero unless one is a
/// prefix of the other.
std::optional<Monomial> mono_mul(const Graph& g, const Monomial& x,
                                 const Monomial& y) {
  const Path& b = x.beta;
  const Path& c = y.alpha;
  if (source_of(g, b) != source_of(g, c)) return std::nullopt;
  size_t k = std::min(b.edges.size(), c.edges.size());
  for (size_t i = 0; i < k; ++i)
    if (b.edges[i] != c.edges[i]) return std::nullopt;
  if (b.edges.size() <= c.edges.size()) {
    Path rest{range_of(g, b),
              {c.edges.begin() + b.edges.size(), c.edges.end()}};
    return Monomial{compose(g, x.alpha, rest), y.beta};
  }
  Path rest{range_of(g, c), {b.edges.begin() + c.edges.size(), b.edges.end()}};
  return Monomial{x.alpha, compose(g, y.beta, rest)};
}

/// Special edge of a regular vertex: the last one in input order.
std::optional<size_t> special_edge(const Graph& g, size_t v) {
  const auto& out = g.out_edges(v);
  if (out.empty()) return std::nullopt;
  return out.back();
}

bool is_redex(const Graph& g, const Monomial& m) {
  if (m.alpha.edges.empty() || m.beta.edges.empty()) return false;
  size_t e = m.alpha.edges.back();
  if (e != m.beta.edges.back()) return false;
  size_t v = g.vertex_index(g.edges()[e].src);
  return special_edge(g, v) == e;
}

}  // namespace

size_t Term::path_source(const Path& p) const { return source_of(*graph_, p); }
size_t Term::path_range(const Path& p) const { return range_of(*graph_, p); }

Term Term::zero(std::shared_ptr<const Graph> g, Ambient amb) {
  return {std::move(g), amb};
}

Term Term::vertex(std::shared_ptr<const Graph> g, Ambient amb,
                  const std::string& id) {
  Term t(g, amb);
  size_t v = g->vertex_index(id);
  t.coeffs_[{vertex_path(v), vertex_path(v)}] = 1;
  return t;
}

namespace {
size_t edge_index(const Graph& g, const std::string& id) {
  for (size_t k = 0; k < g.edges().size(); ++k)
    if (g.edges()[k].id == id) return k;
  throw UnknownGenerator("unknown edge: " + id);
}
}  // namespace

Term Term::edge(std::shared_ptr<const Graph> g, Ambient amb,
                const std::string& id) {
  Term t(g, amb);
  size_t e = edge_index(*g, id);
  size_t r = g->vertex_index(g->edges()[e].dst);
  size_t s = g->vertex_index(g->edges()[e].src);
  t.coeffs_[{Path{s, {e}}, vertex_path(r)}] = 1;
  return t;
}

Term Term::ghost_edge(std::shared_ptr<const Graph> g, Ambient amb,
                      const std::string& id) {
  Term t(g, amb);
  size_t e = edge_index(*g, id);
  size_t r = g->vertex_index(g->edges()[e].dst);
  size_t s = g->vertex_index(g->edges()[e].src);
  t.coeffs_[{vertex_path(r), Path{s, {e}}}] = 1;
  return t;
}

Term Term::scalar(std::shared_ptr<const Graph> g, Ambient amb, const Int& c) {
  Term t(g, amb);
  if (c == 0) return t;
  for (size_t v = 0; v < g->vertices().size(); ++v)
    t.coeffs_[{vertex_path(v), vertex_path(v)}] = c;
  return t;
}

void Term::add_monomial(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = coeffs_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

namespace {
void check_compatible(const Term& a, const Term& b) {
  if (a.ambient() != b.ambient() || !(a.graph() == b.graph()))
    throw AmbientMismatch("terms live in different algebras");
}
}  // namespace

Term Term::operator+(const Term& o) const {
  check_compatible(*this, o);
  Term r = *this;
  for (const auto& [m, c] : o.coeffs_) r.add_monomial(m, c);
  return r;
}

Term Term::operator-(const Term& o) const { return *this + (-o); }

Term Term::operator-() const {
  Term r = *this;
  for (auto& [m, c] : r.coeffs_) c = -c;
  return r;
}

Term Term::times(const Int& c) const {
  Term r(graph_, ambient_);
  if (c == 0) return r;
  for (const auto& [m, k] : coeffs_) r.coeffs_[m] = c * k;
  return r;
}

Term Term::operator*(const Term& o) const {
  check_compatible(*this, o);
  Term r(graph_, ambient_);
  for (const auto& [x, cx] : coeffs_)
    for (const auto& [y, cy] : o.coeffs_) {
      auto m = mono_mul(*graph_, x, y);
      if (m) r.add_monomial(*m, cx * cy);
    }
  if (ambient_ == Ambient::Leavitt) r = normal_form(r);
  return r;
}

bool Term::operator==(const Term& o) const {
  return ambient_ == o.ambient_ && graph() == o.graph() &&
         coeffs_ == o.coeffs_;
}

Term star(const Term& x) {
  Term r(x.graph_ptr(), x.ambient());
  for (const auto& [m, c] : x.coeffs()) r.add_monomial({m.beta, m.alpha}, c);
  return r;
}

Term bar(const Term& x) {
  Term r(x.graph_ptr(), x.ambient());
  for (const auto& [m, c] : x.coeffs()) {
    bool odd = (m.alpha.length() + m.beta.length()) % 2 == 1;
    r.add_monomial({m.beta, m.alpha}, odd ? -c : c);
  }
  return r;
}

Term normal_form_with_choice(const Term& x,
                             const std::function<size_t(size_t)>& pick) {
  const Graph& g = x.graph();
  Term r = x;
  while (true) {
    std::vector<Monomial> redexes;
    for (const auto& [m, c] : r.coeffs_)
      if (is_redex(g, m)) redexes.push_back(m);
    if (redexes.empty()) return r;
    const Monomial m = redexes[pick(redexes.size()) % redexes.size()];
    Int c = r.coeffs_.at(m);
    r.coeffs_.erase(m);
    size_t e = m.alpha.edges.back();
    size_t v = g.vertex_index(g.edges()[e].src);
    Path alpha = drop_last(m.alpha);
    Path beta = drop_last(m.beta);
    r.add_monomial({alpha, beta}, c);
    for (size_t f : g.out_edges(v)) {
      if (f == e) continue;
      r.add_monomial({append_edge(g, alpha, f), append_edge(g, beta, f)}, -c);
    }
  }
}

Term normal_form(const Term& x) {
  return normal_form_with_choice(x, [](size_t) { return 0; });
}

GradeInfo grade(const Term& x) {
  GradeInfo info;
  bool first = true;
  long deg = 0;
  for (const auto& [m, c] : x.coeffs()) {
    long d = static_cast<long>(m.alpha.length()) -
             static_cast<long>(m.beta.length());
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return info;  // mixed degrees
    }
  }
  if (first) return info;  // zero term carries no degree
  info.degree = deg;
  info.degree_mod2 = static_cast<int>(((deg % 2) + 2) % 2);
  return info;
}

PathVector rho_apply(const Term& x, const PathVector& vec) {
  if (x.ambient() != Ambient::Cohn)
    throw AmbientMismatch("the path representation acts on the Cohn algebra");
  const Graph& g = x.graph();
  PathVector out;
  for (const auto& [m, c] : x.coeffs()) {
    const Path& b = m.beta;
    for (const auto& [gamma, w] : vec) {
      for (size_t e : gamma.edges)
        internal_check(e < g.edges().size(), "path vector edge out of range");
      if (source_of(g, gamma) != source_of(g, b)) continue;
      if (gamma.edges.size() < b.edges.size()) continue;
      bool prefix = true;
      for (size_t i = 0; i < b.edges.size() && prefix; ++i)
        prefix = gamma.edges[i] == b.edges[i];
      if (!prefix) continue;
      Path rest{range_of(g, b),
                {gamma.edges.begin() + b.edges.size(), gamma.edges.end()}};
      Path image = compose(g, m.alpha, rest);
      Int& acc = out[image];
      acc += c * w;
      if (acc == 0) out.erase(image);
    }
  }
  return out;
}

bool verify_minus_one_identity(const Graph& g) {
  if (!g.is_regular())
    throw NotRegular("the identity needs a finite regular graph");
  auto shared = std::make_shared<const Graph>(g);
  Term acc = Term::zero(shared, Ambient::Leavitt);
  for (const auto& e : g.edges()) {
    Term t = Term::edge(shared, Ambient::Leavitt, e.id);
    acc = acc + t * bar(t);
  }
  return acc == Term::scalar(shared, Ambient::Leavitt, Int(-1));
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, LParen, RParen, End } kind;
  std::string text;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  auto issep = [](char c) {
    return c == '+' || c == '-' || c == '*' || c == '(' || c == ')' ||
           std::isspace(static_cast<unsigned char>(c));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      out.push_back({Token::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Minus, "-"});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Star, "*"});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")"});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Int, s.substr(i, j - i)});
      i = j;
    } else {
      size_t j = i;
      while (j < s.size() && !issep(s[j])) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::shared_ptr<const Graph> g, Ambient amb)
      : toks_(std::move(toks)), g_(std::move(g)), amb_(amb) {}

  Term parse() {
    Term t = expr();
    expect(Token::End, "trailing input after expression");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  void expect(Token::Kind k, const char* msg) {
    if (peek().kind != k) throw SyntaxError(msg);
    ++pos_;
  }

  Term expr() {
    bool neg = false;
    if (peek().kind == Token::Minus) {
      neg = true;
      ++pos_;
    } else if (peek().kind == Token::Plus) {
      ++pos_;
    }
    Term acc = product();
    if (neg) acc = -acc;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      Term t = product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Term product() {
    Term acc = factor();
    while (peek().kind == Token::Int || peek().kind == Token::Ident ||
           peek().kind == Token::LParen)
      acc = acc * factor();
    return acc;
  }

  Term factor() {
    Token t = next();
    switch (t.kind) {
      case Token::Int:
        return Term::scalar(g_, amb_, Int(t.text));
      case Token::Ident: {
        bool ghost = peek().kind == Token::Star;
        if (ghost) ++pos_;
        return generator(t.text, ghost);
      }
      case Token::LParen: {
        Term inner = expr();
        expect(Token::RParen, "expected ')'");
        return inner;
      }
      default:
        throw SyntaxError("expected a generator, integer or '('");
    }
  }

  Term generator(const std::string& id, bool ghost) {
    bool isv = g_->has_vertex(id);
    bool ise = false;
    for (const auto& e : g_->edges()) ise = ise || e.id == id;
    if (isv && ise)
      throw UnknownGenerator("generator id is both a vertex and an edge: " +
                             id);
    if (isv) return Term::vertex(g_, amb_, id);  // vertices are self-adjoint
    if (ise)
      return ghost ? Term::ghost_edge(g_, amb_, id)
                   : Term::edge(g_, amb_, id);
    throw UnknownGenerator("unknown generator: " + id);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::shared_ptr<const Graph> g_;
  Ambient amb_;
};

}  // namespace

Term parse_term(const std::string& expr, std::shared_ptr<const Graph> g,
                Ambient amb) {
  return Parser(lex(expr), std::move(g), amb).parse();
}

std::string print_term(const Term& x) {
  if (x.is_zero()) return "0";
  const Graph& g = x.graph();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.coeffs()) {
    Int a = c;
    if (first) {
      if (a < 0) os << "- ";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (a < 0) a = -a;
    first = false;
    std::vector<std::string> parts;
    if (a != 1) parts.push_back(a.get_str());
    for (size_t e : m.alpha.edges) parts.push_back(g.edges()[e].id);
    for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it)
      parts.push_back(g.edges()[*it].id + "*");
    if (m.alpha.edges.empty() && m.beta.edges.empty())
      parts.push_back(g.vertices()[m.alpha.start]);
    for (size_t i = 0; i < parts.size(); ++i)
      os << (i ? " " : "") << parts[i];
  }
  return os.str();
}

}  // namespace lpa
