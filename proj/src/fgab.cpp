#include "lpa/fgab.hpp"

#include <algorithm>
#include <sstream>

namespace lpa {

FgAbelianGroup FgAbelianGroup::from_presentation(const IntMatrix& presentation) {
  const size_t m = presentation.rows(), n = presentation.cols();
  SnfResult s = snf(presentation);
  const size_t k = std::min(m, n);
  // Diagonal comes out as units, then torsion ascending, then zeros; the
  // canonical coordinate order is free first, torsion ascending.
  std::vector<size_t> free_idx, torsion_idx;
  std::vector<Int> factors;
  for (size_t i = 0; i < m; ++i) {
    Int d = i < k ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      free_idx.push_back(i);
    } else if (d >= 2) {
      torsion_idx.push_back(i);
      factors.push_back(d);
    }
  }
  FgAbelianGroup g;
  g.rank_ = free_idx.size();
  g.factors_ = std::move(factors);
  g.presentation_ = presentation;

  std::vector<size_t> canon = free_idx;
  canon.insert(canon.end(), torsion_idx.begin(), torsion_idx.end());
  const size_t q = canon.size();
  IntMatrix proj(q, m);
  for (size_t r = 0; r < q; ++r)
    for (size_t j = 0; j < m; ++j) proj.at(r, j) = s.U.at(canon[r], j);
  IntMatrix uinv = unimodular_inverse(s.U);
  IntMatrix gens(m, q);
  for (size_t c = 0; c < q; ++c) gens.set_col(c, uinv.col(canon[c]));
  g.proj_ = std::move(proj);
  g.gens_ = std::move(gens);
  return g;
}

FgAbelianGroup FgAbelianGroup::make(size_t rank, std::vector<Int> factors) {
  for (size_t i = 0; i < factors.size(); ++i) {
    internal_check(factors[i] >= 2, "invariant factor below 2");
    internal_check(i == 0 || factors[i] % factors[i - 1] == 0,
                   "invariant factors must form a divisibility chain");
  }
  const size_t q = rank + factors.size();
  FgAbelianGroup g;
  g.rank_ = rank;
  g.factors_ = std::move(factors);
  IntMatrix pres(q, g.factors_.size());
  for (size_t j = 0; j < g.factors_.size(); ++j)
    pres.at(rank + j, j) = g.factors_[j];
  g.presentation_ = std::move(pres);
  g.proj_ = IntMatrix::identity(q);
  g.gens_ = IntMatrix::identity(q);
  return g;
}

FgAbelianGroup FgAbelianGroup::from_torsion_multiset(
    size_t rank, const std::vector<Int>& orders) {
  std::vector<Int> keep;
  for (const auto& d : orders) {
    internal_check(d >= 1, "torsion order must be positive");
    if (d > 1) keep.push_back(d);
  }
  const size_t m = rank + keep.size();
  IntMatrix pres(m, keep.size());
  for (size_t j = 0; j < keep.size(); ++j) pres.at(rank + j, j) = keep[j];
  return from_presentation(pres);
}

std::optional<Int> FgAbelianGroup::order() const {
  if (rank_ > 0) return std::nullopt;
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

IntMatrix FgAbelianGroup::canonical_relations() const {
  IntMatrix r(gen_count(), factors_.size());
  for (size_t j = 0; j < factors_.size(); ++j)
    r.at(rank_ + j, j) = factors_[j];
  return r;
}

std::vector<Int> FgAbelianGroup::canonical_coords(
    const std::vector<Int>& ambient) const {
  return normalize(proj_ * ambient);
}

std::vector<Int> FgAbelianGroup::normalize(std::vector<Int> coords) const {
  if (coords.size() != gen_count())
    throw ShapeMismatch("canonical coordinate size mismatch");
  for (size_t j = 0; j < factors_.size(); ++j) {
    Int& c = coords[rank_ + j];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), factors_[j].get_mpz_t());
  }
  return coords;
}

bool FgAbelianGroup::coords_are_zero(const std::vector<Int>& coords) const {
  return vec_is_zero(normalize(coords));
}

std::optional<Int> FgAbelianGroup::element_order(
    const std::vector<Int>& coords) const {
  std::vector<Int> c = normalize(coords);
  for (size_t i = 0; i < rank_; ++i)
    if (c[i] != 0) return std::nullopt;
  Int n = 1;
  for (size_t j = 0; j < factors_.size(); ++j) {
    if (c[rank_ + j] == 0) continue;
    n = lcm(n, factors_[j] / gcd(factors_[j], c[rank_ + j]));
  }
  return n;
}

std::vector<std::vector<Int>> FgAbelianGroup::elements() const {
  if (rank_ > 0)
    throw UnsupportedInfiniteGroup("cannot enumerate an infinite group");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(factors_.size(), Int(0));
  while (true) {
    std::vector<Int> e(gen_count(), Int(0));
    for (size_t j = 0; j < factors_.size(); ++j) e[rank_ + j] = cur[j];
    out.push_back(e);
    size_t j = factors_.size();
    while (j > 0) {
      --j;
      cur[j] += 1;
      if (cur[j] < factors_[j]) break;
      cur[j] = 0;
      if (j == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ == 1) {
    os << "Z";
    first = false;
  } else if (rank_ > 1) {
    os << "Z^" << rank_;
    first = false;
  }
  for (const auto& d : factors_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

GroupHom::GroupHom(FgAbelianGroup domain, FgAbelianGroup codomain,
                   IntMatrix matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(matrix)) {
  if (mat_.rows() != cod_.gen_count() || mat_.cols() != dom_.gen_count())
    throw ShapeMismatch("hom matrix shape mismatch");
  for (size_t j = 0; j < mat_.cols(); ++j) mat_.set_col(j, cod_.normalize(mat_.col(j)));
}

bool GroupHom::is_well_defined() const {
  const auto& f = dom_.invariant_factors();
  for (size_t j = 0; j < f.size(); ++j) {
    std::vector<Int> v = vec_scale(f[j], mat_.col(dom_.rank() + j));
    if (!cod_.coords_are_zero(v)) return false;
  }
  return true;
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coords) const {
  if (coords.size() != dom_.gen_count())
    throw ShapeMismatch("hom applied to wrong-size coordinates");
  return cod_.normalize(mat_ * coords);
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  return {inner.dom_, cod_, mat_ * inner.mat_};
}

bool GroupHom::is_surjective() const {
  IntMatrix w = mat_.hcat(cod_.canonical_relations());
  return FgAbelianGroup::from_presentation(w).is_trivial();
}

bool GroupHom::is_injective() const { return kernel_of_hom(*this).is_trivial(); }

bool GroupHom::is_isomorphism() const {
  return is_well_defined() && is_surjective() && is_injective();
}

bool GroupHom::equals(const GroupHom& o) const {
  if (mat_.rows() != o.mat_.rows() || mat_.cols() != o.mat_.cols()) return false;
  for (size_t j = 0; j < mat_.cols(); ++j)
    if (!cod_.coords_are_zero(vec_sub(mat_.col(j), o.mat_.col(j)))) return false;
  return true;
}

GroupHom GroupHom::identity(const FgAbelianGroup& g) {
  return {g, g, IntMatrix::identity(g.gen_count())};
}

GroupHom GroupHom::zero(const FgAbelianGroup& dom, const FgAbelianGroup& cod) {
  return {dom, cod, IntMatrix::zero(cod.gen_count(), dom.gen_count())};
}

FgAbelianGroup presented_kernel(const IntMatrix& F, const IntMatrix& rel_dom,
                                const IntMatrix& rel_cod) {
  const size_t a = F.cols();
  // Preimage lattice L = {x : Fx lies in the codomain relation lattice}.
  IntMatrix W = F.hcat(rel_cod);
  IntMatrix K = kernel_basis(W);
  IntMatrix Kx = K.top_rows(a);
  ColHnfResult ch = col_hnf(Kx);
  IntMatrix BL = ch.H.left_cols(ch.rank);
  // Domain relations expressed in the basis of L present the kernel.
  auto Y = solve_matrix(BL, rel_dom);
  internal_check(Y.has_value(), "domain relations must lie in the kernel lattice");
  return FgAbelianGroup::from_presentation(*Y);
}

FgAbelianGroup kernel_of_hom(const GroupHom& h) {
  return presented_kernel(h.matrix(), h.domain().canonical_relations(),
                          h.codomain().canonical_relations());
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> orders = a.invariant_factors();
  orders.insert(orders.end(), b.invariant_factors().begin(),
                b.invariant_factors().end());
  return FgAbelianGroup::from_torsion_multiset(a.rank() + b.rank(), orders);
}

FgAbelianGroup hom_group(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> orders;
  for (size_t i = 0; i < a.rank(); ++i)
    for (const auto& e : b.invariant_factors()) orders.push_back(e);
  for (const auto& d : a.invariant_factors())
    for (const auto& e : b.invariant_factors()) orders.push_back(gcd(d, e));
  return FgAbelianGroup::from_torsion_multiset(a.rank() * b.rank(), orders);
}

FgAbelianGroup tensor_group(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> orders;
  for (size_t i = 0; i < a.rank(); ++i)
    for (const auto& e : b.invariant_factors()) orders.push_back(e);
  for (size_t i = 0; i < b.rank(); ++i)
    for (const auto& d : a.invariant_factors()) orders.push_back(d);
  for (const auto& d : a.invariant_factors())
    for (const auto& e : b.invariant_factors()) orders.push_back(gcd(d, e));
  return FgAbelianGroup::from_torsion_multiset(a.rank() * b.rank(), orders);
}

namespace {

// Column-major stacking of a q x p matrix into a vector of length q*p.
std::vector<Int> vec_of_matrix(const IntMatrix& m) {
  std::vector<Int> v;
  v.reserve(m.rows() * m.cols());
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) v.push_back(m.at(i, j));
  return v;
}

IntMatrix matrix_of_vec(const std::vector<Int>& v, size_t q, size_t p) {
  IntMatrix m(q, p);
  for (size_t j = 0; j < p; ++j)
    for (size_t i = 0; i < q; ++i) m.at(i, j) = v[j * q + i];
  return m;
}

// Lattice of matrices that define homomorphisms a -> b, as a column basis of
// vec'd matrices.
IntMatrix hom_lattice_basis(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  const size_t p = a.gen_count(), q = b.gen_count();
  const size_t ta = a.invariant_factors().size();
  const size_t tb = b.invariant_factors().size();
  IntMatrix rb = b.canonical_relations();
  // d_i * H[:, i] must land in the codomain relation lattice.
  IntMatrix E(q * ta, q * p + tb * ta);
  for (size_t jt = 0; jt < ta; ++jt) {
    const Int& d = a.invariant_factors()[jt];
    const size_t gi = a.rank() + jt;
    for (size_t r = 0; r < q; ++r) {
      E.at(jt * q + r, gi * q + r) = d;
      for (size_t s = 0; s < tb; ++s)
        E.at(jt * q + r, q * p + jt * tb + s) = -rb.at(r, s);
    }
  }
  IntMatrix K = kernel_basis(E);
  ColHnfResult ch = col_hnf(K.top_rows(q * p));
  return ch.H.left_cols(ch.rank);
}

}  // namespace

HomGroupBasis hom_group_with_basis(const FgAbelianGroup& a,
                                   const FgAbelianGroup& b) {
  const size_t p = a.gen_count(), q = b.gen_count();
  const size_t tb = b.invariant_factors().size();
  IntMatrix BL = hom_lattice_basis(a, b);
  // Zero maps: every column lies in the codomain relation lattice.
  IntMatrix Z0(q * p, p * tb);
  for (size_t i = 0; i < p; ++i)
    for (size_t s = 0; s < tb; ++s)
      Z0.at(i * q + b.rank() + s, i * tb + s) = b.invariant_factors()[s];
  auto Y = solve_matrix(BL, Z0);
  internal_check(Y.has_value(), "zero maps must lie in the hom lattice");
  HomGroupBasis out;
  out.group = FgAbelianGroup::from_presentation(*Y);
  for (size_t c = 0; c < out.group.gen_count(); ++c) {
    std::vector<Int> amb = BL * out.group.gens().col(c);
    out.gen_matrices.push_back(matrix_of_vec(amb, q, p));
  }
  FgAbelianGroup grp = out.group;
  out.express = [BL, grp](const IntMatrix& X) {
    auto c = solve(BL, vec_of_matrix(X));
    if (!c) throw Error("matrix is not a well-defined homomorphism");
    return grp.canonical_coords(*c);
  };
  return out;
}

std::optional<GroupHom> hom_exists_with_value(const FgAbelianGroup& A,
                                              const std::vector<Int>& a,
                                              const FgAbelianGroup& B,
                                              const std::vector<Int>& b) {
  const size_t p = A.gen_count(), q = B.gen_count();
  const size_t ta = A.invariant_factors().size();
  const size_t tb = B.invariant_factors().size();
  std::vector<Int> abar = A.normalize(a);
  std::vector<Int> bbar = B.normalize(b);
  IntMatrix rb = B.canonical_relations();
  // Unknowns: vec(H) (column-major), one slack block per domain torsion
  // generator, one slack block for the value equation.
  const size_t cols = q * p + tb * ta + tb;
  IntMatrix E(q * ta + q, cols);
  std::vector<Int> rhs(q * ta + q, Int(0));
  for (size_t jt = 0; jt < ta; ++jt) {
    const Int& d = A.invariant_factors()[jt];
    const size_t gi = A.rank() + jt;
    for (size_t r = 0; r < q; ++r) {
      E.at(jt * q + r, gi * q + r) = d;
      for (size_t s = 0; s < tb; ++s)
        E.at(jt * q + r, q * p + jt * tb + s) = -rb.at(r, s);
    }
  }
  const size_t vrow = q * ta;
  for (size_t i = 0; i < p; ++i)
    for (size_t r = 0; r < q; ++r) E.at(vrow + r, i * q + r) = abar[i];
  for (size_t s = 0; s < tb; ++s)
    for (size_t r = 0; r < q; ++r)
      E.at(vrow + r, q * p + tb * ta + s) = -rb.at(r, s);
  for (size_t r = 0; r < q; ++r) rhs[vrow + r] = bbar[r];

  auto x = solve(E, rhs);
  if (!x) return std::nullopt;
  IntMatrix H(q, p);
  for (size_t j = 0; j < p; ++j)
    for (size_t i = 0; i < q; ++i) H.at(i, j) = (*x)[j * q + i];
  GroupHom h(A, B, H);
  internal_check(h.is_well_defined(), "solved hom is not well defined");
  internal_check(h.apply(abar) == bbar, "solved hom misses the target value");
  return h;
}

std::optional<GroupHom> search_iso(
    const FgAbelianGroup& A, const FgAbelianGroup& B,
    const std::function<bool(const GroupHom&)>& accept) {
  if (A.rank() > 0 || B.rank() > 0)
    throw UnsupportedInfiniteGroup(
        "exhaustive isomorphism search needs finite groups");
  if (!A.same_structure(B)) return std::nullopt;
  if (A.is_trivial()) {
    GroupHom h = GroupHom::zero(A, B);
    if (accept(h)) return h;
    return std::nullopt;
  }
  if (*A.order() > 10000)
    throw SearchCapExceeded("group order beyond the desk-scale search cap");

  const size_t t = A.invariant_factors().size();
  std::vector<std::vector<Int>> elems = B.elements();
  // An isomorphism sends each generator to an element of exactly its order.
  std::vector<std::vector<size_t>> candidates(t);
  double space = 1;
  for (size_t j = 0; j < t; ++j) {
    for (size_t e = 0; e < elems.size(); ++e)
      if (*B.element_order(elems[e]) == A.invariant_factors()[j])
        candidates[j].push_back(e);
    space *= static_cast<double>(candidates[j].size());
    if (space > 2e6)
      throw SearchCapExceeded("isomorphism search space beyond the cap");
  }

  std::vector<size_t> pick(t, 0);
  std::optional<GroupHom> found;
  std::function<bool(size_t)> rec = [&](size_t j) -> bool {
    if (j == t) {
      IntMatrix H(B.gen_count(), t);
      for (size_t c = 0; c < t; ++c)
        H.set_col(c, elems[candidates[c][pick[c]]]);
      GroupHom h(A, B, H);
      if (h.is_surjective() && accept(h)) {
        found = h;
        return true;
      }
      return false;
    }
    for (size_t i = 0; i < candidates[j].size(); ++i) {
      pick[j] = i;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  rec(0);
  return found;
}

std::optional<GroupHom> iso_with_element_constraint(const FgAbelianGroup& A,
                                                    const std::vector<Int>& a,
                                                    const FgAbelianGroup& B,
                                                    const std::vector<Int>& b) {
  std::vector<Int> abar = A.normalize(a);
  std::vector<Int> bbar = B.normalize(b);
  return search_iso(A, B, [&](const GroupHom& h) {
    return h.apply(abar) == bbar;
  });
}

GroupHom canonical_iso(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  if (!a.same_structure(b))
    throw NotAnIsomorphism("groups are not isomorphic");
  return {a, b, IntMatrix::identity(a.gen_count())};
}

GroupHom invert_iso(const GroupHom& h) {
  const FgAbelianGroup& A = h.domain();
  const FgAbelianGroup& B = h.codomain();
  const size_t p = A.gen_count(), q = B.gen_count();
  const size_t ta = A.invariant_factors().size();
  const size_t tb = B.invariant_factors().size();
  IntMatrix ra = A.canonical_relations();
  IntMatrix rb = B.canonical_relations();
  // Unknown X (p x q, column-major) with ta slacks per well-definedness
  // column and tb slacks per value column.
  const size_t cols = p * q + ta * tb + tb * q;
  IntMatrix E(p * tb + q * q, cols);
  std::vector<Int> rhs(E.rows(), Int(0));
  for (size_t jt = 0; jt < tb; ++jt) {
    const Int& d = B.invariant_factors()[jt];
    const size_t gj = B.rank() + jt;
    for (size_t r = 0; r < p; ++r) {
      E.at(jt * p + r, gj * p + r) = d;
      for (size_t s = 0; s < ta; ++s)
        E.at(jt * p + r, p * q + jt * ta + s) = -ra.at(r, s);
    }
  }
  const size_t vbase = p * tb;
  const IntMatrix& hm = h.matrix();
  for (size_t j = 0; j < q; ++j) {
    for (size_t r = 0; r < q; ++r) {
      for (size_t k = 0; k < p; ++k) E.at(vbase + j * q + r, j * p + k) = hm.at(r, k);
      for (size_t s = 0; s < tb; ++s)
        E.at(vbase + j * q + r, p * q + ta * tb + j * tb + s) = -rb.at(r, s);
    }
    rhs[vbase + j * q + j] = 1;
  }
  auto x = solve(E, rhs);
  if (!x) throw NotAnIsomorphism("homomorphism has no inverse");
  IntMatrix X(p, q);
  for (size_t j = 0; j < q; ++j)
    for (size_t i = 0; i < p; ++i) X.at(i, j) = (*x)[j * p + i];
  GroupHom inv(B, A, X);
  internal_check(inv.is_well_defined(), "inverse is not well defined");
  internal_check(h.compose(inv).equals(GroupHom::identity(B)),
                 "inverse fails on the right");
  internal_check(inv.compose(h).equals(GroupHom::identity(A)),
                 "inverse fails on the left");
  return inv;
}

}  // namespace lpa
