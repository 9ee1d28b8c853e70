#include "lpa/sigma.hpp"

#include <sstream>

namespace lpa {

std::string SigmaScalar::to_string() const {
  std::ostringstream os;
  if (b == 0) {
    os << a;
    return os.str();
  }
  if (a != 0) os << a << (b > 0 ? "+" : "");
  if (b == -1)
    os << "-";
  else if (b != 1)
    os << b << "*";
  os << "s";
  return os.str();
}

SigmaMatrix::SigmaMatrix(IntMatrix p, IntMatrix q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.rows() != q_.rows() || p_.cols() != q_.cols())
    throw ShapeMismatch("sigma matrix needs equal shapes for P and Q");
}

SigmaMatrix::SigmaMatrix(IntMatrix p)
    : q_(IntMatrix::zero(p.rows(), p.cols())) {
  p_ = std::move(p);
}

SigmaMatrix SigmaMatrix::operator*(const SigmaMatrix& o) const {
  return {p_ * o.p_ + q_ * o.q_, p_ * o.q_ + q_ * o.p_};
}

SigmaMatrix SigmaMatrix::operator+(const SigmaMatrix& o) const {
  return {p_ + o.p_, q_ + o.q_};
}

SigmaMatrix SigmaMatrix::operator-(const SigmaMatrix& o) const {
  return {p_ - o.p_, q_ - o.q_};
}

SigmaMatrix SigmaMatrix::transpose() const {
  return {p_.transpose(), q_.transpose()};
}

IntMatrix SigmaMatrix::doubled() const {
  const size_t m = rows(), n = cols();
  IntMatrix d(2 * m, 2 * n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      d.at(i, j) = p_.at(i, j);
      d.at(i, n + j) = q_.at(i, j);
      d.at(m + i, j) = q_.at(i, j);
      d.at(m + i, n + j) = p_.at(i, j);
    }
  auto extend = [](const std::vector<std::string>& base, size_t count) {
    std::vector<std::string> out;
    for (int level = 0; level < 2; ++level)
      for (size_t i = 0; i < count; ++i)
        out.push_back((base.empty() ? std::to_string(i) : base[i]) + "#" +
                      std::to_string(level));
    return out;
  };
  if (!p_.row_labels.empty()) d.row_labels = extend(p_.row_labels, m);
  if (!p_.col_labels.empty()) d.col_labels = extend(p_.col_labels, n);
  return d;
}

bool SigmaModule::sigma_is_involution() const {
  return sigma_action.compose(sigma_action)
      .equals(GroupHom::identity(underlying));
}

bool SigmaModule::sigma_is_trivial() const {
  return sigma_action.equals(GroupHom::identity(underlying));
}

SigmaModule SigmaModule::with_trivial_sigma(const FgAbelianGroup& g) {
  return {g, GroupHom::identity(g)};
}

SigmaModule coker_sigma(const SigmaMatrix& m) {
  IntMatrix d = m.doubled();
  FgAbelianGroup g = FgAbelianGroup::from_presentation(d);
  // Multiplication by s is the level swap on the doubled coordinates.
  const size_t half = m.rows();
  IntMatrix act(g.gen_count(), g.gen_count());
  for (size_t c = 0; c < g.gen_count(); ++c) {
    std::vector<Int> lift = g.gens().col(c);
    std::vector<Int> swapped(lift.size());
    for (size_t i = 0; i < half; ++i) {
      swapped[i] = lift[half + i];
      swapped[half + i] = lift[i];
    }
    act.set_col(c, g.canonical_coords(swapped));
  }
  SigmaModule mod{g, GroupHom(g, g, act)};
  internal_check(mod.sigma_is_involution(), "descended swap must square to one");
  return mod;
}

SigmaScalar det_sigma(const SigmaMatrix& m) {
  if (m.rows() != m.cols())
    throw NonSquare("determinant of nonsquare sigma matrix");
  Int dplus = det(m.p() + m.q());
  Int dminus = det(m.p() - m.q());
  Int two_a = dplus + dminus;
  internal_check(two_a % 2 == 0, "determinant evaluations must agree mod 2");
  return {two_a / 2, (dplus - dminus) / 2};
}

FgAbelianGroup mod_sigma_minus_one(const SigmaModule& m) {
  const FgAbelianGroup& g = m.underlying;
  IntMatrix rel = g.canonical_relations();
  IntMatrix extra =
      m.sigma_action.matrix() - IntMatrix::identity(g.gen_count());
  return FgAbelianGroup::from_presentation(rel.hcat(extra));
}

std::optional<GroupHom> sigma_iso_decide(const SigmaModule& m,
                                         const SigmaModule& n) {
  const IntMatrix& sm = m.sigma_action.matrix();
  const IntMatrix& sn = n.sigma_action.matrix();
  return search_iso(m.underlying, n.underlying, [&](const GroupHom& h) {
    IntMatrix lhs = h.matrix() * sm;
    IntMatrix rhs = sn * h.matrix();
    for (size_t j = 0; j < lhs.cols(); ++j)
      if (!n.underlying.coords_are_zero(vec_sub(lhs.col(j), rhs.col(j))))
        return false;
    return true;
  });
}

FgAbelianGroup hom_sigma(const SigmaModule& m, const SigmaModule& n) {
  HomGroupBasis hb = hom_group_with_basis(m.underlying, n.underlying);
  const size_t q = hb.group.gen_count();
  // Equivariant homs are the kernel of X |-> X*sigma_M - sigma_N*X.
  IntMatrix phi(q, q);
  for (size_t c = 0; c < q; ++c) {
    IntMatrix delta = hb.gen_matrices[c] * m.sigma_action.matrix() -
                      n.sigma_action.matrix() * hb.gen_matrices[c];
    phi.set_col(c, hb.express(delta));
  }
  return kernel_of_hom(GroupHom(hb.group, hb.group, phi));
}

FgAbelianGroup tensor_sigma(const SigmaModule& m, const SigmaModule& n) {
  const FgAbelianGroup& a = m.underlying;
  const FgAbelianGroup& b = n.underlying;
  const size_t p = a.gen_count(), q = b.gen_count();
  const size_t ta = a.invariant_factors().size();
  const size_t tb = b.invariant_factors().size();
  // Generators g_i (x) h_j, coordinate (i, j) at index i*q + j.
  IntMatrix rel(p * q, p * tb + q * ta + p * q);
  size_t col = 0;
  for (size_t i = 0; i < p; ++i)
    for (size_t s = 0; s < tb; ++s)
      rel.at(i * q + b.rank() + s, col++) = b.invariant_factors()[s];
  for (size_t j = 0; j < q; ++j)
    for (size_t s = 0; s < ta; ++s)
      rel.at((a.rank() + s) * q + j, col++) = a.invariant_factors()[s];
  // s g_i (x) h_j - g_i (x) s h_j
  const IntMatrix& sa = m.sigma_action.matrix();
  const IntMatrix& sb = n.sigma_action.matrix();
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < q; ++j) {
      for (size_t k = 0; k < p; ++k) rel.at(k * q + j, col) += sa.at(k, i);
      for (size_t l = 0; l < q; ++l) rel.at(i * q + l, col) -= sb.at(l, j);
      ++col;
    }
  return FgAbelianGroup::from_presentation(rel);
}

}  // namespace lpa
