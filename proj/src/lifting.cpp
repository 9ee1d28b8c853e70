#include "lpa/lifting.hpp"

#include <sstream>

namespace lpa {

namespace {

/// Preimage under M of a vector in the column lattice, through a
/// precomputed column Hermite form: M * section(y) = y.
std::vector<Int> section_preimage(const ColHnfResult& ch,
                                  const std::vector<Int>& y) {
  std::vector<Int> rest = y;
  std::vector<Int> z(ch.V.rows(), Int(0));
  for (size_t j = 0; j < ch.rank; ++j) {
    size_t r = ch.pivot_rows[j];
    internal_check(rest[r] % ch.H.at(r, j) == 0,
                   "section applied outside the image lattice");
    Int q = rest[r] / ch.H.at(r, j);
    z[j] = q;
    if (q != 0)
      for (size_t i = 0; i < rest.size(); ++i) rest[i] -= q * ch.H.at(i, j);
  }
  internal_check(vec_is_zero(rest), "section applied outside the image lattice");
  return ch.V * z;
}

/// Deterministic ambient lift of a canonical class: generator combination
/// reduced modulo the image lattice.
std::vector<Int> lift_class(const FgAbelianGroup& g, const ColHnfResult& image,
                            const std::vector<Int>& coords) {
  return reduce_mod_column_lattice(g.gens() * coords, image);
}

IntMatrix induced_coker_matrix(const IntMatrix& f0, const FgAbelianGroup& dom,
                               const FgAbelianGroup& cod) {
  IntMatrix m(cod.gen_count(), dom.gen_count());
  for (size_t c = 0; c < dom.gen_count(); ++c)
    m.set_col(c, cod.canonical_coords(f0 * dom.gens().col(c)));
  return m;
}

}  // namespace

ChainMapCertificate lift_iso(const IntMatrix& mat_a, const IntMatrix& mat_m,
                             const GroupHom& xi0) {
  ChainMapCertificate cert;
  cert.mat_a = mat_a;
  cert.mat_m = mat_m;
  cert.xi0 = xi0;
  const size_t m0 = mat_a.rows(), m1 = mat_a.cols();
  const size_t n0 = mat_m.rows(), n1 = mat_m.cols();
  if (xi0.domain().ambient_dim() != m0 || xi0.codomain().ambient_dim() != n0)
    throw ShapeMismatch("xi0 does not match the presentations");
  if (!xi0.is_well_defined() || !xi0.is_isomorphism())
    throw NotAnIsomorphism("xi0 is not an isomorphism of cokernels");

  cert.ker_a = kernel_basis(mat_a);
  cert.ker_m = kernel_basis(mat_m);
  if (cert.ker_a.cols() != cert.ker_m.cols())
    throw RankMismatch("kernel ranks differ");

  const FgAbelianGroup& cok_a = xi0.domain();
  const FgAbelianGroup& cok_m = xi0.codomain();
  ColHnfResult image_a = col_hnf(mat_a);
  ColHnfResult image_m = col_hnf(mat_m);

  // f0: canonical lift of xi0 on ambient generators.
  cert.f0 = IntMatrix(n0, m0);
  for (size_t v = 0; v < m0; ++v) {
    std::vector<Int> e(m0, Int(0));
    e[v] = 1;
    std::vector<Int> target = xi0.apply(cok_a.canonical_coords(e));
    cert.f0.set_col(v, lift_class(cok_m, image_m, target));
  }

  // Basis-to-basis choice on kernels.
  cert.xi1 = IntMatrix::identity(cert.ker_a.cols());

  // f1(x) = xi1(x - s(mat_a x)) + t(f0(mat_a x)).
  cert.f1 = IntMatrix(n1, m1);
  for (size_t j = 0; j < m1; ++j) {
    std::vector<Int> x(m1, Int(0));
    x[j] = 1;
    std::vector<Int> ax = mat_a.col(j);
    std::vector<Int> kpart = vec_sub(x, section_preimage(image_a, ax));
    auto kcoords = solve(cert.ker_a, kpart);
    internal_check(kcoords.has_value(), "kernel part must lie in the kernel");
    std::vector<Int> term1 = cert.ker_m * (cert.xi1 * *kcoords);
    std::vector<Int> term2 = section_preimage(image_m, cert.f0 * ax);
    cert.f1.set_col(j, vec_add(term1, term2));
  }

  // Reverse map from the inverse isomorphism, with the roles of the
  // sections swapped: g1(y) = xi1^{-1}(y - t(mat_m y)) + s(g0(mat_m y)).
  GroupHom inv = invert_iso(xi0);
  IntMatrix g0(m0, n0);
  for (size_t v = 0; v < n0; ++v) {
    std::vector<Int> e(n0, Int(0));
    e[v] = 1;
    std::vector<Int> target = inv.apply(cok_m.canonical_coords(e));
    g0.set_col(v, lift_class(cok_a, image_a, target));
  }
  IntMatrix g1(m1, n1);
  for (size_t j = 0; j < n1; ++j) {
    std::vector<Int> y(n1, Int(0));
    y[j] = 1;
    std::vector<Int> my = mat_m.col(j);
    std::vector<Int> kpart = vec_sub(y, section_preimage(image_m, my));
    auto kcoords = solve(cert.ker_m, kpart);
    internal_check(kcoords.has_value(), "kernel part must lie in the kernel");
    std::vector<Int> term1 = cert.ker_a * *kcoords;  // xi1 is the identity
    std::vector<Int> term2 = section_preimage(image_a, g0 * my);
    g1.set_col(j, vec_add(term1, term2));
  }
  cert.g0 = g0;
  cert.g1 = g1;

  // h = s o (1 - g0 f0); both homotopy identities follow from the section
  // choices above.
  IntMatrix defect = IntMatrix::identity(m0) - g0 * cert.f0;
  IntMatrix h(m1, m0);
  for (size_t j = 0; j < m0; ++j)
    h.set_col(j, section_preimage(image_a, defect.col(j)));
  cert.homotopy = h;

  // index labels ride along so the certificate stays auditable
  cert.f0.row_labels = mat_m.row_labels;
  cert.f0.col_labels = mat_a.row_labels;
  cert.f1.row_labels = mat_m.col_labels;
  cert.f1.col_labels = mat_a.col_labels;
  cert.g0->row_labels = mat_a.row_labels;
  cert.g0->col_labels = mat_m.row_labels;
  cert.g1->row_labels = mat_a.col_labels;
  cert.g1->col_labels = mat_m.col_labels;
  cert.homotopy->row_labels = mat_a.col_labels;
  cert.homotopy->col_labels = mat_a.row_labels;
  cert.ker_a.row_labels = mat_a.col_labels;
  cert.ker_m.row_labels = mat_m.col_labels;

  cert.verified = verify_certificate(cert);
  internal_check(cert.verified, "constructed certificate fails verification");
  return cert;
}

bool verify_certificate(const ChainMapCertificate& c) try {
  // Commuting square.
  if (c.f0 * c.mat_a != c.mat_m * c.f1) return false;

  // Kernel bases are genuine and xi1 matches f1 on them.
  if (!(c.mat_a * c.ker_a).is_zero()) return false;
  if (!(c.mat_m * c.ker_m).is_zero()) return false;
  if (c.ker_a.cols() != kernel_basis(c.mat_a).cols()) return false;
  if (c.ker_m.cols() != kernel_basis(c.mat_m).cols()) return false;
  if (c.xi1.rows() != c.ker_m.cols() || c.xi1.cols() != c.ker_a.cols())
    return false;
  if (c.xi1.rows() > 0 && abs(det(c.xi1)) != 1) return false;
  if (c.f1 * c.ker_a != c.ker_m * c.xi1) return false;

  // Induced map on cokernels is xi0 (push every canonical generator).
  FgAbelianGroup cok_a = cokernel(c.mat_a);
  FgAbelianGroup cok_m = cokernel(c.mat_m);
  if (!cok_a.same_structure(c.xi0.domain())) return false;
  if (!cok_m.same_structure(c.xi0.codomain())) return false;
  GroupHom induced(cok_a, cok_m, induced_coker_matrix(c.f0, cok_a, cok_m));
  GroupHom given(cok_a, cok_m, c.xi0.matrix());
  if (!induced.equals(given)) return false;
  if (!induced.is_isomorphism()) return false;

  if (c.g0 && c.g1) {
    if (*c.g0 * c.mat_m != c.mat_a * *c.g1) return false;
    GroupHom back(cok_m, cok_a, induced_coker_matrix(*c.g0, cok_m, cok_a));
    if (!back.compose(induced).equals(GroupHom::identity(cok_a))) return false;
    if (!induced.compose(back).equals(GroupHom::identity(cok_m))) return false;
    if (c.homotopy) {
      const IntMatrix& h = *c.homotopy;
      size_t m0 = c.mat_a.rows(), m1 = c.mat_a.cols();
      if (h * c.mat_a != IntMatrix::identity(m1) - *c.g1 * c.f1) return false;
      if (c.mat_a * h != IntMatrix::identity(m0) - *c.g0 * c.f0) return false;
    }
  }
  return true;
} catch (const Error&) {
  // malformed shapes or labels: the certificate does not verify
  return false;
}

SigmaChainCertificate lift_iso_sigma(const SigmaMatrix& mat_a,
                                     const SigmaMatrix& mat_m,
                                     const GroupHom& xi0) {
  SigmaChainCertificate cert;
  cert.mat_a = mat_a;
  cert.mat_m = mat_m;
  cert.xi0 = xi0;
  IntMatrix da = mat_a.doubled();
  IntMatrix dm = mat_m.doubled();
  if (kernel_basis(da).cols() != 0 || kernel_basis(dm).cols() != 0)
    throw KernelNonzero("twisted lifting needs injective presentations");
  if (!xi0.is_well_defined() || !xi0.is_isomorphism())
    throw NotAnIsomorphism("xi0 is not an isomorphism");

  const FgAbelianGroup& cok_a = xi0.domain();
  const FgAbelianGroup& cok_m = xi0.codomain();
  if (cok_a.ambient_dim() != da.rows() || cok_m.ambient_dim() != dm.rows())
    throw ShapeMismatch("xi0 does not match the doubled presentations");

  // Equivariance of xi0 against the coordinate swaps.
  SigmaModule mod_a = coker_sigma(mat_a);
  SigmaModule mod_m = coker_sigma(mat_m);
  GroupHom given(mod_a.underlying, mod_m.underlying, xi0.matrix());
  if (!given.compose(mod_a.sigma_action)
           .equals(mod_m.sigma_action.compose(given)))
    throw NotEquivariant("xi0 does not commute with the sigma actions");

  // Z[s]-linear lift of xi0: lift the level-0 generators and read the two
  // halves as the 1 and s components.
  const size_t m0 = mat_a.rows(), n0 = mat_m.rows();
  ColHnfResult image_m = col_hnf(dm);
  IntMatrix p0(n0, m0), q0(n0, m0);
  for (size_t v = 0; v < m0; ++v) {
    std::vector<Int> e(2 * m0, Int(0));
    e[v] = 1;
    std::vector<Int> target = given.apply(cok_a.canonical_coords(e));
    std::vector<Int> lift = lift_class(cok_m, image_m, target);
    for (size_t i = 0; i < n0; ++i) {
      p0.at(i, v) = lift[i];
      q0.at(i, v) = lift[n0 + i];
    }
  }
  cert.f0 = SigmaMatrix(p0, q0);

  // mat_m is injective, so f1 is the unique solution of the square.
  auto f1d = solve_matrix(dm, cert.f0.doubled() * da);
  internal_check(f1d.has_value(), "commuting square must be solvable");
  const size_t m1 = mat_a.cols(), n1 = mat_m.cols();
  IntMatrix p1(n1, m1), q1(n1, m1);
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = 0; j < m1; ++j) {
      p1.at(i, j) = f1d->at(i, j);
      q1.at(i, j) = f1d->at(n1 + i, j);
    }
  cert.f1 = SigmaMatrix(p1, q1);
  internal_check(cert.f1.doubled() == *f1d,
                 "unique chain lift must be sigma-linear");

  cert.verified = verify_certificate_sigma(cert);
  internal_check(cert.verified, "constructed certificate fails verification");
  return cert;
}

bool verify_certificate_sigma(const SigmaChainCertificate& c) {
  if (!(c.f0 * c.mat_a == c.mat_m * c.f1)) return false;
  IntMatrix da = c.mat_a.doubled();
  IntMatrix dm = c.mat_m.doubled();
  if (kernel_basis(da).cols() != 0 || kernel_basis(dm).cols() != 0)
    return false;
  SigmaModule mod_a = coker_sigma(c.mat_a);
  SigmaModule mod_m = coker_sigma(c.mat_m);
  GroupHom induced(mod_a.underlying, mod_m.underlying,
                   induced_coker_matrix(c.f0.doubled(), mod_a.underlying,
                                        mod_m.underlying));
  GroupHom given(mod_a.underlying, mod_m.underlying, c.xi0.matrix());
  if (!induced.equals(given)) return false;
  if (!induced.is_isomorphism()) return false;
  // equivariance of the induced map
  return induced.compose(mod_a.sigma_action)
      .equals(mod_m.sigma_action.compose(induced));
}

LiftOutcome kk_iso_exists(const Graph& e, const Graph& f) {
  LiftOutcome out;
  size_t se = e.sink_indices().size(), sf = f.sink_indices().size();
  if (se != sf) {
    std::ostringstream os;
    os << "singular vertex counts differ (" << se << " vs " << sf << ")";
    out.reason = os.str();
    return out;
  }
  BFData be = bf(e), bff = bf(f);
  if (!be.group.same_structure(bff.group)) {
    out.reason = "Bowen-Franks groups are not isomorphic (" +
                 be.group.to_string() + " vs " + bff.group.to_string() + ")";
    return out;
  }
  GroupHom xi0 = canonical_iso(be.group, bff.group);
  out.certificate = lift_iso(e.bf_matrix(), f.bf_matrix(), xi0);
  out.reason = "lifted the canonical invariant-factor matching";
  return out;
}

TwistedLiftOutcome kk_iso_exists_twisted(const Graph& e, const Graph& f) {
  SigmaMatrix ma = twisted_bf_matrix(e);
  SigmaMatrix mm = twisted_bf_matrix(f);
  if (kernel_basis(ma.doubled()).cols() != 0 ||
      kernel_basis(mm.doubled()).cols() != 0)
    throw KernelNonzero(
        "twisted lifting unsupported: a doubled presentation has nonzero "
        "kernel");
  TwistedLiftOutcome out;
  SigmaModule me = coker_sigma(ma);
  SigmaModule mf = coker_sigma(mm);
  if (!me.underlying.same_structure(mf.underlying)) {
    out.reason = "twisted Bowen-Franks modules are not isomorphic (" +
                 me.underlying.to_string() + " vs " +
                 mf.underlying.to_string() + ")";
    return out;
  }
  auto iso = sigma_iso_decide(me, mf);
  if (!iso) {
    out.reason =
        "groups agree but no equivariant isomorphism exists between the "
        "sigma actions";
    return out;
  }
  out.certificate = lift_iso_sigma(ma, mm, *iso);
  out.reason = "lifted an equivariant isomorphism found by search";
  return out;
}

}  // namespace lpa
