#include "lpa/homology.hpp"

namespace lpa {

const SigmaModule& CoefficientData::degree(int n) const {
  auto it = kh.find(n);
  if (it == kh.end())
    throw MissingDegree("coefficient data lacks degree " + std::to_string(n));
  return it->second;
}

namespace {

IntMatrix block_diag(const IntMatrix& b, size_t copies) {
  IntMatrix r(b.rows() * copies, b.cols() * copies);
  for (size_t c = 0; c < copies; ++c)
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j)
        r.at(c * b.rows() + i, c * b.cols() + j) = b.at(i, j);
  return r;
}

/// Kernel of (P + s*Q) (x) M : M^cols -> M^rows, computed on presentations.
/// Coordinate (copy w, generator k) sits at index w*q + k.
FgAbelianGroup tensor_map_kernel(const SigmaMatrix& m, const SigmaModule& mod) {
  const FgAbelianGroup& u = mod.underlying;
  const size_t q = u.gen_count();
  const IntMatrix& s = mod.sigma_action.matrix();
  IntMatrix f(m.rows() * q, m.cols() * q);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const Int& a = m.p().at(i, j);
      const Int& b = m.q().at(i, j);
      if (a == 0 && b == 0) continue;
      for (size_t k = 0; k < q; ++k) {
        if (a != 0) f.at(i * q + k, j * q + k) += a;
        if (b != 0)
          for (size_t l = 0; l < q; ++l)
            f.at(i * q + l, j * q + k) += b * s.at(l, k);
      }
    }
  IntMatrix rel = u.canonical_relations();
  return presented_kernel(f, block_diag(rel, m.cols()),
                          block_diag(rel, m.rows()));
}

SequenceEnds with_middle(FgAbelianGroup left, FgAbelianGroup right) {
  SequenceEnds e;
  e.left = std::move(left);
  e.right = std::move(right);
  if (e.left.is_trivial()) {
    e.middle = e.right;
    e.split_reason = "left end vanishes; middle = right";
  } else if (e.right.is_trivial()) {
    e.middle = e.left;
    e.split_reason = "right end vanishes; middle = left";
  } else if (e.right.is_free()) {
    e.middle = direct_sum(e.left, e.right);
    e.split_reason = "right end is free; the sequence splits";
  } else {
    e.split_reason = "extension ambiguous";
  }
  return e;
}

}  // namespace

SequenceEnds kh_ends(const Graph& g, const CoefficientData& coeff, int n,
                     bool twisted) {
  const SigmaModule& khn = coeff.degree(n);
  const SigmaModule& khn1 = coeff.degree(n - 1);
  FgAbelianGroup left =
      twisted ? tensor_sigma(bf_twisted(g).module, khn)
              : tensor_group(bf(g).group, khn.underlying);
  SigmaMatrix m = twisted ? twisted_bf_matrix(g)
                          : SigmaMatrix(g.bf_matrix());
  FgAbelianGroup right =
      twisted ? tensor_map_kernel(m, khn1)
              : tensor_map_kernel(m, SigmaModule::with_trivial_sigma(
                                         khn1.underlying));
  return with_middle(std::move(left), std::move(right));
}

SequenceEnds uct_ends(const Graph& g, const CoefficientData& coeff,
                      bool twisted) {
  const SigmaModule& kh0 = coeff.degree(0);
  const SigmaModule& kh1 = coeff.degree(1);
  FgAbelianGroup left, right;
  if (twisted) {
    left = tensor_sigma(kh1, bf_twisted_dual(g));
    right = hom_sigma(bf_twisted(g).module, kh0);
  } else {
    left = tensor_group(kh1.underlying, bf_dual(g).group);
    right = hom_group(bf(g).group, kh0.underlying);
  }
  return with_middle(std::move(left), std::move(right));
}

}  // namespace lpa
