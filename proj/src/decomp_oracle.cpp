#include "cycmod/decomp_oracle.hpp"

#include <algorithm>

namespace cycmod {

EndAlgebra end_algebra(const AModule& M) {
  const std::size_t d = M.dim();
  const u32 p = M.p();
  if (d == 0) return EndAlgebra{};
  // unknowns: X entries (row-major); equations: X T_i - T_i X = 0
  FpMatrix sys(p, M.n() * d * d, d * d);
  for (std::size_t i = 0; i < M.n(); ++i) {
    const FpMatrix& t = M.action(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t eq = (i * d + r) * d + c;
        // (X t)_{rc} = sum_k X_{rk} t_{kc};  (t X)_{rc} = sum_k t_{rk} X_{kc}
        for (std::size_t k = 0; k < d; ++k) {
          std::size_t xrk = r * d + k;
          sys.set(eq, xrk, (sys(eq, xrk) + t(k, c)) % p);
          std::size_t xkc = k * d + c;
          sys.set(eq, xkc, (sys(eq, xkc) + p - t(r, k)) % p);
        }
      }
  }
  Subspace null = (M.n() == 0) ? Subspace::full(p, d * d) : kernel(sys);
  EndAlgebra out;
  for (std::size_t i = 0; i < null.rank(); ++i)
    out.basis.emplace_back(p, d, d, null.basis().row(i));
  return out;
}

namespace {

Subspace column_space(const FpMatrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec e(m.cols(), 0);
    e[c] = 1;
    cols.push_back(m.apply(e));
  }
  return Subspace::span(m.p(), m.rows(), cols);
}

} // namespace

FpMatrix stable_idempotent_power(const FpMatrix& phi) {
  // The unique idempotent in the cyclic semigroup of phi is phi^k for k a
  // multiple of the period past the preperiod; as a matrix it is the Fitting
  // projector onto im(phi^d) along ker(phi^d). Iterating to the period can
  // take up to the multiplicative order of the invertible part, so compute
  // the projector from the stabilized power directly.
  const std::size_t d = phi.rows();
  if (d == 0) return phi;
  FpMatrix high = phi; // phi^(2^j) with 2^j >= d
  for (std::size_t squared = 1; squared < d; squared *= 2) high = high * high;
  Subspace img = column_space(high);
  Subspace ker_space = kernel(high);
  const std::size_t w = img.rank();
  FpMatrix basis(phi.p(), d, d);
  for (std::size_t k = 0; k < w; ++k)
    for (std::size_t r = 0; r < d; ++r) basis.set(r, k, img.basis()(k, r));
  for (std::size_t k = 0; k < ker_space.rank(); ++k)
    for (std::size_t r = 0; r < d; ++r) basis.set(r, w + k, ker_space.basis()(k, r));
  auto inv = try_inverse(basis);
  if (!inv) throw std::logic_error("stable image and kernel do not split the space");
  FpMatrix diag(phi.p(), d, d);
  for (std::size_t k = 0; k < w; ++k) diag.set(k, k, 1);
  return basis * diag * *inv;
}

namespace {

bool is_nontrivial_idempotent(const FpMatrix& e, std::size_t d) {
  if (e.is_zero()) return false;
  if (e == FpMatrix::identity(e.p(), d)) return false;
  return e * e == e;
}

} // namespace

IdempotentSearch find_idempotent(const AModule& M, u64 budget, std::mt19937_64& rng,
                                 std::size_t samples) {
  const std::size_t d = M.dim();
  const u32 p = M.p();
  EndAlgebra end = end_algebra(M);
  if (d == 0 || end.dim() <= 1)
    return {OracleOutcome::IndecomposableCertain, std::nullopt};

  const u64 total = checked_pow(p, end.dim());
  if (total <= budget) {
    // exhaustive scan in counter order; first witness wins (deterministic)
    Vec coeff(end.dim(), 0);
    FpMatrix cur(p, d, d);
    for (u64 step = 1; step < total; ++step) {
      // multi-radix increment with a running sum: p consecutive additions of
      // a basis element cancel, so rollovers keep cur consistent
      std::size_t pos = end.dim();
      while (pos > 0) {
        --pos;
        coeff[pos] = (coeff[pos] + 1) % p;
        cur = cur + end.basis[pos];
        if (coeff[pos] != 0) break;
      }
      if (is_nontrivial_idempotent(cur, d))
        return {OracleOutcome::DecomposableWitness, cur};
    }
    return {OracleOutcome::IndecomposableCertain, std::nullopt};
  }

  // random sampling with stable powers
  std::uniform_int_distribution<u32> coef(0, p - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    FpMatrix phi(p, d, d);
    for (const auto& b : end.basis) {
      u32 c = coef(rng);
      if (c != 0) phi = phi + b.scaled(c);
    }
    if (phi.is_zero()) continue;
    FpMatrix e = stable_idempotent_power(phi);
    if (is_nontrivial_idempotent(e, d)) return {OracleOutcome::DecomposableWitness, e};
    // 1 - phi can succeed where phi lands on 0 or the identity
    FpMatrix e2 = stable_idempotent_power(FpMatrix::identity(p, d) - phi);
    if (is_nontrivial_idempotent(e2, d)) return {OracleOutcome::DecomposableWitness, e2};
  }
  return {OracleOutcome::Unresolved, std::nullopt};
}

namespace {

Subspace image_space(const FpMatrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec e(m.cols(), 0);
    e[c] = 1;
    cols.push_back(m.apply(e));
  }
  return Subspace::span(m.p(), m.rows(), cols);
}

void decompose_into(const AModule& M, const Subspace& part_in_root, const FpMatrix& to_root,
                    u64 budget, std::mt19937_64& rng, std::size_t samples,
                    std::vector<DecompLeaf>& leaves) {
  IdempotentSearch found = find_idempotent(M, budget, rng, samples);
  if (found.outcome != OracleOutcome::DecomposableWitness) {
    leaves.push_back(DecompLeaf{part_in_root, M,
                                found.outcome == OracleOutcome::IndecomposableCertain});
    return;
  }
  const FpMatrix& e = *found.idempotent;
  Subspace img = image_space(e);
  Subspace ker = kernel(e);
  for (const Subspace* side : {&img, &ker}) {
    RestrictResult r = restrict_to(M, Submodule{*side});
    // lift the side's basis into root coordinates
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < side->rank(); ++k)
      rows.push_back(to_root.apply(side->basis().row(k)));
    Subspace side_in_root = Subspace::span(to_root.p(), to_root.rows(), rows);
    decompose_into(r.module, side_in_root, to_root * r.embedding, budget, rng, samples, leaves);
  }
}

} // namespace

Decomposition ks_decompose(const AModule& M, u64 budget, std::mt19937_64& rng,
                           std::size_t samples) {
  Decomposition out;
  if (M.dim() == 0) {
    out.change_of_basis = FpMatrix(M.p(), 0, 0);
    return out;
  }
  decompose_into(M, Subspace::full(M.p(), M.dim()), FpMatrix::identity(M.p(), M.dim()),
                 budget, rng, samples, out.summands);
  FpMatrix cob(M.p(), M.dim(), M.dim());
  std::size_t col = 0;
  for (const auto& leaf : out.summands)
    for (std::size_t k = 0; k < leaf.part.rank(); ++k) {
      for (std::size_t r = 0; r < M.dim(); ++r) cob.set(r, col, leaf.part.basis()(k, r));
      ++col;
    }
  if (col != M.dim()) throw std::logic_error("summands do not fill the module");
  out.change_of_basis = std::move(cob);
  return out;
}

KsLength ks_length(const AModule& M, u64 budget, std::mt19937_64& rng, std::size_t samples) {
  Decomposition d = ks_decompose(M, budget, rng, samples);
  bool certain = std::all_of(d.summands.begin(), d.summands.end(),
                             [](const DecompLeaf& l) { return l.certified; });
  return KsLength{d.summands.size(), certain};
}

} // namespace cycmod
