#include "cycmod/trivext.hpp"

#include <algorithm>

namespace cycmod {

Algebra::Algebra(u32 p, u32 n) : p(p), n(n) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

AElem elem_mul(const Algebra& A, const AElem& x, const AElem& y) {
  if (x.v.size() != A.n || y.v.size() != A.n)
    throw std::invalid_argument("element size differs from algebra");
  AElem out;
  out.a = u32((u64(x.a) * y.a) % A.p);
  out.v = add_vec(scale_vec(x.v, y.a, A.p), scale_vec(y.v, x.a, A.p), A.p);
  return out;
}

bool is_unit(const AElem& x) { return x.a != 0; }

Ideal Ideal::radical(const Algebra& A) { return soc_sub(Subspace::full(A.p, A.n)); }

bool Ideal::is_zero_ideal() const {
  return kind_ == Kind::Zero || (kind_ == Kind::SocSub && w_.rank() == 0);
}

AModule::AModule(Algebra A, std::size_t d, std::vector<FpMatrix> action,
                 std::vector<std::size_t> generator_marks)
    : A_(A), d_(d), T_(std::move(action)), marks_(std::move(generator_marks)) {
  if (T_.size() != A_.n) throw std::invalid_argument("need one action matrix per basis vector of V");
  for (const auto& t : T_) {
    if (t.p() != A_.p || t.rows() != d_ || t.cols() != d_)
      throw std::invalid_argument("action matrix shape mismatch");
  }
  for (const auto& ti : T_)
    for (const auto& tj : T_)
      if (!(ti * tj).is_zero())
        throw std::invalid_argument("action matrices must pairwise annihilate");
  for (auto m : marks_)
    if (m >= d_) throw std::invalid_argument("generator mark out of range");
}

Vec AModule::act(std::span<const u32> v, std::span<const u32> x) const {
  if (v.size() != A_.n || x.size() != d_)
    throw std::invalid_argument("length mismatch in module action");
  Vec out(d_, 0);
  for (std::size_t i = 0; i < T_.size(); ++i) {
    if (v[i] == 0) continue;
    Vec t = T_[i].apply(x);
    for (std::size_t c = 0; c < d_; ++c) out[c] = (out[c] + u64(v[i]) * t[c]) % A_.p;
  }
  return out;
}

Vec AModule::act_elem(const AElem& e, std::span<const u32> x) const {
  Vec out = scale_vec(x, e.a, A_.p);
  return add_vec(out, act(e.v, x), A_.p);
}

bool AModule::is_action_closed(const Subspace& u) const {
  for (std::size_t i = 0; i < T_.size(); ++i)
    for (std::size_t r = 0; r < u.rank(); ++r)
      if (!u.contains(T_[i].apply(u.basis().row(r)))) return false;
  return true;
}

AModule free_module(const Algebra& A, std::size_t r) {
  const std::size_t block = A.n + 1;
  const std::size_t d = r * block;
  std::vector<FpMatrix> T(A.n, FpMatrix(A.p, d, d));
  std::vector<std::size_t> marks;
  for (std::size_t t = 0; t < r; ++t) {
    marks.push_back(t * block);
    for (u32 i = 0; i < A.n; ++i) T[i].set(t * block + 1 + i, t * block, 1);
  }
  return AModule(A, d, std::move(T), std::move(marks));
}

AModule presentation(const Algebra& A, std::size_t g, std::size_t N,
                     const std::vector<FpMatrix>& L) {
  if (L.size() != g) throw std::invalid_argument("need one socle map per generator");
  const std::size_t d = g + N;
  std::vector<FpMatrix> T(A.n, FpMatrix(A.p, d, d));
  for (std::size_t t = 0; t < g; ++t) {
    if (L[t].rows() != N || L[t].cols() != A.n || L[t].p() != A.p)
      throw std::invalid_argument("socle map must be N x n over F_p");
    for (u32 i = 0; i < A.n; ++i)
      for (std::size_t rr = 0; rr < N; ++rr) T[i].set(g + rr, t, L[t](rr, i));
  }
  std::vector<std::size_t> marks(g);
  for (std::size_t t = 0; t < g; ++t) marks[t] = t;
  return AModule(A, d, std::move(T), std::move(marks));
}

Subspace ideal_image(const Ideal& I, const AModule& M, const Subspace& U) {
  if (U.ambient() != M.dim() || U.p() != M.p())
    throw std::invalid_argument("subspace does not live in the module");
  switch (I.kind()) {
    case Ideal::Kind::Zero:
      return Subspace(M.p(), M.dim());
    case Ideal::Kind::Whole: {
      Subspace out = U;
      for (const auto& t : M.action()) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < U.rank(); ++r) rows.push_back(t.apply(U.basis().row(r)));
        out = sum(out, Subspace::span(M.p(), M.dim(), rows));
      }
      return out;
    }
    case Ideal::Kind::SocSub: {
      const Subspace& w = I.socle_part();
      if (w.ambient() != M.n()) throw std::invalid_argument("ideal socle part does not live in V");
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < w.rank(); ++k) {
        Vec wk = w.basis().row(k);
        for (std::size_t r = 0; r < U.rank(); ++r) rows.push_back(M.act(wk, U.basis().row(r)));
      }
      return Subspace::span(M.p(), M.dim(), rows);
    }
  }
  throw std::logic_error("unreachable");
}

Subspace ideal_image_full(const Ideal& I, const AModule& M) {
  return ideal_image(I, M, Subspace::full(M.p(), M.dim()));
}

Subspace annihilator(const AModule& M, const Ideal& I) {
  switch (I.kind()) {
    case Ideal::Kind::Zero:
      return Subspace::full(M.p(), M.dim());
    case Ideal::Kind::Whole: {
      // x with x = 0 and T_i x = 0: zero unless d = 0
      return Subspace(M.p(), M.dim());
    }
    case Ideal::Kind::SocSub: {
      Subspace out = Subspace::full(M.p(), M.dim());
      const Subspace& w = I.socle_part();
      for (std::size_t k = 0; k < w.rank(); ++k) {
        FpMatrix tw(M.p(), M.dim(), M.dim());
        Vec wk = w.basis().row(k);
        for (std::size_t i = 0; i < M.n(); ++i)
          if (wk[i] != 0) tw = tw + M.action(i).scaled(wk[i]);
        out = intersect(out, kernel(tw));
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Vec> projective_reps(const Subspace& w) {
  // coefficient tuples over the basis with first nonzero coefficient = 1
  std::vector<Vec> out;
  const u32 p = w.p();
  const std::size_t r = w.rank();
  for (std::size_t lead = 0; lead < r; ++lead) {
    u64 tail = checked_pow(p, r - lead - 1);
    for (u64 idx = 0; idx < tail; ++idx) {
      Vec coeff(r, 0);
      coeff[lead] = 1;
      u64 rest = idx;
      for (std::size_t k = r; k-- > lead + 1;) {
        coeff[k] = u32(rest % p);
        rest /= p;
      }
      Vec v(w.ambient(), 0);
      for (std::size_t k = 0; k < r; ++k)
        if (coeff[k] != 0)
          for (std::size_t c = 0; c < w.ambient(); ++c)
            v[c] = (v[c] + u64(coeff[k]) * w.basis()(k, c)) % p;
      out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

FpMatrix socle_action(const AModule& M, std::span<const u32> w) {
  FpMatrix tw(M.p(), M.dim(), M.dim());
  for (std::size_t i = 0; i < M.n(); ++i)
    if (w[i] != 0) tw = tw + M.action(i).scaled(w[i]);
  return tw;
}

} // namespace

bool in_decomposition_domain(const AModule& M, const Ideal& I) {
  if (I.is_zero_ideal()) return M.dim() == 0; // IM = {0}, ann = M
  if (I.kind() == Ideal::Kind::Whole) return M.dim() == 0;
  const Subspace im = ideal_image_full(I, M);
  if (annihilator(M, I) != im) return false;
  for (const Vec& w : projective_reps(I.socle_part()))
    if (!im.contains(kernel(socle_action(M, w)))) return false;
  return true;
}

std::size_t goldie_dim(const AModule& M) {
  return annihilator(M, Ideal::radical(M.algebra())).rank();
}

Submodule cyclic(const AModule& M, std::span<const u32> x) {
  if (is_zero_vec(x)) throw std::invalid_argument("cyclic submodule of zero is not a vertex");
  std::vector<Vec> rows;
  rows.emplace_back(x.begin(), x.end());
  for (const auto& t : M.action()) rows.push_back(t.apply(x));
  return Submodule{Subspace::span(M.p(), M.dim(), rows)};
}

AModule direct_sum(const AModule& a, const AModule& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("algebra mismatch in direct sum");
  const std::size_t d = a.dim() + b.dim();
  std::vector<FpMatrix> T(a.n(), FpMatrix(a.p(), d, d));
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) T[i].set(r, c, a.action(i)(r, c));
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) T[i].set(a.dim() + r, a.dim() + c, b.action(i)(r, c));
  }
  std::vector<std::size_t> marks = a.generator_marks();
  for (auto m : b.generator_marks()) marks.push_back(a.dim() + m);
  return AModule(a.algebra(), d, std::move(T), std::move(marks));
}

QuotientResult quotient_with_map(const AModule& M, const Submodule& K) {
  if (!M.is_action_closed(K.space))
    throw std::invalid_argument("quotient by a subspace that is not action closed");
  const std::size_t d = M.dim();
  const Subspace& ks = K.space;
  std::vector<bool> is_pivot(d, false);
  for (std::size_t i = 0; i < ks.rank(); ++i) {
    std::size_t c = 0;
    while (c < d && ks.basis()(i, c) == 0) ++c;
    is_pivot[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  const std::size_t q = keep.size();

  // projection: reduce mod K, then read off the non-pivot coordinates
  FpMatrix proj(M.p(), q, d);
  for (std::size_t c = 0; c < d; ++c) {
    Vec e(d, 0);
    e[c] = 1;
    Vec r = ks.reduce(e);
    for (std::size_t k = 0; k < q; ++k) proj.set(k, c, r[keep[k]]);
  }
  std::vector<FpMatrix> T(M.n(), FpMatrix(M.p(), q, q));
  for (std::size_t i = 0; i < M.n(); ++i) {
    for (std::size_t k = 0; k < q; ++k) {
      Vec e(d, 0);
      e[keep[k]] = 1;
      Vec img = proj.apply(M.action(i).apply(e));
      for (std::size_t r = 0; r < q; ++r) T[i].set(r, k, img[r]);
    }
  }
  // marks survive only when the marked coordinate is kept
  std::vector<std::size_t> marks;
  for (auto m : M.generator_marks()) {
    auto it = std::find(keep.begin(), keep.end(), m);
    if (it != keep.end()) marks.push_back(std::size_t(it - keep.begin()));
  }
  return QuotientResult{AModule(M.algebra(), q, std::move(T), std::move(marks)), std::move(proj)};
}

AModule quotient(const AModule& M, const Submodule& K) { return quotient_with_map(M, K).module; }

bool is_pure(const AModule& M, const Submodule& N, const Ideal& I) {
  Subspace in = ideal_image(I, M, N.space);
  Subspace im_cap_n = intersect(ideal_image_full(I, M), N.space);
  return in == im_cap_n;
}

bool pointwise_image_meets_trivially(const AModule& M, const Ideal& I, const Subspace& N) {
  if (I.is_zero_ideal()) return true;
  if (I.kind() == Ideal::Kind::Whole) {
    // I*M = M, so only the zero submodule meets it trivially
    return N.rank() == 0;
  }
  for (const Vec& w : projective_reps(I.socle_part())) {
    FpMatrix tw = socle_action(M, w);
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < M.dim(); ++c) {
      Vec e(M.dim(), 0);
      e[c] = 1;
      cols.push_back(tw.apply(e));
    }
    Subspace colspace = Subspace::span(M.p(), M.dim(), cols);
    if (intersect(colspace, N).rank() != 0) return false;
  }
  return true;
}

RestrictResult restrict_to(const AModule& M, const Submodule& N) {
  if (!M.is_action_closed(N.space))
    throw std::invalid_argument("restriction to a subspace that is not action closed");
  const std::size_t r = N.space.rank();
  FpMatrix emb(M.p(), M.dim(), r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t c = 0; c < M.dim(); ++c) emb.set(c, k, N.space.basis()(k, c));
  std::vector<FpMatrix> T(M.n(), FpMatrix(M.p(), r, r));
  for (std::size_t i = 0; i < M.n(); ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      Vec img = M.action(i).apply(N.space.basis().row(k));
      // express img in the RREF basis: coefficients are read off at pivots
      Vec coeffs(r, 0);
      Vec rem = img;
      for (std::size_t row = 0; row < r; ++row) {
        std::size_t pc = 0;
        while (pc < M.dim() && N.space.basis()(row, pc) == 0) ++pc;
        coeffs[row] = rem[pc];
        if (rem[pc] != 0)
          rem = sub_vec(rem, scale_vec(N.space.basis().row(row), rem[pc], M.p()), M.p());
      }
      if (!is_zero_vec(rem)) throw std::logic_error("image escaped an action-closed subspace");
      for (std::size_t row = 0; row < r; ++row) T[i].set(row, k, coeffs[row]);
    }
  }
  return RestrictResult{AModule(M.algebra(), r, std::move(T)), std::move(emb)};
}

} // namespace cycmod
