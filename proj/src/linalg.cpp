#include "cycmod/linalg.hpp"

#include <algorithm>
#include <cstring>

namespace cycmod {

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u32 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

u32 inv_mod(u32 a, u32 p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inverse of zero");
  // p is small and prime; brute force is exact and fast enough.
  for (u32 x = 1; x < p; ++x)
    if ((u64(a) * x) % p == 1) return x;
  throw std::invalid_argument("no inverse: modulus not prime");
}

Vec add_vec(std::span<const u32> a, std::span<const u32> b, u32 p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

Vec sub_vec(std::span<const u32> a, std::span<const u32> b, u32 p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + p - b[i]) % p;
  return r;
}

Vec scale_vec(std::span<const u32> a, u32 c, u32 p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = u32((u64(a[i]) * c) % p);
  return r;
}

bool is_zero_vec(std::span<const u32> a) {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

u64 checked_pow(u64 p, std::size_t e) {
  u64 r = 1;
  const u64 cap = u64(1) << 63;
  for (std::size_t i = 0; i < e; ++i) {
    if (r >= cap / p) return cap;
    r *= p;
  }
  return r;
}

std::optional<FpMatrix> try_inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.p(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
    aug.set(i, n + i, 1);
  }
  auto [r, rank] = rref(aug);
  if (rank != n) return std::nullopt;
  // rank n on the left block means the left half reduced to the identity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j) != (i == j ? 1u : 0u)) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r(i, n + j));
  return inv;
}

FpMatrix::FpMatrix(u32 p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

FpMatrix::FpMatrix(u32 p, std::size_t rows, std::size_t cols, std::vector<u32> entries)
    : p_(p), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  if (e_.size() != rows * cols) throw std::invalid_argument("entry count does not match dimensions");
  for (auto& x : e_) x %= p_;
}

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(u32 p, std::size_t cols, const std::vector<Vec>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Vec FpMatrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

bool FpMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](u32 x) { return x == 0; });
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (p_ != rhs.p_) throw std::invalid_argument("field mismatch in matrix product");
  if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in matrix product");
  FpMatrix out(p_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      u32 a = e_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        u64 v = out.e_[i * rhs.cols_ + j] + u64(a) * rhs.e_[k * rhs.cols_ + j];
        out.e_[i * rhs.cols_ + j] = u32(v % p_);
      }
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("shape mismatch in matrix sum");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = (out.e_[i] + rhs.e_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (p_ != rhs.p_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("shape mismatch in matrix difference");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = (out.e_[i] + p_ - rhs.e_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::scaled(u32 c) const {
  FpMatrix out = *this;
  c %= p_;
  for (auto& x : out.e_) x = u32((u64(x) * c) % p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

Vec FpMatrix::apply(std::span<const u32> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += u64(e_[i * cols_ + j]) * x[j];
    out[i] = u32(acc % p_);
  }
  return out;
}

std::pair<FpMatrix, std::size_t> rref(const FpMatrix& m) {
  FpMatrix a = m;
  const u32 p = a.p();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < cols; ++c) {
        u32 t = a(rank, c);
        a.set(rank, c, a(pivot, c));
        a.set(pivot, c, t);
      }
    u32 inv = inv_mod(a(rank, col), p);
    for (std::size_t c = col; c < cols; ++c) a.set(rank, c, u32((u64(a(rank, c)) * inv) % p));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      u32 f = a(r, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        a.set(r, c, (a(r, c) + p - u32((u64(f) * a(rank, c)) % p)) % p);
    }
    ++rank;
  }
  return {a, rank};
}

Subspace::Subspace(u32 p, std::size_t ambient)
    : p_(p), ambient_(ambient), basis_(p, 0, ambient) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

Subspace Subspace::span(u32 p, std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("vector length differs from ambient dimension");
  return from_basis(FpMatrix::from_rows(p, ambient, vectors));
}

Subspace Subspace::full(u32 p, std::size_t ambient) {
  return from_basis(FpMatrix::identity(p, ambient));
}

Subspace Subspace::from_basis(FpMatrix rows) {
  auto [r, rank] = rref(rows);
  Subspace s(r.p(), r.cols());
  FpMatrix b(r.p(), rank, r.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) b.set(i, j, r(i, j));
  s.basis_ = std::move(b);
  return s;
}

Vec Subspace::reduce(std::span<const u32> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length differs from ambient dimension");
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // pivot column of row i = first nonzero entry (unit by canonicity)
    std::size_t pc = 0;
    while (pc < ambient_ && basis_(i, pc) == 0) ++pc;
    if (pc == ambient_) continue;
    u32 f = r[pc];
    if (f == 0) continue;
    for (std::size_t c = pc; c < ambient_; ++c)
      r[c] = (r[c] + p_ - u32((u64(f) * basis_(i, c)) % p_)) % p_;
  }
  return r;
}

bool Subspace::contains(std::span<const u32> v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (p_ != other.p_ || ambient_ != other.ambient_)
    throw std::invalid_argument("ambient mismatch in subspace containment");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(16 + basis_.entries().size());
  k += std::to_string(ambient_);
  k += ':';
  k += std::to_string(rank());
  k += ':';
  for (u32 e : basis_.entries()) k += char('0' + (e % 128));
  return k;
}

Subspace kernel(const FpMatrix& m) {
  auto [r, rank] = rref(m);
  const u32 p = m.p();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (c < cols && r(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = (p - r(i, fc)) % p;
    basis.push_back(std::move(v));
  }
  return Subspace::span(p, cols, basis);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.p() != w.p() || u.ambient() != w.ambient())
    throw std::invalid_argument("ambient mismatch in subspace sum");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < u.rank(); ++i) rows.push_back(u.basis().row(i));
  for (std::size_t i = 0; i < w.rank(); ++i) rows.push_back(w.basis().row(i));
  return Subspace::span(u.p(), u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.p() != w.p() || u.ambient() != w.ambient())
    throw std::invalid_argument("ambient mismatch in subspace intersection");
  const u32 p = u.p();
  const std::size_t ru = u.rank(), rw = w.rank();
  if (ru == 0 || rw == 0) return Subspace(p, u.ambient());
  // Solve x*Bu - y*Bw = 0; the x-part spans the intersection.
  FpMatrix sys(p, u.ambient(), ru + rw);
  for (std::size_t i = 0; i < ru; ++i)
    for (std::size_t c = 0; c < u.ambient(); ++c) sys.set(c, i, u.basis()(i, c));
  for (std::size_t i = 0; i < rw; ++i)
    for (std::size_t c = 0; c < w.ambient(); ++c) sys.set(c, ru + i, (p - w.basis()(i, c)) % p);
  Subspace null = kernel(sys);
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < null.rank(); ++i) {
    Vec coeffs = null.basis().row(i);
    Vec v(u.ambient(), 0);
    for (std::size_t k = 0; k < ru; ++k)
      if (coeffs[k] != 0)
        for (std::size_t c = 0; c < u.ambient(); ++c)
          v[c] = (v[c] + u64(coeffs[k]) * u.basis()(k, c)) % p;
    vecs.push_back(std::move(v));
  }
  return Subspace::span(p, u.ambient(), vecs);
}

bool subspace_eq(const Subspace& u, const Subspace& w) { return u == w; }

std::vector<Vec> enumerate(const Subspace& u, u64 budget) {
  u64 count = checked_pow(u.p(), u.rank());
  if (count > budget) throw BudgetExceeded(count, budget);
  const u32 p = u.p();
  std::vector<Vec> out;
  out.reserve(count);
  Vec coeff(u.rank(), 0);
  Vec current(u.ambient(), 0);
  out.push_back(current);
  // multi-radix counter over basis coefficients, lexicographic order
  for (u64 step = 1; step < count; ++step) {
    std::size_t pos = u.rank();
    while (pos > 0) {
      --pos;
      coeff[pos] = (coeff[pos] + 1) % p;
      if (coeff[pos] != 0) break;
    }
    Vec v(u.ambient(), 0);
    for (std::size_t k = 0; k < u.rank(); ++k)
      if (coeff[k] != 0)
        for (std::size_t c = 0; c < u.ambient(); ++c)
          v[c] = (v[c] + u64(coeff[k]) * u.basis()(k, c)) % p;
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace cycmod
