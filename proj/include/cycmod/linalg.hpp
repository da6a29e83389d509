#pragma once

// Exact linear algebra over prime fields F_p: dense residue matrices and
// canonically represented subspaces (reduced row echelon bases). Everything
// here is immutable after construction and safe to share across threads.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycmod/errors.hpp"

namespace cycmod {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Vec = std::vector<u32>; // residues in [0, p)

bool is_prime(u32 p);

// Dense matrix over F_p, row-major. Entries are always reduced mod p.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(u32 p, std::size_t rows, std::size_t cols); // zero matrix
  FpMatrix(u32 p, std::size_t rows, std::size_t cols, std::vector<u32> entries);

  static FpMatrix identity(u32 p, std::size_t n);
  static FpMatrix from_rows(u32 p, std::size_t cols, const std::vector<Vec>& rows);

  u32 p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<u32>& entries() const { return e_; }

  u32 operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, u32 v) { e_[r * cols_ + c] = v % p_; }

  Vec row(std::size_t r) const;
  bool is_zero() const;

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(u32 c) const;
  FpMatrix transpose() const;
  Vec apply(std::span<const u32> x) const; // this * x

  bool operator==(const FpMatrix&) const = default;

private:
  u32 p_ = 2;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u32> e_;
};

// Canonical reduced row echelon form (unit pivots, zeros above and below,
// increasing pivot columns, zero rows pushed to the bottom). Second component
// is the rank.
std::pair<FpMatrix, std::size_t> rref(const FpMatrix& m);

// Subspace of F_p^ambient held as its canonical RREF basis; two subspaces are
// equal as sets iff their bases are entrywise equal, so operator== is set
// equality and key() is a hashable canonical form.
class Subspace {
public:
  Subspace() = default;
  Subspace(u32 p, std::size_t ambient); // zero subspace

  static Subspace span(u32 p, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(u32 p, std::size_t ambient);
  static Subspace from_basis(FpMatrix rows); // any spanning rows; canonicalized

  u32 p() const { return p_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; } // rank x ambient, canonical

  bool contains(std::span<const u32> v) const;
  Vec reduce(std::span<const u32> v) const; // residue of v modulo this subspace
  bool contains(const Subspace& other) const;
  bool is_zero() const { return rank() == 0; }

  std::string key() const; // canonical bytes: ambient, rank, basis entries

  bool operator==(const Subspace&) const = default;

private:
  u32 p_ = 2;
  std::size_t ambient_ = 0;
  FpMatrix basis_; // canonical, no zero rows
};

Subspace kernel(const FpMatrix& m); // {x : m x = 0}
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
bool subspace_eq(const Subspace& u, const Subspace& w);

// All p^rank vectors of U, each exactly once, in deterministic order.
// Throws BudgetExceeded when p^rank > budget.
std::vector<Vec> enumerate(const Subspace& u, u64 budget);

// p^e with saturation at 2^63 (enough to compare against any budget).
u64 checked_pow(u64 p, std::size_t e);

// Inverse of a square matrix, or nullopt when singular.
std::optional<FpMatrix> try_inverse(const FpMatrix& m);

u32 inv_mod(u32 a, u32 p);
Vec add_vec(std::span<const u32> a, std::span<const u32> b, u32 p);
Vec sub_vec(std::span<const u32> a, std::span<const u32> b, u32 p);
Vec scale_vec(std::span<const u32> a, u32 c, u32 p);
bool is_zero_vec(std::span<const u32> a);

} // namespace cycmod
