#pragma once

// Independent indecomposability oracle: compute the commutant of the action
// matrices, hunt for nontrivial idempotents (exhaustively when the algebra is
// small, by sampled stable powers otherwise), and split recursively along
// image/kernel pairs. Outcomes carry an explicit certainty level so callers
// can consume only certified answers.

#include <optional>
#include <random>

#include "cycmod/trivext.hpp"

namespace cycmod {

inline constexpr u64 kDefaultOracleBudget = u64(1) << 16;

struct EndAlgebra {
  std::vector<FpMatrix> basis; // d x d matrices spanning {X : X T_i = T_i X}
  std::size_t dim() const { return basis.size(); }
};

// Exact basis of the commutant; the identity always lies in the span.
EndAlgebra end_algebra(const AModule& M);

enum class OracleOutcome {
  DecomposableWitness,   // nontrivial idempotent in hand
  IndecomposableCertain, // exhaustive scan (or dim End = 1) found none
  Unresolved             // sampling exhausted without a witness
};

struct IdempotentSearch {
  OracleOutcome outcome;
  std::optional<FpMatrix> idempotent;
};

// For any element of a finite algebra some power is idempotent; returns the
// stable power e = phi^k with e^2 = e.
FpMatrix stable_idempotent_power(const FpMatrix& phi);

IdempotentSearch find_idempotent(const AModule& M, u64 budget, std::mt19937_64& rng,
                                 std::size_t samples = 256);

struct DecompLeaf {
  Subspace part;  // summand inside the parent coordinates
  AModule module; // restricted action
  bool certified; // leaf proven indecomposable
};

struct Decomposition {
  std::vector<DecompLeaf> summands;
  FpMatrix change_of_basis; // d x d, columns = summand bases in order
};

Decomposition ks_decompose(const AModule& M, u64 budget, std::mt19937_64& rng,
                           std::size_t samples = 256);

struct KsLength {
  std::size_t length; // number of leaves found
  bool certain;       // all leaves certified indecomposable
};

KsLength ks_length(const AModule& M, u64 budget, std::mt19937_64& rng,
                   std::size_t samples = 256);

} // namespace cycmod
