#pragma once

// Named validation suites shared by the CLI and the acceptance tests: seeded
// random-instance checks of the closure, restriction, functoriality, and
// approximation lemmas, the two counterexample reproductions, and the
// oracle-vs-bound suite. A failing suite carries a replayable counterexample
// description in its detail string.

#include <random>

#include "cycmod/serialize.hpp"

namespace cycmod {

struct SuiteResult {
  bool pass = false;
  std::string detail;
};

// -- seeded generators ------------------------------------------------------

u64 rand_below(std::mt19937_64& rng, u64 k); // uniform-ish, portable
Vec random_nonzero_vec(std::mt19937_64& rng, u32 p, std::size_t d);

// Random presentation module; not necessarily a member of D(Soc).
AModule random_presentation_module(std::mt19937_64& rng, u32 p, u32 n, std::size_t max_d);

// Rejection-sampled member of D(Soc(A)) with d <= max(max_d, n+1); membership
// forces the socle block to dominate the generators, so N >= g is baked in.
AModule random_module_in_domain(std::mt19937_64& rng, u32 p, u32 n, std::size_t max_d);

// Random small triple over a small module (vertex counts stay tiny).
CTriple random_small_triple(std::mt19937_64& rng, const Algebra& A);
CTriple random_small_triple(std::mt19937_64& rng, u32 p);

// -- named checks -----------------------------------------------------------

SuiteResult check_lemma24(u64 seed, std::size_t trials, const Budgets& budgets);
SuiteResult check_cor28(u64 seed, std::size_t trials, const Budgets& budgets);
SuiteResult check_lemma210(u64 seed, std::size_t trials, const Budgets& budgets);
SuiteResult check_lemma32(u64 seed, std::size_t trials, const Budgets& budgets);
SuiteResult check_lemma53(u64 seed, std::size_t trials);
SuiteResult check_prop54(u64 seed, std::size_t trials);
SuiteResult check_prop55(u64 seed, std::size_t trials);
SuiteResult check_63chain(const Budgets& budgets);
SuiteResult check_lemma71(u64 seed, std::size_t trials);
SuiteResult check_lemma72(u64 seed, std::size_t trials);
SuiteResult check_z_adjacency_oracle(u64 seed, std::size_t trials);
SuiteResult check_product_counterexample();
SuiteResult check_equalizer_counterexample();

// Random-module bound suite (ks-decompositions never beat cdim/fcdim) plus
// oracle internal soundness on every decomposition it produces.
SuiteResult oracle_check(u64 seed, std::size_t trials, const Budgets& budgets);

// Dispatcher for the CLI lemma-check subcommand.
SuiteResult run_named_check(const std::string& name, u64 seed, std::size_t trials,
                            const Budgets& budgets);
std::vector<std::string> named_checks();

} // namespace cycmod
