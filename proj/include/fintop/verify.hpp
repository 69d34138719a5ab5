#pragma once

#include "fintop/contraction.hpp"
#include "fintop/homology.hpp"
#include "fintop/point_map.hpp"
#include "fintop/poset.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fintop {

// Betti bookkeeping for a decomposed monotone surjection: per degree r the
// residual b_r(source) - b_r(target) - sum_i b_{r+1}(step cokernel i) is
// recorded; a passing report has all residuals zero.
struct BettiReport {
    std::vector<long> source_betti;
    std::vector<long> target_betti;
    std::vector<std::pair<std::string, std::string>> step_edges; // (upper, lower) labels
    std::vector<std::vector<long>> step_betti;                   // per-step cokernel
    std::vector<std::vector<std::vector<Integer>>> step_torsion; // per-step cokernel torsion
    std::vector<std::vector<long>> cumulative_betti;             // cumulative cokernel
    std::vector<long> residuals;

    bool passing() const;
};

BettiReport betti_report_for_trace(const ContractionTrace& t);

// pre: f surjective, continuous and monotone (NotMonotone propagates).
BettiReport betti_decomposition(const PointMap& f);

struct LedgerEntry {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckLedger {
    std::vector<LedgerEntry> entries;

    void add(std::string name, bool pass, std::string detail = "");
    bool all_passed() const;
    const LedgerEntry* find(std::string_view name) const;
};

// Runs every per-trace theorem check and records one ledger entry each:
//   kernel_acyclic          every prefix kernel complex has zero homology
//   step_rank_identity      b_r(before) = b_r(after) + b_{r+1}(step cokernel)
//   cokernel_degree0_empty  step cokernels have empty degree-0 basis
//   cumulative_additivity   cumulative cokernel Betti adds up stepwise
//   end_to_end_betti        b_r(start) = b_r(target) + b_{r+1}(full cokernel)
//   hdim_nonincrease        homological dimension never grows along the trace
//   exactness_ranks         per-degree module ranks of kernel/image/cokernel
//   torsion_observed        informational; lists torsion seen along the trace
CheckLedger verify_trace(const ContractionTrace& t);

// Runs factorize and checks: composite equals f pointwise, residual fibers
// are antichains, the contraction part is monotone, and its Betti residuals
// vanish (the rank witness that it is surjective on homology).
CheckLedger factorization_report(const PointMap& f);

// All labeled posets on n elements (reflexive antisymmetric transitive
// relation tables), labels "0".."n-1". n up to kMaxSweepElements.
inline constexpr int kMaxSweepElements = 6;
std::vector<FinitePoset> enumerate_posets(int n);

struct SweepFailure {
    int n = 0;
    std::string poset; // relation list, for reproduction
    std::string check;
    std::string detail;
};

struct SweepSummary {
    int max_n = 0;
    std::vector<long> posets_per_n; // index 0 = n=1
    long posets = 0;
    long edges = 0;
    long checks_run = 0;
    std::vector<std::string> checks;
    std::vector<SweepFailure> failures;

    bool all_passed() const { return failures.empty(); }
};

// Per-edge checks: kernel_acyclic, cokernel_degree0, step_rank_identity,
// hdim_nonincrease, beat_edge_quasi_iso (the default set), kappa_monotone,
// preimage_formulas, star_surjective. Per-poset checks: core_homology,
// gmin_implies_min, greedy_independence, random_trace.
std::vector<std::string> default_sweep_checks();
std::vector<std::string> all_sweep_checks();

struct SweepOptions {
    int max_n = 4;
    std::vector<std::string> checks = default_sweep_checks();
    std::uint64_t seed = 1;
    int jobs = 1;
};

SweepSummary sweep(const SweepOptions& options);

// Random DAG by lower-triangular coin flips, then transitive closure.
FinitePoset random_poset(int n, double edge_probability, std::mt19937_64& rng);

// Contract uniformly random Hasse edges down to a single point; requires a
// connected space. The final map is the identity on the end point.
ContractionTrace random_full_trace(const FinitePoset& X, std::mt19937_64& rng);

} // namespace fintop
