// Upgrades LP solutions into nonexistence certificates where possible.
//
// Two refuters run on a candidate difference-count vector: a parity
// argument (the odd-difference total must be realizable as 2k(n-k) for
// some split k, and when all fixed-point-free support classes are even
// the split must consist of whole parallel classes), and the evenness /
// integrality side-conditions that any genuine difference count obeys.
#pragma once

#include <planecert/feasibility.hpp>
#include <planecert/theta.hpp>

#include <optional>
#include <string>
#include <vector>

namespace planecert {

struct RefutationReason {
    enum class Kind {
        none,
        lp_infeasible,        // the linear system itself is empty
        parity_split,         // no k in [0,n] gives 2k(n-k) = N_odd
        parity_divisibility,  // no split is a union of parallel classes
        non_integral_entry,
        odd_entry,
    };
    Kind kind = Kind::none;
    Rational n_odd;                            // parity kinds
    std::vector<long> split_set;               // the k solving 2k(n-k) = N_odd
    std::optional<Partition> offending_class;  // evenness kinds
    Rational offending_value;
    std::string detail;
};

struct RefutationReport {
    enum class Outcome { refuted, inconclusive };
    int d = 0;
    Outcome outcome = Outcome::inconclusive;
    RefutationReason reason;
    std::optional<ThetaVector> theta_examined;
    std::optional<FeasibilityReport> feasibility;  // attached by certify
};

// Sum of theta over the negative-parity classes.
Rational odd_difference_count(const ThetaVector& theta);

// All integer k in [0,n] with 2k(n-k) = n_odd; empty when n_odd is not an
// integer or not attainable.
std::vector<long> sign_split_solutions(long n, const Rational& n_odd);

// theta must satisfy the support condition and equalities of the order-d
// system (std::domain_error otherwise). apply_divisibility_step disables
// the parallel-class divisibility step for monotonicity testing.
RefutationReport parity_refute(const ThetaVector& theta, int d, bool apply_divisibility_step = true);

// Refuted iff some non-identity entry is non-integral or odd. Any genuine
// difference count is even everywhere off the identity, because the pairs
// (j,m) and (m,j) contribute inverse differences in the same class.
RefutationReport integrality_evenness_refute(const ThetaVector& theta);

// Full pipeline: build the system, decide feasibility, compute bounds; on a
// unique solution run both refuters. 2 <= d <= 14.
RefutationReport certify(int d);
RefutationReport certify(const DelsarteSystem& s);

// Step-by-step certificate rendering with the restricted character table
// laid out classes-as-columns and theta as the final row.
std::string render_transcript(const RefutationReport& report, const DelsarteSystem& s);

}  // namespace planecert
