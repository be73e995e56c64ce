// Linear constraints on the difference-counting vector of a putative affine
// plane of order d, over the classes that can actually carry differences.
//
// A plane of order d yields (d-1)d permutations whose pairwise differences
// have at most one fixed point, so theta is supported on the identity plus
// the fixed-point-free classes (C0) and the one-fixed-point classes (C1).
// The identity value (d-1)d is held as a fixed constant rather than a
// variable. Variables are ordered C0 group then C1 group, canonically
// within each group (the d=6 system then matches the hand layout with its
// C0 block first).
#pragma once

#include <planecert/character_table.hpp>
#include <planecert/theta.hpp>

#include <string>
#include <vector>

namespace planecert {

enum class InequalityKind {
    variable_nonneg,  // theta_C >= 0, implied by LP variable bounds
    character,        // chi(e)(d-1)d + sum_C chi|_C theta_C >= 0
};

struct EqualityRow {
    std::string label;             // "E2", "E3"
    std::vector<Rational> coeffs;  // aligned with DelsarteSystem::variables
    Rational rhs;
};

struct InequalityRow {
    std::string label;
    InequalityKind kind = InequalityKind::character;
    std::vector<Rational> coeffs;
    Rational rhs;  // row is coeffs . theta >= rhs
};

struct DelsarteSystem {
    int d = 0;
    Rational theta_identity;           // (d-1)d, fixed
    std::vector<Partition> variables;  // C0 classes then C1 classes
    std::size_t num_c0 = 0;            // variables[0..num_c0) are fixed-point-free
    std::vector<EqualityRow> equalities;
    std::vector<InequalityRow> inequalities;
    bool even_constraints = false;  // evenness side-condition, checked on solutions
    CharacterTable table;           // full table the character rows were built from

    std::size_t variable_index(const Partition& cls) const;
};

// Identity class first, then C0, then C1, canonically ordered within each
// group. Requires d >= 2.
std::vector<Partition> supported_classes(int d);

// Equalities: sum over C0 = (d-1)^2 d, sum over C1 = (d-2)(d-1)d^2.
// Inequalities: one nonnegativity row per variable, then one row per
// irreducible character (all p(d) of them, redundant ones included).
DelsarteSystem build_system(int d, bool even_constraints = false);

struct Violation {
    enum class Kind { support, equality, inequality, evenness };
    Kind kind = Kind::equality;
    std::string label;
    Rational residual;  // equality: lhs-rhs; inequality: negative slack; support/evenness: the entry
};

// Every constraint the given theta violates, with exact residuals; empty
// means feasible. Character rows are evaluated as full class sums over
// theta's own entries, so a theta with out-of-support mass is judged on
// its actual values. Evenness is reported only when the system was built
// with even_constraints.
std::vector<Violation> evaluate_theta(const ThetaVector& theta, const DelsarteSystem& s);

// Human-readable LP rendering of the system, for external cross-checks.
std::string to_lp_text(const DelsarteSystem& s);

}  // namespace planecert
