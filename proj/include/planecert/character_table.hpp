// Exact irreducible character values of S_d.
//
// Values come from the Murnaghan-Nakayama border-strip recursion; the
// validators below (orthogonality relations, hook length formula, the
// regular-representation identity) are computed by independent routes and
// act as the correctness oracle for the recursion.
#pragma once

#include <planecert/partition.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace planecert {

struct CharacterTable {
    int d = 0;
    std::vector<Partition> irreps;   // canonical order, one per partition of d
    std::vector<Partition> classes;  // canonical order
    // values[mu][lambda]: chi_mu evaluated on the class of cycle type lambda.
    // All S_d characters are integral; |chi| <= dim keeps these in int64
    // range for every supported d.
    std::vector<std::vector<std::int64_t>> values;

    std::size_t irrep_index(const Partition& mu) const;
    std::size_t class_index(const Partition& lambda) const;
    std::int64_t value(const Partition& mu, const Partition& lambda) const;
};

// chi_mu on the class of cycle type lambda; mu and lambda must partition the
// same d (std::domain_error otherwise). Memoized; the cache is shared across
// queries and safe under concurrent use.
std::int64_t mn_character(const Partition& mu, const Partition& lambda);

// Full p(d) x p(d) table, 1 <= d <= 14. Validated before being returned;
// a validation failure signals a bug and throws std::logic_error.
CharacterTable character_table(int d);

// Dimension of the irreducible representation indexed by mu: d! divided by
// the product of the hook lengths of mu's Young diagram.
Integer irrep_dimension(const Partition& mu);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample on failure
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
};

// Row orthogonality, column orthogonality, identity column vs hook lengths,
// sum of squared dimensions = d!. Failures are reported, never thrown.
ValidationReport validate_table(const CharacterTable& t);

// CSV: first row = class partitions, first column = irrep partitions.
std::string to_csv(const CharacterTable& t);

}  // namespace planecert
