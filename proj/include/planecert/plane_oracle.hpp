// Ground truth for the linear system: genuine affine planes of prime-power
// order, the permutation encoding of their lines, brute-force difference
// counting, and the character scalar-product check that must come out
// nonnegative for any subset of S_d.
#pragma once

#include <planecert/character_table.hpp>
#include <planecert/finite_field.hpp>
#include <planecert/permutation.hpp>
#include <planecert/theta.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace planecert {

struct AffineLineSet {
    int d = 0;                       // plane order
    std::vector<Permutation> lines;  // exactly (d-1)d lines, m ascending then b ascending
};

// Lines x -> m*x + b over GF(q) for all m != 0, b. Both line-set invariants
// (pairwise differences have <= 1 fixed point; lines group into d-1 parallel
// classes of d with fixed-point-free differences inside a class) are
// verified before returning. q in {2,3,4,5,7,8,9}.
AffineLineSet build_plane(int q);

struct SubsetTheta {
    ThetaVector theta;
    bool has_duplicates = false;  // duplicate elements are counted, but flagged
};

// Exact counts over all |B|^2 ordered pairs, bucketed by cycle type.
// All elements must share one degree (std::domain_error otherwise).
SubsetTheta theta_of_subset(const std::vector<Permutation>& B);

// For each irreducible chi, the full class sum  sum_C chi|_C theta|_C.
// Every value is >= 0 whenever theta comes from an actual subset.
std::vector<std::pair<Partition, Rational>> proposition_check(const ThetaVector& theta,
                                                              const CharacterTable& t);

// n distinct permutations of degree d, uniformly sampled, deterministic in
// the seed. Requires n <= d! (std::domain_error otherwise).
std::vector<Permutation> random_subset(int d, std::size_t n, std::uint64_t seed);

}  // namespace planecert
