// Permutations of {0,...,d-1} with the group operations needed for
// difference counting: p acts by i -> images[i].
#pragma once

#include <planecert/partition.hpp>

#include <vector>

namespace planecert {

class Permutation {
public:
    Permutation() = default;

    // images must be a bijection on {0,...,d-1}; throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int d);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    int fixed_points() const;
    Partition cycle_type() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

// (p*q)(i) = p(q(i)); degrees must match (std::domain_error otherwise).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

// difference(p, q) = p^{-1} q, the "difference" between two lines.
Permutation difference(const Permutation& p, const Permutation& q);

}  // namespace planecert
