// The difference-counting class function theta: for a subset B of S_d,
// theta[C] is the number of ordered pairs (j,m) whose difference
// b_j^{-1} b_m lies in the conjugacy class C. Entries are kept as exact
// rationals so that LP witnesses and brute-force counts share one type.
#pragma once

#include <planecert/partition.hpp>
#include <planecert/rational.hpp>

#include <map>

namespace planecert {

class ThetaVector {
public:
    ThetaVector() = default;
    explicit ThetaVector(int d) : d_(d) {}

    int d() const { return d_; }

    // Value on the class of the given cycle type; absent entries are zero.
    Rational at(const Partition& cycle_type) const;
    void set(const Partition& cycle_type, Rational value);
    void add(const Partition& cycle_type, const Rational& delta);

    Rational identity_entry() const { return at(Partition::identity_class(d_)); }
    Rational total() const;

    // Nonzero entries in canonical class order.
    const std::map<Partition, Rational, PartitionOrder>& entries() const { return entries_; }

private:
    int d_ = 0;
    std::map<Partition, Rational, PartitionOrder> entries_;
};

}  // namespace planecert
