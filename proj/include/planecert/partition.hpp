// Integer partitions and conjugacy-class data of the symmetric group S_d.
//
// Partitions double as the index set for both conjugacy classes (cycle
// types) and irreducible characters, so a single canonical order is fixed
// here and used by every matrix in the library: reverse-lexicographic,
// i.e. part vectors compared lexicographically with the larger vector
// first. For d = 6 this lists [6], [5,1], [4,2], [4,1,1], [3,3], ...,
// [1,1,1,1,1,1].
#pragma once

#include <planecert/rational.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace planecert {

class Partition {
public:
    Partition() = default;

    // parts must be weakly decreasing and positive; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    static Partition identity_class(int d);  // [1,1,...,1]
    static Partition single_row(int d);      // [d]

    const std::vector<int>& parts() const { return parts_; }
    int d() const { return d_; }
    std::size_t num_parts() const { return parts_.size(); }

    // Number of parts equal to 1 (= fixed points of the cycle type).
    int ones() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;  // e.g. "[3,2,1]"

private:
    std::vector<int> parts_;
    int d_ = 0;
};

// Canonical order: a precedes b iff a's part vector is lexicographically
// larger ([d] first, [1^d] last).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return a.parts() > b.parts();
    }
};

struct ConjugacyClassInfo {
    Partition cycle_type;
    Integer size;      // d! / prod_i i^{m_i} m_i!
    int fixed_points;  // multiplicity of part 1
    int sign;          // (-1)^(d - number of parts)
};

// All partitions of d exactly once, in the canonical order above.
// 1 <= d <= 25; throws std::domain_error outside that range.
std::vector<Partition> enumerate_partitions(int d);

ConjugacyClassInfo class_info(const Partition& cycle_type);

}  // namespace planecert
