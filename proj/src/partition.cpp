#include <planecert/partition.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace planecert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        d_ += parts_[i];
    }
}

Partition Partition::identity_class(int d) {
    return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

Partition Partition::single_row(int d) { return Partition({d}); }

int Partition::ones() const {
    int n = 0;
    for (int p : parts_)
        if (p == 1) ++n;
    return n;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

void emit(std::vector<int>& prefix, int remaining, int max_part, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit(prefix, remaining - p, p, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 1 || d > 25) throw std::domain_error("enumerate_partitions: d must be in [1,25]");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit(prefix, d, d, out);
    return out;
}

ConjugacyClassInfo class_info(const Partition& cycle_type) {
    const int d = cycle_type.d();
    // z = prod over part values i of i^{m_i} * m_i!, the centralizer order
    std::map<int, int> mult;
    for (int p : cycle_type.parts()) ++mult[p];
    Integer z = 1;
    for (auto [part, m] : mult) {
        for (int j = 0; j < m; ++j) z *= part;
        z *= factorial(static_cast<unsigned>(m));
    }
    ConjugacyClassInfo info;
    info.cycle_type = cycle_type;
    info.size = factorial(static_cast<unsigned>(d)) / z;
    info.fixed_points = cycle_type.ones();
    info.sign = (d - static_cast<int>(cycle_type.num_parts())) % 2 == 0 ? 1 : -1;
    return info;
}

}  // namespace planecert
