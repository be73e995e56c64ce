#include <planecert/theta.hpp>

#include <stdexcept>

namespace planecert {

Rational ThetaVector::at(const Partition& cycle_type) const {
    auto it = entries_.find(cycle_type);
    return it == entries_.end() ? Rational(0) : it->second;
}

void ThetaVector::set(const Partition& cycle_type, Rational value) {
    if (cycle_type.d() != d_) throw std::domain_error("ThetaVector::set: cycle type of wrong degree");
    value.canonicalize();
    if (value == 0)
        entries_.erase(cycle_type);
    else
        entries_[cycle_type] = std::move(value);
}

void ThetaVector::add(const Partition& cycle_type, const Rational& delta) {
    set(cycle_type, at(cycle_type) + delta);
}

Rational ThetaVector::total() const {
    Rational sum = 0;
    for (const auto& [cls, value] : entries_) sum += value;
    return sum;
}

}  // namespace planecert
