#include <planecert/plane_oracle.hpp>

#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace planecert {

AffineLineSet build_plane(int q) {
    const FiniteFieldTable field = FiniteFieldTable::make(q);

    AffineLineSet plane;
    plane.d = q;
    for (int m = 1; m < q; ++m)
        for (int b = 0; b < q; ++b) {
            std::vector<int> images(static_cast<std::size_t>(q));
            for (int x = 0; x < q; ++x) images[static_cast<std::size_t>(x)] = field.add(field.mul(m, x), b);
            plane.lines.emplace_back(std::move(images));
        }

    // Lines with equal slope must differ by a fixed-point-free permutation,
    // lines with different slopes by one with exactly one fixed point.
    const int n = static_cast<int>(plane.lines.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int fp = difference(plane.lines[static_cast<std::size_t>(i)],
                                      plane.lines[static_cast<std::size_t>(j)])
                               .fixed_points();
            const bool same_class = i / q == j / q;
            if (same_class ? fp != 0 : fp != 1)
                throw std::logic_error("build_plane: line-set invariant failed at q=" + std::to_string(q));
        }
    return plane;
}

SubsetTheta theta_of_subset(const std::vector<Permutation>& B) {
    if (B.empty()) throw std::domain_error("theta_of_subset: empty subset");
    const int d = B.front().degree();
    for (const auto& p : B)
        if (p.degree() != d) throw std::domain_error("theta_of_subset: mixed degrees");

    SubsetTheta result;
    result.theta = ThetaVector(d);
    for (const auto& p : B)
        for (const auto& q : B) {
            const Permutation diff = difference(p, q);
            result.theta.add(diff.cycle_type(), 1);
            if (&p != &q && diff.is_identity()) result.has_duplicates = true;
        }
    return result;
}

std::vector<std::pair<Partition, Rational>> proposition_check(const ThetaVector& theta,
                                                              const CharacterTable& t) {
    if (theta.d() != t.d) throw std::domain_error("proposition_check: theta and table disagree on d");
    std::vector<std::pair<Partition, Rational>> out;
    out.reserve(t.irreps.size());
    for (const auto& mu : t.irreps) {
        Rational sum = 0;
        for (const auto& [cls, value] : theta.entries()) sum += Rational(t.value(mu, cls)) * value;
        out.emplace_back(mu, sum);
    }
    return out;
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace

std::vector<Permutation> random_subset(int d, std::size_t n, std::uint64_t seed) {
    if (d < 1) throw std::domain_error("random_subset: d must be positive");
    if (Integer(static_cast<unsigned long>(n)) > factorial(static_cast<unsigned>(d)))
        throw std::domain_error("random_subset: n exceeds d!");

    std::mt19937_64 rng(seed);
    std::set<Permutation> seen;
    std::vector<Permutation> out;
    while (out.size() < n) {
        std::vector<int> images(static_cast<std::size_t>(d));
        std::iota(images.begin(), images.end(), 0);
        for (std::size_t i = images.size(); i > 1; --i)
            std::swap(images[i - 1], images[below(rng, i)]);
        Permutation p(std::move(images));
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace planecert
