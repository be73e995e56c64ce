#include <planecert/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace planecert {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int d = static_cast<int>(images_.size());
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : images_) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images must be a bijection on {0,...,d-1}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

int Permutation::fixed_points() const {
    int n = 0;
    for (int i = 0; i < degree(); ++i)
        if (images_[static_cast<std::size_t>(i)] == i) ++n;
    return n;
}

bool Permutation::is_identity() const { return fixed_points() == degree(); }

Partition Permutation::cycle_type() const {
    const int d = degree();
    std::vector<bool> visited(static_cast<std::size_t>(d), false);
    std::vector<int> lengths;
    for (int i = 0; i < d; ++i) {
        if (visited[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !visited[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
            visited[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw std::domain_error("compose: mismatched degrees");
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) im[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(im));
}

Permutation invert(const Permutation& p) {
    std::vector<int> im(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) im[static_cast<std::size_t>(p(i))] = i;
    return Permutation(std::move(im));
}

Permutation difference(const Permutation& p, const Permutation& q) {
    return compose(invert(p), q);
}

}  // namespace planecert
