#include <planecert/finite_field.hpp>

#include <stdexcept>
#include <string>

namespace planecert {

namespace {

struct PolyBasis {
    int p;                           // characteristic
    int k;                           // extension degree
    std::vector<int> reduction;      // x^k = sum reduction[i] x^i, coefficients mod p
};

// Elements of GF(p^k) are encoded as base-p digit vectors of length k,
// packed into an integer in [0, p^k).
std::vector<int> digits(int value, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        d[static_cast<std::size_t>(i)] = value % p;
        value /= p;
    }
    return d;
}

int pack(const std::vector<int>& d, int p) {
    int value = 0;
    for (std::size_t i = d.size(); i-- > 0;) value = value * p + d[i];
    return value;
}

int poly_mul(int a, int b, const PolyBasis& basis) {
    const int p = basis.p;
    const int k = basis.k;
    const auto da = digits(a, p, k);
    const auto db = digits(b, p, k);
    std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
    // reduce x^m for m >= k using the fixed relation
    for (int m = 2 * k - 2; m >= k; --m) {
        const int c = prod[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(m)] = 0;
        for (int i = 0; i < k; ++i)
            prod[static_cast<std::size_t>(m - k + i)] =
                (prod[static_cast<std::size_t>(m - k + i)] + c * basis.reduction[static_cast<std::size_t>(i)]) % p;
    }
    prod.resize(static_cast<std::size_t>(k));
    return pack(prod, p);
}

int poly_add(int a, int b, int p, int k) {
    auto da = digits(a, p, k);
    const auto db = digits(b, p, k);
    for (int i = 0; i < k; ++i)
        da[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
    return pack(da, p);
}

}  // namespace

FiniteFieldTable::FiniteFieldTable(int q, std::vector<int> add, std::vector<int> mul)
    : q_(q), add_(std::move(add)), mul_(std::move(mul)) {
    verify_axioms();
}

FiniteFieldTable FiniteFieldTable::make(int q) {
    const bool prime = q == 2 || q == 3 || q == 5 || q == 7;
    const bool prime_power = q == 4 || q == 8 || q == 9;
    if (!prime && !prime_power) throw std::domain_error("FiniteFieldTable: unsupported order " + std::to_string(q));

    std::vector<int> add(static_cast<std::size_t>(q * q));
    std::vector<int> mul(static_cast<std::size_t>(q * q));

    if (prime) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add[static_cast<std::size_t>(a * q + b)] = (a + b) % q;
                mul[static_cast<std::size_t>(a * q + b)] = (a * b) % q;
            }
    } else {
        PolyBasis basis;
        if (q == 4) basis = {2, 2, {1, 1}};       // x^2 = x + 1
        else if (q == 8) basis = {2, 3, {1, 1, 0}};  // x^3 = x + 1
        else basis = {3, 2, {2, 0}};              // x^2 = -1 = 2
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add[static_cast<std::size_t>(a * q + b)] = poly_add(a, b, basis.p, basis.k);
                mul[static_cast<std::size_t>(a * q + b)] = poly_mul(a, b, basis);
            }
    }
    return FiniteFieldTable(q, std::move(add), std::move(mul));
}

int FiniteFieldTable::neg(int a) const {
    for (int b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw std::logic_error("FiniteFieldTable: missing additive inverse");
}

int FiniteFieldTable::inv(int a) const {
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::domain_error("FiniteFieldTable: no multiplicative inverse for " + std::to_string(a));
}

void FiniteFieldTable::verify_axioms() const {
    auto fail = [this](const std::string& what) {
        throw std::logic_error("FiniteFieldTable(q=" + std::to_string(q_) + "): " + what);
    };
    for (int a = 0; a < q_; ++a) {
        if (add(a, 0) != a) fail("0 is not an additive identity");
        if (mul(a, 1) != a) fail("1 is not a multiplicative identity");
        if (mul(a, 0) != 0) fail("multiplication by 0");
        bool has_neg = false;
        for (int b = 0; b < q_; ++b) has_neg |= add(a, b) == 0;
        if (!has_neg) fail("missing additive inverse");
        if (a != 0) {
            bool has_inv = false;
            for (int b = 0; b < q_; ++b) has_inv |= mul(a, b) == 1;
            if (!has_inv) fail("nonzero element without multiplicative inverse");
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a)) fail("addition not commutative");
            if (mul(a, b) != mul(b, a)) fail("multiplication not commutative");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("addition not associative");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
}

}  // namespace planecert
