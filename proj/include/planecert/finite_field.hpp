// Small finite fields as explicit operation tables. Prime orders use
// modular arithmetic; 4, 8 and 9 are built from fixed irreducible
// polynomials (x^2+x+1, x^3+x+1, x^2+1). Field axioms are verified
// exhaustively at construction, which is cheap at these sizes.
#pragma once

#include <vector>

namespace planecert {

class FiniteFieldTable {
public:
    // q in {2,3,4,5,7,8,9}; throws std::domain_error otherwise.
    static FiniteFieldTable make(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
    int neg(int a) const;
    int inv(int a) const;  // a != 0

private:
    FiniteFieldTable(int q, std::vector<int> add, std::vector<int> mul);
    void verify_axioms() const;  // throws std::logic_error on any failure

    int q_ = 0;
    std::vector<int> add_;  // q*q, row-major
    std::vector<int> mul_;
};

}  // namespace planecert
