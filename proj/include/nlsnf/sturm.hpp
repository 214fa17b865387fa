#pragma once

#include <vector>

#include "nlsnf/bigint.hpp"
#include "nlsnf/polynomial.hpp"

namespace nlsnf {

// Sturm chain of a univariate polynomial with rational coefficients.
// Counts distinct real roots; exact arithmetic throughout.
class SturmChain {
public:
    explicit SturmChain(std::vector<std::vector<Rat>> chain) : chain_(std::move(chain)) {}

    static SturmChain build(const std::vector<Rat>& coeffs);
    static SturmChain build(const Polynomial& p, const VarId& var);

    // sign variations of the chain evaluated at x
    int variations_at(const Rat& x) const;
    // sign variations at -infinity / +infinity
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // number of distinct real roots in (a, b]
    int count_roots(const Rat& a, const Rat& b) const;
    // number of distinct real roots on all of R
    int count_real_roots() const;

private:
    std::vector<std::vector<Rat>> chain_;
};

// Exact signature (positives - negatives) of a symmetric rational matrix via
// congruence diagonalization.  Also reports the rank.
struct Signature {
    int positives = 0;
    int negatives = 0;
    int rank() const { return positives + negatives; }
    int value() const { return positives - negatives; }
};
Signature symmetric_signature(std::vector<std::vector<Rat>> m);

}  // namespace nlsnf
