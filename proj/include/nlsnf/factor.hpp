#pragma once

#include <stdexcept>
#include <vector>

#include "nlsnf/polynomial.hpp"

namespace nlsnf {

struct DegreeTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Factorization {
    BigInt content = 1;  // signed integer content
    std::vector<std::pair<Polynomial, int>> factors;  // irreducible over Z, primitive, multiplicity
};

// Complete factorization of a univariate integer polynomial of degree <= 8
// into irreducible primitive factors times signed content.  Rational-root
// stripping plus Kronecker interpolation for the higher-degree splits.
Factorization factor_univariate(const Polynomial& p);

// Convenience: true if the primitive part is irreducible over Q.
bool is_irreducible_univariate(const Polynomial& p);

// --- dense univariate helpers shared with the Sturm code ---

// Coefficients c[0..d] of a univariate polynomial (c[k] multiplies var^k).
std::vector<BigInt> dense_coeffs(const Polynomial& p, const VarId& var);
Polynomial from_dense(const std::vector<BigInt>& c, const VarId& var);
BigInt eval_dense(const std::vector<BigInt>& c, const BigInt& x);

}  // namespace nlsnf
