#pragma once

#include <stdexcept>
#include <vector>

#include "nlsnf/polynomial.hpp"

namespace nlsnf {

struct VariableCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMonic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Square matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    int dim() const { return dim_; }
    Polynomial& at(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Polynomial& at(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

    bool has_sqrt() const;
    PolyMatrix reduced() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    int dim_ = 0;
    std::vector<Polynomial> entries_;
};

// Determinant.  Sqrt-free matrices go through fraction-free Bareiss
// elimination; matrices with formal square roots fall back to cofactor
// expansion with eager reduction (dimensions here never exceed n+2).
Polynomial det(const PolyMatrix& m);

// det(var*I - M), monic of degree dim, fully reduced.  var must not occur in
// the entries of M.
Polynomial char_poly(const PolyMatrix& m, const VarId& var);

// Determinant of the Sylvester matrix of p and q with respect to var, p-rows
// first.  Requires positive degree in var on both sides and Sqrt-free inputs.
Polynomial resultant(const Polynomial& p, const Polynomial& q, const VarId& var);

// resultant(p, dp/dvar, var) with no extra normalization; p monic of degree
// >= 2 in var.  With this convention det(bezoutiante(p)) =
// (-1)^(n(n-1)/2) * discriminant(p) for monic p of degree n.
Polynomial discriminant(const Polynomial& p, const VarId& var);

// Newton power sums psi_0..psi_k of a polynomial monic in var.
std::vector<Polynomial> newton_power_sums(const Polynomial& p, const VarId& var, int upto);

// Symmetric n x n matrix with entry (i,j) = psi_{i+j-2}.
PolyMatrix bezoutiante(const Polynomial& p, const VarId& var);

}  // namespace nlsnf
