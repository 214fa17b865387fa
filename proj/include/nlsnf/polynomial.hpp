#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlsnf/bigint.hpp"
#include "nlsnf/varid.hpp"

namespace nlsnf {

struct InconsistentBinding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A monomial is a sparse exponent vector: sorted by VarId, exponents > 0.
struct Monomial {
    std::vector<std::pair<VarId, int>> exps;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    int exponent_of(const VarId& v) const {
        for (auto& [w, e] : exps)
            if (w == v) return e;
        return 0;
    }
    bool contains(const VarId& v) const { return exponent_of(v) > 0; }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps == y.exps; }

    // Graded lexicographic order: total degree first, then exponent vectors
    // compared variable-by-variable in VarId order (larger exponent earlier wins).
    friend bool operator<(const Monomial& x, const Monomial& y) {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        size_t i = 0, j = 0;
        while (i < x.exps.size() && j < y.exps.size()) {
            const auto& [vx, ex] = x.exps[i];
            const auto& [vy, ey] = y.exps[j];
            if (vx == vy) {
                if (ex != ey) return ex < ey;
                ++i, ++j;
            } else if (vx < vy) {
                // x has positive exponent on an earlier variable
                return false;
            } else {
                return true;
            }
        }
        if (i < x.exps.size()) return false;
        if (j < y.exps.size()) return true;
        return false;
    }

    Monomial times(const Monomial& o) const;
};

// Exact multivariate polynomial over the integers, in the quotient ring
// Z[t, x_i][s_ij] / (s_ij^2 - x_i x_j).  Arithmetic never reduces square
// roots implicitly; call reduced()/reduce_sqrt when a canonical
// representative is needed.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigInt>;

    Polynomial() = default;
    explicit Polynomial(BigInt c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    explicit Polynomial(long c) : Polynomial(BigInt(c)) {}

    static Polynomial variable(const VarId& v, int exp = 1) {
        Polynomial p;
        if (exp < 0) throw std::invalid_argument("negative exponent");
        if (exp == 0) return Polynomial(BigInt(1));
        Monomial m;
        m.exps.push_back({v, exp});
        p.terms_[m] = 1;
        return p;
    }
    static Polynomial constant(BigInt c) { return Polynomial(std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.exps.empty()); }
    BigInt constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    int total_degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    void add_term(const Monomial& m, const BigInt& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial times_scalar(const BigInt& c) const;
    Polynomial pow(int e) const;

    // Canonical representative modulo s_ij^2 = x_i x_j; idempotent.
    Polynomial reduced() const;
    bool is_canonical() const;  // all Sqrt exponents in {0,1}
    bool has_sqrt() const;

    // Exact substitution followed by square-root reduction.  A Sqrt variable
    // left in the result whose underlying xi's were bound raises
    // InconsistentBinding, except in the resolvable cases (either xi bound to
    // zero, both bound to the same polynomial, or an explicit consistent
    // binding for the Sqrt variable itself).
    Polynomial specialize(const std::map<VarId, Polynomial>& bindings) const;

    // Degree in a single variable.
    int degree_in(const VarId& v) const;
    bool mentions(const VarId& v) const;
    std::vector<VarId> variables() const;

    // Coefficients c_0..c_d of p viewed as a polynomial in v (c_i multiplies v^i).
    std::vector<Polynomial> coefficients_in(const VarId& v) const;
    Polynomial coefficient_of(const VarId& v, int k) const;

    Polynomial derivative(const VarId& v) const;

    // Integer content (gcd of coefficients, 0 for the zero polynomial).
    BigInt content() const;
    // Divide every coefficient by c; throws if not exact.
    Polynomial divide_content(const BigInt& c) const;
    // Leading coefficient/monomial in the global monomial order.
    const BigInt& leading_coefficient() const;
    const Monomial& leading_monomial() const;

    // Exact division in Z[vars] (inputs must be Sqrt-canonical with no
    // reduction needed); returns nullopt when q does not divide *this.
    static std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

    // Reduce all coefficients mod 2 (keeps only odd-coefficient terms).
    Polynomial mod2() const;

    // Canonical text form; injective and re-parseable.
    std::string str() const;
    static Polynomial parse(const std::string& s);

private:
    TermMap terms_;  // no zero coefficients stored
};

inline Polynomial operator*(const Polynomial& a, const BigInt& c) { return a.times_scalar(c); }
inline Polynomial operator*(const BigInt& c, const Polynomial& a) { return a.times_scalar(c); }

// Convenience builders.
inline Polynomial P_t() { return Polynomial::variable(VarId::t()); }
inline Polynomial P_xi(int i) { return Polynomial::variable(VarId::xi(i)); }
inline Polynomial P_sqrt(int i, int j) { return Polynomial::variable(VarId::sqrt(i, j)); }
inline Polynomial P_site(int i, int c) { return Polynomial::variable(VarId::site(i, c)); }
inline Polynomial P_const(long c) { return Polynomial(BigInt(c)); }

}  // namespace nlsnf
