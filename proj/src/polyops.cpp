#include "nlsnf/polyops.hpp"

#include <algorithm>

namespace nlsnf {

bool PolyMatrix::has_sqrt() const {
    for (const auto& e : entries_)
        if (e.has_sqrt()) return true;
    return false;
}

PolyMatrix PolyMatrix::reduced() const {
    PolyMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j).reduced();
    return r;
}

namespace {

// Cofactor expansion along the first remaining row, memoized on column sets.
// Exact in the quotient ring; entries are reduced as we go.
Polynomial det_cofactor(const PolyMatrix& m) {
    int n = m.dim();
    std::vector<std::vector<Polynomial>> memo(1u << n);
    // base: empty set handled inline
    struct Rec {
        const PolyMatrix& m;
        int n;
        std::vector<Polynomial>& cache_flat;
        std::vector<bool>& have;
        Rec(const PolyMatrix& mm, int nn, std::vector<Polynomial>& c, std::vector<bool>& h)
            : m(mm), n(nn), cache_flat(c), have(h) {}
        Polynomial minor_det(unsigned cols, int row) {
            if (cols == 0) return Polynomial(BigInt(1));
            if (have[cols]) return cache_flat[cols];
            Polynomial acc;
            int sign = 1;
            for (int j = 0; j < n; ++j) {
                if (!(cols & (1u << j))) continue;
                const Polynomial& e = m.at(row, j);
                if (!e.is_zero()) {
                    Polynomial sub = minor_det(cols & ~(1u << j), row + 1);
                    Polynomial term = (e * sub).reduced();
                    if (sign < 0) term = -term;
                    acc += term;
                }
                sign = -sign;
            }
            have[cols] = true;
            cache_flat[cols] = acc;
            return acc;
        }
    };
    std::vector<Polynomial> cache(1u << n);
    std::vector<bool> have(1u << n, false);
    Rec rec(m, n, cache, have);
    return rec.minor_det((1u << n) - 1, 0);
}

// Fraction-free Bareiss elimination; needs exact division, so only for
// Sqrt-free matrices.
Polynomial det_bareiss(PolyMatrix a) {
    int n = a.dim();
    int sign = 1;
    Polynomial prev(BigInt(1));
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Polynomial();
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                auto q = Polynomial::divide_exact(num, prev);
                if (!q) throw std::logic_error("bareiss: non-exact division");
                a.at(i, j) = *q;
            }
            a.at(i, k) = Polynomial();
        }
        prev = a.at(k, k);
    }
    Polynomial d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
    if (m.dim() == 1) return m.at(0, 0).reduced();
    if (m.has_sqrt()) return det_cofactor(m).reduced();
    return det_bareiss(m);
}

Polynomial char_poly(const PolyMatrix& m, const VarId& var) {
    int n = m.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j).mentions(var))
                throw VariableCollision("char_poly variable occurs in matrix entries");
    PolyMatrix a(n);
    Polynomial t = Polynomial::variable(var);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = (i == j) ? t - m.at(i, j) : -m.at(i, j);
    Polynomial chi = det(a).reduced();
    if (chi.degree_in(var) != n || chi.coefficient_of(var, n) != Polynomial(BigInt(1)))
        throw std::logic_error("char_poly: result not monic of full degree");
    return chi;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, const VarId& var) {
    if (p.has_sqrt() || q.has_sqrt())
        throw std::invalid_argument("resultant requires Sqrt-free inputs");
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp < 1 || dq < 1) throw DegreeZero("resultant inputs must have positive degree in var");
    auto cp = p.coefficients_in(var);
    auto cq = q.coefficients_in(var);
    int n = dp + dq;
    PolyMatrix s(n);
    // dq rows of p coefficients, then dp rows of q coefficients, descending powers
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) s.at(r, r + k) = cp[static_cast<size_t>(dp - k)];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) s.at(dq + r, r + k) = cq[static_cast<size_t>(dq - k)];
    return det(s);
}

Polynomial discriminant(const Polynomial& p, const VarId& var) {
    int d = p.degree_in(var);
    if (d < 2) throw DegreeZero("discriminant needs degree >= 2");
    if (p.coefficient_of(var, d) != Polynomial(BigInt(1))) throw NotMonic("discriminant input must be monic");
    Polynomial r = resultant(p, p.derivative(var), var);
    // (-1)^(d(d-1)/2) Res(p, p') for monic p; with this sign
    // det(bezoutiante(p)) == discriminant(p) holds exactly
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    return r;
}

std::vector<Polynomial> newton_power_sums(const Polynomial& p, const VarId& var, int upto) {
    int n = p.degree_in(var);
    if (n < 1) throw DegreeZero("power sums need positive degree");
    if (p.coefficient_of(var, n) != Polynomial(BigInt(1))) throw NotMonic("power sums need a monic polynomial");
    // p = var^n + a_1 var^(n-1) + ... + a_n
    std::vector<Polynomial> a(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) a[static_cast<size_t>(k)] = p.coefficient_of(var, n - k);
    std::vector<Polynomial> psi(static_cast<size_t>(upto) + 1);
    psi[0] = Polynomial(BigInt(n));
    for (int k = 1; k <= upto; ++k) {
        Polynomial s;
        if (k <= n) s = a[static_cast<size_t>(k)].times_scalar(BigInt(-k));
        for (int i = 1; i < k; ++i) {
            if (i > n) break;
            s -= a[static_cast<size_t>(i)] * psi[static_cast<size_t>(k - i)];
        }
        psi[static_cast<size_t>(k)] = s;
    }
    return psi;
}

PolyMatrix bezoutiante(const Polynomial& p, const VarId& var) {
    int n = p.degree_in(var);
    if (n < 1) throw NotMonic("bezoutiante needs positive degree");
    if (p.coefficient_of(var, n) != Polynomial(BigInt(1))) throw NotMonic("bezoutiante input must be monic");
    auto psi = newton_power_sums(p, var, 2 * n - 2);
    PolyMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = psi[static_cast<size_t>(i + j)];
    return b;
}

}  // namespace nlsnf
