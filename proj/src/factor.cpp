#include "nlsnf/factor.hpp"

#include <algorithm>

namespace nlsnf {

std::vector<BigInt> dense_coeffs(const Polynomial& p, const VarId& var) {
    auto cs = p.coefficients_in(var);
    std::vector<BigInt> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_constant()) throw std::invalid_argument("polynomial is not univariate in the given variable");
        out[i] = cs[i].constant_value();
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

Polynomial from_dense(const std::vector<BigInt>& c, const VarId& var) {
    Polynomial p;
    for (size_t i = 0; i < c.size(); ++i)
        p += Polynomial::variable(var, static_cast<int>(i)).times_scalar(c[i]);
    return p;
}

BigInt eval_dense(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

namespace {

using Dense = std::vector<BigInt>;

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

void normalize(Dense& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

BigInt dense_content(const Dense& p) {
    BigInt g = 0;
    for (auto& c : p) g = big_gcd(g, c);
    return g == 0 ? BigInt(1) : g;
}

Dense divide_scalar(const Dense& p, const BigInt& c) {
    Dense r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] / c;
    return r;
}

// Exact division in Z[x]; nullopt if not exact.
std::optional<Dense> dense_div_exact(const Dense& p, const Dense& q) {
    if (deg(q) < 0 || (q.size() == 1 && q[0] == 0)) return std::nullopt;
    Dense rem = p;
    normalize(rem);
    int dq = deg(q);
    int dp = deg(rem);
    if (dp < dq) return std::nullopt;
    Dense quot(static_cast<size_t>(dp - dq) + 1, BigInt(0));
    for (int k = dp - dq; k >= 0; --k) {
        BigInt lead = rem[static_cast<size_t>(k + dq)];
        if (lead == 0) continue;
        if (lead % q.back() != 0) return std::nullopt;
        BigInt c = lead / q.back();
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dq; ++i) rem[static_cast<size_t>(k + i)] -= c * q[static_cast<size_t>(i)];
    }
    for (auto& c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

std::vector<BigInt> divisors_of(const BigInt& n0) {
    BigInt n = big_abs(n0);
    std::vector<BigInt> ds;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d * d != n) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// strip all rational roots p/q (q | lc, p | constant term), returning the
// corresponding primitive linear factors q*x - p
void strip_linear_factors(Dense& f, std::vector<Dense>& out) {
    bool again = true;
    while (again && deg(f) >= 1) {
        again = false;
        // root at 0
        if (f[0] == 0) {
            out.push_back({BigInt(0), BigInt(1)});
            f.erase(f.begin());
            normalize(f);
            again = true;
            continue;
        }
        auto ps = divisors_of(f[0]);
        auto qs = divisors_of(f.back());
        for (const auto& q : qs) {
            for (const auto& p : ps) {
                for (int sg = 1; sg >= -1 && !again; sg -= 2) {
                    BigInt num = sg * p;
                    if (big_gcd(big_abs(num), q) != 1) continue;
                    // f(num/q) == 0  <=>  sum f_i num^i q^(d-i) == 0
                    BigInt acc = 0;
                    BigInt qp = 1;
                    std::vector<BigInt> qpow(f.size());
                    for (size_t i = 0; i < f.size(); ++i) {
                        qpow[f.size() - 1 - i] = qp;
                        qp *= q;
                    }
                    BigInt np = 1;
                    for (size_t i = 0; i < f.size(); ++i) {
                        acc += f[i] * np * qpow[i];
                        np *= num;
                    }
                    if (acc == 0) {
                        Dense lin = {-num, q};
                        auto quo = dense_div_exact(f, lin);
                        if (quo) {
                            out.push_back(lin);
                            f = *quo;
                            normalize(f);
                            again = true;
                        }
                    }
                }
                if (again) break;
            }
            if (again) break;
        }
    }
}

// Kronecker search: find a factor of degree exactly d, or nullopt.
std::optional<Dense> kronecker_factor(const Dense& f, int d) {
    // evaluation points 0, 1, -1, 2, -2, ... skipping roots (none remain
    // after linear stripping, but be safe)
    std::vector<BigInt> xs, ys;
    BigInt x = 0;
    int step = 0;
    while (static_cast<int>(xs.size()) <= d) {
        BigInt y = eval_dense(f, x);
        if (y != 0) {
            xs.push_back(x);
            ys.push_back(y);
        }
        ++step;
        x = (step % 2 == 1) ? BigInt((step + 1) / 2) : BigInt(-(step / 2));
    }
    // candidate values: g(x_i) must divide f(x_i)
    std::vector<std::vector<BigInt>> choices(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        auto ds = divisors_of(ys[i]);
        for (const auto& v : ds) {
            choices[i].push_back(v);
            choices[i].push_back(-v);
        }
        // fix the sign of the first coordinate; g and -g give the same split
        if (i == 0) choices[i].erase(std::remove_if(choices[i].begin(), choices[i].end(),
                                                    [](const BigInt& v) { return v < 0; }),
                                     choices[i].end());
    }
    std::vector<size_t> idx(xs.size(), 0);
    std::vector<BigInt> vals(xs.size());
    // iterate over the product of choices
    while (true) {
        for (size_t i = 0; i < xs.size(); ++i) vals[i] = choices[i][idx[i]];
        // Lagrange interpolation over Q, then integrality check
        std::vector<Rat> coef(xs.size(), Rat(0));
        for (size_t i = 0; i < xs.size(); ++i) {
            // basis polynomial through x_i
            std::vector<Rat> basis = {Rat(1)};
            Rat denom = 1;
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                std::vector<Rat> nb(basis.size() + 1, Rat(0));
                for (size_t k = 0; k < basis.size(); ++k) {
                    nb[k + 1] += basis[k];
                    nb[k] -= basis[k] * Rat(xs[j]);
                }
                basis = nb;
                denom *= Rat(xs[i]) - Rat(xs[j]);
            }
            Rat w = Rat(vals[i]) / denom;
            for (size_t k = 0; k < basis.size(); ++k) coef[k] += basis[k] * w;
        }
        bool integral = true;
        Dense g(coef.size());
        for (size_t k = 0; k < coef.size(); ++k) {
            if (boost::multiprecision::denominator(coef[k]) != 1) {
                integral = false;
                break;
            }
            g[k] = boost::multiprecision::numerator(coef[k]);
        }
        if (integral) {
            normalize(g);
            if (deg(g) == d) {
                BigInt ct = dense_content(g);
                if (ct != 0) g = divide_scalar(g, ct);
                if (g.back() < 0)
                    for (auto& c : g) c = -c;
                if (deg(g) >= 1 && dense_div_exact(f, g)) return g;
            }
        }
        // advance
        size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    return std::nullopt;
}

// full factorization of a primitive polynomial into irreducible primitive parts
void factor_primitive(Dense f, std::vector<Dense>& out) {
    normalize(f);
    if (deg(f) <= 0) return;
    std::vector<Dense> linears;
    strip_linear_factors(f, linears);
    for (auto& l : linears) out.push_back(l);
    if (deg(f) <= 0) return;
    if (deg(f) <= 3) {
        // no rational root and degree <= 3: irreducible over Q
        out.push_back(f);
        return;
    }
    for (int d = 2; d <= deg(f) / 2; ++d) {
        auto g = kronecker_factor(f, d);
        if (g) {
            auto rest = dense_div_exact(f, *g);
            factor_primitive(*g, out);
            factor_primitive(*rest, out);
            return;
        }
    }
    out.push_back(f);
}

}  // namespace

Factorization factor_univariate(const Polynomial& p) {
    auto vars = p.variables();
    if (vars.size() > 1) throw std::invalid_argument("factor_univariate needs a univariate polynomial");
    VarId var = vars.empty() ? VarId::t() : vars[0];
    if (p.degree_in(var) > 8) throw DegreeTooLarge("factor_univariate supports degree <= 8");

    Factorization result;
    if (p.is_zero()) {
        result.content = 0;
        return result;
    }
    Dense f = dense_coeffs(p, var);
    BigInt ct = dense_content(f);
    if (f.back() < 0) ct = -ct;
    result.content = ct;
    f = divide_scalar(f, ct);
    std::vector<Dense> flat;
    factor_primitive(f, flat);

    // collect multiplicities; factors sorted for determinism
    std::sort(flat.begin(), flat.end(), [](const Dense& a, const Dense& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    for (size_t i = 0; i < flat.size();) {
        size_t j = i;
        while (j < flat.size() && flat[j] == flat[i]) ++j;
        result.factors.push_back({from_dense(flat[i], var), static_cast<int>(j - i)});
        i = j;
    }
    return result;
}

bool is_irreducible_univariate(const Polynomial& p) {
    auto f = factor_univariate(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace nlsnf
