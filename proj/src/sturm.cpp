#include "nlsnf/sturm.hpp"

#include <stdexcept>

#include "nlsnf/factor.hpp"

namespace nlsnf {

namespace {

using RPoly = std::vector<Rat>;

void rnormalize(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly rderiv(const RPoly& p) {
    RPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

// remainder of a by b over Q
RPoly rrem(RPoly a, const RPoly& b) {
    rnormalize(a);
    while (rdeg(a) >= rdeg(b)) {
        Rat c = a.back() / b.back();
        int shift = rdeg(a) - rdeg(b);
        for (int i = 0; i <= rdeg(b); ++i) a[static_cast<size_t>(i + shift)] -= c * b[static_cast<size_t>(i)];
        rnormalize(a);
        if (a.empty()) break;
    }
    return a;
}

// scale to a primitive direction to keep numbers small; sign preserved
void rscale(RPoly& p) {
    if (p.empty()) return;
    BigInt num_gcd = 0, den_lcm = 1;
    for (auto& c : p) {
        num_gcd = big_gcd(num_gcd, boost::multiprecision::numerator(c));
        den_lcm = den_lcm / big_gcd(den_lcm, boost::multiprecision::denominator(c)) *
                  boost::multiprecision::denominator(c);
    }
    if (num_gcd == 0) return;
    Rat s(den_lcm, num_gcd);
    if (s < 0) s = -s;
    for (auto& c : p) c *= s;
}

Rat reval(const RPoly& p, const Rat& x) {
    Rat acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

SturmChain SturmChain::build(const std::vector<Rat>& coeffs) {
    RPoly p0 = coeffs;
    rnormalize(p0);
    if (p0.empty()) throw std::invalid_argument("sturm chain of zero polynomial");
    std::vector<RPoly> chain;
    chain.push_back(p0);
    if (rdeg(p0) >= 1) {
        RPoly p1 = rderiv(p0);
        rscale(p1);
        chain.push_back(p1);
        while (rdeg(chain.back()) >= 1) {
            RPoly r = rrem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            rscale(r);
            chain.push_back(r);
        }
    }
    return SturmChain(std::move(chain));
}

SturmChain SturmChain::build(const Polynomial& p, const VarId& var) {
    auto dense = dense_coeffs(p, var);
    std::vector<Rat> rc(dense.size());
    for (size_t i = 0; i < dense.size(); ++i) rc[i] = Rat(dense[i]);
    return build(rc);
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (auto& p : chain_) signs.push_back(sign_of(reval(p, x)));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (auto& p : chain_) {
        int lead = sign_of(p.back());
        signs.push_back(rdeg(p) % 2 == 0 ? lead : -lead);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (auto& p : chain_) signs.push_back(sign_of(p.back()));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Signature symmetric_signature(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Signature sig;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            // find a usable pivot below/right
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i)
                if (m[i][i] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row != k) {
                std::swap(m[k], m[swap_row]);
                for (size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][swap_row]);
            } else {
                // all remaining diagonal entries are zero; look for an
                // off-diagonal entry and symmetrize (rows k..n)
                size_t oi = n, oj = n;
                for (size_t i = k; i < n && oi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (m[i][j] != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) break;  // remaining block is zero
                // row/col i += row/col j makes the (i,i) entry 2*m[i][j] != 0
                for (size_t c = 0; c < n; ++c) m[oi][c] += m[oj][c];
                for (size_t r = 0; r < n; ++r) m[r][oi] += m[r][oj];
                if (oi != k) {
                    std::swap(m[k], m[oi]);
                    for (size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][oi]);
                }
            }
            if (m[k][k] == 0) continue;
        }
        Rat pivot = m[k][k];
        if (pivot > 0)
            ++sig.positives;
        else
            ++sig.negatives;
        // congruence step: row_i -= f*row_k and col_i -= f*col_k
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / pivot;
            for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
            for (size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        }
    }
    return sig;
}

}  // namespace nlsnf
