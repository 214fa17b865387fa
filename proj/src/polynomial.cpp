#include "nlsnf/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nlsnf {

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.exps.reserve(exps.size() + o.exps.size());
    size_t i = 0, j = 0;
    while (i < exps.size() && j < o.exps.size()) {
        if (exps[i].first == o.exps[j].first) {
            r.exps.push_back({exps[i].first, exps[i].second + o.exps[j].second});
            ++i, ++j;
        } else if (exps[i].first < o.exps[j].first) {
            r.exps.push_back(exps[i++]);
        } else {
            r.exps.push_back(o.exps[j++]);
        }
    }
    for (; i < exps.size(); ++i) r.exps.push_back(exps[i]);
    for (; j < o.exps.size(); ++j) r.exps.push_back(o.exps[j]);
    return r;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::times_scalar(const BigInt& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r(BigInt(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Polynomial::is_canonical() const {
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps)
            if (v.kind == VarId::Sqrt && e > 1) return false;
    return true;
}

bool Polynomial::has_sqrt() const {
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps)
            if (v.kind == VarId::Sqrt) return true;
    return false;
}

Polynomial Polynomial::reduced() const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        Monomial out;
        Monomial extra;  // xi factors produced by s^2 -> x_i x_j
        for (auto& [v, e] : m.exps) {
            if (v.kind == VarId::Sqrt && e >= 2) {
                int pairs = e / 2;
                int rem = e % 2;
                Monomial xi;
                xi.exps.push_back({VarId::xi(v.a), pairs});
                xi.exps.push_back({VarId::xi(v.b), pairs});
                extra = extra.times(xi);
                if (rem) out.exps.push_back({v, rem});
            } else {
                out.exps.push_back({v, e});
            }
        }
        r.add_term(out.times(extra), c);
    }
    return r;
}

Polynomial Polynomial::specialize(const std::map<VarId, Polynomial>& bindings) const {
    // Resolve what each Sqrt variable should become under the xi bindings.
    auto sqrt_value = [&](const VarId& s) -> std::optional<Polynomial> {
        auto es = bindings.find(s);
        VarId xa = VarId::xi(s.a), xb = VarId::xi(s.b);
        auto ia = bindings.find(xa), ib = bindings.find(xb);
        const Polynomial* pa = ia == bindings.end() ? nullptr : &ia->second;
        const Polynomial* pb = ib == bindings.end() ? nullptr : &ib->second;
        if (es != bindings.end()) {
            // explicit binding: must square to the (possibly substituted) product
            Polynomial prod = (pa ? *pa : Polynomial::variable(xa)) * (pb ? *pb : Polynomial::variable(xb));
            if ((es->second * es->second).reduced() != prod.reduced())
                throw InconsistentBinding("sqrt binding inconsistent with s^2 = x_i*x_j");
            return es->second;
        }
        if (pa && pa->is_zero()) return Polynomial();
        if (pb && pb->is_zero()) return Polynomial();
        if (pa && pb && *pa == *pb) return *pa;  // s_ij -> common value
        if (pa || pb) return std::nullopt;       // unresolvable, error if the variable occurs
        return Polynomial::variable(s);          // untouched
    };

    Polynomial result;
    for (auto& [m, c] : terms_) {
        Polynomial term(c);
        for (auto& [v, e] : m.exps) {
            Polynomial factor;
            if (v.kind == VarId::Sqrt) {
                auto sv = sqrt_value(v);
                if (!sv)
                    throw InconsistentBinding("cannot specialize " + v.name() +
                                              ": underlying xi bound without a consistent sqrt value");
                factor = *sv;
            } else {
                auto it = bindings.find(v);
                factor = it == bindings.end() ? Polynomial::variable(v) : it->second;
            }
            term = term * factor.pow(e);
        }
        result += term;
    }
    return result.reduced();
}

int Polynomial::degree_in(const VarId& v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
    return d;
}

bool Polynomial::mentions(const VarId& v) const {
    for (auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exps)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::vector<Polynomial> Polynomial::coefficients_in(const VarId& v) const {
    std::vector<Polynomial> coeffs(static_cast<size_t>(degree_in(v)) + 1);
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        Monomial rest;
        for (auto& [w, k] : m.exps)
            if (!(w == v)) rest.exps.push_back({w, k});
        coeffs[static_cast<size_t>(e)].add_term(rest, c);
    }
    return coeffs;
}

Polynomial Polynomial::coefficient_of(const VarId& v, int k) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        if (m.exponent_of(v) != k) continue;
        Monomial rest;
        for (auto& [w, e] : m.exps)
            if (!(w == v)) rest.exps.push_back({w, e});
        out.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::derivative(const VarId& v) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        Monomial rest;
        for (auto& [w, k] : m.exps) {
            if (w == v) {
                if (k > 1) rest.exps.push_back({w, k - 1});
            } else {
                rest.exps.push_back({w, k});
            }
        }
        r.add_term(rest, c * e);
    }
    return r;
}

BigInt Polynomial::content() const {
    BigInt g = 0;
    for (auto& [m, c] : terms_) {
        g = big_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::divide_content(const BigInt& c) const {
    if (c == 0) throw std::invalid_argument("divide_content by zero");
    Polynomial r;
    for (auto& [m, k] : terms_) {
        if (k % c != 0) throw std::invalid_argument("content division not exact");
        r.terms_.emplace(m, k / c);
    }
    return r;
}

const BigInt& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

// monomial division: x | y ? y/x : nullopt
static std::optional<Monomial> mono_div(const Monomial& y, const Monomial& x) {
    Monomial r;
    size_t i = 0;
    for (auto& [v, e] : x.exps) {
        while (i < y.exps.size() && y.exps[i].first < v) {
            r.exps.push_back(y.exps[i]);
            ++i;
        }
        if (i >= y.exps.size() || !(y.exps[i].first == v) || y.exps[i].second < e) return std::nullopt;
        if (y.exps[i].second > e) r.exps.push_back({v, y.exps[i].second - e});
        ++i;
    }
    for (; i < y.exps.size(); ++i) r.exps.push_back(y.exps[i]);
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    Polynomial rem = p, quot;
    const Monomial& lmq = q.leading_monomial();
    const BigInt& lcq = q.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lmr = rem.leading_monomial();
        const BigInt& lcr = rem.leading_coefficient();
        auto md = mono_div(lmr, lmq);
        if (!md || lcr % lcq != 0) return std::nullopt;
        BigInt c = lcr / lcq;
        Polynomial piece;
        piece.terms_.emplace(*md, c);
        quot += piece;
        rem -= piece * q;
    }
    return quot;
}

Polynomial Polynomial::mod2() const {
    Polynomial r;
    for (auto& [m, c] : terms_)
        if (c % 2 != 0) r.terms_.emplace(m, 1);
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        const Monomial& m = it->first;
        BigInt a = big_abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool coeff_shown = false;
        if (a != 1 || m.exps.empty()) {
            os << a.str();
            coeff_shown = true;
        }
        bool firstvar = true;
        for (auto& [v, e] : m.exps) {
            if (coeff_shown || !firstvar) os << "*";
            os << v.name();
            if (e > 1) os << "^" << e;
            firstvar = false;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) { throw std::invalid_argument("polynomial parse error: " + why); }

    BigInt parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer at position " + std::to_string(pos));
        return BigInt(s.substr(start, pos - start));
    }

    int parse_small_int() {
        BigInt v = parse_integer();
        return static_cast<int>(v.convert_to<long>());
    }

    VarId parse_var() {
        skip_ws();
        char c = s[pos];
        if (c == 't') {
            ++pos;
            return VarId::t();
        }
        if (c == 'x') {
            ++pos;
            return VarId::xi(parse_small_int());
        }
        if (c == 's') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string digits = s.substr(start, pos - start);
            if (pos < s.size() && s[pos] == '_') {
                ++pos;
                int i = std::stoi(digits);
                int j = parse_small_int();
                return VarId::sqrt(i, j);
            }
            if (digits.size() != 2) fail("sqrt variable needs two single-digit indices or i_j form");
            return VarId::sqrt(digits[0] - '0', digits[1] - '0');
        }
        if (c == 'v') {
            ++pos;
            int i = parse_small_int();
            if (pos >= s.size() || s[pos] != '_') fail("site variable needs v<i>_<c>");
            ++pos;
            int cc = parse_small_int();
            return VarId::site(i, cc);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_term() {
        // [integer] {*? var [^exp]}*
        BigInt coeff = 1;
        Monomial mono;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            any = true;
        }
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
            }
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c != 't' && c != 'x' && c != 's' && c != 'v') break;
            VarId v = parse_var();
            int e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_small_int();
            }
            bool merged = false;
            for (auto& [w, k] : mono.exps)
                if (w == v) {
                    k += e;
                    merged = true;
                    break;
                }
            if (!merged) mono.exps.push_back({v, e});
            any = true;
        }
        if (!any) fail("empty term");
        std::sort(mono.exps.begin(), mono.exps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Polynomial p;
        p.add_term(mono, coeff);
        return p;
    }

    Polynomial parse_sum() {
        Polynomial total;
        int sign = 1;
        skip_ws();
        if (peek() == '-') {
            sign = -1;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            Polynomial term = parse_term();
            total += sign < 0 ? -term : term;
            if (eof()) break;
            char c = peek();
            if (c == '+') {
                sign = 1;
                ++pos;
            } else if (c == '-') {
                sign = -1;
                ++pos;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
        }
        return total;
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& str) {
    Parser p(str);
    if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    if (p.peek() == '0') {
        size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return Polynomial();
        p.pos = save;
    }
    return p.parse_sum();
}

}  // namespace nlsnf
