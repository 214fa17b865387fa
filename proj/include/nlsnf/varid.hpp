#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <tuple>

namespace nlsnf {

// Variable universe of the polynomial ring:
//   Spectral      the eigenvalue variable t
//   Xi(i)         action parameter, printed x<i>, i >= 1
//   Sqrt(i,j)     formal square root s<ij> with s^2 = x_i * x_j, stored i < j
//   Site(i,c)     coordinate c of site vector i, printed v<i>_<c>; used by the
//                 genericity module for resonance polynomials in the sites
struct VarId {
    enum Kind : unsigned char { Spectral = 0, Xi = 1, Sqrt = 2, Site = 3 };

    Kind kind = Spectral;
    int a = 0;
    int b = 0;

    static VarId t() { return VarId{Spectral, 0, 0}; }
    static VarId xi(int i) {
        if (i < 1) throw std::invalid_argument("xi index must be >= 1");
        return VarId{Xi, i, 0};
    }
    static VarId sqrt(int i, int j) {
        if (i == j || i < 1 || j < 1) throw std::invalid_argument("sqrt pair must be distinct positive indices");
        if (i > j) std::swap(i, j);
        return VarId{Sqrt, i, j};
    }
    static VarId site(int i, int c) {
        if (i < 1 || c < 1) throw std::invalid_argument("site variable indices must be >= 1");
        return VarId{Site, i, c};
    }

    friend auto operator<=>(const VarId& x, const VarId& y) {
        return std::tie(x.kind, x.a, x.b) <=> std::tie(y.kind, y.a, y.b);
    }
    friend bool operator==(const VarId& x, const VarId& y) = default;

    std::string name() const {
        switch (kind) {
            case Spectral:
                return "t";
            case Xi:
                return "x" + std::to_string(a);
            case Sqrt:
                // two-digit indices get an explicit separator so names stay unambiguous
                if (a <= 9 && b <= 9) return "s" + std::to_string(a) + std::to_string(b);
                return "s" + std::to_string(a) + "_" + std::to_string(b);
            case Site:
                return "v" + std::to_string(a) + "_" + std::to_string(b);
        }
        return "?";
    }
};

}  // namespace nlsnf
