#pragma once

#include "ncres/error.hpp"

#include <array>
#include <complex>
#include <cstdint>

namespace ncres {

using cplx = std::complex<double>;

// Formal variables carried by a jet. The first four are the coordinates
// (x4 = xn is the normal coordinate near the boundary), the last four the
// covector components. Boundary-mode values never populate Xin: there the
// conormal variable is kept exact through RationalXiN instead.
enum Var : int { VX1 = 0, VX2 = 1, VX3 = 2, VXN = 3, VXI1 = 4, VXI2 = 5, VXI3 = 6, VXIN = 7 };

inline constexpr int kNumVars = 8;
inline constexpr int kJetCoeffs = 45; // 1 constant + 8 linear + 36 quadratic

namespace detail {

struct JetTables {
    // quad[v][w] = coefficient index of the monomial x_v x_w (v <= w)
    int quad[kNumVars][kNumVars] = {};
    // degree of each coefficient index
    int deg[kJetCoeffs] = {};
    // exponent of var v in monomial i
    int expo[kJetCoeffs][kNumVars] = {};
    // multiplication table: out accumulates a[ia]*b[ib]
    struct Triple {
        int16_t ia, ib, out;
    };
    std::array<Triple, 153> mul = {};
    int mul_count = 0;

    constexpr JetTables()
    {
        int idx = 1;
        // linear block
        for (int v = 0; v < kNumVars; ++v) {
            deg[idx] = 1;
            expo[idx][v] = 1;
            ++idx;
        }
        // quadratic block
        for (int v = 0; v < kNumVars; ++v) {
            for (int w = v; w < kNumVars; ++w) {
                quad[v][w] = idx;
                quad[w][v] = idx;
                deg[idx] = 2;
                expo[idx][v] += 1;
                expo[idx][w] += 1;
                ++idx;
            }
        }
        // multiplication pairs with total degree <= 2
        for (int ia = 0; ia < kJetCoeffs; ++ia) {
            for (int ib = 0; ib < kJetCoeffs; ++ib) {
                if (deg[ia] + deg[ib] > 2) continue;
                int e[kNumVars] = {};
                for (int v = 0; v < kNumVars; ++v) e[v] = expo[ia][v] + expo[ib][v];
                int out = monomial_index(e);
                mul[mul_count] = Triple{(int16_t)ia, (int16_t)ib, (int16_t)out};
                ++mul_count;
            }
        }
    }

    constexpr int monomial_index(const int e[kNumVars]) const
    {
        int total = 0;
        int first = -1, second = -1;
        for (int v = 0; v < kNumVars; ++v) {
            for (int k = 0; k < e[v]; ++k) {
                if (first < 0)
                    first = v;
                else
                    second = v;
            }
            total += e[v];
        }
        if (total == 0) return 0;
        if (total == 1) return 1 + first;
        return quad[first][second];
    }
};

inline constexpr JetTables kJetTables{};

} // namespace detail

// Order-2 truncated Taylor expansion in the 8 formal variables, complex
// coefficients. exact_order tracks through how many total degrees the stored
// coefficients agree with the represented function: differentiation of an
// already-truncated jet loses one order, and reading past the budget is the
// JetBudgetExceeded condition.
class Jet {
public:
    Jet() = default;

    static Jet constant(cplx z)
    {
        Jet j;
        j.c_[0] = z;
        return j;
    }

    static Jet variable(Var v, cplx base = 0.0)
    {
        Jet j;
        j.c_[0] = base;
        j.c_[1 + (int)v] = 1.0;
        return j;
    }

    cplx value() const { return c_[0]; }
    cplx linear(Var v) const { return c_[1 + (int)v]; }
    // coefficient of the monomial x_v x_w (not the derivative; x_v^2 carries 1/2 * d^2f)
    cplx quad(Var v, Var w) const { return c_[detail::kJetTables.quad[(int)v][(int)w]]; }

    cplx coeff(int i) const { return c_[i]; }
    void set_coeff(int i, cplx z) { c_[i] = z; }

    int exact_order() const { return exact_; }
    void set_exact_order(int e) { exact_ = (int8_t)e; }

    bool is_constant() const
    {
        for (int i = 1; i < kJetCoeffs; ++i)
            if (c_[i] != 0.0) return false;
        return true;
    }

    Jet operator-() const
    {
        Jet r;
        for (int i = 0; i < kJetCoeffs; ++i) r.c_[i] = -c_[i];
        r.exact_ = exact_;
        return r;
    }

    Jet& operator+=(const Jet& o)
    {
        for (int i = 0; i < kJetCoeffs; ++i) c_[i] += o.c_[i];
        exact_ = exact_ < o.exact_ ? exact_ : o.exact_;
        return *this;
    }

    Jet& operator-=(const Jet& o)
    {
        for (int i = 0; i < kJetCoeffs; ++i) c_[i] -= o.c_[i];
        exact_ = exact_ < o.exact_ ? exact_ : o.exact_;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        Jet r;
        // constants are everywhere (twist matrices, collapsed values); skip the
        // convolution for them
        if (a.is_constant()) {
            for (int i = 0; i < kJetCoeffs; ++i) r.c_[i] = a.c_[0] * b.c_[i];
        } else if (b.is_constant()) {
            for (int i = 0; i < kJetCoeffs; ++i) r.c_[i] = a.c_[i] * b.c_[0];
        } else {
            for (const auto& t : detail::kJetTables.mul) r.c_[t.out] += a.c_[t.ia] * b.c_[t.ib];
        }
        r.exact_ = a.exact_ < b.exact_ ? a.exact_ : b.exact_;
        return r;
    }

    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend Jet operator*(const Jet& a, cplx s)
    {
        Jet r;
        for (int i = 0; i < kJetCoeffs; ++i) r.c_[i] = a.c_[i] * s;
        r.exact_ = a.exact_;
        return r;
    }
    friend Jet operator*(cplx s, const Jet& a) { return a * s; }

    friend Jet operator+(const Jet& a, cplx s)
    {
        Jet r = a;
        r.c_[0] += s;
        return r;
    }
    friend Jet operator-(const Jet& a, cplx s)
    {
        Jet r = a;
        r.c_[0] -= s;
        return r;
    }

    // d/dv; shifts coefficients down one degree and spends one order of budget
    Jet derive(Var v) const;

    // multiplicative inverse; requires a nonzero constant term
    Jet inverse() const;

    // principal square root; requires a nonzero constant term
    Jet sqrt() const;

    Jet conjugate() const
    {
        Jet r;
        for (int i = 0; i < kJetCoeffs; ++i) r.c_[i] = std::conj(c_[i]);
        r.exact_ = exact_;
        return r;
    }

    // evaluate the truncated polynomial at the given displacements
    cplx eval(const std::array<cplx, kNumVars>& d) const;

    double max_abs() const
    {
        double m = 0;
        for (const auto& z : c_) m = std::max(m, std::abs(z));
        return m;
    }

private:
    std::array<cplx, kJetCoeffs> c_{};
    int8_t exact_ = 2;
};

Jet jet_pow2(const Jet& a); // a*a

} // namespace ncres
