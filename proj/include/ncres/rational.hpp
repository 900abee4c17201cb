#pragma once

#include "ncres/jet_mat.hpp"

#include <vector>

namespace ncres {

inline constexpr int kMaxPoleOrder = 6;

// Matrix-valued rational function of the conormal variable xin:
//
//   r(xin) = sum_k poly[k] xin^k  +  (sum_k num[k] xin^k) / (xin^2 + aSq)^m
//
// with Jet-valued coefficients and deg(num) < 2m. aSq has strictly positive
// constant part, so the poles sit at +/- i a off the real axis. All symbols in
// a fixed (x, xi') evaluation context share the same aSq.
class RationalXiN {
public:
    RationalXiN() = default;

    static RationalXiN zero(int dim);
    static RationalXiN from_poly(std::vector<JetMat> poly);
    static RationalXiN proper(std::vector<JetMat> num, const Jet& a_sq, int m);

    int dim() const { return dim_; }
    int pole_order() const { return m_; }
    const Jet& pole_param_sq() const { return a_sq_; }
    const std::vector<JetMat>& poly_part() const { return poly_; }
    const std::vector<JetMat>& numerator() const { return num_; }

    bool is_zero() const { return poly_.empty() && num_.empty(); }
    bool has_poly_part() const { return !poly_.empty(); }

    RationalXiN operator-() const;
    RationalXiN& operator+=(const RationalXiN& o);
    RationalXiN& operator-=(const RationalXiN& o);
    friend RationalXiN operator+(RationalXiN a, const RationalXiN& b) { return a += b; }
    friend RationalXiN operator-(RationalXiN a, const RationalXiN& b) { return a -= b; }
    friend RationalXiN operator*(const RationalXiN& a, const RationalXiN& b);

    RationalXiN scaled(const Jet& s) const;
    RationalXiN scaled(cplx s) const;

    // d/dxin; raises the pole order of the proper part by one
    RationalXiN derive_xin() const;

    // d/dv for a jet variable; includes the chain rule through aSq
    RationalXiN derive_var(Var v) const;

    // pointwise evaluation away from the poles
    JetMat eval(cplx xi_n) const;

    // every jet collapsed to its constant part; drops the x and xi'
    // dependence once no further derivatives are needed
    RationalXiN constant_collapse() const;

    // tr(a(xin) * b(xin)) as a dim-1 rational function
    friend RationalXiN trace_mul(const RationalXiN& a, const RationalXiN& b);

    double max_abs() const;

private:
    void trim();
    void check_pole_budget() const;

    int dim_ = 0;
    std::vector<JetMat> poly_;
    std::vector<JetMat> num_;
    Jet a_sq_;
    int m_ = 0;
};

// coefficients of (xin^2 + aSq)^m
std::vector<Jet> denominator_poly(const Jet& a_sq, int m);

bool same_pole_param(const Jet& a, const Jet& b);

} // namespace ncres
