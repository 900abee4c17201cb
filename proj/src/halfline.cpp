#include "ncres/halfline.hpp"

#include <cmath>

namespace ncres {

namespace {

double binom(int n, int k)
{
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Jet jet_pow(const Jet& a, int p)
{
    Jet r = Jet::constant(1.0);
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
}

// j-th derivative of the numerator polynomial, evaluated at the jet point z
JetMat poly_derivative_at(const std::vector<JetMat>& num, int j, const Jet& z, int dim)
{
    JetMat acc(dim, dim);
    for (int k = j; k < (int)num.size(); ++k) {
        double fall = 1;
        for (int t = 0; t < j; ++t) fall *= (k - t);
        acc += num[k].scaled(jet_pow(z, k - j) * fall);
    }
    return acc;
}

} // namespace

UpperPoleExpansion upper_pole_expansion(const RationalXiN& r)
{
    if (r.has_poly_part()) throw Error(ErrorCode::NotProper, "polynomial part present");
    UpperPoleExpansion ex;
    if (r.pole_order() == 0) return ex;

    const int m = r.pole_order();
    const int dim = r.dim();
    ex.a = r.pole_param_sq().sqrt();
    const Jet ia = ex.a * cplx(0.0, 1.0);
    const Jet two_ia = ia * 2.0;
    const Jet inv_two_ia = two_ia.inverse();

    // A_q = (1/(m-q)!) d^(m-q)/dxin^(m-q) [ N(xin) (xin + i a)^(-m) ] at xin = i a,
    // via Leibniz; ((xin+ia)^(-m))^(l) at ia = (-1)^l m(m+1)..(m+l-1) (2ia)^(-m-l).
    std::vector<Jet> gpow(2 * m + 1); // (2ia)^(-m-l) for l = 0..m
    {
        Jet cur = jet_pow(inv_two_ia, m);
        for (int l = 0; l <= m; ++l) {
            gpow[l] = cur;
            cur = cur * inv_two_ia;
        }
    }
    ex.coeffs.assign(m, JetMat(dim, dim));
    for (int q = 1; q <= m; ++q) {
        const int p = m - q;
        JetMat acc(dim, dim);
        for (int j = 0; j <= p; ++j) {
            const int l = p - j;
            double rising = 1;
            for (int t = 0; t < l; ++t) rising *= (m + t);
            double sign = (l % 2 == 0) ? 1.0 : -1.0;
            JetMat nj = poly_derivative_at(r.numerator(), j, ia, dim);
            acc += nj.scaled(gpow[l] * (binom(p, j) * sign * rising));
        }
        double pfact = 1;
        for (int t = 2; t <= p; ++t) pfact *= t;
        ex.coeffs[q - 1] = acc.scaled(cplx(1.0 / pfact));
    }
    return ex;
}

RationalXiN pi_plus(const RationalXiN& r)
{
    if (r.has_poly_part()) throw Error(ErrorCode::NotProper, "polynomial part present");
    if (r.pole_order() == 0) return RationalXiN::zero(r.dim());

    UpperPoleExpansion ex = upper_pole_expansion(r);
    const int m = r.pole_order();
    const int dim = r.dim();
    const Jet ia = ex.a * cplx(0.0, 1.0);

    // sum_q A_q/(xin - ia)^q = [ sum_q A_q (xin + ia)^q (xin^2+aSq)^(m-q) ] / (xin^2+aSq)^m
    std::vector<JetMat> num(2 * m, JetMat(dim, dim));
    for (int q = 1; q <= m; ++q) {
        if (ex.coeffs[q - 1].max_abs() == 0.0) continue;
        // scalar polynomial (xin + ia)^q (xin^2 + aSq)^(m-q)
        std::vector<Jet> s(q + 1);
        for (int j = 0; j <= q; ++j) s[j] = jet_pow(ia, q - j) * binom(q, j);
        std::vector<Jet> d = denominator_poly(r.pole_param_sq(), m - q);
        std::vector<Jet> full(s.size() + d.size() - 1);
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = 0; j < d.size(); ++j) full[i + j] += s[i] * d[j];
        for (size_t k = 0; k < full.size(); ++k) num[k] += ex.coeffs[q - 1].scaled(full[k]);
    }
    return RationalXiN::proper(std::move(num), r.pole_param_sq(), m);
}

JetMat pi_prime(const RationalXiN& r)
{
    if (r.has_poly_part()) throw Error(ErrorCode::NotProper, "polynomial part present");
    if (r.pole_order() == 0) return JetMat(r.dim(), r.dim());
    UpperPoleExpansion ex = upper_pole_expansion(r);
    return ex.coeffs[0].scaled(cplx(0.0, 1.0));
}

JetMat integrate_line(const RationalXiN& r)
{
    if (r.has_poly_part())
        throw Error(ErrorCode::DivergentIntegral, "polynomial part present");
    if (r.pole_order() == 0) return JetMat(r.dim(), r.dim());
    if ((int)r.numerator().size() - 1 > 2 * r.pole_order() - 2)
        throw Error(ErrorCode::DivergentIntegral, "numerator decays too slowly");
    UpperPoleExpansion ex = upper_pole_expansion(r);
    return ex.coeffs[0].scaled(cplx(0.0, 2.0 * M_PI));
}

} // namespace ncres
