#include "ncres/jet.hpp"

#include <cmath>

namespace ncres {

Jet Jet::derive(Var v) const
{
    if (exact_ <= 0) throw Error(ErrorCode::JetBudgetExceeded, "derivative of an order-0 jet");
    Jet r;
    const auto& T = detail::kJetTables;
    const int iv = (int)v;
    // linear -> constant
    r.c_[0] = c_[1 + iv];
    // quadratic -> linear
    for (int w = 0; w < kNumVars; ++w) {
        int src = T.quad[iv][w];
        double mult = (w == iv) ? 2.0 : 1.0;
        r.c_[1 + w] += mult * c_[src];
    }
    r.exact_ = (int8_t)(exact_ - 1);
    return r;
}

Jet Jet::inverse() const
{
    cplx a0 = c_[0];
    if (a0 == 0.0) throw Error(ErrorCode::NonInvertibleJet, "zero constant term");
    // a = a0 (1 + u), u nilpotent: 1/a = (1/a0)(1 - u + u^2)
    Jet u = *this * (1.0 / a0);
    u.c_[0] = 0.0;
    Jet r = Jet::constant(1.0) - u + u * u;
    r = r * (1.0 / a0);
    r.exact_ = exact_;
    return r;
}

Jet Jet::sqrt() const
{
    cplx a0 = c_[0];
    if (a0 == 0.0) throw Error(ErrorCode::NonInvertibleJet, "sqrt of jet with zero constant term");
    Jet u = *this * (1.0 / a0);
    u.c_[0] = 0.0;
    // (1+u)^(1/2) = 1 + u/2 - u^2/8
    Jet r = Jet::constant(1.0) + u * 0.5 - (u * u) * 0.125;
    r = r * std::sqrt(a0);
    r.exact_ = exact_;
    return r;
}

cplx Jet::eval(const std::array<cplx, kNumVars>& d) const
{
    const auto& T = detail::kJetTables;
    cplx s = c_[0];
    for (int v = 0; v < kNumVars; ++v) s += c_[1 + v] * d[v];
    for (int v = 0; v < kNumVars; ++v)
        for (int w = v; w < kNumVars; ++w) s += c_[T.quad[v][w]] * d[v] * d[w];
    return s;
}

Jet jet_pow2(const Jet& a) { return a * a; }

} // namespace ncres
