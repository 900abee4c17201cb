#pragma once

#include "ncres/jet.hpp"
#include "ncres/jet_mat.hpp"
#include "ncres/rational.hpp"

#include <random>

namespace ncres::test {

inline cplx rand_cplx(std::mt19937_64& rng, double scale = 1.0)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return scale * cplx(u(rng), u(rng));
}

inline double rand_real(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

inline Jet rand_jet(std::mt19937_64& rng, double scale = 1.0, bool nonzero_const = false)
{
    Jet j;
    for (int i = 0; i < kJetCoeffs; ++i) j.set_coeff(i, rand_cplx(rng, scale));
    if (nonzero_const) j.set_coeff(0, j.coeff(0) + 2.0);
    return j;
}

inline CMat rand_cmat(std::mt19937_64& rng, int n, double scale = 1.0)
{
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rand_cplx(rng, scale);
    return m;
}

inline CMat rand_anti_hermitian(std::mt19937_64& rng, int n, double scale = 1.0)
{
    CMat a = rand_cmat(rng, n, scale);
    CMat r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = 0.5 * (a(i, j) - std::conj(a(j, i)));
    return r;
}

inline JetMat rand_jetmat(std::mt19937_64& rng, int n, double scale = 1.0)
{
    JetMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rand_jet(rng, scale);
    return m;
}

inline double cdist(cplx a, cplx b) { return std::abs(a - b); }

inline double mat_dist(const CMat& a, const CMat& b) { return (a - b).max_abs(); }

} // namespace ncres::test
