#pragma once

#include "ncres/error.hpp"
#include "ncres/jet.hpp"

#include <array>
#include <functional>
#include <vector>

namespace ncres {

inline constexpr int kMaxQuadratureDegree = 10;

struct SphereNode3 {
    std::array<double, 3> xi;
    double weight;
};

struct SphereNode4 {
    std::array<double, 4> xi;
    double weight;
};

// Product rule on the unit sphere of R^3, exact for polynomials of total
// degree <= degree_bound (Gauss-Legendre in the polar cosine, uniform in the
// azimuth).
std::vector<SphereNode3> sphere2_nodes(int degree_bound);

// Same on the unit sphere of R^4 (fourth component handled by a
// Gauss-Chebyshev rule of the second kind).
std::vector<SphereNode4> sphere3_nodes(int degree_bound);

// Surface integral over {|xi'| = 1} in R^3 of a polynomial integrand.
cplx sphere_integrate(const std::function<cplx(const std::array<double, 3>&)>& fn,
                      int degree_bound);

// Surface integral over {|xi| = 1} in R^4.
cplx sphere3_integrate(const std::function<cplx(const std::array<double, 4>&)>& fn,
                       int degree_bound);

// Measure of the unit sphere in R^3 as the engine computes it.
double sphere2_measure();

// Measure of the unit sphere in R^4.
double sphere3_measure();

} // namespace ncres
