#pragma once

#include "ncres/clifford.hpp"
#include "ncres/jet_mat.hpp"

#include <array>
#include <optional>

namespace ncres {

enum class MetricMode { BoundaryCollar, InteriorNormal };

// Coefficients of the quadratic part of an interior metric in normal
// coordinates: g_ij(x) = delta_ij + sum_{kl} c[i][j][k][l] x_k x_l, symmetric
// under i<->j and k<->l.
using QuadCoeffs = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

// Order-2 jets of the metric and everything derived from it at the base
// point. Collar mode models h(xn)^{-1} g_dM + dxn^2 with normal coordinates
// on the boundary (the tangential metric carries no x' jets); interior-normal
// mode models normal coordinates in the manifold (first derivatives vanish).
struct MetricJet {
    MetricMode mode = MetricMode::InteriorNormal;
    double h_prime0 = 0.0;
    std::optional<double> h_double_prime0;
    QuadCoeffs quad{};

    std::array<std::array<Jet, 4>, 4> g_lo;
    std::array<std::array<Jet, 4>, 4> g_up;
    Jet sqrt_det;
    // christoffel[k][i][j] = Gamma^k_{ij}
    std::array<std::array<std::array<Jet, 4>, 4>, 4> christoffel;
    // frame[i][j]: orthonormal frame e~_i = frame[i][j] d/dx_j
    std::array<std::array<Jet, 4>, 4> frame;

    Jet h_jet() const; // collar mode only
};

MetricJet build_collar_metric(double h_prime0, std::optional<double> h_double_prime0 = {});
MetricJet build_interior_metric(const QuadCoeffs& quad);

// Scalar curvature at the base point. Sign convention: positive on the round
// sphere.
double scalar_curvature(const MetricJet& m);

// Clifford connection coefficients sigma(d/dx_i) on the base bundle as jets:
// the spinor connection for the spin bundle, the [c c / c^ c^] combination for
// the exterior bundle. Vanish at x0 in interior-normal mode.
std::array<JetMat, 4> connection_jets(const MetricJet& m, const CliffordRep& rep);

// Jets of the frame connection matrix W_{s,t}(d/dx_i) = <nabla_i e~_t, e~_s>.
std::array<std::array<std::array<Jet, 4>, 4>, 4> frame_connection(const MetricJet& m);

// c(xi')(x) = sum_{j<n} xi'_j c(dx_j)(x) in collar mode; its xn derivative at
// x0 is (h'(0)/2) c(xi')(x0).
JetMat frame_xi_derivative(const MetricJet& m, const CliffordRep& rep,
                           const std::array<double, 3>& xi_prime);

struct LaplaceNormalForm {
    std::array<JetMat, 4> omega;
    CMat endomorphism; // E at x0
};

// Unique connection + endomorphism presentation of the Laplace-type operator
// -(g^{ij} d_i d_j + A^i d_i + B).
LaplaceNormalForm laplace_decompose(const MetricJet& g, const std::array<JetMat, 4>& a_coeff,
                                    const JetMat& b_coeff);

// Rebuild (A, B at x0) from a normal form; used to check the decomposition.
struct ReassembledOperator {
    std::array<CMat, 4> a_value;
    std::array<std::array<CMat, 4>, 4> a_dx; // d/dx_j of A^i at x0
    CMat b_value;
};
ReassembledOperator laplace_reassemble(const MetricJet& g, const LaplaceNormalForm& nf);

} // namespace ncres
