#pragma once

#include "ncres/jet_mat.hpp"

#include <array>

namespace ncres {

enum class BundleKind { Spin, Exterior };

// Concrete matrix model of the Clifford action on the base bundle at n = 4:
// spинors (dim 4) or the full exterior algebra (dim 16). gamma[i] realizes
// c(e_i) with c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij, gamma_hat[i] (exterior
// only) realizes the +2 delta_ij counterpart built from wedge + contraction.
// The twisted module is the tensor product with a rank-k fiber.
struct CliffordRep {
    BundleKind kind = BundleKind::Spin;
    int fiber_dim = 1;
    int base_dim = 4;
    int module_dim = 4;
    std::array<CMat, 4> gamma;
    std::array<CMat, 4> gamma_hat;

    bool has_hat() const { return kind == BundleKind::Exterior; }
};

CliffordRep build_rep(int n, BundleKind kind, int fiber_dim);

// Sum xi_i gamma[i] (or gamma_hat[i]) on the base bundle.
CMat clifford_of_covector(const CliffordRep& rep, const std::array<cplx, 4>& xi, bool hatted);

// Matrix trace over the full twisted module.
cplx trace(const CliffordRep& rep, const CMat& m);

// A (x) Id_F and Id_base (x) B lifts to the twisted module.
CMat lift_base(const CliffordRep& rep, const CMat& a);
CMat lift_fiber(const CliffordRep& rep, const CMat& b);
JetMat lift_base(const CliffordRep& rep, const JetMat& a);
JetMat lift_fiber(const CliffordRep& rep, const JetMat& b);

// Pointwise twist data at the base point x0. phi/omega_f hold the values of
// the non-unitary part on the orthonormal frame directions; sigma_f holds the
// jets of the fiber connection coefficients in coordinate directions. The
// conformal factor f is carried as a jet with nonzero value.
struct TwistData {
    int fiber_dim = 1;
    std::array<CMat, 4> phi;
    std::array<CMat, 4> phi_star;
    std::array<CMat, 4> omega_f;
    std::array<CMat, 4> omega_f_star;
    std::array<JetMat, 4> sigma_f;
    Jet f = Jet::constant(1.0);

    static TwistData trivial(int fiber_dim);
    Jet f_inverse() const { return f.inverse(); }
};

} // namespace ncres
