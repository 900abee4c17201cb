#pragma once

#include "ncres/rational.hpp"

namespace ncres {

// Partial-fraction data of a proper rational r at its upper half-plane pole:
// r = sum_q upper[q-1]/(xin - i a)^q + (part with poles at -i a), q = 1..m.
struct UpperPoleExpansion {
    std::vector<JetMat> coeffs; // coeffs[q-1] multiplies (xin - i a)^(-q)
    Jet a;                      // sqrt of the pole parameter, positive constant part
};

UpperPoleExpansion upper_pole_expansion(const RationalXiN& r);

// Component of r extending analytically to the lower half-plane, i.e. the
// part of the partial-fraction expansion with poles only at xin = +i a.
// Realized algebraically; the u -> 0^- limit of the contour integral is the
// classification of poles by half-plane.
RationalXiN pi_plus(const RationalXiN& r);

// (1/2pi) * contour integral over a curve surrounding the upper half-plane
// poles; equals i times the residue sum. For integrable r this is
// (1/2pi) * the real-line integral.
JetMat pi_prime(const RationalXiN& r);

// Real-line integral of r in xin: 2 pi i times the upper residue sum.
JetMat integrate_line(const RationalXiN& r);

} // namespace ncres
