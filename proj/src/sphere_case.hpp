#pragma once

#include "bifurcation.hpp"

namespace cscbif {

// Certificate that g_lambda cannot minimize the normalized total scalar
// curvature in its conformal class: its volume-normalized scalar curvature
// exceeds the round-sphere threshold Y(S^m) = m(m-1) * omega_m^(2/m).
// Certification is conservative; false is never a claim of minimality.
struct ObstructionResult {
    Rational lambda;
    double normalized_scalar = 0.0;  // kappa_lambda * V(lambda)^(2/m)
    double sphere_yamabe = 0.0;      // m(m-1) * omega_m^(2/m)
    bool certified_not_yamabe = false;
    double margin = 0.0;  // normalized_scalar - sphere_yamabe
};

// The i-th degeneracy instant of S^n x S^n in (0, 1]:
// n(n-1) / (i(i+n-1)(2n-1) - n(n-1)), exact.
Rational sphere_instant(int n, int i);

// ((n-1)/n, n/(n-1)), the instant-free interval around lambda = 1.
RigidityInterval sphere_rigidity_interval(int n);

// True iff the generic engine on two S^n factors reproduces the closed-form
// instants over the widest window the truncation covers within (0, 1],
// with multiplicity harmonic_polynomial_dim(n, i) and a bifurcation
// classification at every instant.
bool crosscheck_sphere(int n, int count);

// Surface volume of the unit round m-sphere.
double unit_sphere_volume(int m);

// Requires volume data on both factors. Floating point; relative accuracy
// documented as 1e-9, certification demands a 1e-6 relative margin.
ObstructionResult yamabe_obstruction(const ProductFamily& fam, const Rational& lambda);

}  // namespace cscbif
