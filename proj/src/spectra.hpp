#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cscbif {

// One Laplace-Beltrami eigenvalue with its multiplicity. Entry k of a
// spectrum carries the k-th distinct eigenvalue; eigenvalues strictly
// increase with the index and entry 0 is always (0, multiplicity 1) on a
// connected manifold.
struct SpectrumEntry {
    int index = 0;
    Rational eigenvalue;
    long long multiplicity = 1;
};

// Spectral and geometric data of one closed factor with constant scalar
// curvature. Immutable by convention after construction; every operation in
// this library treats it as a value.
struct FactorSpectrum {
    std::string name;
    int dim = 0;
    Rational scalar_curvature;
    std::optional<double> volume;  // only the Yamabe obstruction needs it
    bool einstein = false;
    bool harmonically_free = false;
    std::vector<SpectrumEntry> entries;

    int truncation_count() const { return static_cast<int>(entries.size()); }
    const Rational& eigenvalue(int k) const;
    long long multiplicity(int k) const;
};

// Dimension of the space of degree-k harmonic polynomials in n+1 variables:
// C(n+k, k) - C(n+k-2, k-2). Equals the multiplicity of the k-th sphere
// eigenvalue.
long long harmonic_polynomial_dim(int n, int k);

// Unit-radius round sphere S^n: kappa = n(n-1), rho_k = k(k+n-1).
FactorSpectrum sphere_spectrum(int n, int count);

// Real projective space RP^n with the metric covered by the unit S^n:
// the even-degree restriction of the sphere spectrum, half the volume.
FactorSpectrum projective_spectrum(int n, int count);

// Throws Error(Errc::validation) naming the offending entry.
void validate_spectrum(const FactorSpectrum& spectrum);

FactorSpectrum spectrum_from_json(const std::string& json_text);
std::string spectrum_to_json(const FactorSpectrum& spectrum);

FactorSpectrum load_spectrum(const std::string& path);
void save_spectrum(const FactorSpectrum& spectrum, const std::string& path);

}  // namespace cscbif
