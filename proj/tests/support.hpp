#pragma once

#include "bifurcation.hpp"

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testsupport {

using cscbif::FactorSpectrum;
using cscbif::ProductFamily;
using cscbif::Rational;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

// Independent oracle for sphere multiplicities: counts degree-d monomials in
// `vars` variables by explicit enumeration of exponent vectors, then uses the
// harmonic decomposition (degree d minus degree d-2).
inline long long monomial_count(int vars, int degree) {
    if (degree < 0) return 0;
    if (vars == 1) return 1;
    std::function<long long(int, int)> walk = [&](int remaining_vars, int remaining_degree) {
        if (remaining_vars == 1) return 1LL;
        long long total = 0;
        for (int use = 0; use <= remaining_degree; ++use) {
            total += walk(remaining_vars - 1, remaining_degree - use);
        }
        return total;
    };
    return walk(vars, degree);
}

inline long long harmonic_dim_oracle(int n, int k) {
    return monomial_count(n + 1, k) - monomial_count(n + 1, k - 2);
}

inline FactorSpectrum synthetic_factor(
    std::string name, int dim, Rational kappa,
    std::vector<std::pair<Rational, long long>> tail,
    bool harmonically_free = false) {
    FactorSpectrum spectrum;
    spectrum.name = std::move(name);
    spectrum.dim = dim;
    spectrum.scalar_curvature = std::move(kappa);
    spectrum.harmonically_free = harmonically_free;
    spectrum.entries.push_back({0, Rational(0), 1});
    int index = 1;
    for (auto& [eigenvalue, multiplicity] : tail) {
        spectrum.entries.push_back({index++, std::move(eigenvalue), multiplicity});
    }
    return spectrum;
}

struct FamilyWindow {
    ProductFamily fam;
    Rational lo;
    Rational hi;
};

inline FactorSpectrum random_factor(std::mt19937_64& rng, int tag) {
    std::uniform_int_distribution<int> dim_dist(2, 4);
    std::uniform_int_distribution<int> kappa_num(-9, 12);
    std::uniform_int_distribution<int> kappa_den(1, 3);
    std::uniform_int_distribution<int> count_dist(4, 8);
    std::uniform_int_distribution<int> step_num(1, 6);
    std::uniform_int_distribution<int> step_den(1, 2);
    std::uniform_int_distribution<int> mult_dist(1, 3);
    std::uniform_int_distribution<int> hf_dist(0, 9);

    FactorSpectrum spectrum;
    spectrum.name = "random" + std::to_string(tag);
    spectrum.dim = dim_dist(rng);
    spectrum.scalar_curvature = Rational(kappa_num(rng), kappa_den(rng));
    spectrum.harmonically_free = hf_dist(rng) == 0;
    spectrum.entries.push_back({0, Rational(0), 1});
    const int count = count_dist(rng);
    Rational eigenvalue(0);
    for (int k = 1; k < count; ++k) {
        eigenvalue += Rational(step_num(rng), step_den(rng));
        spectrum.entries.push_back({k, eigenvalue, mult_dist(rng)});
    }
    return spectrum;
}

inline void extend_spectrum(FactorSpectrum& spectrum, const Rational& beyond) {
    Rational last = spectrum.entries.back().eigenvalue;
    while (last <= beyond) {
        last = last * 2 + 1;
        spectrum.entries.push_back({static_cast<int>(spectrum.entries.size()), last, 1});
    }
}

// A nondegenerate random family plus a window the truncation provably covers
// with a multiplicative margin of 9/8, so Morse brackets stay covered too.
inline FamilyWindow random_family_window(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FactorSpectrum f0 = random_factor(rng, 0);
        FactorSpectrum f1 = random_factor(rng, 1);
        const int m = f0.dim + f1.dim;
        const Rational thr0 = f0.scalar_curvature / (m - 1);
        const Rational thr1 = f1.scalar_curvature / (m - 1);
        extend_spectrum(f0, thr0);  // keep the star indices inside truncation
        extend_spectrum(f1, thr1);

        auto fam = cscbif::make_family(f0, f1);
        if (fam.degenerate_pair) continue;

        for (int widen = 0; widen < 64; ++widen) {
            const Rational coeff_last0 = f0.entries.back().eigenvalue - thr0;
            const Rational coeff_last1 = f1.entries.back().eigenvalue - thr1;
            const Rational lo_min = thr1 > 0 ? thr1 / coeff_last0 : Rational(1, 1000);
            const Rational hi_max = thr0 > 0 ? coeff_last1 / thr0 : Rational(1000);
            const Rational lo = lo_min * Rational(9, 8);
            const Rational hi = hi_max * Rational(8, 9);
            if (lo < hi) {
                return {cscbif::make_family(f0, f1), lo, hi};
            }
            extend_spectrum(f0, f0.entries.back().eigenvalue * 4);
            extend_spectrum(f1, f1.entries.back().eigenvalue * 4);
        }
    }
    throw std::runtime_error("random_family_window failed to produce a covered window");
}

// Factor 1 rescaled by the homothety g -> c*g: eigenvalues and curvature
// divide by c.
inline FactorSpectrum scale_metric(const FactorSpectrum& spectrum, const Rational& c) {
    FactorSpectrum scaled = spectrum;
    scaled.scalar_curvature /= c;
    for (auto& entry : scaled.entries) entry.eigenvalue /= c;
    return scaled;
}

}  // namespace testsupport
