#include "sphere_case.hpp"

#include <cmath>

namespace cscbif {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRelativeMargin = 1e-6;

}  // namespace

Rational sphere_instant(int n, int i) {
    if (n < 2) throw Error(Errc::invalid_argument, "sphere_instant requires n >= 2");
    if (i < 1) throw Error(Errc::invalid_argument, "sphere_instant requires i >= 1");
    const Rational numerator = Rational(n) * (n - 1);
    const Rational denominator = Rational(i) * (i + n - 1) * (2 * n - 1) - numerator;
    return numerator / denominator;
}

RigidityInterval sphere_rigidity_interval(int n) {
    if (n < 2) throw Error(Errc::invalid_argument, "sphere_rigidity_interval requires n >= 2");
    return {Rational(n - 1, n), Rational(n, n - 1)};
}

bool crosscheck_sphere(int n, int count) {
    const auto fam = make_family(sphere_spectrum(n, count), sphere_spectrum(n, count));
    const Rational coeff_last = coeff_a(fam, count - 1);
    if (coeff_last <= 0) {
        throw TruncationError(
            {0, count, count + 1, to_fraction(fam.threshold0)},
            "insufficient truncation: " + std::to_string(count) +
                " eigenvalues never pass kappa/(m-1) = " + to_fraction(fam.threshold0));
    }
    // Smallest coverable edge, widened by 9/8 so the classification
    // brackets (eps <= 1/8) stay inside the covered region.
    const Rational lo = fam.threshold1 / coeff_last * Rational(9, 8);
    const auto instants = enumerate_instants(fam, lo, Rational(1));

    std::size_t expected = 0;
    for (int i = 1;; ++i) {
        const Rational lambda = sphere_instant(n, i);
        if (lambda < lo) break;
        if (expected >= instants.size()) return false;
        const auto& instant = instants[instants.size() - 1 - expected];  // descending in i
        if (instant.lambda != lambda) return false;
        if (instant.contributors.size() != 1) return false;
        const auto& c = instant.contributors.front();
        if (c.i != i || c.j != 0) return false;
        if (c.multiplicity != harmonic_polynomial_dim(n, i)) return false;
        if (c.kind != BranchKind::increasing_with_zero) return false;
        const auto checked = classify_instant(fam, instant);
        if (checked.classification != InstantClass::bifurcation &&
            checked.classification != InstantClass::equivariant_bifurcation) {
            return false;
        }
        ++expected;
    }
    return expected == instants.size();
}

double unit_sphere_volume(int m) {
    return 2.0 * std::pow(kPi, (m + 1) / 2.0) / std::tgamma((m + 1) / 2.0);
}

ObstructionResult yamabe_obstruction(const ProductFamily& fam, const Rational& lambda) {
    if (lambda <= 0) throw Error(Errc::invalid_argument, "lambda must be positive");
    if (!fam.factor0.volume || !fam.factor1.volume) {
        throw Error(Errc::missing_volume,
                    "yamabe obstruction requires volume data on both factors");
    }
    ObstructionResult result;
    result.lambda = lambda;
    const double lam = to_double(lambda);
    const double volume = *fam.factor0.volume * *fam.factor1.volume *
                          std::pow(lam, fam.factor1.dim / 2.0);
    const double kappa = to_double(product_scalar_curvature(fam, lambda));
    result.normalized_scalar = kappa * std::pow(volume, 2.0 / fam.m);
    result.sphere_yamabe =
        fam.m * (fam.m - 1) * std::pow(unit_sphere_volume(fam.m), 2.0 / fam.m);
    result.margin = result.normalized_scalar - result.sphere_yamabe;
    result.certified_not_yamabe =
        result.normalized_scalar > result.sphere_yamabe * (1.0 + kRelativeMargin);
    return result;
}

}  // namespace cscbif
