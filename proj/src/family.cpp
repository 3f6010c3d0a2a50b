#include "family.hpp"

namespace cscbif {

const char* to_string(BranchKind kind) {
    switch (kind) {
        case BranchKind::increasing_with_zero: return "increasing_with_zero";
        case BranchKind::decreasing_with_zero: return "decreasing_with_zero";
        case BranchKind::increasing_no_zero: return "increasing_no_zero";
        case BranchKind::decreasing_no_zero: return "decreasing_no_zero";
        case BranchKind::constant_zero: return "constant_zero";
        case BranchKind::constant_nonzero: return "constant_nonzero";
    }
    return "unknown";
}

namespace {

std::optional<int> star_index(const FactorSpectrum& spectrum, const Rational& threshold) {
    for (const auto& entry : spectrum.entries) {
        if (entry.eigenvalue >= threshold) return entry.index;
    }
    return std::nullopt;
}

void check_positive_lambda(const Rational& lambda) {
    if (lambda <= 0) {
        throw Error(Errc::invalid_argument, "lambda must be positive");
    }
}

}  // namespace

ProductFamily make_family(FactorSpectrum factor0, FactorSpectrum factor1) {
    validate_spectrum(factor0);
    validate_spectrum(factor1);
    ProductFamily fam;
    fam.m = factor0.dim + factor1.dim;
    if (fam.m < 3) {
        throw Error(Errc::dimension,
                    "product dimension m = " + std::to_string(fam.m) + " must be >= 3");
    }
    fam.threshold0 = factor0.scalar_curvature / (fam.m - 1);
    fam.threshold1 = factor1.scalar_curvature / (fam.m - 1);
    fam.i_star = star_index(factor0, fam.threshold0);
    fam.j_star = star_index(factor1, fam.threshold1);
    fam.degenerate_pair =
        fam.i_star && fam.j_star &&
        factor0.eigenvalue(*fam.i_star) == fam.threshold0 &&
        factor1.eigenvalue(*fam.j_star) == fam.threshold1;
    fam.factor0 = std::move(factor0);
    fam.factor1 = std::move(factor1);
    return fam;
}

Rational product_scalar_curvature(const ProductFamily& fam, const Rational& lambda) {
    check_positive_lambda(lambda);
    return fam.factor0.scalar_curvature + fam.factor1.scalar_curvature / lambda;
}

Rational coeff_a(const ProductFamily& fam, int i) {
    return fam.factor0.eigenvalue(i) - fam.threshold0;
}

Rational coeff_b(const ProductFamily& fam, int j) {
    return fam.factor1.eigenvalue(j) - fam.threshold1;
}

Rational branch_eval(const ProductFamily& fam, int i, int j, const Rational& lambda) {
    check_positive_lambda(lambda);
    return coeff_a(fam, i) + coeff_b(fam, j) / lambda;
}

BranchClass classify_branch(const ProductFamily& fam, int i, int j) {
    if (i == 0 && j == 0) {
        throw Error(Errc::invalid_argument,
                    "branch (0,0) belongs to the constants and is excluded from the "
                    "Jacobi spectrum");
    }
    BranchClass branch;
    branch.i = i;
    branch.j = j;
    branch.coeff_a = coeff_a(fam, i);
    branch.coeff_b = coeff_b(fam, j);
    branch.multiplicity = fam.factor0.multiplicity(i) * fam.factor1.multiplicity(j);

    const int sign_a = branch.coeff_a.sign();
    const int sign_b = branch.coeff_b.sign();
    if (sign_b == 0) {
        branch.kind = sign_a == 0 ? BranchKind::constant_zero : BranchKind::constant_nonzero;
        return branch;
    }
    const bool increasing = sign_b < 0;
    if (sign_a != 0 && sign_a != sign_b) {
        branch.kind = increasing ? BranchKind::increasing_with_zero
                                 : BranchKind::decreasing_with_zero;
        branch.zero = -branch.coeff_b / branch.coeff_a;
    } else {
        branch.kind = increasing ? BranchKind::increasing_no_zero
                                 : BranchKind::decreasing_no_zero;
    }
    return branch;
}

}  // namespace cscbif
