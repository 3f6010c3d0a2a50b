#pragma once

#include "spectra.hpp"

#include <optional>

namespace cscbif {

// Monotonicity/zero classification of one eigenvalue branch
// sigma_{i,j}(lambda) = coeff_a + coeff_b / lambda of the Jacobi operator.
// The kind encodes sign(coeff_b): negative -> increasing in lambda,
// positive -> decreasing, zero -> constant.
enum class BranchKind {
    increasing_with_zero,
    decreasing_with_zero,
    increasing_no_zero,
    decreasing_no_zero,
    constant_zero,
    constant_nonzero,
};

const char* to_string(BranchKind kind);

struct BranchClass {
    int i = 0;
    int j = 0;
    Rational coeff_a;  // rho0_i - kappa0/(m-1)
    Rational coeff_b;  // rho1_j - kappa1/(m-1)
    long long multiplicity = 1;
    BranchKind kind = BranchKind::constant_nonzero;
    std::optional<Rational> zero;  // present iff kind is *_with_zero; equals -coeff_b/coeff_a
};

// The product family g_lambda = g0 + lambda*g1 seen through the spectra of
// its factors. i_star/j_star are the least indices whose eigenvalue reaches
// kappa/(m-1); nullopt means the truncated spectrum never gets there. The
// pair is degenerate exactly when both stars hit their threshold with
// equality, in which case the Jacobi operator is singular for every lambda.
struct ProductFamily {
    FactorSpectrum factor0;
    FactorSpectrum factor1;
    int m = 0;
    Rational threshold0;  // kappa0 / (m-1)
    Rational threshold1;  // kappa1 / (m-1)
    std::optional<int> i_star;
    std::optional<int> j_star;
    bool degenerate_pair = false;
};

ProductFamily make_family(FactorSpectrum factor0, FactorSpectrum factor1);

// kappa_lambda = kappa0 + kappa1/lambda, exact.
Rational product_scalar_curvature(const ProductFamily& fam, const Rational& lambda);

Rational coeff_a(const ProductFamily& fam, int i);
Rational coeff_b(const ProductFamily& fam, int j);

// sigma_{i,j}(lambda). (0,0) is evaluable but belongs to the constants,
// which the Jacobi spectrum excludes.
Rational branch_eval(const ProductFamily& fam, int i, int j, const Rational& lambda);

// Refuses (0,0).
BranchClass classify_branch(const ProductFamily& fam, int i, int j);

}  // namespace cscbif
