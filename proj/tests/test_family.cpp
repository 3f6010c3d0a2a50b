#include "family.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace cscbif;
using testsupport::rat;
using testsupport::synthetic_factor;

namespace {

ProductFamily two_spheres(int n = 2, int count = 12) {
    return make_family(sphere_spectrum(n, count), sphere_spectrum(n, count));
}

}  // namespace

TEST_CASE("make_family computes stars and degeneracy") {
    const auto fam = two_spheres();
    CHECK(fam.m == 4);
    CHECK(fam.threshold0 == rat(2, 3));
    REQUIRE(fam.i_star.has_value());
    REQUIRE(fam.j_star.has_value());
    CHECK(*fam.i_star == 1);
    CHECK(*fam.j_star == 1);
    CHECK_FALSE(fam.degenerate_pair);

    // negative curvature puts the threshold below rho_0 = 0
    const auto negative = make_family(
        synthetic_factor("neg", 2, rat(-6), {{rat(1), 1}}), sphere_spectrum(2, 3));
    REQUIRE(negative.i_star.has_value());
    CHECK(*negative.i_star == 0);
    CHECK_FALSE(negative.degenerate_pair);

    // equality at both stars: rho0_2 = kappa0/(m-1), rho1_1 = kappa1/(m-1)
    const auto degenerate = make_family(
        synthetic_factor("d0", 2, rat(3), {{rat(1, 2), 1}, {rat(1), 1}}),
        synthetic_factor("d1", 2, rat(3), {{rat(1), 1}}));
    REQUIRE(degenerate.i_star.has_value());
    CHECK(*degenerate.i_star == 2);
    CHECK(*degenerate.j_star == 1);
    CHECK(degenerate.degenerate_pair);

    // threshold never reached within truncation
    const auto beyond = make_family(
        synthetic_factor("short", 2, rat(300), {{rat(1), 1}}), sphere_spectrum(2, 3));
    CHECK_FALSE(beyond.i_star.has_value());
    CHECK_FALSE(beyond.degenerate_pair);

    CHECK_THROWS_AS(make_family(synthetic_factor("c0", 1, rat(0), {}),
                                synthetic_factor("c1", 1, rat(0), {})),
                    Error);
}

TEST_CASE("product scalar curvature is exact") {
    const auto fam = two_spheres();
    CHECK(product_scalar_curvature(fam, rat(1)) == 4);
    CHECK(product_scalar_curvature(fam, rat(1, 2)) == 6);

    const auto flat0 = make_family(synthetic_factor("flat", 2, rat(0), {{rat(1), 1}}),
                                   sphere_spectrum(2, 3));
    CHECK(product_scalar_curvature(flat0, rat(4)) == rat(1, 2));

    CHECK_THROWS_AS(product_scalar_curvature(fam, rat(0)), Error);
    CHECK_THROWS_AS(product_scalar_curvature(fam, rat(-1)), Error);
}

TEST_CASE("branch evaluation matches sigma = A + B/lambda") {
    const auto fam = two_spheres();
    CHECK(branch_eval(fam, 1, 0, rat(1)) == rat(2, 3));
    CHECK(branch_eval(fam, 1, 0, rat(1, 2)) == 0);  // lambda_1(2) = 1/2
    CHECK(branch_eval(fam, 0, 0, rat(1)) == rat(-4, 3));
    CHECK_THROWS_AS(branch_eval(fam, 99, 0, rat(1)), Error);
    CHECK_THROWS_AS(branch_eval(fam, 0, -1, rat(1)), Error);
}

TEST_CASE("branch classification on the two-sphere family") {
    const auto fam = two_spheres();

    const auto increasing = classify_branch(fam, 1, 0);
    CHECK(increasing.kind == BranchKind::increasing_with_zero);
    CHECK(increasing.coeff_a == rat(4, 3));
    CHECK(increasing.coeff_b == rat(-2, 3));
    CHECK(increasing.multiplicity == 3);
    REQUIRE(increasing.zero.has_value());
    CHECK(*increasing.zero == rat(1, 2));

    const auto decreasing = classify_branch(fam, 0, 1);
    CHECK(decreasing.kind == BranchKind::decreasing_with_zero);
    CHECK(decreasing.multiplicity == 3);
    REQUIRE(decreasing.zero.has_value());
    CHECK(*decreasing.zero == rat(2));

    const auto positive = classify_branch(fam, 1, 1);
    CHECK(positive.kind == BranchKind::decreasing_no_zero);
    CHECK_FALSE(positive.zero.has_value());

    CHECK_THROWS_AS(classify_branch(fam, 0, 0), Error);
}

TEST_CASE("degenerate pair has the constant-zero branch at the stars") {
    const auto fam = make_family(synthetic_factor("d0", 2, rat(3), {{rat(1), 2}}),
                                 synthetic_factor("d1", 2, rat(3), {{rat(1), 2}}));
    REQUIRE(fam.degenerate_pair);
    const auto branch = classify_branch(fam, *fam.i_star, *fam.j_star);
    CHECK(branch.kind == BranchKind::constant_zero);
    for (const Rational& lambda : {rat(1, 3), rat(1), rat(7, 2)}) {
        CHECK(branch_eval(fam, *fam.i_star, *fam.j_star, lambda) == 0);
    }
}

TEST_CASE("zero-bearing branches follow the star-index dichotomy") {
    // For positive curvatures and i != i_star, j != j_star a branch vanishes
    // iff (i > i_star and j < j_star) or (i < i_star and j > j_star).
    std::mt19937_64 rng(2024);
    int families_checked = 0;
    while (families_checked < 25) {
        auto [fam, lo, hi] = testsupport::random_family_window(rng);
        if (!(fam.threshold0 > 0) || !(fam.threshold1 > 0)) continue;
        ++families_checked;
        REQUIRE(fam.i_star.has_value());
        REQUIRE(fam.j_star.has_value());
        for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
            for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
                if ((i == 0 && j == 0) || i == *fam.i_star || j == *fam.j_star) continue;
                const bool expected = (i > *fam.i_star && j < *fam.j_star) ||
                                      (i < *fam.i_star && j > *fam.j_star);
                CHECK(classify_branch(fam, i, j).zero.has_value() == expected);
            }
        }
    }
}

TEST_CASE("each row and column vanishes at most once at any lambda") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 25; ++round) {
        auto [fam, lo, hi] = testsupport::random_family_window(rng);
        std::vector<Rational> probes{rat(1), lo, hi};
        for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
            for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
                if (i == 0 && j == 0) continue;
                if (const auto branch = classify_branch(fam, i, j); branch.zero) {
                    probes.push_back(*branch.zero);
                }
            }
        }
        for (const auto& lambda : probes) {
            for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
                int zeros_in_row = 0;
                for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
                    if (i == 0 && j == 0) continue;
                    if (branch_eval(fam, i, j, lambda) == 0) ++zeros_in_row;
                }
                CHECK(zeros_in_row <= 1);
            }
            for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
                int zeros_in_column = 0;
                for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
                    if (i == 0 && j == 0) continue;
                    if (branch_eval(fam, i, j, lambda) == 0) ++zeros_in_column;
                }
                CHECK(zeros_in_column <= 1);
            }
        }
    }
}

TEST_CASE("two evaluations recover the stored branch coefficients") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 25; ++round) {
        auto [fam, lo, hi] = testsupport::random_family_window(rng);
        const Rational first(3, 7), second(11, 5);
        for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
            for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
                if (i == 0 && j == 0) continue;
                const auto branch = classify_branch(fam, i, j);
                const Rational at_first = branch_eval(fam, i, j, first);
                const Rational at_second = branch_eval(fam, i, j, second);
                const Rational recovered_b =
                    (at_first - at_second) / (Rational(1) / first - Rational(1) / second);
                const Rational recovered_a = at_first - recovered_b / first;
                CHECK(recovered_a == branch.coeff_a);
                CHECK(recovered_b == branch.coeff_b);
            }
        }
    }
}
