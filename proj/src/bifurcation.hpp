#pragma once

#include "family.hpp"

#include <vector>

namespace cscbif {

enum class InstantClass {
    bifurcation,              // Morse index jumps: delta_n != 0
    equivariant_bifurcation,  // delta_n == 0 but a harmonically free factor forces bifurcation
    neutral_undetermined,     // delta_n == 0 and no symmetry argument applies
};

const char* to_string(InstantClass classification);

struct Contributor {
    int i = 0;
    int j = 0;
    long long multiplicity = 1;
    BranchKind kind = BranchKind::increasing_with_zero;
};

// A lambda where the Jacobi operator is singular. Contributors are the
// branches vanishing there; the at-most-one-zero rule makes their i's
// pairwise distinct and their j's pairwise distinct. delta_n is the Morse
// index jump n(lambda+) - n(lambda-).
struct DegeneracyInstant {
    Rational lambda;
    std::vector<Contributor> contributors;
    long long delta_n = 0;
    InstantClass classification = InstantClass::neutral_undetermined;
};

// Open interval free of degeneracy instants.
struct RigidityInterval {
    Rational lo;
    Rational hi;
};

// Refuses degenerate pairs and windows the truncated spectra cannot cover.
// Coverage means: every branch whose zero could fall in [lo, hi] lies within
// truncation, so the returned list is complete.
void require_window_coverage(const ProductFamily& fam, const Rational& lo, const Rational& hi);

// Coverage for a single evaluation point: every branch negative or zero at
// lambda lies within truncation.
void require_point_coverage(const ProductFamily& fam, const Rational& lambda);

// All degeneracy instants in [lo, hi], grouped by exact rational equality,
// ascending, with delta_n and classification filled.
std::vector<DegeneracyInstant> enumerate_instants(const ProductFamily& fam, const Rational& lo,
                                                  const Rational& hi);

// Number of negative Jacobi eigenvalues at lambda, counted with multiplicity
// over pairs (i,j) != (0,0). Errors if lambda is a degeneracy instant.
long long morse_index(const ProductFamily& fam, const Rational& lambda);

// Re-derives delta_n and classification from the contributors and
// cross-checks delta_n against two-sided Morse indices at
// lambda/(1+eps), lambda*(1+eps) with eps small enough that the bracket
// contains no other instant.
DegeneracyInstant classify_instant(const ProductFamily& fam, const DegeneracyInstant& instant);

// Complement of the instant set in the open window (lo, hi), as maximal
// open intervals, ascending.
std::vector<RigidityInterval> rigidity_intervals(const ProductFamily& fam, const Rational& lo,
                                                 const Rational& hi);

}  // namespace cscbif
