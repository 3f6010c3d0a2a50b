#pragma once

#include "bifurcation.hpp"

#include <map>
#include <vector>

namespace cscbif::oracle {

// Grid cell [lo, hi] on which some branch changes sign (lo == hi marks an
// exact hit at a grid point).
struct Bracket {
    Rational lo;
    Rational hi;

    friend bool operator<(const Bracket& lhs, const Bracket& rhs) {
        if (lhs.lo != rhs.lo) return lhs.lo < rhs.lo;
        return lhs.hi < rhs.hi;
    }
    friend bool operator==(const Bracket& lhs, const Bracket& rhs) {
        return lhs.lo == rhs.lo && lhs.hi == rhs.hi;
    }
};

struct GridScanReport {
    Rational resolution;
    std::vector<Bracket> detected;                  // ascending, deduplicated
    std::map<Bracket, std::vector<Rational>> matched;  // bracket -> exact instants inside
};

// Sign-scans every truncated branch on the grid lo, lo+delta, ..., hi in
// exact rational arithmetic, then matches the brackets against
// enumerate_instants. Detection shares nothing with the engine's
// closed-form zero finding beyond branch evaluation itself.
GridScanReport grid_scan_instants(const ProductFamily& fam, const Rational& lo,
                                  const Rational& hi, const Rational& delta);

// Exhaustive scan of every truncated pair (i,j) != (0,0); must agree with
// morse_index.
long long brute_morse_index(const ProductFamily& fam, const Rational& lambda);

}  // namespace cscbif::oracle
