#include "oracle.hpp"

#include <set>

namespace cscbif::oracle {

GridScanReport grid_scan_instants(const ProductFamily& fam, const Rational& lo,
                                  const Rational& hi, const Rational& delta) {
    if (fam.degenerate_pair) {
        throw Error(Errc::degenerate_pair,
                    "pair degenerate: equalities hold in both defining inequalities, so the "
                    "Jacobi operator is singular for every lambda");
    }
    require_window_coverage(fam, lo, hi);
    if (!(delta > 0) || delta >= (hi - lo) / 4) {
        throw Error(Errc::invalid_argument, "grid resolution must satisfy 0 < delta < (hi-lo)/4");
    }

    std::vector<Rational> grid;
    for (Rational point = lo; point <= hi; point += delta) grid.push_back(point);
    if (grid.back() != hi) grid.push_back(hi);

    std::set<Bracket> found;
    const int count0 = fam.factor0.truncation_count();
    const int count1 = fam.factor1.truncation_count();
    for (int i = 0; i < count0; ++i) {
        for (int j = 0; j < count1; ++j) {
            if (i == 0 && j == 0) continue;
            // Each branch is monotone, so a sign difference across the whole
            // window is necessary for a zero; this filter uses only branch
            // values, not the engine's closed form.
            const Rational at_lo = branch_eval(fam, i, j, lo);
            const Rational at_hi = branch_eval(fam, i, j, hi);
            if (at_lo.sign() * at_hi.sign() > 0) continue;
            Rational previous = at_lo;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const Rational value = k == 0 ? at_lo : branch_eval(fam, i, j, grid[k]);
                if (value == 0) {
                    found.insert({grid[k], grid[k]});
                    break;  // a monotone branch vanishes once
                }
                if (k > 0 && previous.sign() * value.sign() < 0) {
                    found.insert({grid[k - 1], grid[k]});
                    break;
                }
                previous = value;
            }
        }
    }

    GridScanReport report;
    report.resolution = delta;
    report.detected.assign(found.begin(), found.end());
    const auto instants = enumerate_instants(fam, lo, hi);
    for (const auto& bracket : report.detected) report.matched[bracket] = {};
    for (const auto& instant : instants) {
        for (const auto& bracket : report.detected) {
            if (instant.lambda >= bracket.lo && instant.lambda <= bracket.hi) {
                report.matched[bracket].push_back(instant.lambda);
                break;
            }
        }
    }
    return report;
}

long long brute_morse_index(const ProductFamily& fam, const Rational& lambda) {
    require_point_coverage(fam, lambda);
    long long total = 0;
    for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
        for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
            if (i == 0 && j == 0) continue;
            const Rational value = branch_eval(fam, i, j, lambda);
            if (value == 0) {
                throw Error(Errc::at_instant,
                            "lambda is a degeneracy instant: branch (" + std::to_string(i) +
                                "," + std::to_string(j) + ") vanishes there");
            }
            if (value < 0) {
                total += fam.factor0.multiplicity(i) * fam.factor1.multiplicity(j);
            }
        }
    }
    return total;
}

}  // namespace cscbif::oracle
