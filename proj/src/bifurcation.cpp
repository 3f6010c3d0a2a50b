#include "bifurcation.hpp"

#include <algorithm>
#include <map>

namespace cscbif {

const char* to_string(InstantClass classification) {
    switch (classification) {
        case InstantClass::bifurcation: return "bifurcation";
        case InstantClass::equivariant_bifurcation: return "equivariant_bifurcation";
        case InstantClass::neutral_undetermined: return "neutral_undetermined";
    }
    return "unknown";
}

namespace {

[[noreturn]] void throw_truncation(const FactorSpectrum& spectrum, int factor,
                                   const Rational& reach) {
    TruncationNeed need;
    need.factor = factor;
    need.listed = spectrum.truncation_count();
    need.required_at_least = spectrum.truncation_count() + 1;
    need.reach = to_fraction(reach);
    throw TruncationError(
        need, "insufficient truncation: factor " + std::to_string(factor) + " ('" +
                  spectrum.name + "') lists " + std::to_string(need.listed) +
                  " eigenvalues but every eigenvalue up to " + need.reach +
                  " is required; supply at least " + std::to_string(need.required_at_least) +
                  " eigenvalues, extending the spectrum to reach " + need.reach);
}

void check_window(const Rational& lo, const Rational& hi) {
    if (!(lo > 0 && lo < hi)) {
        throw Error(Errc::invalid_argument, "window must satisfy 0 < lo < hi");
    }
}

void refuse_degenerate(const ProductFamily& fam) {
    if (fam.degenerate_pair) {
        throw Error(Errc::degenerate_pair,
                    "pair degenerate: equalities hold in both defining inequalities, so the "
                    "Jacobi operator is singular for every lambda");
    }
}

const Rational& last_eigenvalue(const FactorSpectrum& spectrum) {
    return spectrum.entries.back().eigenvalue;
}

// Zeros of every truncated branch, window-filtered; the completeness of the
// result for [lo, hi] is exactly what require_window_coverage guarantees.
std::map<Rational, std::vector<Contributor>> collect_zeros(const ProductFamily& fam,
                                                           const Rational& lo,
                                                           const Rational& hi) {
    std::map<Rational, std::vector<Contributor>> zeros;
    const int count0 = fam.factor0.truncation_count();
    const int count1 = fam.factor1.truncation_count();

    // Increasing branches: coeff_b < 0 needs j < j_star, coeff_a > 0.
    if (fam.threshold1 > 0 && fam.j_star) {
        for (int j = 0; j < *fam.j_star; ++j) {
            const Rational b = coeff_b(fam, j);
            for (int i = 0; i < count0; ++i) {
                if (i == 0 && j == 0) continue;  // constants pair, not in the Jacobi spectrum
                const Rational a = coeff_a(fam, i);
                if (a <= 0) continue;
                const Rational zero = -b / a;  // decreasing in i
                if (zero > hi) continue;
                if (zero < lo) break;
                zeros[zero].push_back({i, j, fam.factor0.multiplicity(i) * fam.factor1.multiplicity(j),
                                       BranchKind::increasing_with_zero});
            }
        }
    }

    // Decreasing branches: coeff_a < 0 needs i < i_star, coeff_b > 0.
    if (fam.threshold0 > 0 && fam.i_star) {
        for (int i = 0; i < *fam.i_star; ++i) {
            const Rational a = coeff_a(fam, i);
            for (int j = 0; j < count1; ++j) {
                if (i == 0 && j == 0) continue;  // constants pair, not in the Jacobi spectrum
                const Rational b = coeff_b(fam, j);
                if (b <= 0) continue;
                const Rational zero = -b / a;  // increasing in j
                if (zero < lo) continue;
                if (zero > hi) break;
                zeros[zero].push_back({i, j, fam.factor0.multiplicity(i) * fam.factor1.multiplicity(j),
                                       BranchKind::decreasing_with_zero});
            }
        }
    }
    return zeros;
}

long long contributor_jump(const std::vector<Contributor>& contributors) {
    long long jump = 0;
    for (const auto& c : contributors) {
        if (c.kind == BranchKind::decreasing_with_zero) {
            jump += c.multiplicity;
        } else if (c.kind == BranchKind::increasing_with_zero) {
            jump -= c.multiplicity;
        }
    }
    return jump;
}

InstantClass classify_jump(const ProductFamily& fam, long long delta_n) {
    if (delta_n != 0) return InstantClass::bifurcation;
    if (!fam.degenerate_pair &&
        (fam.factor0.harmonically_free || fam.factor1.harmonically_free)) {
        return InstantClass::equivariant_bifurcation;
    }
    return InstantClass::neutral_undetermined;
}

// Zeros of every truncated branch over all of (0, +inf); used to pick a
// bracket around one instant that contains no other.
std::vector<Rational> all_truncated_zeros(const ProductFamily& fam) {
    std::vector<Rational> zeros;
    for (int i = 0; i < fam.factor0.truncation_count(); ++i) {
        for (int j = 0; j < fam.factor1.truncation_count(); ++j) {
            if (i == 0 && j == 0) continue;
            const auto branch = classify_branch(fam, i, j);
            if (branch.zero) zeros.push_back(*branch.zero);
        }
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    return zeros;
}

}  // namespace

void require_window_coverage(const ProductFamily& fam, const Rational& lo, const Rational& hi) {
    check_window(lo, hi);
    if (fam.threshold1 > 0) {
        if (!fam.j_star) {
            throw_truncation(fam.factor1, 1, fam.threshold1);
        }
        // Increasing-branch zeros >= lo need every i with coeff_a <= threshold1/lo.
        const Rational needed = fam.threshold1 / lo;
        if (last_eigenvalue(fam.factor0) - fam.threshold0 < needed) {
            throw_truncation(fam.factor0, 0, fam.threshold0 + needed);
        }
    }
    if (fam.threshold0 > 0) {
        if (!fam.i_star) {
            throw_truncation(fam.factor0, 0, fam.threshold0);
        }
        // Decreasing-branch zeros <= hi need every j with coeff_b <= hi*threshold0.
        const Rational needed = hi * fam.threshold0;
        if (last_eigenvalue(fam.factor1) - fam.threshold1 < needed) {
            throw_truncation(fam.factor1, 1, fam.threshold1 + needed);
        }
    }
}

void require_point_coverage(const ProductFamily& fam, const Rational& lambda) {
    if (lambda <= 0) {
        throw Error(Errc::invalid_argument, "lambda must be positive");
    }
    if (fam.threshold1 > 0) {
        if (!fam.j_star) {
            throw_truncation(fam.factor1, 1, fam.threshold1);
        }
        const Rational needed = fam.threshold1 / lambda;
        if (last_eigenvalue(fam.factor0) - fam.threshold0 < needed) {
            throw_truncation(fam.factor0, 0, fam.threshold0 + needed);
        }
    }
    if (fam.threshold0 > 0) {
        if (!fam.i_star) {
            throw_truncation(fam.factor0, 0, fam.threshold0);
        }
        const Rational needed = lambda * fam.threshold0;
        if (last_eigenvalue(fam.factor1) - fam.threshold1 < needed) {
            throw_truncation(fam.factor1, 1, fam.threshold1 + needed);
        }
    }
}

std::vector<DegeneracyInstant> enumerate_instants(const ProductFamily& fam, const Rational& lo,
                                                  const Rational& hi) {
    refuse_degenerate(fam);
    require_window_coverage(fam, lo, hi);

    std::vector<DegeneracyInstant> instants;
    for (auto& [lambda, contributors] : collect_zeros(fam, lo, hi)) {
        DegeneracyInstant instant;
        instant.lambda = lambda;
        instant.contributors = contributors;
        std::sort(instant.contributors.begin(), instant.contributors.end(),
                  [](const Contributor& lhs, const Contributor& rhs) {
                      return std::pair(lhs.i, lhs.j) < std::pair(rhs.i, rhs.j);
                  });
        for (std::size_t k = 1; k < instant.contributors.size(); ++k) {
            // At-most-one-zero per row and column; sharing an i or j here
            // would contradict strict spectrum monotonicity.
            if (instant.contributors[k].i == instant.contributors[k - 1].i ||
                instant.contributors[k].j == instant.contributors[k - 1].j) {
                throw Error(Errc::internal, "contributors at one instant share a row or column");
            }
        }
        instant.delta_n = contributor_jump(instant.contributors);
        instant.classification = classify_jump(fam, instant.delta_n);
        instants.push_back(std::move(instant));
    }
    return instants;
}

long long morse_index(const ProductFamily& fam, const Rational& lambda) {
    require_point_coverage(fam, lambda);

    const auto& entries1 = fam.factor1.entries;
    // prefix_mult[k] = total multiplicity of the first k factor-1 eigenvalues
    std::vector<long long> prefix_mult(entries1.size() + 1, 0);
    for (std::size_t k = 0; k < entries1.size(); ++k) {
        prefix_mult[k + 1] = prefix_mult[k] + entries1[k].multiplicity;
    }

    long long total = 0;
    for (const auto& entry0 : fam.factor0.entries) {
        const int i = entry0.index;
        // sigma_{i,j}(lambda) < 0 iff rho1_j < bound
        const Rational bound = fam.threshold1 - lambda * (entry0.eigenvalue - fam.threshold0);
        if (bound < 0) break;  // later i only shrink the bound
        const auto split = std::partition_point(
            entries1.begin(), entries1.end(),
            [&bound](const SpectrumEntry& e) { return e.eigenvalue < bound; });
        if (split != entries1.end() && split->eigenvalue == bound) {
            if (!(i == 0 && split->index == 0)) {
                throw Error(Errc::at_instant,
                            "lambda is a degeneracy instant: branch (" + std::to_string(i) + "," +
                                std::to_string(split->index) + ") vanishes there");
            }
        }
        long long below = prefix_mult[static_cast<std::size_t>(split - entries1.begin())];
        if (i == 0 && below > 0) below -= 1;  // drop the constants pair (0,0)
        total += entry0.multiplicity * below;
    }
    return total;
}

DegeneracyInstant classify_instant(const ProductFamily& fam, const DegeneracyInstant& instant) {
    if (instant.contributors.empty()) {
        throw Error(Errc::invalid_argument, "instant has no contributors");
    }
    DegeneracyInstant result = instant;
    result.delta_n = contributor_jump(result.contributors);
    result.classification = classify_jump(fam, result.delta_n);

    const Rational& lambda = result.lambda;
    const auto zeros = all_truncated_zeros(fam);

    // eps = min(1/8, gap/(2*lambda)) keeps both bracket ends within half the
    // gap to the nearest other zero; shrink further until the bracket is
    // clean of every other truncated-branch zero.
    Rational eps(1, 8);
    for (const auto& zero : zeros) {
        if (zero == lambda) continue;
        const Rational gap = abs(zero - lambda);
        const Rational candidate = gap / (2 * lambda);
        if (candidate < eps) eps = candidate;
    }
    auto bracket_clean = [&](const Rational& eps_try) {
        const Rational below = lambda / (1 + eps_try);
        const Rational above = lambda * (1 + eps_try);
        for (const auto& zero : zeros) {
            if (zero == lambda) continue;
            if (zero >= below && zero <= above) return false;
        }
        return true;
    };
    while (!bracket_clean(eps)) eps /= 2;

    const long long below = morse_index(fam, lambda / (1 + eps));
    const long long above = morse_index(fam, lambda * (1 + eps));
    if (above - below != result.delta_n) {
        throw Error(Errc::internal,
                    "index jump mismatch at lambda = " + to_fraction(lambda) +
                        ": contributors give " + std::to_string(result.delta_n) +
                        " but two-sided Morse indices give " + std::to_string(above - below));
    }
    return result;
}

std::vector<RigidityInterval> rigidity_intervals(const ProductFamily& fam, const Rational& lo,
                                                 const Rational& hi) {
    const auto instants = enumerate_instants(fam, lo, hi);
    std::vector<Rational> cuts;
    cuts.push_back(lo);
    for (const auto& instant : instants) {
        if (instant.lambda > lo && instant.lambda < hi) cuts.push_back(instant.lambda);
    }
    cuts.push_back(hi);
    std::vector<RigidityInterval> intervals;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        intervals.push_back({cuts[k], cuts[k + 1]});
    }
    return intervals;
}

}  // namespace cscbif
