#include "report.hpp"

#include <json.hpp>

#include <algorithm>

namespace cscbif {

namespace {

using nlohmann::ordered_json;

ordered_json factor_descriptor(const FactorSpectrum& spectrum) {
    ordered_json node;
    node["name"] = spectrum.name;
    node["dim"] = spectrum.dim;
    node["scalar_curvature"] = to_fraction(spectrum.scalar_curvature);
    if (spectrum.volume) {
        node["volume"] = *spectrum.volume;
    } else {
        node["volume"] = nullptr;
    }
    node["einstein"] = spectrum.einstein;
    node["harmonically_free"] = spectrum.harmonically_free;
    node["truncation_count"] = spectrum.truncation_count();
    return node;
}

void verify_telescoping(const AnalysisReport& report) {
    // Midpoints straddle exactly one instant each; their Morse indices must
    // telescope by the intervening delta_n.
    std::vector<const IndexSample*> midpoints;
    for (const auto& sample : report.index_samples) {
        for (const auto& interval : report.rigidity) {
            if (sample.lambda > interval.lo && sample.lambda < interval.hi) {
                midpoints.push_back(&sample);
                break;
            }
        }
    }
    for (std::size_t k = 0; k + 1 < midpoints.size(); ++k) {
        long long jump = 0;
        for (const auto& instant : report.instants) {
            if (instant.lambda > midpoints[k]->lambda &&
                instant.lambda < midpoints[k + 1]->lambda) {
                jump += instant.delta_n;
            }
        }
        if (midpoints[k]->morse + jump != midpoints[k + 1]->morse) {
            throw Error(Errc::internal, "index samples do not telescope with delta_n");
        }
    }
}

}  // namespace

AnalysisReport analyze(const ProductFamily& fam, const Rational& lo, const Rational& hi,
                       const AnalysisOptions& options) {
    AnalysisReport report;
    report.family = fam;
    report.lo = lo;
    report.hi = hi;
    for (const auto& instant : enumerate_instants(fam, lo, hi)) {
        report.instants.push_back(classify_instant(fam, instant));
    }
    report.rigidity = rigidity_intervals(fam, lo, hi);

    auto is_instant = [&report](const Rational& lambda) {
        return std::any_of(report.instants.begin(), report.instants.end(),
                           [&lambda](const DegeneracyInstant& p) { return p.lambda == lambda; });
    };
    if (!is_instant(lo)) report.index_samples.push_back({lo, morse_index(fam, lo)});
    for (const auto& interval : report.rigidity) {
        const Rational mid = (interval.lo + interval.hi) / 2;
        report.index_samples.push_back({mid, morse_index(fam, mid)});
    }
    if (!is_instant(hi)) report.index_samples.push_back({hi, morse_index(fam, hi)});
    std::sort(report.index_samples.begin(), report.index_samples.end(),
              [](const IndexSample& lhs, const IndexSample& rhs) { return lhs.lambda < rhs.lambda; });

    if (options.with_obstruction) {
        std::vector<ObstructionResult> certificates;
        for (const auto& instant : report.instants) {
            certificates.push_back(yamabe_obstruction(fam, instant.lambda));
        }
        for (const auto& interval : report.rigidity) {
            certificates.push_back(yamabe_obstruction(fam, (interval.lo + interval.hi) / 2));
        }
        std::sort(certificates.begin(), certificates.end(),
                  [](const ObstructionResult& lhs, const ObstructionResult& rhs) {
                      return lhs.lambda < rhs.lambda;
                  });
        report.obstruction = std::move(certificates);
    }

    verify_telescoping(report);
    return report;
}

std::string report_to_json(const AnalysisReport& report) {
    ordered_json root;
    ordered_json family;
    family["factor0"] = factor_descriptor(report.family.factor0);
    family["factor1"] = factor_descriptor(report.family.factor1);
    family["m"] = report.family.m;
    family["i_star"] = report.family.i_star ? ordered_json(*report.family.i_star)
                                            : ordered_json(nullptr);
    family["j_star"] = report.family.j_star ? ordered_json(*report.family.j_star)
                                            : ordered_json(nullptr);
    family["degenerate_pair"] = report.family.degenerate_pair;
    root["family"] = std::move(family);
    root["window"] = {{"lo", to_fraction(report.lo)}, {"hi", to_fraction(report.hi)}};

    root["instants"] = ordered_json::array();
    for (const auto& instant : report.instants) {
        ordered_json node;
        node["lambda"] = to_fraction(instant.lambda);
        node["contributors"] = ordered_json::array();
        for (const auto& c : instant.contributors) {
            node["contributors"].push_back({{"i", c.i},
                                            {"j", c.j},
                                            {"multiplicity", c.multiplicity},
                                            {"kind", to_string(c.kind)}});
        }
        node["delta_n"] = instant.delta_n;
        node["classification"] = to_string(instant.classification);
        root["instants"].push_back(std::move(node));
    }

    root["rigidity"] = ordered_json::array();
    for (const auto& interval : report.rigidity) {
        root["rigidity"].push_back(
            {{"lo", to_fraction(interval.lo)}, {"hi", to_fraction(interval.hi)}});
    }

    root["index_samples"] = ordered_json::array();
    for (const auto& sample : report.index_samples) {
        root["index_samples"].push_back(
            {{"lambda", to_fraction(sample.lambda)}, {"morse_index", sample.morse}});
    }

    if (report.obstruction) {
        root["obstruction"] = ordered_json::array();
        for (const auto& certificate : *report.obstruction) {
            root["obstruction"].push_back({{"lambda", to_fraction(certificate.lambda)},
                                           {"normalized_scalar", certificate.normalized_scalar},
                                           {"sphere_yamabe", certificate.sphere_yamabe},
                                           {"certified_not_yamabe", certificate.certified_not_yamabe},
                                           {"margin", certificate.margin}});
        }
    }

    root["conventions"] = {
        {"morse_index",
         "Jacobi convention: constants excluded; equals the count of Laplace eigenvalues below "
         "kappa_lambda/(m-1) minus one when kappa_lambda > 0, and the jumps agree"},
        {"normalization",
         "catalog spheres use unit radius (kappa = n(n-1), rho_k = k(k+n-1)); rescaling factor 1 "
         "by c maps every instant lambda to lambda/c and preserves delta_n"},
    };
    return root.dump(2) + "\n";
}

std::string diagram_csv(const ProductFamily& fam, const Rational& lo, const Rational& hi,
                        int samples, int branch_cap) {
    if (fam.degenerate_pair) {
        throw Error(Errc::degenerate_pair,
                    "pair degenerate: equalities hold in both defining inequalities, so the "
                    "Jacobi operator is singular for every lambda");
    }
    if (!(lo > 0 && lo < hi)) {
        throw Error(Errc::invalid_argument, "window must satisfy 0 < lo < hi");
    }
    if (samples < 1) throw Error(Errc::invalid_argument, "samples must be >= 1");
    if (branch_cap < 1) throw Error(Errc::invalid_argument, "branch index cap must be >= 1");

    const int max_i = std::min(branch_cap, fam.factor0.truncation_count() - 1);
    const int max_j = std::min(branch_cap, fam.factor1.truncation_count() - 1);

    std::string csv = "lambda,i,j,sigma,multiplicity\n";
    for (int t = 0; t < samples; ++t) {
        const Rational lambda =
            samples == 1 ? lo : lo + (hi - lo) * t / (samples - 1);
        const std::string lambda_text = to_decimal(lambda);
        for (int i = 0; i <= max_i; ++i) {
            for (int j = 0; j <= max_j; ++j) {
                if (i == 0 && j == 0) continue;
                const Rational sigma = branch_eval(fam, i, j, lambda);
                csv += lambda_text;
                csv += ',';
                csv += std::to_string(i);
                csv += ',';
                csv += std::to_string(j);
                csv += ',';
                csv += to_decimal(sigma);
                csv += ',';
                csv += std::to_string(fam.factor0.multiplicity(i) * fam.factor1.multiplicity(j));
                csv += '\n';
            }
        }
    }
    return csv;
}

}  // namespace cscbif
