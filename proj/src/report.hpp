#pragma once

#include "oracle.hpp"
#include "sphere_case.hpp"

#include <optional>
#include <string>

namespace cscbif {

struct AnalysisOptions {
    bool with_obstruction = false;  // Yamabe certificates at instants and midpoints
};

struct IndexSample {
    Rational lambda;
    long long morse = 0;
};

// Everything the CLI serializes: instants with classifications, the rigidity
// decomposition of the window, Morse index samples at the window endpoints
// and interval midpoints, optional obstruction certificates.
struct AnalysisReport {
    ProductFamily family;
    Rational lo;
    Rational hi;
    std::vector<DegeneracyInstant> instants;
    std::vector<RigidityInterval> rigidity;
    std::vector<IndexSample> index_samples;
    std::optional<std::vector<ObstructionResult>> obstruction;
};

AnalysisReport analyze(const ProductFamily& fam, const Rational& lo, const Rational& hi,
                       const AnalysisOptions& options = {});

// Deterministic, byte-stable serialization. Rationals render as "p/q";
// floats appear only in the obstruction block.
std::string report_to_json(const AnalysisReport& report);

// One row per sampled lambda per branch with i, j <= branch_cap,
// (i,j) != (0,0). Header: lambda,i,j,sigma,multiplicity. lambda and sigma
// render as decimals with 12 significant digits.
std::string diagram_csv(const ProductFamily& fam, const Rational& lo, const Rational& hi,
                        int samples, int branch_cap);

}  // namespace cscbif
