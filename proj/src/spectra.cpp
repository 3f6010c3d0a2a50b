#include "spectra.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cscbif {

namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

void check_index(const FactorSpectrum& spectrum, int k) {
    if (k < 0 || k >= spectrum.truncation_count()) {
        throw Error(Errc::index_range,
                    "eigenvalue index " + std::to_string(k) + " out of truncation range [0, " +
                        std::to_string(spectrum.truncation_count()) + ") for factor '" +
                        spectrum.name + "'");
    }
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt result = 1;
    for (int t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t;
    }
    return result;
}

// Surface volume of the unit round sphere of dimension n.
double unit_sphere_surface(int n) {
    return 2.0 * std::pow(kPi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
}

}  // namespace

const Rational& FactorSpectrum::eigenvalue(int k) const {
    check_index(*this, k);
    return entries[static_cast<std::size_t>(k)].eigenvalue;
}

long long FactorSpectrum::multiplicity(int k) const {
    check_index(*this, k);
    return entries[static_cast<std::size_t>(k)].multiplicity;
}

long long harmonic_polynomial_dim(int n, int k) {
    if (n < 2) throw Error(Errc::invalid_argument, "harmonic_polynomial_dim requires n >= 2");
    if (k < 0) throw Error(Errc::invalid_argument, "harmonic_polynomial_dim requires k >= 0");
    const BigInt dim = binomial(n + k, k) - binomial(n + k - 2, k - 2);
    if (dim > std::numeric_limits<long long>::max()) {
        throw Error(Errc::invalid_argument, "harmonic dimension overflows 64 bits");
    }
    return dim.convert_to<long long>();
}

FactorSpectrum sphere_spectrum(int n, int count) {
    if (n < 2) throw Error(Errc::invalid_argument, "sphere_spectrum requires n >= 2");
    if (count < 1) throw Error(Errc::invalid_argument, "sphere_spectrum requires count >= 1");
    FactorSpectrum spectrum;
    spectrum.name = "S^" + std::to_string(n);
    spectrum.dim = n;
    spectrum.scalar_curvature = Rational(n) * (n - 1);
    spectrum.volume = unit_sphere_surface(n);
    spectrum.einstein = true;
    spectrum.harmonically_free = true;
    spectrum.entries.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        spectrum.entries.push_back(
            {k, Rational(k) * (k + n - 1), harmonic_polynomial_dim(n, k)});
    }
    return spectrum;
}

FactorSpectrum projective_spectrum(int n, int count) {
    if (n < 2) throw Error(Errc::invalid_argument, "projective_spectrum requires n >= 2");
    if (count < 1) throw Error(Errc::invalid_argument, "projective_spectrum requires count >= 1");
    FactorSpectrum spectrum;
    spectrum.name = "RP^" + std::to_string(n);
    spectrum.dim = n;
    spectrum.scalar_curvature = Rational(n) * (n - 1);
    spectrum.volume = unit_sphere_surface(n) / 2.0;
    spectrum.einstein = true;
    spectrum.harmonically_free = true;
    spectrum.entries.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        spectrum.entries.push_back(
            {k, Rational(2) * k * (2 * k + n - 1), harmonic_polynomial_dim(n, 2 * k)});
    }
    return spectrum;
}

void validate_spectrum(const FactorSpectrum& spectrum) {
    if (spectrum.dim < 1) {
        throw Error(Errc::validation, "factor dimension must be >= 1");
    }
    if (spectrum.entries.empty()) {
        throw Error(Errc::validation, "spectrum must list at least the constant eigenvalue 0");
    }
    if (spectrum.volume && *spectrum.volume <= 0.0) {
        throw Error(Errc::validation, "volume must be positive when present");
    }
    const auto& entries = spectrum.entries;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].index != static_cast<int>(k)) {
            throw Error(Errc::validation,
                        "entry index mismatch at index " + std::to_string(k) + " (found " +
                            std::to_string(entries[k].index) + ")");
        }
        if (entries[k].multiplicity <= 0) {
            throw Error(Errc::validation,
                        "nonpositive multiplicity at index " + std::to_string(k));
        }
        if (entries[k].eigenvalue < 0) {
            throw Error(Errc::validation,
                        "negative eigenvalue at index " + std::to_string(k));
        }
        if (k > 0 && entries[k].eigenvalue <= entries[k - 1].eigenvalue) {
            throw Error(Errc::validation, "non-increasing at index " + std::to_string(k));
        }
    }
    if (entries[0].eigenvalue != 0) {
        throw Error(Errc::validation, "first eigenvalue must be exactly 0 (index 0)");
    }
    if (entries[0].multiplicity != 1) {
        throw Error(Errc::validation, "constant eigenspace multiplicity must be 1 (index 0)");
    }
    if (spectrum.einstein && spectrum.scalar_curvature > 0 && entries.size() >= 2) {
        // Lichnerowicz-Obata: rho_1 >= kappa / (dim - 1) for a positive Einstein factor.
        if (spectrum.dim < 2) {
            throw Error(Errc::validation, "einstein flag requires dim >= 2");
        }
        const Rational bound = spectrum.scalar_curvature / (spectrum.dim - 1);
        if (entries[1].eigenvalue < bound) {
            throw Error(Errc::validation,
                        "einstein factor violates the Lichnerowicz-Obata bound at index 1");
        }
    }
}

namespace {

Rational parse_rational_field(const ordered_json& node, const std::string& where) {
    if (!node.is_string()) {
        throw Error(Errc::parse, where + ": rationals must be \"p/q\" strings");
    }
    const auto value = parse_rational(node.get<std::string>());
    if (!value) {
        throw Error(Errc::parse, where + ": malformed rational '" + node.get<std::string>() + "'");
    }
    return *value;
}

}  // namespace

FactorSpectrum spectrum_from_json(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const std::exception& ex) {
        throw Error(Errc::parse, std::string("spectrum JSON parse error: ") + ex.what());
    }
    if (!root.is_object()) throw Error(Errc::parse, "spectrum file must be a JSON object");

    FactorSpectrum spectrum;
    try {
        spectrum.name = root.at("name").get<std::string>();
        spectrum.dim = root.at("dim").get<int>();
        spectrum.scalar_curvature = parse_rational_field(root.at("scalar_curvature"), "scalar_curvature");
        if (root.contains("volume") && !root.at("volume").is_null()) {
            spectrum.volume = root.at("volume").get<double>();
        }
        spectrum.einstein = root.at("einstein").get<bool>();
        spectrum.harmonically_free = root.at("harmonically_free").get<bool>();
        const auto& entries = root.at("entries");
        if (!entries.is_array()) throw Error(Errc::parse, "entries must be an array");
        for (const auto& item : entries) {
            SpectrumEntry entry;
            entry.index = item.at("index").get<int>();
            entry.eigenvalue = parse_rational_field(
                item.at("eigenvalue"), "entries[" + std::to_string(entry.index) + "].eigenvalue");
            entry.multiplicity = item.at("multiplicity").get<long long>();
            spectrum.entries.push_back(std::move(entry));
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& ex) {
        throw Error(Errc::parse, std::string("spectrum JSON schema error: ") + ex.what());
    }
    validate_spectrum(spectrum);
    return spectrum;
}

std::string spectrum_to_json(const FactorSpectrum& spectrum) {
    ordered_json root;
    root["name"] = spectrum.name;
    root["dim"] = spectrum.dim;
    root["scalar_curvature"] = to_fraction(spectrum.scalar_curvature);
    if (spectrum.volume) {
        root["volume"] = *spectrum.volume;
    } else {
        root["volume"] = nullptr;
    }
    root["einstein"] = spectrum.einstein;
    root["harmonically_free"] = spectrum.harmonically_free;
    root["entries"] = ordered_json::array();
    for (const auto& entry : spectrum.entries) {
        root["entries"].push_back({{"index", entry.index},
                                   {"eigenvalue", to_fraction(entry.eigenvalue)},
                                   {"multiplicity", entry.multiplicity}});
    }
    return root.dump(2) + "\n";
}

FactorSpectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io, "cannot open spectrum file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spectrum_from_json(buffer.str());
}

void save_spectrum(const FactorSpectrum& spectrum, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::io, "cannot write spectrum file '" + path + "'");
    out << spectrum_to_json(spectrum);
    if (!out) throw Error(Errc::io, "short write on spectrum file '" + path + "'");
}

}  // namespace cscbif
