// cscbif command line front end. Talks to the engine exclusively through the
// C API so it exercises the same surface other language bindings would.

#include <cscbif.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitTruncation = 3;

int exit_code_for(cscbif_status status) {
    switch (status) {
        case CSCBIF_OK: return 0;
        case CSCBIF_ERROR_DEGENERATE_PAIR: return kExitDegenerate;
        case CSCBIF_ERROR_INSUFFICIENT_TRUNCATION: return kExitTruncation;
        default: return kExitUsage;
    }
}

int fail(cscbif_status status) {
    std::cerr << "cscbif: error: " << cscbif_last_error() << "\n";
    return exit_code_for(status);
}

int fail_usage(const std::string& message) {
    std::cerr << "cscbif: error: " << message << "\n";
    return kExitUsage;
}

struct SpectrumHandle {
    cscbif_spectrum* ptr = nullptr;
    ~SpectrumHandle() { cscbif_spectrum_free(ptr); }
};

struct FamilyHandle {
    cscbif_family* ptr = nullptr;
    ~FamilyHandle() { cscbif_family_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { cscbif_string_free(ptr); }
};

// Factor sources are catalog descriptors "sphere:n:count" / "rp:n:count"
// or paths to spectrum JSON files.
bool parse_catalog(const std::string& descriptor, std::string& kind, int& n, int& count) {
    const auto first = descriptor.find(':');
    if (first == std::string::npos) return false;
    const auto second = descriptor.find(':', first + 1);
    if (second == std::string::npos) return false;
    kind = descriptor.substr(0, first);
    try {
        n = std::stoi(descriptor.substr(first + 1, second - first - 1));
        count = std::stoi(descriptor.substr(second + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

cscbif_status open_spectrum(const std::string& source, SpectrumHandle& handle,
                            bool catalog_only, std::string& error) {
    std::string kind;
    int n = 0, count = 0;
    if (parse_catalog(source, kind, n, count)) {
        if (kind == "sphere") return cscbif_spectrum_sphere(n, count, &handle.ptr);
        if (kind == "rp") return cscbif_spectrum_projective(n, count, &handle.ptr);
        error = "unknown catalog name '" + kind + "' in '" + source +
                "' (expected sphere:<n>:<count> or rp:<n>:<count>)";
        return CSCBIF_ERROR_UNKNOWN_CATALOG;
    }
    if (catalog_only) {
        error = "expected a catalog descriptor sphere:<n>:<count> or rp:<n>:<count>, got '" +
                source + "'";
        return CSCBIF_ERROR_UNKNOWN_CATALOG;
    }
    std::ifstream in(source);
    if (!in) {
        error = "cannot open spectrum file '" + source + "'";
        return CSCBIF_ERROR_IO;
    }
    std::ostringstream text;
    text << in.rdbuf();
    return cscbif_spectrum_from_json(text.str().c_str(), &handle.ptr);
}

// Atomic write: temp file in the same directory, then rename.
bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out) return false;
        out << content;
        if (!out) return false;
    }
    if (std::rename(temp.c_str(), path.c_str()) != 0) {
        std::remove(temp.c_str());
        return false;
    }
    return true;
}

int open_family(const std::string& source0, const std::string& source1, FamilyHandle& family) {
    SpectrumHandle factor0, factor1;
    std::string error;
    cscbif_status status = open_spectrum(source0, factor0, false, error);
    if (status != CSCBIF_OK) {
        return error.empty() ? fail(status) : fail_usage(error);
    }
    status = open_spectrum(source1, factor1, false, error);
    if (status != CSCBIF_OK) {
        return error.empty() ? fail(status) : fail_usage(error);
    }
    status = cscbif_family_new(factor0.ptr, factor1.ptr, &family.ptr);
    if (status != CSCBIF_OK) return fail(status);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degeneracy instants, Morse index jumps and bifurcation classification for "
                 "product families of constant scalar curvature metrics"};
    app.require_subcommand(1);

    std::string factor0, factor1, catalog;
    std::vector<std::string> window;
    std::string output;
    int samples = 100;
    int branch_cap = -1;
    bool with_obstruction = false;

    auto* analyze = app.add_subcommand("analyze", "enumerate instants, classify them, report "
                                                  "rigidity intervals and index samples");
    analyze->add_option("factor0", factor0, "sphere:<n>:<count>, rp:<n>:<count>, or file path")
        ->required();
    analyze->add_option("factor1", factor1, "second factor source")->required();
    analyze->add_option("--window", window, "window bounds lo hi as exact rationals, e.g. 1/10 3")
        ->expected(2)
        ->required();
    analyze->add_option("--output", output, "report path (default: stdout)");
    analyze->add_flag("--obstruction", with_obstruction,
                      "add Yamabe certificates at instants and interval midpoints");

    auto* diagram = app.add_subcommand("diagram", "sample the eigenvalue branches as CSV for "
                                                  "plotting the bifurcation diagram");
    diagram->add_option("factor0", factor0, "first factor source")->required();
    diagram->add_option("factor1", factor1, "second factor source")->required();
    diagram->add_option("--window", window, "window bounds lo hi as exact rationals")
        ->expected(2)
        ->required();
    diagram->add_option("--samples", samples, "number of lambda samples (default 100)");
    diagram->add_option("--branch-cap", branch_cap,
                        "largest branch index per factor (default: full truncation)");
    diagram->add_option("--output", output, "CSV path (default: stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "write a catalog spectrum file");
    spectrum->add_option("catalog", catalog, "sphere:<n>:<count> or rp:<n>:<count>")->required();
    spectrum->add_option("--output", output, "spectrum path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : kExitUsage;
    }

    if (analyze->parsed()) {
        FamilyHandle family;
        if (int code = open_family(factor0, factor1, family); code != 0) return code;
        StringHandle json;
        const cscbif_status status =
            cscbif_analyze_json(family.ptr, window[0].c_str(), window[1].c_str(),
                                with_obstruction ? 1 : 0, &json.ptr);
        if (status != CSCBIF_OK) return fail(status);
        if (!write_output(output, json.ptr)) return fail_usage("cannot write '" + output + "'");
        return 0;
    }

    if (diagram->parsed()) {
        FamilyHandle family;
        if (int code = open_family(factor0, factor1, family); code != 0) return code;
        if (branch_cap < 0) branch_cap = 1 << 20;  // core clamps to truncation
        StringHandle csv;
        const cscbif_status status =
            cscbif_diagram_csv(family.ptr, window[0].c_str(), window[1].c_str(), samples,
                               branch_cap, &csv.ptr);
        if (status != CSCBIF_OK) return fail(status);
        if (!write_output(output, csv.ptr)) return fail_usage("cannot write '" + output + "'");
        return 0;
    }

    SpectrumHandle handle;
    std::string error;
    const cscbif_status status = open_spectrum(catalog, handle, true, error);
    if (status != CSCBIF_OK) {
        return error.empty() ? fail(status) : fail_usage(error);
    }
    StringHandle json;
    const cscbif_status to_json = cscbif_spectrum_to_json(handle.ptr, &json.ptr);
    if (to_json != CSCBIF_OK) return fail(to_json);
    if (!write_output(output, json.ptr)) return fail_usage("cannot write '" + output + "'");
    return 0;
}
