#include "cscbif.h"

#include "report.hpp"

#include <cstring>
#include <string>

using namespace cscbif;

struct cscbif_spectrum {
    FactorSpectrum value;
};

struct cscbif_family {
    ProductFamily value;
};

namespace {

thread_local std::string g_last_error = "no error";

cscbif_status status_of(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return CSCBIF_ERROR_INVALID_ARGUMENT;
        case Errc::parse: return CSCBIF_ERROR_PARSE;
        case Errc::validation: return CSCBIF_ERROR_VALIDATION;
        case Errc::dimension: return CSCBIF_ERROR_DIMENSION;
        case Errc::degenerate_pair: return CSCBIF_ERROR_DEGENERATE_PAIR;
        case Errc::insufficient_truncation: return CSCBIF_ERROR_INSUFFICIENT_TRUNCATION;
        case Errc::missing_volume: return CSCBIF_ERROR_MISSING_VOLUME;
        case Errc::index_range: return CSCBIF_ERROR_INDEX_RANGE;
        case Errc::at_instant: return CSCBIF_ERROR_AT_INSTANT;
        case Errc::unknown_catalog: return CSCBIF_ERROR_UNKNOWN_CATALOG;
        case Errc::io: return CSCBIF_ERROR_IO;
        case Errc::internal: return CSCBIF_ERROR_INTERNAL;
    }
    return CSCBIF_ERROR_INTERNAL;
}

template <typename Body>
cscbif_status guarded(Body&& body) {
    try {
        body();
        return CSCBIF_OK;
    } catch (const Error& error) {
        g_last_error = error.what();
        return status_of(error.code());
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return CSCBIF_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

Rational parse_or_throw(const char* text, const char* what) {
    if (text == nullptr) {
        throw Error(Errc::invalid_argument, std::string(what) + " must not be NULL");
    }
    const auto value = parse_rational(text);
    if (!value) {
        throw Error(Errc::parse, std::string(what) + ": malformed rational '" + text + "'");
    }
    return *value;
}

template <typename T>
void require(const T* pointer, const char* what) {
    if (pointer == nullptr) {
        throw Error(Errc::invalid_argument, std::string(what) + " must not be NULL");
    }
}

}  // namespace

extern "C" {

const char* cscbif_last_error(void) { return g_last_error.c_str(); }

cscbif_status cscbif_spectrum_sphere(int n, int count, cscbif_spectrum** out) {
    return guarded([&] {
        require(out, "out");
        *out = new cscbif_spectrum{sphere_spectrum(n, count)};
    });
}

cscbif_status cscbif_spectrum_projective(int n, int count, cscbif_spectrum** out) {
    return guarded([&] {
        require(out, "out");
        *out = new cscbif_spectrum{projective_spectrum(n, count)};
    });
}

cscbif_status cscbif_spectrum_from_json(const char* json_text, cscbif_spectrum** out) {
    return guarded([&] {
        require(json_text, "json_text");
        require(out, "out");
        *out = new cscbif_spectrum{spectrum_from_json(json_text)};
    });
}

cscbif_status cscbif_spectrum_to_json(const cscbif_spectrum* spectrum, char** out_json) {
    return guarded([&] {
        require(spectrum, "spectrum");
        require(out_json, "out_json");
        *out_json = copy_string(spectrum_to_json(spectrum->value));
    });
}

cscbif_status cscbif_spectrum_set_harmonically_free(cscbif_spectrum* spectrum, int value) {
    return guarded([&] {
        require(spectrum, "spectrum");
        spectrum->value.harmonically_free = value != 0;
    });
}

void cscbif_spectrum_free(cscbif_spectrum* spectrum) { delete spectrum; }

cscbif_status cscbif_family_new(const cscbif_spectrum* factor0, const cscbif_spectrum* factor1,
                                cscbif_family** out) {
    return guarded([&] {
        require(factor0, "factor0");
        require(factor1, "factor1");
        require(out, "out");
        *out = new cscbif_family{make_family(factor0->value, factor1->value)};
    });
}

void cscbif_family_free(cscbif_family* family) { delete family; }

cscbif_status cscbif_scalar_curvature(const cscbif_family* family, const char* lambda,
                                      char** out) {
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        *out = copy_string(
            to_fraction(product_scalar_curvature(family->value, parse_or_throw(lambda, "lambda"))));
    });
}

cscbif_status cscbif_branch_eval(const cscbif_family* family, int i, int j, const char* lambda,
                                 char** out) {
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        *out = copy_string(
            to_fraction(branch_eval(family->value, i, j, parse_or_throw(lambda, "lambda"))));
    });
}

cscbif_status cscbif_morse_index(const cscbif_family* family, const char* lambda,
                                 long long* out) {
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        *out = morse_index(family->value, parse_or_throw(lambda, "lambda"));
    });
}

cscbif_status cscbif_analyze_json(const cscbif_family* family, const char* lo, const char* hi,
                                  int with_obstruction, char** out_json) {
    return guarded([&] {
        require(family, "family");
        require(out_json, "out_json");
        AnalysisOptions options;
        options.with_obstruction = with_obstruction != 0;
        const auto report = analyze(family->value, parse_or_throw(lo, "lo"),
                                    parse_or_throw(hi, "hi"), options);
        *out_json = copy_string(report_to_json(report));
    });
}

cscbif_status cscbif_diagram_csv(const cscbif_family* family, const char* lo, const char* hi,
                                 int samples, int branch_cap, char** out_csv) {
    return guarded([&] {
        require(family, "family");
        require(out_csv, "out_csv");
        *out_csv = copy_string(diagram_csv(family->value, parse_or_throw(lo, "lo"),
                                           parse_or_throw(hi, "hi"), samples, branch_cap));
    });
}

cscbif_status cscbif_sphere_instant(int n, int i, char** out) {
    return guarded([&] {
        require(out, "out");
        *out = copy_string(to_fraction(sphere_instant(n, i)));
    });
}

void cscbif_string_free(char* text) { delete[] text; }

}  // extern "C"
