#ifndef HATLAS_CLI_APP_HPP
#define HATLAS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hatlas/harmonic.hpp"
#include "hatlas/series.hpp"

namespace hatlas::cli {

/* Named map construction shared by the `area` and `distortion`
 * subcommands and the JSON spec files. Coefficient lists beyond what is
 * comfortable on a command line go through --spec-file. */
struct MapSpec {
    std::string kind;  // koebe-harmonic | identity | shear | q-subordinate | polynomial
    int order = 32;
    std::vector<Complex> phi;       // shear dilatation / q-subordinate inner function (c_0..)
    std::vector<Complex> f_series;  // shear target F (defaults to z/(1-z))
    Complex scale_a{1.0, 0.0};      // q-subordinate outer scale
    std::vector<Complex> h_coeffs;  // polynomial analytic part (c_0..)
    std::vector<Complex> g_coeffs;  // polynomial co-analytic part, may be empty
};

// Builds the harmonic map a spec describes. Throws std::invalid_argument
// on unknown kinds or missing parameters.
HarmonicMap build_map(const MapSpec& spec);

MapSpec mapspec_from_json_file(const std::string& path);

// "re,im" or bare "re".
Complex parse_complex(const std::string& text);
// Comma-separated tokens, each "re" or "re:im".
std::vector<Complex> parse_complex_list(const std::string& text);

/* Dispatches one invocation. `args` excludes the program name. Structured
 * output goes to `out`, diagnostics to `err`. Exit status: 0 success,
 * 1 data error (bad spec, failing verify run), 2 usage error. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FlagInfo {
    std::string subcommand;  // empty for top-level flags
    std::string flag;
    std::string description;
};

// Every registered flag with its help text, for reflection-style checks
// that no undocumented flag exists.
std::vector<FlagInfo> flag_registry();

}  // namespace hatlas::cli

#endif
