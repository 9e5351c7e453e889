#ifndef HATLAS_HARNESS_HPP
#define HATLAS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hatlas/report.hpp"

namespace hatlas {

struct QuadratureSpec {
    int radial = 96;
    int angular = 192;
    double rho_max = 0.98;
};

/* The printed reference decimals the computed constants are cross-checked
 * against. Injectable so mutation tests can corrupt one entry at a time;
 * the computation side always comes from the formulas. C0 has no defining
 * formula in scope (it is a cited covering constant), so it is guarded
 * against the compiled-in literal instead. */
struct ReferenceConstants {
    double q_a1 = 16.0;
    double q_a2 = 128.0;
    double q_a3 = 704.0;             // also the 16 * 44 identity target
    double a2_cap_conformal = 16.5;  // A(1) = 16 + 1/2
    double eight_ln2 = 5.54518;
    double a2_cap_harmonic = 20.9197;  // 8 ln 2 (4 ln 2 + 1)
    double c0 = 4.37688;
};

struct SuiteConfig {
    std::uint64_t seed = 7;
    int trials = 1000;
    int series_order = 32;
    int convexity_order = 200;
    QuadratureSpec quadrature;
    std::map<std::string, double> tolerances = default_tolerances();
    ReferenceConstants constants;

    static std::map<std::string, double> default_tolerances();
    double tol(const std::string& name) const;

    // trials >= 1 and series_order >= 8; throws std::invalid_argument.
    void validate() const;

    // Canonical JSON of the configuration; also the digest input.
    std::string canonical_json() const;
    std::string digest() const;
};

/* Every suite is a pure function of its config: all randomness flows
 * from the seed, and a check whose preconditions fail is recorded as
 * skipped instead of aborting the run. */
std::vector<VerificationReport> suite_modular_q(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_theorem1(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_theorem2_3(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_area(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_distortion(const SuiteConfig& cfg);

struct RunSummary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct RunDocument {
    std::vector<VerificationReport> checks;  // ordered by check name
    RunSummary summary;
    std::string json;  // byte-stable for a fixed config
};

// Suite names: modular-q, theorem1, theorem2, area, distortion, or "all".
RunDocument run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names);
RunDocument run_all(const SuiteConfig& cfg);

std::string report_json(const SuiteConfig& cfg, const std::vector<VerificationReport>& checks,
                        const RunSummary& summary);

}  // namespace hatlas

#endif
