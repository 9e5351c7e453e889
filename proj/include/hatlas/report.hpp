#ifndef HATLAS_REPORT_HPP
#define HATLAS_REPORT_HPP

#include <complex>
#include <string>

namespace hatlas {

/* One named numeric check. `margin` is bound - |computed| for one-sided
 * bounds, the worse of the two gaps for window checks, and -|difference|
 * for equality checks; in every case passed <=> margin >= -tolerance.
 * `provenance` points at the literature statement being exercised and is
 * never empty. */
struct VerificationReport {
    std::string check_name;
    std::complex<double> computed{0.0, 0.0};
    double bound = 0.0;
    double margin = 0.0;
    bool passed = false;
    double tolerance = 0.0;
    std::string provenance;
    std::string inputs_digest;
    bool skipped = false;
};

inline VerificationReport make_report(std::string name, std::complex<double> computed,
                                      double bound, double margin, double tolerance,
                                      std::string provenance, std::string digest = "") {
    VerificationReport r;
    r.check_name = std::move(name);
    r.computed = computed;
    r.bound = bound;
    r.margin = margin;
    r.tolerance = tolerance;
    r.passed = margin >= -tolerance;
    r.provenance = std::move(provenance);
    r.inputs_digest = std::move(digest);
    return r;
}

}  // namespace hatlas

#endif
