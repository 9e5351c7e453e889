#include <set>

#include <cstdlib>

#include "doctest.h"
#include "hatlas/harness.hpp"
#include "json.hpp"

using hatlas::RunDocument;
using hatlas::SuiteConfig;

namespace {

// A configuration small enough to run the whole harness in well under a
// second per invocation, for determinism and mutation loops.
SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.seed = 11;
    cfg.trials = 24;
    cfg.series_order = 16;
    cfg.convexity_order = 60;
    cfg.quadrature = {32, 64, 0.95};
    return cfg;
}

}  // namespace

TEST_CASE("full run is healthy and byte-deterministic") {
    const SuiteConfig cfg = small_config();
    const RunDocument first = hatlas::run_all(cfg);
    const RunDocument second = hatlas::run_all(cfg);
    CHECK(first.summary.failed == 0);
    CHECK(first.summary.skipped == 0);
    CHECK(first.json == second.json);

    SuiteConfig other = cfg;
    other.seed = 12;
    CHECK(hatlas::run_all(other).json != first.json);
}

TEST_CASE("report invariants: sorted names, digests, provenance, pass rule") {
    const RunDocument doc = hatlas::run_all(small_config());
    CHECK(doc.checks.size() > 40);
    std::string previous;
    for (const auto& r : doc.checks) {
        CHECK(previous <= r.check_name);
        previous = r.check_name;
        CHECK(!r.provenance.empty());
        CHECK(!r.inputs_digest.empty());
        if (!r.skipped) CHECK(r.passed == (r.margin >= -r.tolerance));
    }
}

TEST_CASE("the report document is valid JSON and round-trips its numbers") {
    const RunDocument doc = hatlas::run_all(small_config());
    const nlohmann::json parsed = nlohmann::json::parse(doc.json);
    CHECK(parsed["version"] == "1.0");
    CHECK(parsed["summary"]["failed"] == 0);
    CHECK(parsed["checks"].size() == doc.checks.size());
    for (size_t i = 0; i < doc.checks.size(); ++i) {
        CHECK(parsed["checks"][i]["check_name"] == doc.checks[i].check_name);
        CHECK(parsed["checks"][i]["margin"].get<double>() == doc.checks[i].margin);
        CHECK(parsed["checks"][i]["tolerance"].get<double>() == doc.checks[i].tolerance);
    }
}

TEST_CASE("suite filtering") {
    const RunDocument area_only = hatlas::run_suites(small_config(), {"area"});
    CHECK(!area_only.checks.empty());
    for (const auto& r : area_only.checks)
        CHECK(r.check_name.substr(0, 5) == "area/");
}

TEST_CASE("a corrupted q-table entry breaks the self-subordination margins") {
    SuiteConfig cfg = small_config();
    cfg.constants.q_a2 = 127.0;
    const RunDocument doc = hatlas::run_suites(cfg, {"modular-q"});
    CHECK(doc.summary.failed >= 1);
    bool rogosinski_failed = false;
    bool table_failed = false;
    for (const auto& r : doc.checks) {
        if (r.check_name == "modular-q/rogosinski-self-equality" && !r.passed && !r.skipped)
            rogosinski_failed = true;
        if (r.check_name == "modular-q/table-a2" && !r.passed && !r.skipped) table_failed = true;
    }
    CHECK(rogosinski_failed);
    CHECK(table_failed);
}

TEST_CASE("mutating the harmonic cap or C0 is caught") {
    {
        SuiteConfig cfg = small_config();
        cfg.constants.a2_cap_harmonic = 21.5;
        CHECK(hatlas::run_suites(cfg, {"theorem1"}).summary.failed >= 1);
    }
    {
        SuiteConfig cfg = small_config();
        cfg.constants.c0 = 4.5;
        CHECK(hatlas::run_suites(cfg, {"distortion"}).summary.failed >= 1);
    }
}

TEST_CASE("an invalid quadrature spec degrades to skipped checks, not an abort") {
    SuiteConfig cfg = small_config();
    cfg.quadrature.rho_max = 1.5;
    const RunDocument doc = hatlas::run_suites(cfg, {"area"});
    CHECK(doc.summary.skipped > 0);
    // Checks that never touch the shared grid still run.
    bool plane_check_ran = false;
    for (const auto& r : doc.checks) {
        if (r.check_name == "area/plane-literal" && !r.skipped && r.passed) plane_check_ran = true;
    }
    CHECK(plane_check_ran);
}

TEST_CASE("unknown tolerance names are rejected") {
    const SuiteConfig cfg = small_config();
    CHECK(cfg.tol("rogosinski") == 1e-9);
    CHECK_THROWS_AS(cfg.tol("no-such-tolerance"), std::invalid_argument);
}

TEST_CASE("configs outside the invariants are rejected") {
    SuiteConfig bad = small_config();
    bad.trials = 0;
    CHECK_THROWS_AS(hatlas::run_all(bad), std::invalid_argument);
    bad = small_config();
    bad.series_order = 4;
    CHECK_THROWS_AS(hatlas::run_all(bad), std::invalid_argument);
}

TEST_CASE("the report is byte-identical across worker-count settings") {
    SuiteConfig cfg = small_config();
    setenv("HARMONIC_ATLAS_THREADS", "1", 1);
    const std::string serial = hatlas::run_suites(cfg, {"area", "theorem2"}).json;
    setenv("HARMONIC_ATLAS_THREADS", "4", 1);
    const std::string parallel = hatlas::run_suites(cfg, {"area", "theorem2"}).json;
    unsetenv("HARMONIC_ATLAS_THREADS");
    CHECK(serial == parallel);
}
