#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pgl {

struct VerifyGrid {
    std::vector<double> r0{0.5, 1.0, 2.0, 4.0};
    std::vector<double> eta{0.001, 0.01, 0.1, 0.5};
    std::vector<double> c{0.01, 0.1, 1.0, 5.0};
    int samples = 100;             // x samples for the sampled checks
    std::size_t n_max = 1000;      // enumeration prefix
    unsigned threads = 1;
};

struct CheckResult {
    double r0 = 0.0;
    double eta = 0.0;
    double c = 0.0;
    std::string check;
    bool passed = false;
    double value = 0.0;   // the measured quantity (worst case over samples)
    double limit = 0.0;   // what it was compared against
    std::string detail;
};

/// Runs the numerical certificate suite on every (r0, eta, c) tuple of the
/// grid. Tuples are evaluated independently (concurrently when threads > 1)
/// and the results are returned sorted by tuple, then by check order, so the
/// output does not depend on scheduling.
std::vector<CheckResult> run_verification(const VerifyGrid& grid);

/// Names of the per-tuple checks, in the order they are reported.
const std::vector<std::string>& verification_check_names();

/// Thread count from PGL_THREADS, defaulting to hardware concurrency.
unsigned sweep_threads_from_env();

}  // namespace pgl
