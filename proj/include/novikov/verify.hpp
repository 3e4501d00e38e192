#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "novikov/fixtures.hpp"
#include "novikov/io.hpp"

namespace novikov {

struct Verdict {
    std::string name;
    bool passed = true;
    bool skipped = false;
    /// Checked cases on success; the first counterexample on failure.
    Json payload = Json::object();
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Verdict> verdicts;

    bool passed() const;
    Json to_json() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 20;
    /// Caller's promise that the fixture is a closed orientable manifold;
    /// the duality check is skipped otherwise.
    bool closed_manifold = true;
    double float_tolerance = 1e-8;
};

/// Gauge, duality, Euler, Kunneth and cover checks on one complex with
/// randomized cocycles, lambdas and gauge functions.
SuiteResult verify_theorem21(const SimplicialComplex& K, const IntegralCocycle& theta, const SuiteOptions& options);

/// Nil torus bundle: exact simplicial dims vanish at each lambda and match
/// the Wang count of the induced monodromy.
SuiteResult verify_nilpotent_vanishing(const std::vector<Rational>& lambdas, const SuiteOptions& options);

/// Sol torus bundle at the root of x^2 - 3x + 1: Wang count over the number
/// field against the float simplicial dims at (3 + sqrt 5) / 2.
SuiteResult verify_sol_nonvanishing(const SuiteOptions& options);

/// Dispatch by name: "theorem21", "nilpotent-vanishing", "sol-nonvanishing".
std::vector<std::string> suite_names();

}  // namespace novikov
