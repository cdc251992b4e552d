#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "expanse/complex.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"

namespace expanse {

inline constexpr const char* kVersion = "0.1.0";

/**
 * Randomized search for Cohen–Macaulay complexes whose expansion is not
 * Cohen–Macaulay. Trial t draws everything from random::trial_rng(seed, t),
 * so a report depends only on the options and the tool version.
 */
struct ConjectureSearchOptions {
    std::uint64_t seed = 42;
    int n_max = 6;
    int s_max = 3;
    int trials = 500;
    FieldChoice field = FieldChoice::rationals();
    /// Sample only pure shellable complexes (CM preservation guaranteed).
    bool pure_shellable = false;
    std::size_t face_cap = std::size_t{1} << 16;
};

struct ConjectureTrial {
    int index = 0;
    std::string mode;              ///< "general", "pure" or "pure-shellable"
    bool sampled = false;          ///< false when the sample was filtered out
    bool input_cm = false;
    bool expanded_cm = false;
    bool skipped = false;          ///< a size cap was hit
    std::optional<SimplicialComplex> complex;
    std::optional<ExpansionVector> s;
};

struct Counterexample {
    int trial = 0;
    SimplicialComplex complex;
    ExpansionVector s;
    std::string field;
    std::string second_field;
    bool confirmed_second_field = false;  ///< expansion also fails CM there
    bool input_cm_second_field = false;
};

struct ConjectureReport {
    ConjectureSearchOptions options;
    std::vector<ConjectureTrial> trials;
    int cm_inputs = 0;
    int preserved = 0;
    int filtered = 0;
    int skipped = 0;
    std::vector<Counterexample> counterexamples;

    nlohmann::json to_json() const;
};

/// Trials run in parallel; aggregation is by trial index.
ConjectureReport search_conjecture(const ConjectureSearchOptions& options);

/// Single-threaded reference producing the same report.
ConjectureReport search_conjecture_serial(const ConjectureSearchOptions& options);

/// The field used to double-check a counterexample: GF(32003) for ℚ, ℚ otherwise.
FieldChoice second_field(FieldChoice field);

}  // namespace expanse
