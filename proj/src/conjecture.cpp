#include "expanse/conjecture.hpp"

#include <algorithm>

#include "expanse/error.hpp"
#include "expanse/io.hpp"
#include "expanse/random.hpp"
#include "expanse/structure.hpp"

namespace expanse {

FieldChoice second_field(FieldChoice field) {
    return field.kind() == FieldChoice::Kind::Rationals ? FieldChoice::prime_field(32003) : FieldChoice::rationals();
}

namespace {

ConjectureTrial run_trial(const ConjectureSearchOptions& options, int index) {
    auto rng = random::trial_rng(options.seed, static_cast<std::uint64_t>(index));
    ConjectureTrial trial;
    trial.index = index;
    const int n = random::uniform(rng, std::min(2, options.n_max), options.n_max);
    const HomologyOptions homology{options.face_cap};

    if (options.pure_shellable) {
        trial.mode = "pure-shellable";
        const int size = random::uniform(rng, 1, n);
        const int count = random::uniform(rng, 1, 8);
        auto complex = random::random_pure_complex(rng, n, count, size);
        auto s = random::random_expansion_vector(rng, n, options.s_max);
        trial.complex = complex;
        trial.s = s;
        const auto shelling = search_shelling(complex, {.max_nodes = 100'000, .max_facets = 10});
        if (shelling.decision != Decision::Yes) {
            trial.skipped = shelling.decision == Decision::Unknown;
            return trial;
        }
    } else {
        const bool pure = index % 2 == 1;
        trial.mode = pure ? "pure" : "general";
        const int count = random::uniform(rng, 1, 8);
        const int lo = random::uniform(rng, 1, n);
        const int hi = pure ? lo : random::uniform(rng, lo, n);
        trial.complex = random::random_complex(rng, n, count, lo, hi);
        trial.s = random::random_expansion_vector(rng, n, options.s_max);
    }
    trial.sampled = true;

    try {
        trial.input_cm = is_cohen_macaulay(*trial.complex, options.field, homology);
        if (trial.input_cm)
            trial.expanded_cm = is_cohen_macaulay(expand_complex(*trial.complex, *trial.s), options.field, homology);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge && e.code() != ErrorCode::TooManyVertices)
            throw;
        trial.skipped = true;
    }
    return trial;
}

ConjectureReport aggregate(const ConjectureSearchOptions& options, std::vector<ConjectureTrial> trials) {
    ConjectureReport report;
    report.options = options;
    const FieldChoice other = second_field(options.field);
    const HomologyOptions homology{options.face_cap};
    for (const auto& t : trials) {
        if (t.skipped) {
            ++report.skipped;
            continue;
        }
        if (!t.sampled) {
            ++report.filtered;
            continue;
        }
        if (!t.input_cm)
            continue;
        ++report.cm_inputs;
        if (t.expanded_cm) {
            ++report.preserved;
            continue;
        }
        Counterexample c{t.index, *t.complex, *t.s, options.field.to_string(), other.to_string(), false, false};
        c.input_cm_second_field = is_cohen_macaulay(c.complex, other, homology);
        c.confirmed_second_field = !is_cohen_macaulay(expand_complex(c.complex, c.s), other, homology);
        report.counterexamples.push_back(std::move(c));
    }
    report.trials = std::move(trials);
    return report;
}

}  // namespace

ConjectureReport search_conjecture_serial(const ConjectureSearchOptions& options) {
    std::vector<ConjectureTrial> trials;
    trials.reserve(std::max(0, options.trials));
    for (int t = 0; t < options.trials; ++t)
        trials.push_back(run_trial(options, t));
    return aggregate(options, std::move(trials));
}

ConjectureReport search_conjecture(const ConjectureSearchOptions& options) {
    const int count = std::max(0, options.trials);
    std::vector<ConjectureTrial> trials(count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < count; ++t) {
        try {
            trials[t] = run_trial(options, t);
        } catch (...) {
#pragma omp critical(expanse_conjecture_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return aggregate(options, std::move(trials));
}

nlohmann::json ConjectureReport::to_json() const {
    using nlohmann::json;
    json out;
    out["tool_version"] = kVersion;
    out["seed"] = options.seed;
    out["n_max"] = options.n_max;
    out["s_max"] = options.s_max;
    out["trials"] = options.trials;
    out["mode"] = options.pure_shellable ? "pure-shellable" : "general+pure";
    out["field"] = options.field.to_string();
    out["second_field"] = second_field(options.field).to_string();
    out["face_cap"] = options.face_cap;
    out["cm_inputs"] = cm_inputs;
    out["cm_preserved"] = preserved;
    out["filtered"] = filtered;
    out["skipped"] = skipped;
    json examples = json::array();
    for (const auto& c : counterexamples) {
        examples.push_back({{"trial", c.trial},
                            {"complex", io::complex_to_json(c.complex)},
                            {"s", c.s.counts()},
                            {"expanded", io::complex_to_json(expand_complex(c.complex, c.s))},
                            {"field", c.field},
                            {"second_field", c.second_field},
                            {"input_cm_second_field", c.input_cm_second_field},
                            {"confirmed_second_field", c.confirmed_second_field}});
    }
    out["counterexamples"] = std::move(examples);
    return out;
}

}  // namespace expanse
