// expanse: command-line front end for expansions, structural checks and
// homological invariants of simplicial complexes and hypergraphs.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "expanse/conjecture.hpp"
#include "expanse/error.hpp"
#include "expanse/expansion.hpp"
#include "expanse/homology.hpp"
#include "expanse/hypergraph.hpp"
#include "expanse/ideals.hpp"
#include "expanse/io.hpp"
#include "expanse/structure.hpp"

namespace {

using expanse::io::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;

struct GlobalOptions {
    std::string field = "q";
    std::uint64_t seed = 42;
    std::size_t budget = 1'000'000;
    bool json_output = false;
};

/// A loaded input: a complex, or a hypergraph together with its
/// independence complex.
struct Input {
    std::optional<expanse::Hypergraph> graph;
    expanse::SimplicialComplex complex = expanse::SimplicialComplex::void_complex({});
};

Input load_input(const std::string& path, std::vector<std::string>* warnings) {
    const json doc = expanse::io::read_json_file(path);
    Input in;
    if (doc.contains("edges")) {
        in.graph = expanse::io::hypergraph_from_json(doc, true, warnings);
        in.complex = expanse::independence_complex(*in.graph);
    } else {
        in.complex = expanse::io::complex_from_json(doc);
    }
    return in;
}

Input expand_input(const Input& in, const std::string& s_text) {
    if (s_text.empty())
        return in;
    const auto s = expanse::ExpansionVector::parse(s_text);
    Input out;
    if (in.graph) {
        out.graph = expanse::expand_hypergraph(*in.graph, s);
        out.complex = expanse::independence_complex(*out.graph);
    } else {
        out.complex = expanse::expand_complex(in.complex, s);
    }
    return out;
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw expanse::Error(expanse::ErrorCode::InvalidInput, "cannot write '" + out_path + "'");
    out << doc.dump(2) << '\n';
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';
}

int exit_for(expanse::Decision d) {
    switch (d) {
    case expanse::Decision::Yes: return kExitTrue;
    case expanse::Decision::No: return kExitFalse;
    case expanse::Decision::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

expanse::Decision from_bool(bool b) { return b ? expanse::Decision::Yes : expanse::Decision::No; }

int run_check(const GlobalOptions& global, const std::string& property, const std::string& path,
              const std::string& s_text) {
    std::vector<std::string> warnings;
    const Input in = expand_input(load_input(path, &warnings), s_text);
    print_warnings(warnings);
    const auto field = expanse::FieldChoice::parse(global.field);
    const expanse::SearchBudget budget{.max_nodes = global.budget, .max_facets = 10};
    const auto& complex = in.complex;

    json report{{"property", property}, {"input", path}};
    expanse::Decision decision = expanse::Decision::Unknown;
    if (property == "vd") {
        const auto result = expanse::decide_vertex_decomposable(complex, budget);
        decision = result.decision;
        report["nodes"] = result.nodes;
        if (result.witness)
            report["witness"] = expanse::io::shedding_tree_to_json(complex, *result.witness);
    } else if (property == "shellable") {
        const auto result = expanse::search_shelling(complex, budget);
        decision = result.decision;
        report["nodes"] = result.nodes;
        if (result.order)
            report["witness"] = expanse::io::faces_to_json(complex.universe(), result.order->facets);
    } else if (property == "pure") {
        decision = from_bool(expanse::is_pure(complex));
    } else if (property == "connected") {
        decision = from_bool(expanse::is_connected(complex));
    } else if (property == "cm") {
        report["field"] = field.to_string();
        decision = from_bool(expanse::is_cohen_macaulay(complex, field));
    } else if (property == "chordal") {
        if (!in.graph)
            throw expanse::Error(expanse::ErrorCode::InvalidInput, "chordality needs a graph input");
        decision = from_bool(expanse::is_chordal(*in.graph));
    } else {
        throw expanse::Error(expanse::ErrorCode::InvalidInput, "unknown property '" + property + "'");
    }
    report["result"] = expanse::to_string(decision);
    if (global.json_output)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << property << ": " << expanse::to_string(decision) << '\n'
                  << (report.contains("witness") ? report["witness"].dump() + "\n" : "");
    return exit_for(decision);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

/// Linear quotients for the dual of `complex`: a direct search when the dual
/// is small, otherwise the complement order of a shelling (of the base
/// complex, carried through the expansion when one was applied).
std::optional<expanse::LinearQuotientsCertificate> dual_certificate(const Input& base, const std::string& s_text,
                                                                    const expanse::SimplicialComplex& complex,
                                                                    std::size_t budget) {
    const auto dual = expanse::alexander_dual_ideal(complex);
    const expanse::LinearQuotientsSearchOptions search{.max_generators = 12, .max_nodes = budget};
    if (dual.generator_count() <= search.max_generators)
        return expanse::find_linear_quotients_order(dual, search);
    const auto shelling = expanse::search_shelling(base.complex, {.max_nodes = budget, .max_facets = 10});
    if (!shelling.order)
        return std::nullopt;
    auto order = *shelling.order;
    if (!s_text.empty())
        order = expanse::expansion_shelling(base.complex, order, expanse::ExpansionVector::parse(s_text));
    return expanse::check_linear_quotients(dual, expanse::complement_order(complex, order));
}

int run_invariants(const GlobalOptions& global, const std::string& path, const std::string& what_text,
                   const std::string& via, const std::string& s_text, int max_variables) {
    std::vector<std::string> warnings;
    const Input base = load_input(path, &warnings);
    const Input in = expand_input(base, s_text);
    print_warnings(warnings);
    const auto& complex = in.complex;
    const auto field = expanse::FieldChoice::parse(global.field);
    const auto what = split_list(what_text);
    auto wants = [&](const char* key) { return std::find(what.begin(), what.end(), key) != what.end(); };
    if (via != "lq" && via != "hochster" && via != "both")
        throw expanse::Error(expanse::ErrorCode::InvalidInput, "--via must be lq, hochster or both");

    json report{{"input", path}, {"field", field.to_string()}, {"via", via}, {"variables", complex.vertex_count()}};
    if (!s_text.empty())
        report["expansion"] = s_text;
    const auto ideal = expanse::stanley_reisner_ideal(complex);
    report["ideal"] = expanse::io::ideal_to_json(ideal);

    std::optional<expanse::QuotientInvariants> hochster;
    if (via != "lq") {
        expanse::HochsterOptions options;
        options.max_variables = max_variables;
        hochster = expanse::quotient_invariants(complex, field, options);
        json h;
        if (wants("betti"))
            h["betti"] = expanse::io::betti_to_json(hochster->quotient_betti);
        if (wants("pd"))
            h["pd"] = hochster->projective_dimension;
        if (wants("reg"))
            h["reg"] = hochster->regularity;
        if (wants("depth"))
            h["depth"] = hochster->depth;
        report["hochster"] = std::move(h);
    }
    if (via != "hochster") {
        const expanse::LinearQuotientsSearchOptions search{.max_generators = 12, .max_nodes = global.budget};
        json lq;
        if (!ideal.is_zero()) {
            try {
                const auto cert = expanse::find_linear_quotients_order(ideal, search);
                if (cert) {
                    const auto table = expanse::betti_from_linear_quotients(*cert).quotient_from_ideal();
                    if (wants("betti"))
                        lq["betti"] = expanse::io::betti_to_json(table);
                    if (wants("pd")) {
                        lq["pd"] = table.projective_dimension();
                        lq["depth_from_pd"] = complex.vertex_count() - table.projective_dimension();
                    }
                } else {
                    lq["ideal_has_linear_quotients"] = false;
                }
            } catch (const expanse::Error& e) {
                if (e.code() != expanse::ErrorCode::TooLarge)
                    throw;
                lq["ideal_has_linear_quotients"] = "skipped: too many generators";
            }
            const auto dual_cert = dual_certificate(base, s_text, complex, global.budget);
            if (dual_cert && wants("reg"))
                lq["reg"] = std::max(0, expanse::betti_from_linear_quotients(*dual_cert).projective_dimension());
            if (!dual_cert)
                lq["dual_has_linear_quotients"] = "not found";
        } else {
            lq["betti"] = expanse::io::betti_to_json(expanse::BettiTable{}.quotient_from_ideal());
            lq["pd"] = 0;
            lq["reg"] = 0;
        }
        report["linear_quotients"] = std::move(lq);
    }
    if (via == "both" && hochster) {
        const auto& lq = report["linear_quotients"];
        bool agree = true;
        if (lq.contains("pd"))
            agree = agree && lq["pd"] == hochster->projective_dimension;
        if (lq.contains("reg"))
            agree = agree && lq["reg"] == hochster->regularity;
        report["routes_agree"] = agree;
    }
    if (wants("bight"))
        report["bight"] = expanse::bight(complex);
    if (wants("dim"))
        report["dim"] = expanse::dim(complex) + 1;
    std::cout << report.dump(global.json_output ? -1 : 2) << '\n';
    return kExitTrue;
}

int run_dual(const std::string& path, bool ideal_only) {
    std::vector<std::string> warnings;
    const Input in = load_input(path, &warnings);
    print_warnings(warnings);
    const auto& complex = in.complex;
    if (ideal_only) {
        emit(expanse::io::ideal_to_json(expanse::alexander_dual_ideal(complex)), "");
        return kExitTrue;
    }
    const auto dual = expanse::alexander_dual(complex);
    json out = dual.is_void() ? json{{"vertices", dual.universe()}, {"facets", json::array()}, {"void", true}}
                              : expanse::io::complex_to_json(dual);
    out["dual_ideal"] = expanse::io::ideal_to_json(expanse::alexander_dual_ideal(complex));
    emit(out, "");
    return kExitTrue;
}

int run_shelling(const GlobalOptions& global, const std::string& path, const std::string& s_text) {
    std::vector<std::string> warnings;
    const Input in = load_input(path, &warnings);
    print_warnings(warnings);
    const expanse::SearchBudget budget{.max_nodes = global.budget, .max_facets = 10};
    const auto search = expanse::search_shelling(in.complex, budget);
    json report{{"input", path}, {"result", expanse::to_string(search.decision)}, {"nodes", search.nodes}};
    if (search.order) {
        report["order"] = expanse::io::faces_to_json(in.complex.universe(), search.order->facets);
        if (!s_text.empty()) {
            if (in.graph)
                throw expanse::Error(expanse::ErrorCode::InvalidInput, "--expand with shelling needs a complex input");
            const auto s = expanse::ExpansionVector::parse(s_text);
            const auto expanded = expanse::expand_complex(in.complex, s);
            const auto order = expanse::expansion_shelling(in.complex, *search.order, s);
            report["expansion"] = s.to_string();
            report["expanded_order"] = expanse::io::faces_to_json(expanded.universe(), order.facets);
        }
    }
    std::cout << report.dump(2) << '\n';
    return exit_for(search.decision);
}

int run_search(const GlobalOptions& global, expanse::ConjectureSearchOptions options, bool serial,
               const std::string& out_path) {
    options.seed = global.seed;
    options.field = expanse::FieldChoice::parse(global.field);
    const auto report = serial ? expanse::search_conjecture_serial(options) : expanse::search_conjecture(options);
    const json doc = report.to_json();
    emit(doc, out_path);
    if (!out_path.empty() && !global.json_output)
        std::cout << "trials " << options.trials << ", CM inputs " << report.cm_inputs << ", preserved "
                  << report.preserved << ", counterexamples " << report.counterexamples.size() << '\n';
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expansions of simplicial complexes and hypergraphs: structure and invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions global;
    app.add_option("--field", global.field, "Coefficient field: q or gf:<p>")->capture_default_str();
    app.add_option("--seed", global.seed, "Random seed")->capture_default_str();
    app.add_option("--budget", global.budget, "Node budget for exact searches")->capture_default_str();
    app.add_flag("--json", global.json_output, "Machine-readable output");

    auto* expand = app.add_subcommand("expand", "Expand a complex or hypergraph");
    std::string complex_path, graph_path, s_text, out_path;
    auto* complex_opt = expand->add_option("--complex", complex_path, "Complex JSON")->check(CLI::ExistingFile);
    auto* graph_opt = expand->add_option("--graph", graph_path, "Hypergraph JSON")->check(CLI::ExistingFile);
    complex_opt->excludes(graph_opt);
    expand->add_option("--s,--expand", s_text, "Copy counts, e.g. 1,2,1,1,2")->required();
    expand->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* check = app.add_subcommand("check", "Decide a property; exit 0 true, 1 false, 2 unknown");
    std::string property, check_path, check_s;
    check->add_option("--property", property, "vd|shellable|pure|connected|cm|chordal")->required();
    check->add_option("input", check_path, "Complex or hypergraph JSON")->required()->check(CLI::ExistingFile);
    check->add_option("--expand", check_s, "Expand before checking");

    auto* invariants = app.add_subcommand("invariants", "Betti table, pd, reg, depth, bight, dim of R/I");
    std::string inv_path, what = "betti,pd,reg,depth,bight,dim", via = "hochster", inv_s;
    int max_variables = 14;
    invariants->add_option("input", inv_path, "Complex or hypergraph JSON")->required()->check(CLI::ExistingFile);
    invariants->add_option("--what", what, "Comma list of invariants")->capture_default_str();
    invariants->add_option("--via", via, "lq|hochster|both")->capture_default_str();
    invariants->add_option("--expand", inv_s, "Expand before computing");
    invariants->add_option("--max-vars", max_variables, "Hochster variable cap")->capture_default_str();

    auto* dual = app.add_subcommand("dual", "Alexander dual complex and ideal");
    std::string dual_path;
    bool ideal_only = false;
    dual->add_option("input", dual_path, "Complex or hypergraph JSON")->required()->check(CLI::ExistingFile);
    dual->add_flag("--ideal", ideal_only, "Emit only the dual ideal");

    auto* shelling = app.add_subcommand("shelling", "Find a shelling; with --expand also the induced one");
    std::string shell_path, shell_s;
    shelling->add_option("input", shell_path, "Complex JSON")->required()->check(CLI::ExistingFile);
    shelling->add_option("--expand", shell_s, "Expansion vector");

    auto* search = app.add_subcommand("search-conjecture", "Random search for CM complexes with non-CM expansions");
    expanse::ConjectureSearchOptions search_options;
    std::string report_path;
    bool serial = false;
    search->add_option("--n-max", search_options.n_max, "Max vertices")->capture_default_str()->check(CLI::Range(1, 12));
    search->add_option("--s-max", search_options.s_max, "Max copies per vertex")->capture_default_str()->check(CLI::Range(1, 5));
    search->add_option("--trials", search_options.trials, "Number of trials")->capture_default_str()->check(CLI::NonNegativeNumber);
    search->add_flag("--pure-shellable", search_options.pure_shellable, "Sample pure shellable complexes only");
    search->add_flag("--serial", serial, "Use the single-threaded reference loop");
    search->add_option("-o,--output", report_path, "Report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*expand) {
            if (complex_path.empty() == graph_path.empty())
                throw expanse::Error(expanse::ErrorCode::InvalidInput, "give exactly one of --complex or --graph");
            const auto s = expanse::ExpansionVector::parse(s_text);
            if (!complex_path.empty()) {
                const auto complex = expanse::io::complex_from_json(expanse::io::read_json_file(complex_path));
                emit(expanse::io::complex_to_json(expanse::expand_complex(complex, s)), out_path);
            } else {
                std::vector<std::string> warnings;
                const auto h = expanse::io::hypergraph_from_json(expanse::io::read_json_file(graph_path), true, &warnings);
                print_warnings(warnings);
                emit(expanse::io::hypergraph_to_json(expanse::expand_hypergraph(h, s)), out_path);
            }
            return kExitTrue;
        }
        if (*check)
            return run_check(global, property, check_path, check_s);
        if (*invariants)
            return run_invariants(global, inv_path, what, via, inv_s, max_variables);
        if (*dual)
            return run_dual(dual_path, ideal_only);
        if (*shelling)
            return run_shelling(global, shell_path, shell_s);
        if (*search)
            return run_search(global, search_options, serial, report_path);
    } catch (const expanse::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == expanse::ErrorCode::BudgetExceeded ? kExitUnknown : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
