#ifndef ECL_EXPERIMENT_HPP
#define ECL_EXPERIMENT_HPP

#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ecl/coloring.hpp"
#include "ecl/density.hpp"
#include "ecl/oracles.hpp"

namespace ecl {

inline std::vector<int> subset_to_ids(VertexSet s)
{
    std::vector<int> ids;
    for (int v = 0; v < 64; ++v)
        if (set_contains(s, v))
            ids.push_back(v);
    return ids;
}

// ---- trace and coloring files ------------------------------------------

namespace detail {

inline nlohmann::json violation_json(const AdmissibilityViolation& v)
{
    return {{"subset", subset_to_ids(v.subset)},
            {"cover", v.cover},
            {"uncolored_inside", v.uncolored_inside}};
}

} // namespace detail

// One JSON record per line: a header, one record per step, a summary.
inline void write_trace(std::ostream& out, const Multigraph& g,
                        const RunTrace& trace)
{
    nlohmann::json header = {{"type", "header"},
                             {"instance", g.name()},
                             {"n", g.n()},
                             {"m", g.m()},
                             {"k", trace.final.k},
                             {"edge_order", trace.order.edge_order},
                             {"vertex_order", trace.order.vertex_order}};
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        auto [u, v] = g.endpoints(step.edge);
        nlohmann::json rec = {{"type", "step"},
                              {"index", i + 1},
                              {"edge", step.edge},
                              {"u", u},
                              {"v", v}};
        nlohmann::json rejected = nlohmann::json::array();
        for (const auto& rej : step.rejections) {
            nlohmann::json r = {{"color", rej.color},
                                {"reason",
                                 rej.improper ? "improper" : "inadmissible"}};
            if (rej.violation)
                r["violation"] = detail::violation_json(*rej.violation);
            rejected.push_back(std::move(r));
        }
        rec["rejected"] = std::move(rejected);
        if (step.color) {
            rec["color"] = *step.color;
        } else {
            rec["halt"] = true;
            if (auto mv = trace.halt_violation())
                rec["violation"] = detail::violation_json(*mv);
        }
        out << rec.dump() << '\n';
    }
    nlohmann::json summary = {{"type", "summary"},
                              {"complete", trace.complete},
                              {"colored", trace.final.colored_count()}};
    out << summary.dump() << '\n';
}

// Coloring file: one `<edge_id> <color>` line per colored edge.
inline void write_coloring(std::ostream& out, const PartialColoring& phi)
{
    for (std::size_t e = 0; e < phi.color.size(); ++e)
        if (phi.color[e] != 0)
            out << e << ' ' << phi.color[e] << '\n';
}

inline PartialColoring parse_coloring(std::istream& in, const Multigraph& g,
                                      int k)
{
    PartialColoring phi = empty_coloring(g, k);
    int e, c;
    while (in >> e >> c) {
        if (e < 0 || e >= g.m())
            throw std::invalid_argument("coloring file: edge id out of range");
        if (c < 1 || c > k)
            throw std::invalid_argument("coloring file: color out of range");
        phi.color[e] = c;
    }
    return phi;
}

// ---- experiment driver --------------------------------------------------

enum class KPolicy { omega, fractional, explicit_value };

struct ExperimentOptions {
    KPolicy k_policy = KPolicy::omega;
    int explicit_k = 0;
    FreeVertexMode mode = FreeVertexMode::witness_anywhere;
    bool instrument = false;     // re-check each step with the naive oracle
    bool force = false;          // lift scale guards
    std::string artifacts_dir;   // bundle failures here when non-empty
};

struct ExperimentRow {
    std::string instance;
    int n = 0, m = 0, delta = 0, multiplicity = 0;
    int omega = 0, chi_prime = 0, k = 0;
    bool applicable = false;    // chi' > Delta + 1
    bool bound_consistent = true; // applicable implies chi' == omega
    bool complete = false;
    int halt_step = -1;         // 1-based; -1 when complete
    std::optional<AdmissibilityViolation> violation;
    bool candidate_failure = false;
    double wall_ms = 0.0;       // console diagnostics only, never in the CSV
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    int applicable_count = 0;
    int complete_count = 0;
    int halt_count = 0;
    int candidate_failures = 0;
};

inline ExperimentRow run_instance(const Multigraph& g,
                                  const ExperimentOptions& opt)
{
    auto t0 = std::chrono::steady_clock::now();
    ExperimentRow row;
    row.instance = g.name().empty() ? "instance" : g.name();
    row.n = g.n();
    row.m = g.m();
    GraphStats st = stats(g);
    row.delta = st.max_degree;
    row.multiplicity = st.max_multiplicity;
    DensityResult dens = density(g, true, opt.force);
    row.omega = dens.omega;
    row.chi_prime = chromatic_index(g, opt.force).chi_prime;
    row.applicable = row.chi_prime > row.delta + 1;
    row.bound_consistent = !row.applicable || row.chi_prime == row.omega;

    switch (opt.k_policy) {
    case KPolicy::omega: row.k = row.omega; break;
    case KPolicy::fractional: row.k = dens.fractional_index; break;
    case KPolicy::explicit_value: row.k = opt.explicit_k; break;
    }

    std::function<void(const PartialColoring&)> instrument;
    if (opt.instrument && g.n() <= 20)
        instrument = [&g, &opt](const PartialColoring& phi) {
            if (naive_admissible(g, phi, opt.mode))
                throw std::logic_error(
                    "instrument: accepted coloring is inadmissible");
        };
    RunTrace trace = conditional_greedy(g, row.k, reorder(g), opt.mode,
                                        instrument);
    row.complete = trace.complete;
    if (!trace.complete) {
        row.halt_step = static_cast<int>(trace.steps.size());
        row.violation = trace.halt_violation();
    }
    if (row.complete && !validate_coloring(g, trace.final))
        throw std::logic_error("run_instance: greedy output is improper");
    row.candidate_failure =
        row.applicable && (!row.complete || !row.bound_consistent);

    if (row.candidate_failure && !opt.artifacts_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(opt.artifacts_dir);
        std::string base = opt.artifacts_dir + "/" + row.instance;
        std::ofstream inst(base + ".mg");
        serialize(inst, g);
        std::ofstream tr(base + ".trace");
        write_trace(tr, g, trace);
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return row;
}

inline ExperimentReport run_experiment(const std::vector<Multigraph>& instances,
                                       const ExperimentOptions& opt)
{
    ExperimentReport report;
    for (const Multigraph& g : instances) {
        ExperimentRow row = run_instance(g, opt);
        report.applicable_count += row.applicable;
        report.complete_count += row.complete;
        report.halt_count += !row.complete;
        report.candidate_failures += row.candidate_failure;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// Deterministic CSV: wall time is deliberately excluded so identical runs
// produce byte-identical reports.
inline void write_report_csv(std::ostream& out, const ExperimentReport& report)
{
    out << "instance,n,m,delta,p,omega,chi_prime,k,applicable,outcome,"
           "halt_step,violation_subset,violation_cover,violation_uncolored,"
           "candidate_failure\n";
    for (const ExperimentRow& row : report.rows) {
        out << row.instance << ',' << row.n << ',' << row.m << ','
            << row.delta << ',' << row.multiplicity << ',' << row.omega << ','
            << row.chi_prime << ',' << row.k << ','
            << (row.applicable ? "yes" : "no") << ','
            << (row.complete ? "complete" : "halt") << ',';
        if (row.halt_step >= 0)
            out << row.halt_step;
        out << ',';
        if (row.violation) {
            auto ids = subset_to_ids(row.violation->subset);
            for (std::size_t i = 0; i < ids.size(); ++i)
                out << (i ? ";" : "") << ids[i];
            out << ',' << row.violation->cover << ','
                << row.violation->uncolored_inside;
        } else {
            out << ",,";
        }
        out << ',' << (row.candidate_failure ? "yes" : "no") << '\n';
    }
}

} // namespace ecl

#endif
