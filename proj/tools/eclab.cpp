// eclab: multigraph edge-coloring laboratory.
//
// Subcommands: gen, density, chi, reorder, color, check, search.
// Exit codes: 0 ok, 1 usage error, 2 scale guard refused, 3 a conjecture
// candidate failure was found.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ecl/coloring.hpp"
#include "ecl/density.hpp"
#include "ecl/experiment.hpp"
#include "ecl/generators.hpp"
#include "ecl/oracles.hpp"
#include "ecl/ordering.hpp"

namespace {

ecl::Multigraph load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file: " + path);
    ecl::Multigraph g = ecl::parse(in);
    return ecl::Multigraph(g.n(), g.edges(), path);
}

int resolve_k(const std::string& spec, const ecl::Multigraph& g, bool force)
{
    ecl::DensityResult d = ecl::density(g, true, force);
    if (spec == "omega")
        return d.omega;
    if (spec == "fractional")
        return d.fractional_index;
    return std::stoi(spec);
}

void print_ids(std::ostream& out, const std::vector<int>& ids)
{
    for (std::size_t i = 0; i < ids.size(); ++i)
        out << (i ? " " : "") << ids[i];
}

std::ostream& open_out(std::ofstream& file, const std::string& path)
{
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index,
                       std::uint64_t attempt)
{
    ecl::SplitMix64 rng(seed ^ (index * 0x100000001b3ULL) ^ (attempt << 48));
    return rng.next();
}

struct GenOptions {
    std::string family = "named";
    int p = 2, q = 2, r = 2;
    int length = 5, mult = 2;
    int n = 8;
    double prob = 0.4;
    int max_mult = 3;
    std::uint64_t seed = 1;
    std::string name = "petersen";
};

void add_gen_flags(CLI::App* cmd, GenOptions& opt)
{
    cmd->add_option("--family", opt.family,
                    "fat_triangle | thick_ring | random | named")
        ->required();
    cmd->add_option("--p", opt.p, "fat_triangle side multiplicity");
    cmd->add_option("--q", opt.q, "fat_triangle side multiplicity");
    cmd->add_option("--r", opt.r, "fat_triangle side multiplicity");
    cmd->add_option("--len", opt.length, "thick_ring length (odd)");
    cmd->add_option("--mult", opt.mult, "thick_ring multiplicity");
    cmd->add_option("--n", opt.n, "random family vertex count");
    cmd->add_option("--prob", opt.prob, "random family edge probability");
    cmd->add_option("--max-mult", opt.max_mult, "random family max multiplicity");
    cmd->add_option("--seed", opt.seed, "random family seed");
    cmd->add_option("--name", opt.name, "named instance (petersen, k4, ...)");
}

ecl::Multigraph generate(const GenOptions& opt)
{
    if (opt.family == "fat_triangle")
        return ecl::fat_triangle(opt.p, opt.q, opt.r);
    if (opt.family == "thick_ring")
        return ecl::thick_ring(opt.length, opt.mult);
    if (opt.family == "random")
        return ecl::random_multigraph(opt.n, opt.prob, opt.max_mult, opt.seed);
    if (opt.family == "named")
        return ecl::named_instance(opt.name);
    throw CLI::ValidationError("--family", "unknown family " + opt.family);
}

struct SearchOptions {
    std::string family;
    int min_mult = 2, max_mult = 4;
    std::vector<int> lengths = {3, 5, 7};
    int n = 8;
    double prob = 0.4;
    int count = 0;
    std::uint64_t seed = 1;
};

std::vector<ecl::Multigraph> build_search_instances(const SearchOptions& so,
                                                    bool force)
{
    std::vector<ecl::Multigraph> out;
    if (so.family == "fat_triangle") {
        if (so.count > 0) {
            ecl::SplitMix64 rng(so.seed);
            int span = so.max_mult - so.min_mult + 1;
            for (int i = 0; i < so.count; ++i) {
                int p = so.min_mult + static_cast<int>(rng.below(span));
                int q = so.min_mult + static_cast<int>(rng.below(span));
                int r = so.min_mult + static_cast<int>(rng.below(span));
                out.push_back(ecl::fat_triangle(p, q, r));
            }
        } else {
            for (int p = so.min_mult; p <= so.max_mult; ++p)
                for (int q = so.min_mult; q <= so.max_mult; ++q)
                    for (int r = so.min_mult; r <= so.max_mult; ++r)
                        out.push_back(ecl::fat_triangle(p, q, r));
        }
    } else if (so.family == "thick_ring") {
        for (int len : so.lengths)
            for (int t = so.min_mult; t <= so.max_mult; ++t)
                out.push_back(ecl::thick_ring(len, t));
    } else if (so.family == "random") {
        if (!force && so.n > 10)
            throw ecl::ScaleGuardError(
                "search: random family keeps n <= 10 (use --force)");
        int count = so.count > 0 ? so.count : 20;
        for (int i = 0; i < count; ++i) {
            for (std::uint64_t attempt = 0;; ++attempt) {
                std::uint64_t s = mix_seed(so.seed, i, attempt);
                ecl::Multigraph g = ecl::random_multigraph(so.n, so.prob,
                                                           so.max_mult, s);
                if (force || g.m() <= 36) {
                    out.push_back(std::move(g));
                    break;
                }
            }
        }
    } else {
        throw CLI::ValidationError("--family",
                                   "unknown search family " + so.family);
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"multigraph edge-coloring laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // --out/--force may follow the subcommand

    std::string out_path;
    bool force = false;
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_flag("--force", force, "lift scale guards");

    GenOptions gen_opt;
    auto* cmd_gen = app.add_subcommand("gen", "generate an instance");
    add_gen_flags(cmd_gen, gen_opt);

    std::string instance_path;
    bool no_prune = false;
    auto* cmd_density =
        app.add_subcommand("density", "density omega with maximizing witness");
    cmd_density->add_option("instance", instance_path)->required();
    cmd_density->add_flag("--no-prune", no_prune,
                          "scan every subset size, not just odd and pairs");

    auto* cmd_chi = app.add_subcommand("chi", "exact chromatic index");
    cmd_chi->add_option("instance", instance_path)->required();

    std::uint64_t order_seed = 0;
    bool order_randomized = false;
    auto* cmd_reorder =
        app.add_subcommand("reorder", "vertex and edge order used by the greedy");
    cmd_reorder->add_option("instance", instance_path)->required();
    cmd_reorder->add_option("--seed", order_seed, "randomized tie-break seed");
    cmd_reorder->add_flag("--randomize", order_randomized,
                          "break ties randomly using --seed");

    std::string k_spec = "omega";
    std::string trace_path;
    bool strict_free = false;
    bool instrument = false;
    auto* cmd_color =
        app.add_subcommand("color", "run the conditional greedy coloring");
    cmd_color->add_option("instance", instance_path)->required();
    cmd_color->add_option("--k", k_spec, "omega | fractional | <int>");
    cmd_color->add_option("--trace", trace_path, "write a step trace here");
    cmd_color->add_flag("--strict-free-vertices", strict_free,
                        "free-vertex witness edge must lie inside S");
    cmd_color->add_flag("--instrument", instrument,
                        "re-check every step with the naive oracle");

    std::string coloring_path;
    auto* cmd_check =
        app.add_subcommand("check", "validate a coloring file for an instance");
    cmd_check->add_option("instance", instance_path)->required();
    cmd_check->add_option("--coloring", coloring_path)->required();
    cmd_check->add_option("--k", k_spec, "omega | fractional | <int>");
    cmd_check->add_flag("--strict-free-vertices", strict_free);

    SearchOptions search_opt;
    std::string artifacts_dir = "artifacts";
    auto* cmd_search =
        app.add_subcommand("search", "conjecture sweep over an instance family");
    cmd_search->add_option("--family", search_opt.family,
                           "fat_triangle | thick_ring | random")
        ->required();
    cmd_search->add_option("--min-mult", search_opt.min_mult);
    cmd_search->add_option("--max-mult", search_opt.max_mult);
    cmd_search->add_option("--lengths", search_opt.lengths,
                           "thick_ring lengths (odd)");
    cmd_search->add_option("--n", search_opt.n, "random family vertex count");
    cmd_search->add_option("--prob", search_opt.prob);
    cmd_search->add_option("--count", search_opt.count);
    cmd_search->add_option("--seed", search_opt.seed);
    cmd_search->add_option("--k", k_spec, "omega | fractional | <int>");
    cmd_search->add_option("--artifacts", artifacts_dir,
                           "directory for failure bundles");
    cmd_search->add_flag("--strict-free-vertices", strict_free);
    cmd_search->add_flag("--instrument", instrument);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        std::ofstream out_file;
        ecl::FreeVertexMode mode = strict_free
                                       ? ecl::FreeVertexMode::witness_inside
                                       : ecl::FreeVertexMode::witness_anywhere;

        if (cmd_gen->parsed()) {
            ecl::Multigraph g = generate(gen_opt);
            std::ostream& out = open_out(out_file, out_path);
            out << "c " << g.name() << '\n';
            ecl::serialize(out, g);
        } else if (cmd_density->parsed()) {
            ecl::Multigraph g = load_instance(instance_path);
            ecl::DensityResult d = ecl::density(g, !no_prune, force);
            std::ostream& out = open_out(out_file, out_path);
            out << "omega " << d.omega << '\n';
            out << "witness ";
            print_ids(out, ecl::subset_to_ids(d.witness));
            out << '\n';
            out << "witness_edges " << d.witness_edges << '\n';
            out << "fractional_index " << d.fractional_index << '\n';
        } else if (cmd_chi->parsed()) {
            ecl::Multigraph g = load_instance(instance_path);
            ecl::OracleResult res = ecl::chromatic_index(g, force);
            std::cout << "chi_prime " << res.chi_prime << '\n';
            if (!out_path.empty()) {
                std::ofstream cf(out_path);
                ecl::write_coloring(cf, res.optimal);
            }
        } else if (cmd_reorder->parsed()) {
            ecl::Multigraph g = load_instance(instance_path);
            ecl::EdgeOrder order = order_randomized
                                       ? ecl::reorder_randomized(g, order_seed)
                                       : ecl::reorder(g);
            std::ostream& out = open_out(out_file, out_path);
            out << "vertex_order ";
            print_ids(out, order.vertex_order);
            out << '\n' << "edge_order ";
            print_ids(out, order.edge_order);
            out << '\n';
        } else if (cmd_color->parsed()) {
            ecl::Multigraph g = load_instance(instance_path);
            int k = resolve_k(k_spec, g, force);
            std::function<void(const ecl::PartialColoring&)> probe;

            // The greedy itself requires connected input; split first.
            auto components = ecl::connected_components(g);
            ecl::PartialColoring merged = ecl::empty_coloring(g, k);
            bool complete = true;
            std::ofstream trace_file;
            if (!trace_path.empty()) {
                trace_file.open(trace_path);
                if (!trace_file)
                    throw std::runtime_error("cannot open trace file");
            }
            for (std::size_t ci = 0; ci < components.size(); ++ci) {
                ecl::Subgraph sub = ecl::induced_subgraph(
                    g, components[ci],
                    g.name() + "#" + std::to_string(ci));
                if (sub.graph.m() == 0)
                    continue;
                if (instrument && sub.graph.n() <= 20)
                    probe = [&sub, mode](const ecl::PartialColoring& phi) {
                        if (ecl::naive_admissible(sub.graph, phi, mode))
                            throw std::logic_error(
                                "instrument: inadmissible step accepted");
                    };
                ecl::RunTrace trace = ecl::conditional_greedy(
                    sub.graph, k, ecl::reorder(sub.graph), mode, probe);
                complete = complete && trace.complete;
                for (int e = 0; e < sub.graph.m(); ++e)
                    merged.color[sub.edge_map[e]] = trace.final.color[e];
                if (trace_file.is_open())
                    ecl::write_trace(trace_file, sub.graph, trace);
                if (!trace.complete) {
                    std::cout << "halt component=" << ci << " step="
                              << trace.steps.size() << " colored="
                              << trace.final.colored_count() << "/"
                              << sub.graph.m() << '\n';
                }
            }
            if (!ecl::validate_coloring(g, merged))
                throw std::logic_error("color: merged coloring is improper");
            std::cout << (complete ? "complete" : "incomplete") << " k=" << k
                      << " colored=" << merged.colored_count() << "/" << g.m()
                      << '\n';
            if (!out_path.empty()) {
                std::ofstream cf(out_path);
                ecl::write_coloring(cf, merged);
            }
        } else if (cmd_check->parsed()) {
            ecl::Multigraph g = load_instance(instance_path);
            int k = resolve_k(k_spec, g, force);
            std::ifstream cf(coloring_path);
            if (!cf)
                throw std::runtime_error("cannot open coloring file");
            ecl::PartialColoring phi = ecl::parse_coloring(cf, g, k);
            bool proper = ecl::validate_coloring(g, phi);
            std::cout << "proper " << (proper ? "yes" : "no") << '\n';
            std::cout << "complete " << (phi.is_complete() ? "yes" : "no")
                      << '\n';
            if (proper && g.n() <= 26) {
                auto viol = ecl::check_admissible(g, phi, mode);
                std::cout << "admissible " << (viol ? "no" : "yes") << '\n';
                if (viol) {
                    std::cout << "violation subset=";
                    print_ids(std::cout, ecl::subset_to_ids(viol->subset));
                    std::cout << " cover=" << viol->cover
                              << " uncolored_inside=" << viol->uncolored_inside
                              << '\n';
                }
            }
            if (!proper)
                return 1;
        } else if (cmd_search->parsed()) {
            std::vector<ecl::Multigraph> instances =
                build_search_instances(search_opt, force);
            ecl::ExperimentOptions opt;
            if (k_spec == "omega") {
                opt.k_policy = ecl::KPolicy::omega;
            } else if (k_spec == "fractional") {
                opt.k_policy = ecl::KPolicy::fractional;
            } else {
                opt.k_policy = ecl::KPolicy::explicit_value;
                opt.explicit_k = std::stoi(k_spec);
            }
            opt.mode = mode;
            opt.instrument = instrument;
            opt.force = force;
            opt.artifacts_dir = artifacts_dir;
            ecl::ExperimentReport report = ecl::run_experiment(instances, opt);
            std::ostream& out = open_out(out_file, out_path);
            ecl::write_report_csv(out, report);
            std::cerr << "instances " << report.rows.size() << ", applicable "
                      << report.applicable_count << ", complete "
                      << report.complete_count << ", halts "
                      << report.halt_count << ", candidate failures "
                      << report.candidate_failures << '\n';
            double total_ms = 0;
            for (const auto& row : report.rows)
                total_ms += row.wall_ms;
            std::cerr << "total wall time " << total_ms << " ms\n";
            if (report.candidate_failures > 0) {
                std::cerr << "CONJECTURE-CANDIDATE-FAILURE: see "
                          << artifacts_dir << '\n';
                return 3;
            }
        }
        return 0;
    } catch (const ecl::ScaleGuardError& e) {
        std::cerr << "scale guard: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
