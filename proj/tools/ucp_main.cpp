#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ucp/battery.hpp"
#include "ucp/dimacs.hpp"
#include "ucp/errors.hpp"
#include "ucp/heuristics.hpp"
#include "ucp/serialize.hpp"
#include "ucp/solver.hpp"

namespace {

using ucp::Json;
using ucp::Rational;

// Exit contract: 0 = YES or plain success, 1 = NO (or a failed battery),
// 2 = any error. Callbacks record the code; main returns it.
int g_exit = 0;

void emit_instance(const ucp::ReductionOutput& red, const std::string& out_path) {
    const Json doc = ucp::instance_to_json(red.instance);
    std::ostringstream summary;
    const auto& inst = red.instance;
    summary << "n=" << inst.n()
            << " utility=" << ucp::utility_kind_name(inst.utility.kind)
            << " k=" << (inst.k ? std::to_string(*inst.k) : std::string("any"))
            << " T=" << ucp::format_rational(inst.threshold);
    if (out_path.empty()) {
        std::cout << ucp::pretty(doc);
        std::cerr << summary.str() << "\n";
    } else {
        ucp::write_json_file(out_path, doc);
        std::cout << summary.str() << "\n";
    }
}

void write_text(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ucp::ParseError("cannot write " + out_path);
    out << body;
}

Rational parse_budget(const std::string& text) { return ucp::parse_rational(text); }

int resolve_k(const ucp::UcpDecisionInstance& inst, int cli_k, const char* method) {
    if (cli_k > 0) return cli_k;
    if (inst.k) return *inst.k;
    throw ucp::InvalidK(std::string(method) +
                        " needs a block count; pass --k or fix k in the instance");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(item, &used);
        if (used != item.size()) {
            throw ucp::ParseError("bad seed \"" + item + "\"");
        }
        seeds.push_back(v);
    }
    if (seeds.empty()) throw ucp::ParseError("no seeds given");
    return seeds;
}

std::vector<int> parse_label_list(const std::string& text) {
    std::vector<int> labels;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) {
            throw ucp::ParseError("bad label \"" + item + "\"");
        }
        labels.push_back(v);
    }
    if (labels.empty()) throw ucp::ParseError("no labels given");
    return labels;
}

const ucp::MetricInstance& metric_payload(const ucp::UcpDecisionInstance& inst) {
    if (const auto* m = std::get_if<ucp::MetricInstance>(&inst.payload)) return *m;
    throw ucp::UnsupportedUtility("this command needs a metric payload");
}

const ucp::EuclideanInstance& points_payload(const ucp::UcpDecisionInstance& inst) {
    if (const auto* e = std::get_if<ucp::EuclideanInstance>(&inst.payload)) return *e;
    throw ucp::UnsupportedUtility("this command needs a points payload");
}

const ucp::SimilarityMatrix& similarity_payload(const ucp::UcpDecisionInstance& inst) {
    if (const auto* s = std::get_if<ucp::SimilarityMatrix>(&inst.payload)) return *s;
    throw ucp::UnsupportedUtility("this command needs a similarity payload");
}

std::string csv_bool(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal clustering toolkit: reductions, exact solving, "
                 "heuristics, and oracle batteries"};
    app.require_subcommand(1);

    // ---- reduce ----
    auto* reduce = app.add_subcommand(
        "reduce", "Turn a source problem into a clustering decision instance");
    reduce->require_subcommand(1);
    struct {
        std::string input, output, budget = "0";
        int kappa = 1, s = 1, k = 1;
        long long tau = 0, cut_budget = 0;
    } red;

    auto add_reduce_common = [&](CLI::App* cmd, const char* input_help) {
        cmd->add_option("input", red.input, input_help)->required();
        cmd->add_option("-o,--output", red.output, "Instance JSON path (default stdout)");
    };

    auto* rc = reduce->add_subcommand("coloring", "Graph coloring, via the conflict utility");
    add_reduce_common(rc, "DIMACS graph file");
    rc->add_option("--kappa", red.kappa, "Color budget")->required();
    rc->callback([&] {
        emit_instance(ucp::reduce_coloring(ucp::read_dimacs_file(red.input), red.kappa),
                      red.output);
    });

    auto* rf = reduce->add_subcommand("fdcs", "Fixed-size dense connected subgraph, via the density utility");
    add_reduce_common(rf, "DIMACS graph file");
    rf->add_option("--s", red.s, "Subgraph size")->required();
    rf->add_option("--tau", red.tau, "Edge target")->required();
    rf->callback([&] {
        emit_instance(ucp::reduce_fdcs(ucp::read_dimacs_file(red.input), red.s, red.tau),
                      red.output);
    });

    auto* rb = reduce->add_subcommand("bisection", "Minimum graph bisection, via the cut utility");
    add_reduce_common(rb, "DIMACS graph file");
    rb->add_option("--budget", red.cut_budget, "Cut budget")->required();
    rb->callback([&] {
        emit_instance(
            ucp::reduce_bisection(ucp::read_dimacs_file(red.input), red.cut_budget),
            red.output);
    });

    auto* rq = reduce->add_subcommand("cliquecover", "Clique cover, via the diameter utility");
    add_reduce_common(rq, "DIMACS graph file");
    rq->add_option("--k", red.k, "Clique budget")->required();
    rq->callback([&] {
        emit_instance(ucp::reduce_cliquecover(ucp::read_dimacs_file(red.input), red.k),
                      red.output);
    });

    auto* rk = reduce->add_subcommand("kmeans-birch", "k-means, via the microcluster utility");
    add_reduce_common(rk, "Points JSON file ({\"points\": [[...]]})");
    rk->add_option("--k", red.k, "Cluster count")->required();
    rk->add_option("--budget", red.budget, "Cost budget")->required();
    rk->callback([&] {
        emit_instance(
            ucp::reduce_kmeans_to_birch(
                ucp::points_from_json(ucp::read_json_file(red.input)), red.k,
                parse_budget(red.budget)),
            red.output);
    });

    auto* ru = reduce->add_subcommand("ufl-ap", "Facility location, via the exemplar utility");
    add_reduce_common(ru, "UFL JSON file ({\"facilities\", \"clients\"})");
    ru->add_option("--budget", red.budget, "Cost budget")->required();
    ru->callback([&] {
        emit_instance(ucp::reduce_ufl_to_ap(
                          ucp::ufl_from_json(ucp::read_json_file(red.input)),
                          parse_budget(red.budget)),
                      red.output);
    });

    auto* rl = reduce->add_subcommand("l0-ssc", "Sparse recovery, via the self-expression utility");
    add_reduce_common(rl, "JSON file ({\"A\", \"b\", \"t\"})");
    rl->callback([&] {
        emit_instance(
            ucp::reduce_l0_to_ssc(ucp::l0_from_json(ucp::read_json_file(red.input))),
            red.output);
    });

    auto* rm = reduce->add_subcommand("kmedian", "k-median, via the medoid utility");
    add_reduce_common(rm, "Metric JSON file ({\"d\": [[...]]})");
    rm->add_option("--k", red.k, "Block count")->required();
    rm->add_option("--budget", red.budget, "Cost budget")->required();
    rm->callback([&] {
        emit_instance(ucp::embed_kmedian(
                          ucp::metric_from_json(ucp::read_json_file(red.input)),
                          red.k, parse_budget(red.budget)),
                      red.output);
    });

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "Solve an instance exactly or run a heuristic");
    struct {
        std::string instance, method, output;
        bool exact = false;
        std::uint64_t seed = 0;
        int k = 0;
        double damping = 0.5;
        int max_iters = 200;
        int stable_window = 10;
        double bandwidth = 1.0;
        double tol = 1e-9;
        int ms_max_iters = 500;
    } sol;
    solve->add_option("instance", sol.instance, "Instance JSON path")->required();
    solve->add_flag("--exact", sol.exact, "Brute-force decision");
    solve->add_option("--method", sol.method,
                      "Heuristic: lloyd, linkage, ap, meanshift, or pam");
    solve->add_option("--seed", sol.seed, "Seed for lloyd/pam");
    solve->add_option("--k", sol.k, "Block count override for heuristics");
    solve->add_option("--damping", sol.damping, "Message damping for ap");
    solve->add_option("--max-iters", sol.max_iters, "Sweep cap for ap");
    solve->add_option("--stable-window", sol.stable_window,
                      "Stable sweeps needed before ap stops");
    solve->add_option("--bandwidth", sol.bandwidth, "Kernel bandwidth for meanshift");
    solve->add_option("--tol", sol.tol, "Step tolerance for meanshift");
    solve->add_option("--ms-max-iters", sol.ms_max_iters,
                      "Ascent step cap for meanshift");
    solve->add_option("-o,--output", sol.output, "Result JSON path (default stdout)");
    solve->callback([&] {
        if (sol.exact == !sol.method.empty()) {
            throw ucp::ParseError("pass exactly one of --exact or --method");
        }
        const ucp::UcpDecisionInstance inst =
            ucp::instance_from_json(ucp::read_json_file(sol.instance));
        Json out;
        if (sol.exact) {
            const ucp::Decision d = ucp::decide_ucp(inst);
            out = ucp::decision_to_json(d, inst.threshold);
            g_exit = d.yes ? 0 : 1;
        } else if (sol.method == "lloyd") {
            out = ucp::heuristic_run_to_json(ucp::lloyd(
                points_payload(inst), resolve_k(inst, sol.k, "lloyd"), sol.seed));
        } else if (sol.method == "linkage") {
            out = ucp::heuristic_run_to_json(ucp::greedy_complete_linkage(
                metric_payload(inst), resolve_k(inst, sol.k, "linkage")));
        } else if (sol.method == "ap") {
            out = ucp::heuristic_run_to_json(
                ucp::ap_messages(similarity_payload(inst), sol.damping,
                                 sol.max_iters, sol.stable_window));
        } else if (sol.method == "meanshift") {
            out = ucp::mean_shift_to_json(
                ucp::mean_shift(points_payload(inst), sol.bandwidth, sol.tol,
                                sol.ms_max_iters));
        } else if (sol.method == "pam") {
            out = ucp::heuristic_run_to_json(ucp::pam_swap(
                similarity_payload(inst), resolve_k(inst, sol.k, "pam"), sol.seed));
        } else {
            throw ucp::ParseError("unknown method \"" + sol.method + "\"");
        }
        write_text(sol.output, ucp::pretty(out));
    });

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Evaluate the utility of a given partition");
    struct {
        std::string instance, labels, output;
    } ev;
    eval->add_option("instance", ev.instance, "Instance JSON path")->required();
    eval->add_option("--partition", ev.labels, "Block labels, e.g. 0,0,1,2")->required();
    eval->add_option("-o,--output", ev.output, "Result JSON path (default stdout)");
    eval->callback([&] {
        const ucp::UcpDecisionInstance inst =
            ucp::instance_from_json(ucp::read_json_file(ev.instance));
        const std::vector<int> labels = parse_label_list(ev.labels);
        const ucp::Partition pi = inst.k ? ucp::from_labels(labels, *inst.k)
                                         : ucp::canonicalize(labels);
        const Rational value = ucp::evaluate_utility(inst, pi);
        const bool yes = value >= inst.threshold;
        Json out;
        out["value"] = ucp::format_rational(value);
        out["threshold"] = ucp::format_rational(inst.threshold);
        out["answer"] = yes ? "YES" : "NO";
        write_text(ev.output, ucp::pretty(out));
        g_exit = yes ? 0 : 1;
    });

    // ---- verify ----
    auto* verify = app.add_subcommand(
        "verify", "Random battery: source oracle vs reduced clustering decision");
    struct {
        std::string kind, output;
        int samples = 100;
        int nmax = 8;
        std::uint64_t seed = 0;
    } ver;
    verify->add_option("kind", ver.kind,
                       "coloring, fdcs, bisection, cliquecover, kmeans-birch, "
                       "ufl-ap, l0-ssc, or kmedian")
        ->required();
    verify->add_option("--samples", ver.samples, "Battery size");
    verify->add_option("--nmax", ver.nmax, "Point-count cap for generated sources");
    verify->add_option("--seed", ver.seed, "Generator seed");
    verify->add_option("-o,--output", ver.output, "CSV path (default stdout)");
    verify->callback([&] {
        if (ver.samples < 1) throw ucp::ParseError("--samples must be positive");
        ucp::Rng rng(ver.seed);
        std::ostringstream csv;
        csv << "sample,kind,params,source,ucp,agree,certificate\n";
        int agreed = 0;
        int certified = 0;
        int yes_count = 0;
        for (int i = 0; i < ver.samples; ++i) {
            const ucp::SourceInstance src = ucp::random_source(ver.kind, rng, ver.nmax);
            const ucp::VerifyReport rep = ucp::verify_reduction(src);
            const bool cert_ok = !rep.ucp_yes || rep.certificate_ok;
            agreed += rep.agree;
            if (rep.ucp_yes) {
                ++yes_count;
                certified += rep.certificate_ok;
            }
            csv << i << ',' << rep.kind << ',' << rep.params << ','
                << csv_bool(rep.source_yes) << ',' << csv_bool(rep.ucp_yes) << ','
                << (rep.agree ? "true" : "false") << ','
                << (rep.ucp_yes ? (rep.certificate_ok ? "ok" : "fail") : "-")
                << '\n';
            if (!rep.agree || !cert_ok) g_exit = 1;
        }
        write_text(ver.output, csv.str());
        std::cerr << "kind=" << ver.kind << " samples=" << ver.samples
                  << " agreed=" << agreed << '/' << ver.samples
                  << " certificates=" << certified << '/' << yes_count << "\n";
    });

    // ---- gap ----
    auto* gap = app.add_subcommand(
        "gap", "Compare a heuristic against the exact optimum");
    struct {
        std::string method, instance, seeds = "0", output;
        int k = 0;
        double damping = 0.5;
        int max_iters = 200;
        int stable_window = 10;
    } gp;
    gap->add_option("method", gp.method, "lloyd, linkage, ap, or pam")->required();
    gap->add_option("instance", gp.instance, "Instance JSON path")->required();
    gap->add_option("--seeds", gp.seeds, "Comma-separated seed list");
    gap->add_option("--k", gp.k, "Block count override");
    gap->add_option("--damping", gp.damping, "Message damping for ap");
    gap->add_option("--max-iters", gp.max_iters, "Sweep cap for ap");
    gap->add_option("--stable-window", gp.stable_window,
                    "Stable sweeps needed before ap stops");
    gap->add_option("-o,--output", gp.output, "CSV path (default stdout)");
    gap->callback([&] {
        const ucp::UcpDecisionInstance inst =
            ucp::instance_from_json(ucp::read_json_file(gp.instance));
        std::vector<ucp::GapRow> rows;
        if (gp.method == "lloyd") {
            const auto& e = points_payload(inst);
            const int k = resolve_k(inst, gp.k, "lloyd");
            const Rational exact = ucp::oracle_kmeans(e, k);
            for (std::uint64_t seed : parse_seed_list(gp.seeds)) {
                const auto run = ucp::lloyd(e, k, seed);
                rows.push_back(ucp::make_gap_row(gp.instance, seed, run.value,
                                                 exact, /*minimize=*/true));
            }
        } else if (gp.method == "linkage") {
            const auto& m = metric_payload(inst);
            const int k = resolve_k(inst, gp.k, "linkage");
            const Rational exact = ucp::min_linkage_cost(m, k);
            const auto run = ucp::greedy_complete_linkage(m, k);
            rows.push_back(
                ucp::make_gap_row(gp.instance, 0, run.value, exact, true));
        } else if (gp.method == "ap") {
            const auto& s = similarity_payload(inst);
            const Rational exact = ucp::oracle_best_assignment(s);
            const auto run = ucp::ap_messages(s, gp.damping, gp.max_iters,
                                              gp.stable_window);
            rows.push_back(
                ucp::make_gap_row(gp.instance, 0, run.value, exact, false));
        } else if (gp.method == "pam") {
            const auto& s = similarity_payload(inst);
            const int k = resolve_k(inst, gp.k, "pam");
            const Rational exact = ucp::oracle_kmedoids(s, k);
            for (std::uint64_t seed : parse_seed_list(gp.seeds)) {
                const auto run = ucp::pam_swap(s, k, seed);
                rows.push_back(
                    ucp::make_gap_row(gp.instance, seed, run.value, exact, false));
            }
        } else {
            throw ucp::ParseError("unknown method \"" + gp.method + "\"");
        }
        std::ostringstream csv;
        csv << "instance_id,method,seed,heuristic_value,exact_value,abs_gap,rel_gap\n";
        int optimal = 0;
        for (const auto& row : rows) {
            optimal += row.optimal;
            csv << row.label << ',' << gp.method << ',' << row.seed << ','
                << ucp::format_rational(row.heuristic_value) << ','
                << ucp::format_rational(row.exact_optimum) << ','
                << ucp::format_rational(row.abs_gap) << ',' << row.rel_gap << '\n';
        }
        write_text(gp.output, csv.str());
        std::cerr << "method=" << gp.method << " optimal=" << optimal << '/'
                  << rows.size() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ucp::UcpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
