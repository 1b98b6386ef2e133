#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbm/active.hpp"
#include "gbm/evaluation.hpp"
#include "gbm/gbm_model.hpp"
#include "gbm/io.hpp"
#include "gbm/rng.hpp"
#include "gbm/sweep.hpp"
#include "gbm/thresholds.hpp"

namespace {

std::string opt_str(const std::optional<double>& v) {
    return v ? std::to_string(*v) : std::string("infeasible");
}

const char* terminated_by_name(gbm::TerminatedBy t) {
    switch (t) {
        case gbm::TerminatedBy::Separation: return "separation";
        case gbm::TerminatedBy::Budget: return "budget";
        case gbm::TerminatedBy::Components: return "components";
    }
    return "?";
}

void print_threshold_set(double theta1, double theta2, int n) {
    auto ts = gbm::solve_threshold_set(theta1, theta2, n);
    std::cout << "quantity,value\n";
    std::cout << "theta1," << theta1 << "\n";
    std::cout << "theta2," << theta2 << "\n";
    std::cout << "n," << n << "\n";
    std::cout << "regime," << (ts.regime == gbm::Regime::Dense ? "dense" : "sparse") << "\n";
    std::cout << "t1," << ts.t1 << "\n";
    std::cout << "t2," << ts.t2 << "\n";
    std::cout << "t3," << opt_str(ts.t3) << "\n";
    std::cout << "t4," << opt_str(ts.t4) << "\n";
    std::cout << "eta," << ts.eta << "\n";
    std::cout << "E_T," << ts.E_T << "\n";
    std::cout << "epsilon," << ts.epsilon << "\n";
    std::cout << "R," << opt_str(ts.R) << "\n";
    std::cout << "E_L," << ts.E_L << "\n";
    std::cout << "E_R," << ts.E_R << "\n";
    std::cout << "aggressive_assumption," << (ts.aggressive_assumption ? 1 : 0) << "\n";
}

void print_tables() {
    std::cout << "table,theta2,value\n";
    for (int k = 1; k <= 5; ++k)
        std::cout << "min_theta1_unsupervised," << k << ',' << gbm::min_theta1_unsupervised(k) << "\n";
    for (int k = 1; k <= 5; ++k)
        std::cout << "sbm_min_a_half," << k << ',' << gbm::sbm_min_a(2.0 * k) / 2.0 << "\n";
    for (int k = 2; k <= 5; ++k)
        std::cout << "min_gap_active_plus_theta2," << k << ',' << gbm::min_gap_active(k) + k << "\n";
}

int run_on_files(const std::string& algorithm, const std::string& edges_path,
                 const std::string& labels_path, double theta1, double theta2,
                 std::optional<long long> budget, std::uint64_t seed) {
    auto data = gbm::ingest_edge_list(edges_path);
    if (data.dropped_self_loops || data.dropped_duplicates)
        std::cerr << "warning: dropped " << data.dropped_self_loops << " self-loops, "
                  << data.dropped_duplicates << " duplicate edges\n";
    auto truth = gbm::ingest_labels(labels_path, data.original_ids);

    gbm::Oracle oracle(truth, budget);
    gbm::Rng rng(seed);
    gbm::RecoveryResult res;
    if (algorithm == "alg1") res = gbm::algorithm1(data.graph, oracle, theta1, theta2, rng);
    else if (algorithm == "alg2") res = gbm::algorithm2(data.graph, oracle, theta1, theta2);
    else if (algorithm == "gmps18") res = gbm::unsupervised_interval(data.graph, theta2);
    else if (algorithm == "spectral") res.predicted = gbm::spectral_baseline(data.graph).labels;
    else throw std::invalid_argument("unknown algorithm: " + algorithm);

    auto rep = gbm::accuracy_up_to_permutation(res.predicted, truth);
    std::cout << "algorithm," << algorithm << "\n"
              << "n," << data.graph.node_count() << "\n"
              << "queries," << res.queries << "\n"
              << "accuracy," << rep.accuracy << "\n"
              << "phase1_removed," << res.phase1_removed << "\n"
              << "components_after_prune," << res.components_after_prune << "\n"
              << "terminated_by," << terminated_by_name(res.terminated_by) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active community detection toolkit for geometric block graphs"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "Sample a GBM instance to edge-list and label files");
    int gen_n = 1000;
    double gen_t1 = 10.0, gen_t2 = 2.0;
    std::uint64_t gen_seed = 1;
    std::string gen_edges = "edges.txt", gen_labels = "labels.txt";
    gen->add_option("--n", gen_n, "node count (even)")->required();
    gen->add_option("--theta1", gen_t1)->required();
    gen->add_option("--theta2", gen_t2)->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out-edges", gen_edges);
    gen->add_option("--out-labels", gen_labels);

    // --- thresholds ---
    auto* thr = app.add_subcommand("thresholds", "Solve the threshold set; --tables prints the frontier tables");
    double thr_t1 = 10.0, thr_t2 = 2.0;
    int thr_n = 1000;
    bool thr_tables = false;
    thr->add_option("--theta1", thr_t1);
    thr->add_option("--theta2", thr_t2);
    thr->add_option("--n", thr_n);
    thr->add_flag("--tables", thr_tables, "print the unsupervised/SBM frontier tables instead");

    // --- run ---
    auto* run = app.add_subcommand("run", "Run one algorithm on an edge list with a label oracle");
    std::string run_alg, run_edges, run_labels;
    double run_t1 = 0.0, run_t2 = 0.0;
    std::uint64_t run_seed = 1;
    long long run_budget = -1;
    run->add_option("--algorithm", run_alg, "alg1|alg2|gmps18|spectral")->required();
    run->add_option("--edges", run_edges)->required();
    run->add_option("--labels", run_labels)->required();
    run->add_option("--theta1", run_t1);
    run->add_option("--theta2", run_t2);
    run->add_option("--seed", run_seed);
    run->add_option("--budget", run_budget, "query budget (-1 = unlimited)");

    // --- sweep ---
    auto* sw = app.add_subcommand("sweep", "Seeded multi-trial sweep over theta1 values");
    gbm::SweepSpec spec;
    std::vector<std::string> sw_algs{"alg1", "alg2"};
    std::string sw_csv = "sweep.csv", sw_plot;
    sw->add_option("--n", spec.n)->required();
    sw->add_option("--theta2", spec.theta2)->required();
    sw->add_option("--theta1", spec.theta1_values, "theta1 grid values")->required()->expected(-1);
    sw->add_option("--trials", spec.trials);
    sw->add_option("--algorithms", sw_algs, "subset of alg1 alg2 gmps18 spectral")->expected(-1);
    sw->add_option("--seed", spec.base_seed);
    sw->add_option("--threads", spec.threads, "worker threads (0 = all cores)");
    sw->add_option("--out", sw_csv, "output CSV path");
    sw->add_option("--plot", sw_plot, "optional SVG path");

    // --- real ---
    auto* real = app.add_subcommand("real", "Three-phase pipeline on a real edge list");
    std::string real_edges, real_labels;
    int real_T1 = 30;
    std::uint64_t real_seed = 1;
    long long real_budget = -1;
    int real_trials = 1;
    real->add_option("--edges", real_edges)->required();
    real->add_option("--labels", real_labels)->required();
    real->add_option("--t1", real_T1, "triangle-count cutoff (strict <)");
    real->add_option("--seed", real_seed);
    real->add_option("--budget", real_budget, "query budget (-1 = unlimited)");
    real->add_option("--trials", real_trials, "independent repetitions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            gbm::GbmParams params{gen_n, gen_t1, gen_t2, gen_seed};
            auto lg = gbm::sample_gbm(params);
            gbm::write_edge_list(gen_edges, lg.graph);
            gbm::write_labels(gen_labels, lg.sigma);
            std::cout << "n," << gen_n << "\nedges," << lg.graph.edge_count() << "\n";
        } else if (thr->parsed()) {
            if (thr_tables) print_tables();
            else print_threshold_set(thr_t1, thr_t2, thr_n);
        } else if (run->parsed()) {
            std::optional<long long> budget;
            if (run_budget >= 0) budget = run_budget;
            return run_on_files(run_alg, run_edges, run_labels, run_t1, run_t2, budget, run_seed);
        } else if (sw->parsed()) {
            spec.algorithms.clear();
            for (const auto& name : sw_algs) spec.algorithms.push_back(gbm::algorithm_from_name(name));
            auto records = gbm::run_sweep(spec);
            gbm::emit_csv(records, sw_csv);
            if (!sw_plot.empty()) gbm::emit_plot(records, sw_plot);
            std::cout << "records," << records.size() << "\ncsv," << sw_csv << "\n";
        } else if (real->parsed()) {
            auto data = gbm::ingest_edge_list(real_edges);
            if (data.dropped_self_loops || data.dropped_duplicates)
                std::cerr << "warning: dropped " << data.dropped_self_loops << " self-loops, "
                          << data.dropped_duplicates << " duplicate edges\n";
            auto truth = gbm::ingest_labels(real_labels, data.original_ids);
            gbm::RealPipelineParams params;
            params.T1 = real_T1;
            if (real_budget >= 0) params.budget = real_budget;
            std::cout << "trial,n,queries,accuracy,query_fraction,terminated_by\n";
            for (int t = 0; t < real_trials; ++t) {
                gbm::Oracle oracle(truth, params.budget);
                gbm::Rng rng(gbm::derive_seed(real_seed, 0, static_cast<std::uint64_t>(t)));
                auto res = gbm::real_pipeline(data.graph, oracle, params, rng);
                auto rep = gbm::accuracy_up_to_permutation(res.predicted, truth);
                std::cout << t << ',' << data.graph.node_count() << ',' << res.queries << ','
                          << rep.accuracy << ','
                          << static_cast<double>(res.queries) / data.graph.node_count() << ','
                          << terminated_by_name(res.terminated_by) << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
