#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace gbm {

enum class AlgorithmKind { Alg1, Alg2, Gmps18, Spectral };

std::string algorithm_name(AlgorithmKind k);
AlgorithmKind algorithm_from_name(const std::string& name);

struct SweepSpec {
    int n = 0;
    double theta2 = 0.0;
    std::vector<double> theta1_values;
    int trials = 1;
    std::vector<AlgorithmKind> algorithms;
    std::uint64_t base_seed = 0;
    int threads = 0;  // 0 = hardware concurrency
};

// One row per (theta1, trial, algorithm). Runs skipped for infeasible
// thresholds keep their row with accuracy and lognQ set to NaN.
struct TrialRecord {
    long long trial_index = 0;
    int n = 0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::string algorithm;
    long long queries = 0;
    double accuracy = 0.0;
    long long phase1_removed = 0;
    long long components = 0;
    double lognQ = 0.0;
    std::uint64_t seed = 0;
};

bool records_equal(const TrialRecord& a, const TrialRecord& b);  // NaN-tolerant
bool is_skip_record(const TrialRecord& r);

// Runs every (theta1, trial, algorithm) cell on its own seeded stream; one
// GBM sample per (theta1, trial), each algorithm against a fresh oracle.
// Output order is (theta1-index, trial, algorithm) regardless of threading.
std::vector<TrialRecord> run_sweep(const SweepSpec& spec);

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);
std::vector<TrialRecord> parse_csv(const std::string& path);

// One self-contained SVG per theta2 value present in `records`: mean lognQ
// vs theta1 per algorithm with min/max whiskers. With several theta2 values
// the path gains a "_t2_<value>" suffix per file.
void emit_plot(const std::vector<TrialRecord>& records, const std::string& path);

} // namespace gbm
