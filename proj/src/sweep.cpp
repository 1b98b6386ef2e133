#include "gbm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gbm/active.hpp"
#include "gbm/evaluation.hpp"
#include "gbm/gbm_model.hpp"
#include "gbm/rng.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {

std::string algorithm_name(AlgorithmKind k) {
    switch (k) {
        case AlgorithmKind::Alg1: return "alg1";
        case AlgorithmKind::Alg2: return "alg2";
        case AlgorithmKind::Gmps18: return "gmps18";
        case AlgorithmKind::Spectral: return "spectral";
    }
    throw std::logic_error("unknown algorithm kind");
}

AlgorithmKind algorithm_from_name(const std::string& name) {
    if (name == "alg1") return AlgorithmKind::Alg1;
    if (name == "alg2") return AlgorithmKind::Alg2;
    if (name == "gmps18") return AlgorithmKind::Gmps18;
    if (name == "spectral") return AlgorithmKind::Spectral;
    throw std::invalid_argument("unknown algorithm: " + name);
}

bool is_skip_record(const TrialRecord& r) { return std::isnan(r.accuracy); }

namespace {

bool feq(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return a == b;
}

std::string fmt_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    bool neg = false;
    if (b != e && (*b == '-' || *b == '+')) {
        neg = *b == '-';
        ++b;
    }
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw std::runtime_error("bad double field: " + s);
    return neg ? -v : v;
}

double lognQ_of(long long queries, int n) {
    if (queries <= 0) return -std::numeric_limits<double>::infinity();
    return std::log(static_cast<double>(queries)) / std::log(static_cast<double>(n));
}

TrialRecord run_one(const LabeledGraph& lg, AlgorithmKind kind, std::uint64_t trial_seed) {
    TrialRecord rec;
    rec.n = lg.params.n;
    rec.theta1 = lg.params.theta1;
    rec.theta2 = lg.params.theta2;
    rec.algorithm = algorithm_name(kind);
    rec.seed = trial_seed;
    try {
        RecoveryResult res;
        switch (kind) {
            case AlgorithmKind::Alg1: {
                Rng rng(derive_seed(trial_seed, 101, 1));
                res = algorithm1(lg, rng);
                break;
            }
            case AlgorithmKind::Alg2:
                res = algorithm2(lg);
                break;
            case AlgorithmKind::Gmps18:
                res = unsupervised_interval(lg.graph, lg.params.theta2);
                break;
            case AlgorithmKind::Spectral: {
                auto sp = spectral_baseline(lg.graph);
                res.predicted = sp.labels;
                break;
            }
        }
        rec.queries = res.queries;
        rec.accuracy = accuracy_up_to_permutation(res.predicted, lg.sigma).accuracy;
        rec.phase1_removed = res.phase1_removed;
        rec.components = res.components_after_prune;
        rec.lognQ = lognQ_of(res.queries, lg.params.n);
    } catch (const std::invalid_argument&) {
        // infeasible thresholds for this (theta1, theta2): explicit skip row
        rec.queries = 0;
        rec.accuracy = std::numeric_limits<double>::quiet_NaN();
        rec.phase1_removed = 0;
        rec.components = 0;
        rec.lognQ = std::numeric_limits<double>::quiet_NaN();
    }
    return rec;
}

} // namespace

bool records_equal(const TrialRecord& a, const TrialRecord& b) {
    return a.trial_index == b.trial_index && a.n == b.n && feq(a.theta1, b.theta1) &&
           feq(a.theta2, b.theta2) && a.algorithm == b.algorithm && a.queries == b.queries &&
           feq(a.accuracy, b.accuracy) && a.phase1_removed == b.phase1_removed &&
           a.components == b.components && feq(a.lognQ, b.lognQ) && a.seed == b.seed;
}

std::vector<TrialRecord> run_sweep(const SweepSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (spec.theta1_values.empty()) throw std::invalid_argument("sweep: no theta1 values");
    if (spec.n < 4 || spec.n % 2 != 0) throw std::invalid_argument("sweep: n must be even and >= 4");
    for (double t1v : spec.theta1_values) {
        if (t1v < spec.theta2) throw std::invalid_argument("sweep: theta1 must be >= theta2");
        if (t1v * std::log(static_cast<double>(spec.n)) / spec.n >= 0.5)
            throw std::invalid_argument("sweep: theta1*log(n)/n must be < 1/2");
    }
    if (spec.algorithms.empty()) throw std::invalid_argument("sweep: no algorithms");

    const std::size_t cells = spec.theta1_values.size() * static_cast<std::size_t>(spec.trials);
    const std::size_t algs = spec.algorithms.size();
    std::vector<TrialRecord> records(cells * algs);

    auto run_cell = [&](std::size_t cell) {
        const std::size_t ti = cell / static_cast<std::size_t>(spec.trials);
        const long long trial = static_cast<long long>(cell % static_cast<std::size_t>(spec.trials));
        const std::uint64_t seed = derive_seed(spec.base_seed, ti, static_cast<std::uint64_t>(trial));
        GbmParams params{spec.n, spec.theta1_values[ti], spec.theta2, seed};
        LabeledGraph lg = sample_gbm(params);
        for (std::size_t k = 0; k < algs; ++k) {
            TrialRecord rec = run_one(lg, spec.algorithms[k], seed);
            rec.trial_index = trial;
            records[cell * algs + k] = std::move(rec);
        }
    };

    unsigned threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells));
    if (threads <= 1) {
        for (std::size_t c = 0; c < cells; ++c) run_cell(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < cells; c = next.fetch_add(1)) run_cell(c);
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write csv: " + path);
    out << "trial_index,n,theta1,theta2,algorithm,queries,accuracy,"
           "phase1_removed,components,lognQ,seed\n";
    for (const auto& r : records) {
        out << r.trial_index << ',' << r.n << ',' << fmt_double(r.theta1) << ','
            << fmt_double(r.theta2) << ',' << r.algorithm << ',' << r.queries << ','
            << fmt_double(r.accuracy) << ',' << r.phase1_removed << ',' << r.components << ','
            << fmt_double(r.lognQ) << ',' << r.seed << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TrialRecord> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
    std::vector<TrialRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) f.push_back(field);
        if (f.size() != 11) throw std::runtime_error("bad csv row: " + line);
        TrialRecord r;
        r.trial_index = std::stoll(f[0]);
        r.n = std::stoi(f[1]);
        r.theta1 = parse_double(f[2]);
        r.theta2 = parse_double(f[3]);
        r.algorithm = f[4];
        r.queries = std::stoll(f[5]);
        r.accuracy = parse_double(f[6]);
        r.phase1_removed = std::stoll(f[7]);
        r.components = std::stoll(f[8]);
        r.lognQ = parse_double(f[9]);
        r.seed = std::stoull(f[10]);
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

struct SeriesPoint {
    double mean, lo, hi;
};

std::string svg_for_theta2(const std::vector<TrialRecord>& records, double theta2) {
    // per algorithm, per theta1: mean/min/max of lognQ (0-query runs plotted at 0)
    std::map<std::string, std::map<double, std::vector<double>>> series;
    for (const auto& r : records) {
        if (r.theta2 != theta2 || is_skip_record(r)) continue;
        double v = std::isinf(r.lognQ) ? 0.0 : r.lognQ;
        series[r.algorithm][r.theta1].push_back(v);
    }
    const double W = 720, H = 480, ml = 70, mr = 160, mt = 30, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymax = 1.0;
    for (auto& [alg, pts] : series)
        for (auto& [x, vs] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            for (double v : vs) ymax = std::max(ymax, v);
        }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
    ymax *= 1.05;
    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto Y = [&](double y) { return H - mb - y / ymax * (H - mt - mb); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << Y(0) << "\" x2=\"" << W - mr << "\" y2=\"" << Y(0)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << Y(0) << "\" x2=\"" << ml << "\" y2=\"" << mt
      << "\" stroke=\"black\"/>\n";
    // sub-linearity reference at lognQ = 1
    if (1.0 <= ymax)
        s << "<line x1=\"" << ml << "\" y1=\"" << Y(1.0) << "\" x2=\"" << W - mr << "\" y2=\"" << Y(1.0)
          << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    for (int k = 0; k <= 5; ++k) {
        double x = xmin + (xmax - xmin) * k / 5.0;
        s << "<text x=\"" << X(x) << "\" y=\"" << H - mb + 22
          << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt_double(std::round(x * 100) / 100)
          << "</text>\n";
        double y = ymax * k / 5.0;
        s << "<text x=\"" << ml - 8 << "\" y=\"" << Y(y) + 4
          << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_double(std::round(y * 100) / 100)
          << "</text>\n";
    }
    s << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
      << "\" font-size=\"13\" text-anchor=\"middle\">theta1 (theta2 = " << fmt_double(theta2)
      << ")</text>\n";
    s << "<text x=\"16\" y=\"" << (mt + H - mb) / 2
      << "\" font-size=\"13\" transform=\"rotate(-90 16 " << (mt + H - mb) / 2
      << ")\" text-anchor=\"middle\">log_n(Q)</text>\n";

    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    int ci = 0, legend_y = static_cast<int>(mt) + 10;
    for (auto& [alg, pts] : series) {
        const char* col = colors[ci % 5];
        std::ostringstream poly;
        for (auto& [x, vs] : pts) {
            SeriesPoint p{0, 1e300, -1e300};
            for (double v : vs) {
                p.mean += v;
                p.lo = std::min(p.lo, v);
                p.hi = std::max(p.hi, v);
            }
            p.mean /= static_cast<double>(vs.size());
            poly << X(x) << ',' << Y(p.mean) << ' ';
            s << "<line x1=\"" << X(x) << "\" y1=\"" << Y(p.lo) << "\" x2=\"" << X(x) << "\" y2=\""
              << Y(p.hi) << "\" stroke=\"" << col << "\" stroke-width=\"1\"/>\n";
            s << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(p.mean) << "\" r=\"3\" fill=\"" << col
              << "\"/>\n";
        }
        s << "<polyline points=\"" << poly.str() << "\" fill=\"none\" stroke=\"" << col
          << "\" stroke-width=\"1.5\"/>\n";
        s << "<rect x=\"" << W - mr + 14 << "\" y=\"" << legend_y - 9
          << "\" width=\"12\" height=\"12\" fill=\"" << col << "\"/>\n";
        s << "<text x=\"" << W - mr + 32 << "\" y=\"" << legend_y + 2 << "\" font-size=\"13\">" << alg
          << "</text>\n";
        legend_y += 20;
        ++ci;
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace

void emit_plot(const std::vector<TrialRecord>& records, const std::string& path) {
    if (records.empty()) throw std::invalid_argument("emit_plot: no records");
    std::vector<double> theta2s;
    for (const auto& r : records)
        if (std::find(theta2s.begin(), theta2s.end(), r.theta2) == theta2s.end())
            theta2s.push_back(r.theta2);
    std::sort(theta2s.begin(), theta2s.end());

    for (double t2 : theta2s) {
        std::string file = path;
        if (theta2s.size() > 1) {
            auto dot = path.rfind('.');
            std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
            std::string ext = dot == std::string::npos ? "" : path.substr(dot);
            file = stem + "_t2_" + fmt_double(t2) + ext;
        }
        std::ofstream out(file);
        if (!out) throw std::runtime_error("cannot write plot: " + file);
        out << svg_for_theta2(records, t2);
        if (!out) throw std::runtime_error("write failed: " + file);
    }
}

} // namespace gbm
