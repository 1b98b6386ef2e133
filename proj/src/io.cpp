#include "gbm/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gbm {

namespace {

// Strips CR, comments and surrounding blanks; returns false for skippable lines.
bool clean_line(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') return false;
    return line.find_first_not_of(" \t") != std::string::npos;
}

long long parse_int_token(std::istringstream& in, const std::string& path, long long lineno) {
    std::string tok;
    if (!(in >> tok)) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected a token");
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed integer '" + tok + "'");
    }
}

} // namespace

EdgeListData ingest_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    EdgeListData out;
    std::unordered_map<long long, int> compact;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    auto id_of = [&](long long orig) {
        auto [it, fresh] = compact.try_emplace(orig, static_cast<int>(out.original_ids.size()));
        if (fresh) out.original_ids.push_back(orig);
        return it->second;
    };

    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!clean_line(line)) continue;
        std::istringstream ls(line);
        long long a = parse_int_token(ls, path, lineno);
        long long b = parse_int_token(ls, path, lineno);
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": trailing token '" + extra + "'");
        int u = id_of(a), v = id_of(b);
        if (u == v) {
            ++out.dropped_self_loops;
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            ++out.dropped_duplicates;
            continue;
        }
        edges.push_back(key);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

std::vector<std::uint8_t> ingest_labels(const std::string& path,
                                        const std::vector<long long>& original_ids) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels file: " + path);
    std::unordered_map<long long, int> compact;
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        compact[original_ids[i]] = static_cast<int>(i);

    std::vector<std::uint8_t> labels(original_ids.size(), 0);
    std::unordered_map<std::string, std::uint8_t> label_map;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!clean_line(line)) continue;
        std::istringstream ls(line);
        long long id = parse_int_token(ls, path, lineno);
        std::string tok;
        if (!(ls >> tok)) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing label");
        auto it = compact.find(id);
        if (it == compact.end())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": label for unknown id " + std::to_string(id));
        auto [lit, fresh] = label_map.try_emplace(tok, static_cast<std::uint8_t>(label_map.size() + 1));
        if (fresh && label_map.size() > 2)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": more than two distinct labels");
        labels[static_cast<std::size_t>(it->second)] = lit->second;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == 0)
            throw std::runtime_error(path + ": node with original id " +
                                     std::to_string(original_ids[i]) + " has no label");
    return labels;
}

void write_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write labels: " + path);
    for (std::size_t i = 0; i < labels.size(); ++i)
        out << i << ' ' << static_cast<int>(labels[i]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace gbm
