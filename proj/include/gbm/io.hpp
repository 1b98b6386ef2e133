#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

struct EdgeListData {
    Graph graph;
    std::vector<long long> original_ids;  // original id of node i (first-appearance order)
    long long dropped_self_loops = 0;
    long long dropped_duplicates = 0;
};

// Text edge list: one "u v" pair of integer tokens per line, '#' comment
// lines and blank lines skipped, LF or CRLF, arbitrary whitespace between
// tokens. Node ids are compacted to 0..n-1 in order of first appearance;
// self-loops and duplicate edges are dropped and counted.
EdgeListData ingest_edge_list(const std::string& path);

// Label file: "id label" lines with original ids; label tokens are mapped to
// {1, 2} in order of first appearance. Every id must come from the edge list.
std::vector<std::uint8_t> ingest_labels(const std::string& path,
                                        const std::vector<long long>& original_ids);

void write_edge_list(const std::string& path, const Graph& g);
void write_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

} // namespace gbm
