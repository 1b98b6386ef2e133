#pragma once
#include <cstdint>
#include <optional>
#include <vector>

namespace gbm {

// Label-query interface with budget accounting; the only channel to ground
// truth during recovery. Repeat queries are served from the cache and do
// not count against the budget.
class Oracle {
public:
    explicit Oracle(std::vector<std::uint8_t> truth,
                    std::optional<long long> budget = std::nullopt);

    int size() const { return static_cast<int>(truth_.size()); }
    long long queries_used() const { return queries_used_; }
    std::optional<long long> budget() const { return budget_; }

    bool is_cached(int u) const { return cache_[static_cast<std::size_t>(u)] != 0; }

    // Whether querying `u` is allowed right now (always true for cached nodes).
    bool can_query(int u) const;

    // Reveals the label of `u`; throws when a fresh query would exceed the budget.
    std::uint8_t query(int u);

private:
    std::vector<std::uint8_t> truth_;
    std::vector<std::uint8_t> cache_;  // 0 = unknown, otherwise the label
    long long queries_used_ = 0;
    std::optional<long long> budget_;
};

} // namespace gbm
