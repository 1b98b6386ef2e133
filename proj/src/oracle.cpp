#include "gbm/oracle.hpp"

#include <stdexcept>

namespace gbm {

Oracle::Oracle(std::vector<std::uint8_t> truth, std::optional<long long> budget)
    : truth_(std::move(truth)), budget_(budget) {
    for (std::uint8_t l : truth_)
        if (l != 1 && l != 2) throw std::invalid_argument("oracle labels must be 1 or 2");
    cache_.assign(truth_.size(), 0);
}

bool Oracle::can_query(int u) const {
    if (u < 0 || u >= size()) return false;
    if (is_cached(u)) return true;
    return !budget_ || queries_used_ < *budget_;
}

std::uint8_t Oracle::query(int u) {
    if (u < 0 || u >= size()) throw std::invalid_argument("oracle: node out of range");
    std::uint8_t& c = cache_[static_cast<std::size_t>(u)];
    if (c != 0) return c;
    if (budget_ && queries_used_ >= *budget_)
        throw std::runtime_error("oracle: query budget exhausted");
    ++queries_used_;
    c = truth_[static_cast<std::size_t>(u)];
    return c;
}

} // namespace gbm
