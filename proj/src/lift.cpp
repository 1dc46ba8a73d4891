#include "canonica/lift.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <string>

#include <omp.h>

namespace canonica {

namespace {
std::atomic<int> g_jobs{0};
}

void set_parallel_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }
int parallel_jobs() { return g_jobs.load(); }

void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& fn) {
    if (exec == Execution::Serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const int jobs = parallel_jobs();
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

BarLift::BarLift(std::vector<std::size_t> order, BarFn bar, LiftDirection direction)
    : order_(std::move(order)), position_(order_.size()), bar_(std::move(bar)), direction_(direction),
      bar_cache_(order_.size()), column_cache_(order_.size()) {
    std::vector<bool> seen(order_.size(), false);
    for (std::size_t p = 0; p < order_.size(); ++p) {
        if (order_[p] >= order_.size() || seen[order_[p]]) throw std::invalid_argument("lift order is not a permutation");
        seen[order_[p]] = true;
        position_[order_[p]] = p;
    }
}

const SparseColumn& BarLift::bar_of(std::size_t w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (bar_cache_[w]) return *bar_cache_[w];
    }
    auto computed = std::make_shared<const SparseColumn>(bar_(w));
    std::lock_guard<std::mutex> lock(mutex_);
    if (!bar_cache_[w]) bar_cache_[w] = std::move(computed);
    return *bar_cache_[w];
}

const SparseColumn& BarLift::cached_column(std::size_t w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (column_cache_[w]) return *column_cache_[w];
    }
    auto computed = std::make_shared<const SparseColumn>(column(w));
    std::lock_guard<std::mutex> lock(mutex_);
    if (!column_cache_[w]) column_cache_[w] = std::move(computed);
    return *column_cache_[w];
}

SparseColumn BarLift::column(std::size_t w) const {
    // pending[p] = sum over processed v of bar(c_v) times the off-diagonal part of bar(b_v)
    std::map<std::size_t, LaurentPoly> pending;
    SparseColumn result;

    auto absorb = [&](std::size_t v, const LaurentPoly& barc) {
        bool diagonal_seen = false;
        for (const auto& [u, coeff] : bar_of(v)) {
            if (u == v) {
                if (coeff != LaurentPoly(1)) throw LiftError("bar matrix diagonal entry is not 1 at index " + std::to_string(v));
                diagonal_seen = true;
                continue;
            }
            if (position_[u] <= position_[v])
                throw LiftError("bar matrix is not unitriangular for the given order at index " + std::to_string(v));
            pending[position_[u]] += barc * coeff;
        }
        if (!diagonal_seen) throw LiftError("bar matrix diagonal entry missing at index " + std::to_string(v));
    };

    result.emplace_back(w, LaurentPoly(1));
    absorb(w, LaurentPoly(1));
    while (!pending.empty()) {
        auto it = pending.begin();
        const std::size_t v = order_[it->first];
        LaurentPoly rhs = std::move(it->second);
        pending.erase(it);
        if (rhs.is_zero()) continue;
        // c - bar(c) = rhs forces rhs to be antisymmetric
        if (!(rhs + rhs.bar()).is_zero()) throw LiftError("lift correction is not antisymmetric at index " + std::to_string(v));
        LaurentPoly c = direction_ == LiftDirection::Dual ? rhs.negative_part() : rhs.positive_part();
        result.emplace_back(v, c);
        absorb(v, c.bar());
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

std::vector<SparseColumn> BarLift::columns(const std::vector<std::size_t>& which, Execution exec) const {
    std::vector<SparseColumn> out(which.size());
    for_each_index(which.size(), exec, [&](std::size_t i) { out[i] = column(which[i]); });
    return out;
}

std::vector<std::vector<LaurentPoly>> to_dense(const std::vector<SparseColumn>& cols, std::size_t size) {
    std::vector<std::vector<LaurentPoly>> m(size, std::vector<LaurentPoly>(cols.size()));
    for (std::size_t b = 0; b < cols.size(); ++b)
        for (const auto& [a, c] : cols[b]) m[a][b] = c;
    return m;
}

}  // namespace canonica
