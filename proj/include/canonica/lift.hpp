#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "canonica/laurent.hpp"

namespace canonica {

class LiftError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Coefficients of one basis expansion, sorted by basis index.
using SparseColumn = std::vector<std::pair<std::size_t, LaurentPoly>>;

// Dual: corrections in q^{-1}Z[q^{-1}]. Canonical: corrections in qZ[q].
enum class LiftDirection { Dual, Canonical };

enum class Execution { Serial, Parallel };

// Thread count used by Execution::Parallel; 0 means the OpenMP default.
void set_parallel_jobs(int jobs);
int parallel_jobs();

// Calls fn(i) for every i < count, in parallel or serially.
// The first exception thrown by fn is rethrown.
void for_each_index(std::size_t count, Execution exec, const std::function<void(std::size_t)>& fn);

// Unique bar invariant elements b_w + sum c_{v,w} b_v with the c's in the
// lattice of the chosen direction. The order lists basis indexes such that
// bar(b_w) - b_w only involves indexes strictly later than w.
class BarLift {
public:
    using BarFn = std::function<SparseColumn(std::size_t)>;

    BarLift(std::vector<std::size_t> order, BarFn bar, LiftDirection direction);

    std::size_t size() const { return order_.size(); }
    // Lifted element for basis index w; safe to call concurrently.
    SparseColumn column(std::size_t w) const;
    // Same, kept for later calls.
    const SparseColumn& cached_column(std::size_t w) const;
    std::vector<SparseColumn> columns(const std::vector<std::size_t>& which, Execution exec) const;
    // bar(b_w), cached
    const SparseColumn& bar_of(std::size_t w) const;

private:
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    BarFn bar_;
    LiftDirection direction_;
    mutable std::mutex mutex_;
    mutable std::vector<std::shared_ptr<const SparseColumn>> bar_cache_;
    mutable std::vector<std::shared_ptr<const SparseColumn>> column_cache_;
};

// Dense square form: entry [a][b] is the coefficient of basis a in the lift of b.
std::vector<std::vector<LaurentPoly>> to_dense(const std::vector<SparseColumn>& cols, std::size_t size);

}  // namespace canonica
