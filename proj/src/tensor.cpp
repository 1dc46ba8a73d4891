#include "canonica/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace canonica {

namespace {

const LaurentPoly& q_minus_qinv() {
    static const LaurentPoly v = LaurentPoly::q(1) - LaurentPoly::q(-1);
    return v;
}

void accumulate(std::map<std::size_t, LaurentPoly>& acc, std::size_t k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SparseColumn to_column(std::map<std::size_t, LaurentPoly>&& acc) {
    SparseColumn out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc) out.emplace_back(k, std::move(c));
    return out;
}

}  // namespace

// ---- TensorVector ----

TensorVector TensorVector::basis_vector(const MultiIndex& alpha, int n, TensorBasis b) {
    TensorVector v(n, alpha.size(), b);
    v.add(alpha, LaurentPoly(1));
    return v;
}

LaurentPoly TensorVector::coefficient(const MultiIndex& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? LaurentPoly() : it->second;
}

void TensorVector::add(const MultiIndex& alpha, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (alpha.size() != d || alpha.max_letter() > n) throw std::invalid_argument("multi-index outside the tensor space");
    auto [it, inserted] = coeffs.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (o.basis != basis) throw std::invalid_argument("adding tensor vectors in different bases");
    for (const auto& [a, c] : o.coeffs) add(a, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (o.basis != basis) throw std::invalid_argument("subtracting tensor vectors in different bases");
    for (const auto& [a, c] : o.coeffs) add(a, -c);
    return *this;
}

TensorVector operator*(const LaurentPoly& c, const TensorVector& v) {
    TensorVector r(v.n, v.d, v.basis);
    for (const auto& [a, x] : v.coeffs) r.add(a, c * x);
    return r;
}

// ---- WeightSpace ----

WeightSpace::WeightSpace(Weight nu) : nu_(std::move(nu)), d_(nu_.size()) {
    check_degree(d_);
    std::vector<int> w;
    for (std::size_t j = 0; j < nu_.parts.size(); ++j)
        for (int c = 0; c < nu_.parts[j]; ++c) w.push_back(static_cast<int>(j) + 1);
    do {
        words_.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    index_.reserve(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) index_.emplace(words_[k], k);
    const std::size_t gens = d_ > 0 ? static_cast<std::size_t>(d_ - 1) : 0;
    swap_.resize(words_.size() * gens);
    rev_.resize(words_.size());
    inv_.resize(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) {
        for (std::size_t i = 0; i < gens; ++i) {
            MultiIndex s = words_[k];
            std::swap(s.entries[i], s.entries[i + 1]);
            swap_[k * gens + i] = index_of(s);
        }
        rev_[k] = index_of(words_[k].reversed());
        inv_[k] = words_[k].inversions();
    }
}

std::shared_ptr<const WeightSpace> WeightSpace::get(const Weight& nu) {
    static std::mutex m;
    static std::map<Weight, std::shared_ptr<const WeightSpace>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(nu);
    if (it != registry.end()) return it->second;
    auto ws = std::make_shared<const WeightSpace>(nu);
    registry.emplace(nu, ws);
    return ws;
}

std::size_t WeightSpace::index_of(const MultiIndex& alpha) const {
    auto it = index_.find(alpha);
    if (it == index_.end()) throw std::out_of_range("multi-index not in weight space: " + alpha.to_string());
    return it->second;
}

SparseColumn WeightSpace::act_generator(const SparseColumn& v, int i) const {
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [k, c] : v) {
        const int a = words_[k][static_cast<std::size_t>(i - 1)];
        const int b = words_[k][static_cast<std::size_t>(i)];
        if (a < b) {
            accumulate(acc, swapped(k, i), c);
        } else if (a == b) {
            accumulate(acc, k, c.shift(-1));
        } else {
            accumulate(acc, swapped(k, i), c);
            accumulate(acc, k, -(q_minus_qinv() * c));
        }
    }
    return to_column(std::move(acc));
}

SparseColumn WeightSpace::act_generator_inverse(const SparseColumn& v, int i) const {
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [k, c] : v) {
        const int a = words_[k][static_cast<std::size_t>(i - 1)];
        const int b = words_[k][static_cast<std::size_t>(i)];
        if (a < b) {
            accumulate(acc, swapped(k, i), c);
            accumulate(acc, k, q_minus_qinv() * c);
        } else if (a == b) {
            accumulate(acc, k, c.shift(1));
        } else {
            accumulate(acc, swapped(k, i), c);
        }
    }
    return to_column(std::move(acc));
}

SparseColumn WeightSpace::bar_basis(std::size_t k) const {
    // alpha = sorted . s_{i_1} ... s_{i_k}; the i's are the stripped descents in reverse
    std::vector<int> stripped;
    MultiIndex cur = words_[k];
    for (bool changed = true; changed;) {
        changed = false;
        for (int j = 1; j < d_; ++j) {
            if (cur[static_cast<std::size_t>(j - 1)] > cur[static_cast<std::size_t>(j)]) {
                std::swap(cur.entries[static_cast<std::size_t>(j - 1)], cur.entries[static_cast<std::size_t>(j)]);
                stripped.push_back(j);
                changed = true;
                break;
            }
        }
    }
    SparseColumn v{{index_of(cur), LaurentPoly(1)}};
    for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) v = act_generator_inverse(v, *it);
    return v;
}

SparseColumn WeightSpace::bar_star_basis(std::size_t k) const {
    SparseColumn v = bar_basis(rev_[k]);
    for (auto& e : v) e.first = rev_[e.first];
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

const BarLift& WeightSpace::dual_lift(bool alternate_order) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(0, alternate_order);
    if (auto it = lifts_.find(key); it != lifts_.end()) return *it->second;
    std::vector<std::size_t> order(words_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (inv_[a] != inv_[b]) return inv_[a] > inv_[b];
        return alternate_order ? a > b : a < b;
    });
    auto lift = std::make_unique<BarLift>(std::move(order), [this](std::size_t k) { return bar_basis(k); },
                                          LiftDirection::Dual);
    const BarLift& ref = *lift;
    lifts_.emplace(key, std::move(lift));
    return ref;
}

const BarLift& WeightSpace::canonical_lift(bool alternate_order) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(1, alternate_order);
    if (auto it = lifts_.find(key); it != lifts_.end()) return *it->second;
    std::vector<std::size_t> order(words_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (inv_[a] != inv_[b]) return inv_[a] < inv_[b];
        return alternate_order ? a > b : a < b;
    });
    auto lift = std::make_unique<BarLift>(std::move(order), [this](std::size_t k) { return bar_star_basis(k); },
                                          LiftDirection::Canonical);
    const BarLift& ref = *lift;
    lifts_.emplace(key, std::move(lift));
    return ref;
}

// ---- free functions ----

TensorVector to_basis(const TensorVector& v, TensorBasis b) {
    if (v.basis == b) return v;
    TensorVector r(v.n, v.d, b);
    for (const auto& [a, c] : v.coeffs) r.coeffs.emplace(a.reversed(), c);
    return r;
}

TensorVector hecke_act(const TensorVector& v0, int i) {
    TensorVector v = to_basis(v0, TensorBasis::M);
    if (i < 1 || i >= v.d) throw std::out_of_range("generator index outside 1..d-1");
    TensorVector r(v.n, v.d, TensorBasis::M);
    const auto a = static_cast<std::size_t>(i - 1);
    for (const auto& [alpha, c] : v.coeffs) {
        MultiIndex s = alpha;
        std::swap(s.entries[a], s.entries[a + 1]);
        if (alpha[a] < alpha[a + 1]) {
            r.add(s, c);
        } else if (alpha[a] == alpha[a + 1]) {
            r.add(alpha, c.shift(-1));
        } else {
            r.add(s, c);
            r.add(alpha, -(q_minus_qinv() * c));
        }
    }
    return r;
}

TensorVector hecke_act_word(const TensorVector& v, const std::vector<int>& word) {
    TensorVector r = to_basis(v, TensorBasis::M);
    for (int i : word) r = hecke_act(r, i);
    return r;
}

TensorVector hecke_act_element(const TensorVector& v, const HeckeElement& h) {
    TensorVector r(v.n, v.d, TensorBasis::M);
    for (const auto& [x, c] : h.coeffs()) r += c * hecke_act_word(v, x.reduced_word());
    return r;
}

namespace {

// Applies a per-weight-space column map to every homogeneous component (M basis keys).
template <class F>
TensorVector map_by_weight(const TensorVector& v, F&& per_space) {
    std::map<Weight, SparseColumn> parts;
    for (const auto& [alpha, c] : v.coeffs) {
        Weight nu = alpha.weight(v.n);
        auto ws = WeightSpace::get(nu);
        parts[nu].emplace_back(ws->index_of(alpha), c);
    }
    TensorVector r(v.n, v.d, v.basis);
    for (auto& [nu, col] : parts) {
        auto ws = WeightSpace::get(nu);
        for (const auto& [k, c] : per_space(*ws, col)) r.add(ws->words()[k], c);
    }
    return r;
}

}  // namespace

TensorVector bar_tensor(const TensorVector& v0) {
    TensorVector v = to_basis(v0, TensorBasis::M);
    TensorVector r = map_by_weight(v, [](const WeightSpace& ws, const SparseColumn& col) {
        std::map<std::size_t, LaurentPoly> acc;
        for (const auto& [k, c] : col) {
            LaurentPoly cb = c.bar();
            for (const auto& [j, e] : ws.bar_basis(k)) accumulate(acc, j, cb * e);
        }
        return to_column(std::move(acc));
    });
    return to_basis(r, v0.basis);
}

TensorVector bar_tensor_star(const TensorVector& v) {
    if (v.basis != TensorBasis::Mstar) throw std::invalid_argument("bar_tensor_star expects the M* basis");
    return map_by_weight(v, [](const WeightSpace& ws, const SparseColumn& col) {
        std::map<std::size_t, LaurentPoly> acc;
        for (const auto& [k, c] : col) {
            LaurentPoly cb = c.bar();
            for (const auto& [j, e] : ws.bar_star_basis(k)) accumulate(acc, j, cb * e);
        }
        return to_column(std::move(acc));
    });
}

TensorVector dual_canonical(const MultiIndex& alpha, int n) {
    auto ws = WeightSpace::get(alpha.weight(n));
    TensorVector r(n, alpha.size(), TensorBasis::M);
    for (const auto& [k, c] : ws->dual_lift().column(ws->index_of(alpha))) r.add(ws->words()[k], c);
    return r;
}

TensorVector canonical(const MultiIndex& alpha, int n) {
    auto ws = WeightSpace::get(alpha.weight(n));
    TensorVector r(n, alpha.size(), TensorBasis::Mstar);
    for (const auto& [k, c] : ws->canonical_lift().column(ws->index_of(alpha))) r.add(ws->words()[k], c);
    return r;
}

LaurentPoly dual_canonical_coefficient(const MultiIndex& gamma, const MultiIndex& alpha, int n) {
    if (gamma.weight(n) != alpha.weight(n)) return {};
    return dual_canonical(alpha, n).coefficient(gamma);
}

LaurentPoly canonical_coefficient(const MultiIndex& gamma, const MultiIndex& alpha, int n) {
    if (gamma.weight(n) != alpha.weight(n)) return {};
    return canonical(alpha, n).coefficient(gamma);
}

LaurentPoly bilinear_form(const TensorVector& v0, const TensorVector& w0) {
    TensorVector v = to_basis(v0, TensorBasis::M);
    TensorVector w = to_basis(w0, TensorBasis::Mstar);
    if (v.n != w.n || v.d != w.d) throw std::invalid_argument("bilinear_form: spaces differ");
    TensorVector bw = bar_tensor_star(w);
    LaurentPoly r;
    for (const auto& [alpha, c] : v.coeffs) {
        auto it = bw.coeffs.find(alpha);
        if (it != bw.coeffs.end()) r += c * it->second.bar();
    }
    return r;
}

}  // namespace canonica
