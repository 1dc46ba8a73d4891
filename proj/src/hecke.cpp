#include "canonica/hecke.hpp"

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

// ---- HeckeElement ----

HeckeElement HeckeElement::basis(const Permutation& x) {
    HeckeElement h(x.degree());
    h.coeffs_.emplace(x, LaurentPoly(1));
    return h;
}

HeckeElement HeckeElement::generator(int d, int i) { return basis(Permutation::simple(d, i)); }

LaurentPoly HeckeElement::coefficient(const Permutation& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Permutation& x, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (x.degree() != d_) throw std::invalid_argument("Hecke element degree mismatch");
    auto [it, inserted] = coeffs_.try_emplace(x, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    for (const auto& [x, c] : o.coeffs_) add(x, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    for (const auto& [x, c] : o.coeffs_) add(x, -c);
    return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a) {
    HeckeElement r(a.degree());
    for (const auto& [x, v] : a.coeffs()) r.add(x, c * v);
    return r;
}

HeckeElement mul_generator(const HeckeElement& a, int i) {
    HeckeElement r(a.degree());
    for (const auto& [x, c] : a.coeffs()) {
        r.add(x.times_simple_right(i), c);
        if (x.has_right_descent(i)) r.add(x, -(q_minus_qinv() * c));
    }
    return r;
}

HeckeElement mul_generator_inverse(const HeckeElement& a, int i) {
    HeckeElement r(a.degree());
    for (const auto& [x, c] : a.coeffs()) {
        r.add(x.times_simple_right(i), c);
        if (!x.has_right_descent(i)) r.add(x, q_minus_qinv() * c);
    }
    return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b, bool largest_first_words) {
    if (a.degree() != b.degree()) throw std::invalid_argument("hecke_mul: degree mismatch");
    HeckeElement r(a.degree());
    for (const auto& [y, c] : b.coeffs()) {
        HeckeElement t = a;
        for (int i : y.reduced_word(largest_first_words)) t = mul_generator(t, i);
        r += c * t;
    }
    return r;
}

HeckeElement generator_inverse(int d, int i) {
    HeckeElement h = HeckeElement::generator(d, i);
    h.add(Permutation::identity(d), q_minus_qinv());
    return h;
}

HeckeElement hecke_bar(const HeckeElement& a) {
    const int d = a.degree();
    HeckeElement r(d);
    for (const auto& [x, c] : a.coeffs()) {
        HeckeElement t = HeckeElement::basis(Permutation::identity(d));
        for (int i : x.reduced_word()) t = mul_generator_inverse(t, i);
        r += c.bar() * t;
    }
    return r;
}

HeckeElement tau_hecke(const HeckeElement& a) {
    const int d = a.degree();
    const Permutation wd = Permutation::longest(d);
    HeckeElement r(d);
    for (const auto& [x, c] : a.coeffs()) r.add(wd * x.inverse() * wd, c);
    return r;
}

HeckeElement symmetrizer_x(int d) {
    const int top = d * (d - 1) / 2;
    HeckeElement h(d);
    for (const auto& w : all_permutations(d)) h.add(w, LaurentPoly::q(top - w.length()));
    return h;
}

HeckeElement symmetrizer_y(int d) {
    const int top = d * (d - 1) / 2;
    HeckeElement h(d);
    for (const auto& w : all_permutations(d)) {
        int e = w.length() - top;
        h.add(w, LaurentPoly::monomial(e, (e % 2 == 0) ? 1 : -1));
    }
    return h;
}

// ---- ParabolicModule ----

ParabolicModule::ParabolicModule(Weight lambda) : lambda_(std::move(lambda)), d_(lambda_.size()) {
    basis_ = min_coset_reps(lambda_);
    index_.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::shared_ptr<const ParabolicModule> ParabolicModule::get(const Weight& lambda) {
    static std::mutex m;
    static std::map<Weight, std::shared_ptr<const ParabolicModule>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(lambda);
    if (it != registry.end()) return it->second;
    auto mod = std::make_shared<const ParabolicModule>(lambda);
    registry.emplace(lambda, mod);
    return mod;
}

std::size_t ParabolicModule::index_of(const Permutation& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::out_of_range("not a minimal coset representative: " + x.to_string());
    return it->second;
}

SparseColumn ParabolicModule::act_generator(const SparseColumn& v, int i) const {
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [k, c] : v) {
        const Permutation& x = basis_[k];
        Permutation xs = x.times_simple_right(i);
        if (x.has_right_descent(i)) {
            accumulate(acc, index_of(xs), c);
            accumulate(acc, k, -(q_minus_qinv() * c));
        } else if (auto it = index_.find(xs); it != index_.end()) {
            accumulate(acc, it->second, c);
        } else {
            // x s_i = s_j x with s_j in S_lambda
            accumulate(acc, k, c.shift(-1));
        }
    }
    return to_column(std::move(acc));
}

SparseColumn ParabolicModule::act_generator_inverse(const SparseColumn& v, int i) const {
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [k, c] : v) {
        const Permutation& x = basis_[k];
        Permutation xs = x.times_simple_right(i);
        if (x.has_right_descent(i)) {
            accumulate(acc, index_of(xs), c);
        } else if (auto it = index_.find(xs); it != index_.end()) {
            accumulate(acc, it->second, c);
            accumulate(acc, k, q_minus_qinv() * c);
        } else {
            accumulate(acc, k, c.shift(1));
        }
    }
    return to_column(std::move(acc));
}

SparseColumn ParabolicModule::bar_basis(std::size_t x) const {
    SparseColumn v{{index_of(Permutation::identity(d_)), LaurentPoly(1)}};
    for (int i : basis_[x].reduced_word()) v = act_generator_inverse(v, i);
    return v;
}

ParabolicVector ParabolicModule::project(const HeckeElement& h) const {
    ParabolicVector out{lambda_, {}};
    for (const auto& [w, c] : h.coeffs()) {
        auto [u, y] = parabolic_factor(w, lambda_);
        LaurentPoly t = c.shift(-u.length());
        auto [it, inserted] = out.coeffs.try_emplace(y, t);
        if (!inserted) {
            it->second += t;
            if (it->second.is_zero()) out.coeffs.erase(it);
        }
    }
    return out;
}

ParabolicVector ParabolicModule::to_vector(const SparseColumn& v) const {
    ParabolicVector out{lambda_, {}};
    for (const auto& [k, c] : v)
        if (!c.is_zero()) out.coeffs.emplace(basis_[k], c);
    return out;
}

SparseColumn ParabolicModule::from_vector(const ParabolicVector& v) const {
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [x, c] : v.coeffs) accumulate(acc, index_of(x), c);
    return to_column(std::move(acc));
}

const BarLift& ParabolicModule::lift(LiftDirection dir, bool alternate_order) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(static_cast<int>(dir), alternate_order);
    auto it = lifts_.find(key);
    if (it != lifts_.end()) return *it->second;
    // bar(M_x) - M_x involves only shorter elements: process longest first
    std::vector<std::size_t> order(basis_.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> len(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) len[k] = basis_[k].length();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (len[a] != len[b]) return len[a] > len[b];
        return alternate_order ? a > b : a < b;
    });
    auto lift = std::make_unique<BarLift>(std::move(order), [this](std::size_t x) { return bar_basis(x); }, dir);
    const BarLift& ref = *lift;
    lifts_.emplace(key, std::move(lift));
    return ref;
}

namespace {

LaurentPoly column_entry(const SparseColumn& col, std::size_t k) {
    auto it = std::lower_bound(col.begin(), col.end(), k, [](const auto& e, std::size_t v) { return e.first < v; });
    return (it != col.end() && it->first == k) ? it->second : LaurentPoly();
}

}  // namespace

LaurentPoly ParabolicModule::n_poly(const Permutation& x, const Permutation& y) const {
    const SparseColumn& col = lift(LiftDirection::Dual).cached_column(index_of(y));
    LaurentPoly c = column_entry(col, index_of(x)).bar();
    return ((x.length() + y.length()) % 2 == 0) ? c : -c;
}

LaurentPoly ParabolicModule::m_poly(const Permutation& x, const Permutation& y, bool alternate_order) const {
    const SparseColumn& col = lift(LiftDirection::Canonical, alternate_order).cached_column(index_of(y));
    return column_entry(col, index_of(x));
}

ParabolicVector parabolic_bar(const ParabolicVector& v) {
    auto mod = ParabolicModule::get(v.lambda);
    HeckeElement total(mod->degree());
    for (const auto& [x, c] : v.coeffs) total += c.bar() * hecke_bar(HeckeElement::basis(x));
    return mod->project(total);
}

// ---- Kazhdan-Lusztig polynomials ----

namespace {

// m(q) = q^{l(y')-l(x')} P(q^{-2})  ->  P(t)
LaurentPoly kl_from_canonical(const LaurentPoly& m, int shift) {
    LaurentPoly r = m.shift(shift);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : r.terms()) {
        if (t.exp > 0 || t.exp % 2 != 0) throw LiftError("canonical coefficient is not of Kazhdan-Lusztig shape: " + m.to_string());
        terms.push_back({-t.exp / 2, t.coeff});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Weight descent_blocks(const Permutation& y) {
    std::vector<int> parts;
    int cur = 1;
    for (int i = 1; i < y.degree(); ++i) {
        if (y.has_left_descent(i)) {
            ++cur;
        } else {
            parts.push_back(cur);
            cur = 1;
        }
    }
    parts.push_back(cur);
    return Weight(parts);
}

}  // namespace

LaurentPoly kl_polynomial(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("kl_polynomial: degree mismatch");
    static std::mutex m;
    static std::map<std::pair<Permutation, Permutation>, LaurentPoly> memo;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find({x, y});
        if (it != memo.end()) return it->second;
    }
    LaurentPoly result;
    if (bruhat_leq_standard(x, y)) {
        // P_{x,y} = P_{s x, y} for left descents s of y, so pass to minimal representatives
        Weight nu = descent_blocks(y);
        auto mod = ParabolicModule::get(nu);
        Permutation xm = parabolic_factor(x, nu).second;
        Permutation ym = parabolic_factor(y, nu).second;
        result = kl_from_canonical(mod->m_poly(xm, ym), xm.length() - ym.length());
    }
    std::lock_guard<std::mutex> lock(m);
    memo.emplace(std::make_pair(x, y), result);
    return result;
}

LaurentPoly kl_polynomial_regular(const Permutation& x, const Permutation& y, bool alternate_order) {
    if (x.degree() != y.degree()) throw std::invalid_argument("kl_polynomial: degree mismatch");
    auto mod = ParabolicModule::get(Weight(std::vector<int>(static_cast<std::size_t>(x.degree()), 1)));
    return kl_from_canonical(mod->m_poly(x, y, alternate_order), x.length() - y.length());
}

}  // namespace canonica
