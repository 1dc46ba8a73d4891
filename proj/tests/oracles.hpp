#pragma once

// Brute-force reference computations shared by the unit and acceptance tests.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include <map>

#include "canonica/laurent.hpp"
#include "canonica/symgroup.hpp"

namespace oracle {

using canonica::MultiIndex;
using canonica::Permutation;
using canonica::Weight;

// x <= y in the standard Bruhat order iff x is a subexpression of a reduced word of y.
inline bool bruhat_leq_subword(const Permutation& x, const Permutation& y) {
    const auto word = y.reduced_word();
    const int d = y.degree();
    const std::size_t k = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Permutation p = Permutation::identity(d);
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) p = p.times_simple_right(word[b]);
        if (p == x) return true;
    }
    return false;
}

// Weak compositions of d with exactly n parts.
inline std::vector<Weight> weak_compositions(int d, int n) {
    std::vector<Weight> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 1) {
            cur.push_back(left);
            out.emplace_back(cur);
            cur.pop_back();
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            rec(left - v, slots - 1);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(d, n);
    return out;
}

// Compositions of d with positive parts bounded by max_part.
inline std::vector<Weight> compositions(int d, int max_part) {
    std::vector<Weight> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 1; v <= std::min(left, max_part); ++v) {
            cur.push_back(v);
            rec(left - v);
            cur.pop_back();
        }
    };
    rec(d);
    return out;
}

// Partitions of d.
inline std::vector<Weight> partitions(int d) {
    std::vector<Weight> out;
    for (const auto& c : compositions(d, d))
        if (c.is_partition()) out.push_back(c);
    return out;
}

// Every word of length d over 1..n.
inline std::vector<MultiIndex> all_words(int n, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur;
    cur.entries.assign(static_cast<std::size_t>(d), 1);
    if (d == 0) return {cur};
    while (true) {
        out.push_back(cur);
        int pos = d - 1;
        while (pos >= 0 && cur.entries[static_cast<std::size_t>(pos)] == n) {
            cur.entries[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur.entries[static_cast<std::size_t>(pos)];
    }
    return out;
}

// All elements of the parabolic subgroup S_lambda.
inline std::vector<Permutation> parabolic_subgroup(const Weight& lambda) {
    std::vector<Permutation> out;
    for (const auto& w : canonica::all_permutations(lambda.size()))
        if (canonica::in_parabolic(w, lambda)) out.push_back(w);
    return out;
}

// Kazhdan-Lusztig polynomials P_{x,y}(t) by the classical recursion on a left
// descent s of y (y = s v):
//   P_{x,y} = t^{1-c} P_{sx,v} + t^c P_{x,v} - sum_{z < v, sz < z} mu(z,v) t^{(l(y)-l(z))/2} P_{x,z}
// with c = 1 if sx < x and c = 0 otherwise.
class KLRecursion {
public:
    canonica::LaurentPoly operator()(const Permutation& x, const Permutation& y) {
        using canonica::LaurentPoly;
        if (!bruhat_leq_subword(x, y)) return LaurentPoly();
        if (x == y) return LaurentPoly(1);
        auto key = std::make_pair(x, y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int d = y.degree();
        int s = 1;
        while (!y.has_left_descent(s)) ++s;
        Permutation v = y.times_simple_left(s);
        Permutation sx = x.times_simple_left(s);
        int c = sx.length() < x.length() ? 1 : 0;
        LaurentPoly p = LaurentPoly::q(1 - c) * (*this)(sx, v) + LaurentPoly::q(c) * (*this)(x, v);
        for (const auto& z : canonica::all_permutations(d)) {
            if (!(z.times_simple_left(s).length() < z.length())) continue;
            if (z == v || !bruhat_leq_subword(z, v) || !bruhat_leq_subword(x, z)) continue;
            int gap = v.length() - z.length() - 1;
            if (gap % 2 != 0) continue;
            canonica::Integer mu = (*this)(z, v).coefficient(gap / 2);
            if (mu.is_zero()) continue;
            p -= LaurentPoly::monomial((y.length() - z.length()) / 2, mu) * (*this)(x, z);
        }
        memo_.emplace(key, p);
        return p;
    }

private:
    std::map<std::pair<Permutation, Permutation>, canonica::LaurentPoly> memo_;
};

}  // namespace oracle
