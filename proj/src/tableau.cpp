#include "canonica/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace canonica {

// ---- Tableau ----

Weight Tableau::shape() const {
    std::vector<int> s;
    for (const auto& l : lines) s.push_back(static_cast<int>(l.size()));
    return Weight(s);
}

Weight Tableau::weight(int n) const {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const auto& l : lines)
        for (int x : l) {
            if (x < 1 || x > n) throw std::out_of_range("tableau entry outside alphabet");
            ++w[static_cast<std::size_t>(x - 1)];
        }
    return Weight(w);
}

int Tableau::size() const {
    int s = 0;
    for (const auto& l : lines) s += static_cast<int>(l.size());
    return s;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& l : lines)
        for (int x : l) m = std::max(m, x);
    return m;
}

bool Tableau::is_standard_form() const {
    for (const auto& l : lines)
        for (std::size_t k = 1; k < l.size(); ++k) {
            if (orientation == Orientation::Row && l[k - 1] > l[k]) return false;
            if (orientation == Orientation::Col && l[k - 1] >= l[k]) return false;
        }
    return true;
}

std::string Tableau::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) s += ';';
        for (std::size_t k = 0; k < lines[i].size(); ++k) {
            if (k) s += ',';
            s += std::to_string(lines[i][k]);
        }
    }
    return s;
}

Tableau Tableau::parse(std::string_view text, Orientation o) {
    Tableau t;
    t.orientation = o;
    std::vector<int> cur;
    std::string num;
    auto flush_num = [&]() {
        std::string n;
        for (char c : num)
            if (c != ' ') n += c;
        if (n.empty()) throw std::invalid_argument("empty tableau entry in " + std::string(text));
        std::size_t pos = 0;
        int v = std::stoi(n, &pos);
        if (pos != n.size() || v < 1) throw std::invalid_argument("bad tableau entry: " + n);
        cur.push_back(v);
        num.clear();
    };
    auto flush_line = [&]() {
        bool blank = std::all_of(num.begin(), num.end(), [](char c) { return c == ' '; });
        if (!(cur.empty() && blank)) flush_num();
        num.clear();
        t.lines.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == ';') flush_line();
        else if (c == ',') flush_num();
        else num += c;
    }
    flush_line();
    return t;
}

std::size_t TableauHash::operator()(const Tableau& t) const {
    std::size_t h = t.orientation == Orientation::Row ? 17 : 31;
    for (const auto& l : t.lines) {
        h = h * 1000003ULL + 7;
        for (int x : l) h = h * 1000003ULL + static_cast<std::size_t>(x);
    }
    return h;
}

// ---- MarginMatrix ----

Weight MarginMatrix::row_sums() const {
    std::vector<int> r(static_cast<std::size_t>(rows), 0);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) r[static_cast<std::size_t>(i - 1)] += at(i, j);
    return Weight(r);
}

Weight MarginMatrix::col_sums() const {
    std::vector<int> c(static_cast<std::size_t>(cols), 0);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) c[static_cast<std::size_t>(j - 1)] += at(i, j);
    return Weight(c);
}

MarginMatrix MarginMatrix::transpose() const {
    MarginMatrix t(cols, rows);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

// ---- readings ----

MultiIndex row_reading(const Tableau& A) {
    if (A.orientation != Orientation::Row) throw std::invalid_argument("row reading needs a row-shape tableau");
    MultiIndex r;
    for (auto it = A.lines.rbegin(); it != A.lines.rend(); ++it) r.entries.insert(r.entries.end(), it->begin(), it->end());
    return r;
}

MultiIndex column_reading(const Tableau& A) {
    if (A.orientation != Orientation::Col) throw std::invalid_argument("column reading needs a column-shape tableau");
    MultiIndex r;
    for (const auto& col : A.lines) r.entries.insert(r.entries.end(), col.rbegin(), col.rend());
    return r;
}

Tableau row_tableau_from_reading(const MultiIndex& rho, const Weight& mu) {
    if (rho.size() != mu.size()) throw std::invalid_argument("reading length does not match shape");
    Tableau A(Orientation::Row, std::vector<std::vector<int>>(mu.parts.size()));
    std::size_t pos = 0;
    for (std::size_t i = mu.parts.size(); i-- > 0;) {
        A.lines[i].assign(rho.entries.begin() + static_cast<long>(pos),
                          rho.entries.begin() + static_cast<long>(pos + static_cast<std::size_t>(mu.parts[i])));
        pos += static_cast<std::size_t>(mu.parts[i]);
    }
    return A;
}

Tableau col_tableau_from_reading(const MultiIndex& gamma, const Weight& mu) {
    if (gamma.size() != mu.size()) throw std::invalid_argument("reading length does not match shape");
    Tableau A(Orientation::Col, {});
    std::size_t pos = 0;
    for (int p : mu.parts) {
        std::vector<int> col(gamma.entries.begin() + static_cast<long>(pos),
                             gamma.entries.begin() + static_cast<long>(pos + static_cast<std::size_t>(p)));
        std::reverse(col.begin(), col.end());
        A.lines.push_back(col);
        pos += static_cast<std::size_t>(p);
    }
    return A;
}

// ---- matrices and cosets ----

MarginMatrix to_matrix(const Tableau& A, int n) {
    if (A.orientation != Orientation::Row) throw std::invalid_argument("matrix of a row-shape tableau only");
    MarginMatrix M(static_cast<int>(A.lines.size()), n);
    for (std::size_t i = 0; i < A.lines.size(); ++i)
        for (int x : A.lines[i]) {
            if (x > n) throw std::out_of_range("tableau entry exceeds alphabet");
            ++M.at(static_cast<int>(i) + 1, x);
        }
    return M;
}

Tableau from_matrix(const MarginMatrix& M) {
    Tableau A(Orientation::Row, std::vector<std::vector<int>>(static_cast<std::size_t>(M.rows)));
    for (int i = 1; i <= M.rows; ++i)
        for (int j = 1; j <= M.cols; ++j)
            for (int c = 0; c < M.at(i, j); ++c) A.lines[static_cast<std::size_t>(i - 1)].push_back(j);
    return A;
}

Permutation to_double_coset(const Tableau& A) {
    MultiIndex rho = row_reading(A);
    return index_to_coset(rho) * Permutation::longest(rho.size());
}

Tableau from_double_coset(const Permutation& x, const Weight& mu, const Weight& nu) {
    const int d = x.degree();
    MultiIndex base;
    for (std::size_t j = 0; j < nu.parts.size(); ++j)
        for (int c = 0; c < nu.parts[j]; ++c) base.entries.push_back(static_cast<int>(j) + 1);
    MultiIndex rho = act(base, x * Permutation::longest(d));
    Tableau A = row_tableau_from_reading(rho, mu);
    if (!A.is_standard_form()) throw std::invalid_argument("not a maximal double coset representative");
    return A;
}

Tableau from_double_index(const MultiIndex& alpha, const MultiIndex& beta, const Weight& mu) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("double index lengths differ");
    Tableau A(Orientation::Row, std::vector<std::vector<int>>(mu.parts.size()));
    for (int k = 0; k < alpha.size(); ++k) {
        int i = alpha[static_cast<std::size_t>(k)];
        if (i < 1 || i > mu.length()) throw std::out_of_range("row index outside shape");
        A.lines[static_cast<std::size_t>(i - 1)].push_back(beta[static_cast<std::size_t>(k)]);
    }
    for (std::size_t i = 0; i < A.lines.size(); ++i) {
        std::sort(A.lines[i].begin(), A.lines[i].end());
        if (static_cast<int>(A.lines[i].size()) != mu.parts[i]) throw std::invalid_argument("double index has wrong row degree");
    }
    return A;
}

std::pair<MultiIndex, MultiIndex> to_double_index(const Tableau& A) {
    MultiIndex alpha;
    for (std::size_t i = A.lines.size(); i-- > 0;)
        for (std::size_t k = 0; k < A.lines[i].size(); ++k) alpha.entries.push_back(static_cast<int>(i) + 1);
    return {alpha, row_reading(A)};
}

// ---- RSK ----

Tableau rsk_insert(const MultiIndex& alpha) {
    std::vector<std::vector<int>> rows;
    for (int x : alpha.entries) {
        int cur = x;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
            if (it == rows[r].end()) {
                rows[r].push_back(cur);
                break;
            }
            std::swap(*it, cur);
        }
    }
    return Tableau(Orientation::Row, rows);
}

Tableau rectify(const Tableau& A) { return rsk_insert(column_reading(A)); }

bool is_std(const Tableau& A) {
    return rectify(A).shape().trimmed() == A.shape().conjugate().trimmed();
}

bool is_dom(const Tableau& A) {
    if (A.orientation != Orientation::Row || !A.is_standard_form()) return false;
    if (!A.shape().is_partition()) return false;
    for (std::size_t i = 1; i < A.lines.size(); ++i)
        for (std::size_t k = 0; k < A.lines[i].size(); ++k)
            if (A.lines[i][k] <= A.lines[i - 1][k]) return false;
    return true;
}

// ---- crystal ----

namespace {

struct Reduced {
    std::vector<std::size_t> minus;  // unmatched i+1 positions, left to right
    std::vector<std::size_t> plus;   // unmatched i positions, left to right
};

Reduced reduce_signature(const MultiIndex& alpha, int i) {
    Reduced r;
    // each + cancels against the nearest pending - on its left
    for (std::size_t j = 0; j < alpha.entries.size(); ++j) {
        if (alpha.entries[j] == i + 1) {
            r.minus.push_back(j);
        } else if (alpha.entries[j] == i) {
            if (!r.minus.empty()) r.minus.pop_back();
            else r.plus.push_back(j);
        }
    }
    return r;
}

void check_index(int i) {
    if (i < 1) throw std::out_of_range("crystal index must be positive");
}

}  // namespace

std::optional<MultiIndex> crystal_e(const MultiIndex& alpha, int i) {
    check_index(i);
    Reduced r = reduce_signature(alpha, i);
    if (r.minus.empty()) return std::nullopt;
    MultiIndex out = alpha;
    out.entries[r.minus.front()] = i;
    return out;
}

std::optional<MultiIndex> crystal_f(const MultiIndex& alpha, int i) {
    check_index(i);
    Reduced r = reduce_signature(alpha, i);
    if (r.plus.empty()) return std::nullopt;
    MultiIndex out = alpha;
    out.entries[r.plus.back()] = i + 1;
    return out;
}

int crystal_eps(const MultiIndex& alpha, int i) {
    check_index(i);
    return static_cast<int>(reduce_signature(alpha, i).minus.size());
}

int crystal_phi(const MultiIndex& alpha, int i) {
    check_index(i);
    return static_cast<int>(reduce_signature(alpha, i).plus.size());
}

namespace {

std::optional<Tableau> tableau_crystal(const Tableau& A, int i, bool raise) {
    const bool row = A.orientation == Orientation::Row;
    MultiIndex w = row ? row_reading(A) : column_reading(A);
    auto r = raise ? crystal_e(w, i) : crystal_f(w, i);
    if (!r) return std::nullopt;
    return row ? row_tableau_from_reading(*r, A.shape()) : col_tableau_from_reading(*r, A.shape());
}

}  // namespace

std::optional<Tableau> crystal_e(const Tableau& A, int i) { return tableau_crystal(A, i, true); }
std::optional<Tableau> crystal_f(const Tableau& A, int i) { return tableau_crystal(A, i, false); }

// ---- orders ----

namespace {

void require_same_row_space(const Tableau& A, const Tableau& B) {
    if (A.orientation != Orientation::Row || B.orientation != Orientation::Row || A.shape() != B.shape())
        throw std::invalid_argument("row order compares row-shape tableaux of one shape");
}

}  // namespace

bool bruhat_leq_row(const Tableau& A, const Tableau& B) {
    require_same_row_space(A, B);
    const int n = std::max(A.max_entry(), B.max_entry());
    if (A.weight(n) != B.weight(n)) throw std::invalid_argument("row order compares tableaux of one weight");
    MarginMatrix a = to_matrix(A, n), b = to_matrix(B, n);
    std::vector<int> col_a(static_cast<std::size_t>(n), 0), col_b(static_cast<std::size_t>(n), 0);
    for (int s = 1; s <= a.rows; ++s) {
        int sa = 0, sb = 0;
        for (int t = 1; t <= n; ++t) {
            col_a[static_cast<std::size_t>(t - 1)] += a.at(s, t);
            col_b[static_cast<std::size_t>(t - 1)] += b.at(s, t);
            sa += col_a[static_cast<std::size_t>(t - 1)];
            sb += col_b[static_cast<std::size_t>(t - 1)];
            if (sa > sb) return false;
        }
    }
    return true;
}

bool bruhat_leq_row_by_cosets(const Tableau& A, const Tableau& B) {
    require_same_row_space(A, B);
    return bruhat_leq_opposite(to_double_coset(A), to_double_coset(B));
}

bool bruhat_leq_row_by_row_weights(const Tableau& A, const Tableau& B) {
    require_same_row_space(A, B);
    const int n = std::max(A.max_entry(), B.max_entry());
    Tableau a(Orientation::Row, {}), b(Orientation::Row, {});
    for (std::size_t i = 0; i < A.lines.size(); ++i) {
        a.lines.push_back(A.lines[i]);
        b.lines.push_back(B.lines[i]);
        if (!dominance_leq(a.weight(n), b.weight(n))) return false;
    }
    return true;
}

bool bruhat_leq_row_by_entry_shapes(const Tableau& A, const Tableau& B) {
    require_same_row_space(A, B);
    const int n = std::max(A.max_entry(), B.max_entry());
    for (int j = 1; j <= n; ++j) {
        std::vector<int> sa, sb;
        for (std::size_t i = 0; i < A.lines.size(); ++i) {
            sa.push_back(static_cast<int>(std::count_if(A.lines[i].begin(), A.lines[i].end(), [j](int x) { return x <= j; })));
            sb.push_back(static_cast<int>(std::count_if(B.lines[i].begin(), B.lines[i].end(), [j](int x) { return x <= j; })));
        }
        if (!dominance_leq(Weight(sa), Weight(sb))) return false;
    }
    return true;
}

bool bruhat_leq_col(const Tableau& A, const Tableau& B) {
    if (A.orientation != Orientation::Col || B.orientation != Orientation::Col)
        throw std::invalid_argument("column order compares column-shape tableaux");
    return bruhat_leq_row(B.mirror(), A.mirror());
}

Tableau transpose_tau(const Tableau& A, int n) { return from_matrix(to_matrix(A, n).transpose()); }

// ---- enumeration ----

namespace {

// Fill lines one at a time with sorted (weakly or strictly increasing) sequences
// drawn from the remaining letter counts.
void fill_lines(const Weight& shape, bool strict, std::vector<int>& left, std::size_t line,
                std::vector<std::vector<int>>& cur, std::vector<std::vector<std::vector<int>>>& out) {
    if (line == shape.parts.size()) {
        out.push_back(cur);
        return;
    }
    const int n = static_cast<int>(left.size());
    std::vector<int> seq;
    std::function<void(int, int)> rec = [&](int from, int need) {
        if (need == 0) {
            cur.push_back(seq);
            fill_lines(shape, strict, left, line + 1, cur, out);
            cur.pop_back();
            return;
        }
        for (int x = from; x <= n; ++x) {
            if (left[static_cast<std::size_t>(x - 1)] == 0) continue;
            --left[static_cast<std::size_t>(x - 1)];
            seq.push_back(x);
            rec(strict ? x + 1 : x, need - 1);
            seq.pop_back();
            ++left[static_cast<std::size_t>(x - 1)];
        }
    };
    rec(1, shape.parts[line]);
}

std::vector<Tableau> enumerate_lines(const Weight& shape, const Weight& nu, Orientation o) {
    if (shape.size() != nu.size()) throw std::invalid_argument("shape and weight sizes differ");
    check_degree(shape.size());
    std::vector<int> left = nu.parts;
    std::vector<std::vector<int>> cur;
    std::vector<std::vector<std::vector<int>>> raw;
    fill_lines(shape, o == Orientation::Col, left, 0, cur, raw);
    std::vector<std::pair<MultiIndex, Tableau>> keyed;
    for (auto& lines : raw) {
        Tableau t(o, std::move(lines));
        keyed.emplace_back(o == Orientation::Row ? row_reading(t) : column_reading(t), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Tableau> out;
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

}  // namespace

std::vector<Tableau> enumerate_row(const Weight& mu, const Weight& nu) { return enumerate_lines(mu, nu, Orientation::Row); }

std::vector<Tableau> enumerate_col(const Weight& mu, const Weight& nu) { return enumerate_lines(mu, nu, Orientation::Col); }

std::vector<Tableau> enumerate_dom(const Weight& lambda, const Weight& nu) {
    if (!lambda.is_partition()) throw std::invalid_argument("Dom needs a partition shape");
    std::vector<Tableau> out;
    for (auto& t : enumerate_row(lambda, nu))
        if (is_dom(t)) out.push_back(std::move(t));
    return out;
}

std::vector<Tableau> enumerate_std(const Weight& mu, const Weight& nu) {
    std::vector<Tableau> out;
    for (auto& t : enumerate_col(mu, nu))
        if (is_std(t)) out.push_back(std::move(t));
    return out;
}

// ---- line orbits ----

int rearrangement_distance(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("rearrangement of different lengths");
    // match equal letters in order, then count inversions of the matching
    std::vector<int> target(b.size());
    std::vector<bool> used(a.size(), false);
    for (std::size_t k = 0; k < b.size(); ++k) {
        std::size_t j = 0;
        while (j < a.size() && (used[j] || a[j] != b[k])) ++j;
        if (j == a.size()) throw std::invalid_argument("words are not rearrangements");
        used[j] = true;
        target[k] = static_cast<int>(j);
    }
    int inv = 0;
    for (std::size_t s = 0; s < target.size(); ++s)
        for (std::size_t t = s + 1; t < target.size(); ++t)
            if (target[s] > target[t]) ++inv;
    return inv;
}

std::vector<std::pair<Tableau, int>> line_orbit(const Tableau& A) {
    std::vector<std::vector<std::vector<int>>> per_line;
    for (const auto& l : A.lines) {
        std::vector<int> w = l;
        std::sort(w.begin(), w.end());
        std::vector<std::vector<int>> arr;
        do {
            arr.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
        per_line.push_back(std::move(arr));
    }
    std::vector<std::pair<Tableau, int>> out;
    Tableau cur(A.orientation, A.lines);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int dist) {
        if (i == per_line.size()) {
            out.emplace_back(cur, dist);
            return;
        }
        for (const auto& w : per_line[i]) {
            cur.lines[i] = w;
            rec(i + 1, dist + rearrangement_distance(A.lines[i], w));
        }
    };
    rec(0, 0);
    return out;
}

int line_distance(const Tableau& A, const Tableau& B) {
    if (A.lines.size() != B.lines.size()) throw std::invalid_argument("different shapes");
    int d = 0;
    for (std::size_t i = 0; i < A.lines.size(); ++i) d += rearrangement_distance(A.lines[i], B.lines[i]);
    return d;
}

}  // namespace canonica
