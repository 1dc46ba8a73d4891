#include "canonica/symgroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

namespace canonica {

namespace {

std::atomic<int> g_degree_limit{10};

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    std::string cur;
    bool any = false;
    auto flush = [&]() {
        std::string t;
        for (char c : cur)
            if (c != ' ' && c != '\t') t += c;
        if (t.empty()) throw std::invalid_argument("empty entry in list: " + std::string(text));
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("bad integer: " + t);
        out.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        any = true;
        if (c == sep) flush();
        else cur += c;
    }
    if (any) flush();
    return out;
}

template <class It>
std::string join(It b, It e, const char* sep) {
    std::string s;
    for (It it = b; it != e; ++it) {
        if (it != b) s += sep;
        s += std::to_string(*it);
    }
    return s;
}

std::size_t hash_ints(const std::vector<int>& v) {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

int degree_limit() { return g_degree_limit.load(); }
void set_degree_limit(int d) { g_degree_limit.store(d); }
void check_degree(int d) {
    if (d > degree_limit())
        throw SizeLimitError("degree " + std::to_string(d) + " exceeds the configured limit " +
                             std::to_string(degree_limit()));
}

// ---- Weight ----

int Weight::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Weight::is_partition() const {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return false;
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 0; });
}

Weight Weight::conjugate() const {
    int top = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    std::vector<int> c(static_cast<std::size_t>(top), 0);
    for (int p : parts)
        for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
    return Weight(c);
}

Weight Weight::trimmed() const {
    std::vector<int> p = parts;
    while (!p.empty() && p.back() == 0) p.pop_back();
    return Weight(p);
}

std::vector<int> Weight::block_starts() const {
    std::vector<int> s;
    int pos = 1;
    for (int p : parts) {
        s.push_back(pos);
        pos += p;
    }
    return s;
}

std::string Weight::to_string() const { return join(parts.begin(), parts.end(), ","); }

Weight Weight::parse(std::string_view text) {
    Weight w(parse_int_list(text, ','));
    for (int p : w.parts)
        if (p < 0) throw std::invalid_argument("negative part in weight: " + std::string(text));
    return w;
}

bool dominance_leq(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) return false;
    std::size_t n = std::max(a.parts.size(), b.parts.size());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

// ---- MultiIndex ----

Weight MultiIndex::weight(int n) const {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (int a : entries) {
        if (a < 1 || a > n) throw std::out_of_range("letter outside alphabet");
        ++w[static_cast<std::size_t>(a - 1)];
    }
    return Weight(w);
}

int MultiIndex::max_letter() const {
    return entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
}

MultiIndex MultiIndex::reversed() const { return MultiIndex(std::vector<int>(entries.rbegin(), entries.rend())); }

MultiIndex MultiIndex::sorted() const {
    MultiIndex r = *this;
    std::sort(r.entries.begin(), r.entries.end());
    return r;
}

int MultiIndex::inversions() const {
    int inv = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i] > entries[j]) ++inv;
    return inv;
}

std::string MultiIndex::to_string() const { return join(entries.begin(), entries.end(), ","); }

MultiIndex MultiIndex::parse(std::string_view text) {
    MultiIndex a(parse_int_list(text, ','));
    for (int x : a.entries)
        if (x < 1) throw std::invalid_argument("multi-index letters are positive: " + std::string(text));
    return a;
}

std::size_t MultiIndexHash::operator()(const MultiIndex& a) const { return hash_ints(a.entries); }

// ---- Permutation ----

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

Permutation Permutation::longest(int d) {
    Permutation p = identity(d);
    std::reverse(p.img_.begin(), p.img_.end());
    return p;
}

Permutation Permutation::simple(int d, int i) {
    if (i < 1 || i >= d) throw std::out_of_range("simple transposition index");
    Permutation p = identity(d);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::from_word(int d, const std::vector<int>& word) {
    Permutation p = identity(d);
    for (int i : word) p = p.times_simple_right(i);
    return p;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.assign(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
    return p;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch in product");
    Permutation p;
    p.img_.resize(y.img_.size());
    for (std::size_t i = 0; i < y.img_.size(); ++i) p.img_[i] = x.img_[static_cast<std::size_t>(y.img_[i] - 1)];
    return p;
}

Permutation Permutation::times_simple_right(int i) const {
    if (i < 1 || i >= degree()) throw std::out_of_range("simple transposition index");
    Permutation p = *this;
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::times_simple_left(int i) const {
    if (i < 1 || i >= degree()) throw std::out_of_range("simple transposition index");
    Permutation p = *this;
    for (int& v : p.img_) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return p;
}

bool Permutation::has_left_descent(int i) const {
    // s_i x < x iff i+1 appears before i in one-line notation
    for (int v : img_) {
        if (v == i) return false;
        if (v == i + 1) return true;
    }
    return false;
}

std::vector<int> Permutation::reduced_word(bool largest_first) const {
    std::vector<int> stripped;
    Permutation cur = *this;
    const int d = degree();
    while (true) {
        int found = 0;
        if (largest_first) {
            for (int i = d - 1; i >= 1 && !found; --i)
                if (cur.has_right_descent(i)) found = i;
        } else {
            for (int i = 1; i < d && !found; ++i)
                if (cur.has_right_descent(i)) found = i;
        }
        if (!found) break;
        stripped.push_back(found);
        cur = cur.times_simple_right(found);
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

std::string Permutation::to_string() const { return join(img_.begin(), img_.end(), " "); }

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> v;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        v.push_back(std::stoi(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument("bad permutation entry: " + tok);
    }
    return Permutation(v);
}

std::size_t PermutationHash::operator()(const Permutation& x) const { return hash_ints(x.one_line()); }

MultiIndex act(const MultiIndex& alpha, const Permutation& x) {
    if (alpha.size() != x.degree()) throw std::invalid_argument("degree mismatch in right action");
    MultiIndex r;
    r.entries.resize(alpha.entries.size());
    for (int i = 1; i <= x.degree(); ++i) r.entries[static_cast<std::size_t>(i - 1)] = alpha[static_cast<std::size_t>(x(i) - 1)];
    return r;
}

int length(const Permutation& x) { return x.length(); }

Permutation longest_element(int d) { return Permutation::longest(d); }

Permutation longest_parabolic(const Weight& lambda) {
    std::vector<int> v;
    int pos = 0;
    for (int p : lambda.parts) {
        for (int k = p; k >= 1; --k) v.push_back(pos + k);
        pos += p;
    }
    return Permutation(v);
}

bool bruhat_leq_standard(const Permutation& x, const Permutation& y) {
    const int d = x.degree();
    if (y.degree() != d) throw std::invalid_argument("degree mismatch in Bruhat comparison");
    // rank criterion: #{a <= i : x(a) >= k} <= #{a <= i : y(a) >= k}
    for (int k = 2; k <= d; ++k) {
        int cx = 0, cy = 0;
        for (int i = 1; i <= d; ++i) {
            if (x(i) >= k) ++cx;
            if (y(i) >= k) ++cy;
            if (cx > cy) return false;
        }
    }
    return true;
}

bool bruhat_leq_opposite(const Permutation& x, const Permutation& y) { return bruhat_leq_standard(y, x); }

std::vector<Permutation> all_permutations(int d) {
    check_degree(d);
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(d));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> parabolic_generators(const Weight& lambda) {
    std::vector<int> gens;
    int pos = 0;
    for (int p : lambda.parts) {
        for (int k = 1; k < p; ++k) gens.push_back(pos + k);
        pos += p;
    }
    return gens;
}

namespace {

// block label of each position 1..d
std::vector<int> block_labels(const Weight& lambda) {
    std::vector<int> lab;
    for (std::size_t b = 0; b < lambda.parts.size(); ++b)
        for (int k = 0; k < lambda.parts[b]; ++k) lab.push_back(static_cast<int>(b) + 1);
    return lab;
}

}  // namespace

bool in_parabolic(const Permutation& x, const Weight& lambda) {
    auto lab = block_labels(lambda);
    for (int i = 1; i <= x.degree(); ++i)
        if (lab[static_cast<std::size_t>(i - 1)] != lab[static_cast<std::size_t>(x(i) - 1)]) return false;
    return true;
}

bool is_min_coset_rep(const Permutation& x, const Weight& lambda) {
    for (int i : parabolic_generators(lambda))
        if (x.has_left_descent(i)) return false;
    return true;
}

std::vector<Permutation> min_coset_reps(const Weight& lambda) {
    const int d = lambda.size();
    check_degree(d);
    // D_lambda is in bijection with the rearrangements of the sorted block word.
    MultiIndex base(block_labels(lambda));
    std::vector<Permutation> out;
    std::vector<int> w = base.entries;
    do {
        out.push_back(index_to_coset(MultiIndex(w)));
    } while (std::next_permutation(w.begin(), w.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Permutation, Permutation> parabolic_factor(const Permutation& y, const Weight& lambda) {
    MultiIndex base(block_labels(lambda));
    Permutation x = index_to_coset(act(base, y));
    Permutation u = y * x.inverse();
    return {u, x};
}

Permutation index_to_coset(const MultiIndex& alpha) {
    const int d = alpha.size();
    std::vector<int> img(static_cast<std::size_t>(d));
    // x(i) = position of alpha_i in the sorted word, equal letters kept in order
    for (int i = 0; i < d; ++i) {
        int pos = 1;
        for (int j = 0; j < d; ++j)
            if (alpha[static_cast<std::size_t>(j)] < alpha[static_cast<std::size_t>(i)] ||
                (alpha[static_cast<std::size_t>(j)] == alpha[static_cast<std::size_t>(i)] && j < i))
                ++pos;
        img[static_cast<std::size_t>(i)] = pos;
    }
    return Permutation(img);
}

namespace {

void enumerate_margin_rows(const Weight& mu, std::vector<int>& colleft, std::size_t row,
                           std::vector<std::vector<int>>& cur, std::vector<std::vector<std::vector<int>>>& out) {
    const std::size_t n = colleft.size();
    if (row == mu.parts.size()) {
        if (std::all_of(colleft.begin(), colleft.end(), [](int c) { return c == 0; })) out.push_back(cur);
        return;
    }
    std::vector<int> r(n, 0);
    // distribute mu[row] over columns, bounded by what each column still needs
    std::function<void(std::size_t, int)> fill = [&](std::size_t j, int left) {
        if (j == n) {
            if (left == 0) {
                cur.push_back(r);
                enumerate_margin_rows(mu, colleft, row + 1, cur, out);
                cur.pop_back();
            }
            return;
        }
        for (int v = std::min(left, colleft[j]); v >= 0; --v) {
            r[j] = v;
            colleft[j] -= v;
            fill(j + 1, left - v);
            colleft[j] += v;
        }
        r[j] = 0;
    };
    fill(0, mu.parts[row]);
}

}  // namespace

std::vector<Permutation> max_double_coset_reps(const Weight& nu, const Weight& mu) {
    const int d = mu.size();
    if (nu.size() != d) throw std::invalid_argument("max_double_coset_reps: sizes differ");
    check_degree(d);
    std::vector<int> colleft = nu.parts;
    std::vector<std::vector<int>> cur;
    std::vector<std::vector<std::vector<int>>> mats;
    enumerate_margin_rows(mu, colleft, 0, cur, mats);
    const Permutation wd = Permutation::longest(d);
    std::vector<Permutation> out;
    for (const auto& m : mats) {
        // row reading of the row-standard tableau with this matrix: top row first
        MultiIndex rho;
        for (std::size_t i = m.size(); i-- > 0;)
            for (std::size_t j = 0; j < m[i].size(); ++j)
                for (int c = 0; c < m[i][j]; ++c) rho.entries.push_back(static_cast<int>(j) + 1);
        out.push_back(index_to_coset(rho) * wd);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> double_coset_members(const Weight& nu, const Weight& mu, const Permutation& x,
                                              bool restrict_to_min_reps) {
    check_degree(x.degree());
    auto left = parabolic_generators(nu);
    auto right = parabolic_generators(mu);
    std::set<Permutation> seen{x};
    std::vector<Permutation> stack{x};
    while (!stack.empty()) {
        Permutation y = stack.back();
        stack.pop_back();
        for (int i : left) {
            Permutation z = y.times_simple_left(i);
            if (seen.insert(z).second) stack.push_back(z);
        }
        for (int j : right) {
            Permutation z = y.times_simple_right(j);
            if (seen.insert(z).second) stack.push_back(z);
        }
    }
    std::vector<Permutation> out;
    for (const auto& y : seen)
        if (!restrict_to_min_reps || is_min_coset_rep(y, nu)) out.push_back(y);
    return out;
}

}  // namespace canonica
