#include "canonica/qcoord.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace canonica {

namespace {

const LaurentPoly& q_minus_qinv() {
    static const LaurentPoly v = LaurentPoly::q(1) - LaurentPoly::q(-1);
    return v;
}

using Pair = std::pair<int, int>;

std::vector<Pair> pairs_of(const DoubleIndex& ab) {
    std::vector<Pair> p;
    for (int k = 0; k < ab.size(); ++k) p.emplace_back(ab.alpha[static_cast<std::size_t>(k)], ab.beta[static_cast<std::size_t>(k)]);
    return p;
}

DoubleIndex from_pairs(const std::vector<Pair>& p) {
    DoubleIndex ab;
    for (const auto& [a, b] : p) {
        ab.alpha.entries.push_back(a);
        ab.beta.entries.push_back(b);
    }
    return ab;
}

// position p with word[p], word[p+1] out of initial order, or -1
long find_disorder(const GeneratorWord& w, RewriteStrategy s) {
    auto bad = [&](std::size_t p) {
        const auto& [i, j] = w[p];
        const auto& [k, l] = w[p + 1];
        return i < k || (i == k && j > l);
    };
    const std::size_t len = w.size();
    if (len < 2) return -1;
    if (s == RewriteStrategy::Leftmost) {
        for (std::size_t p = 0; p + 1 < len; ++p)
            if (bad(p)) return static_cast<long>(p);
    } else {
        for (std::size_t p = len - 1; p-- > 0;)
            if (bad(p)) return static_cast<long>(p);
    }
    return -1;
}

void check_word(int m, int n, const GeneratorWord& w) {
    for (const auto& [i, j] : w)
        if (i < 1 || i > m || j < 1 || j > n)
            throw std::out_of_range("generator x[" + std::to_string(i) + "," + std::to_string(j) + "] outside " +
                                    std::to_string(m) + "x" + std::to_string(n));
}

std::string word_string(const DoubleIndex& ab) {
    std::string s;
    for (int k = 0; k < ab.size(); ++k) {
        if (k > 0) s += "*";
        s += "x[" + std::to_string(ab.alpha[static_cast<std::size_t>(k)]) + "," +
             std::to_string(ab.beta[static_cast<std::size_t>(k)]) + "]";
    }
    return s;
}

}  // namespace

// ---- DoubleIndex ----

bool DoubleIndex::is_initial() const {
    for (std::size_t k = 0; k + 1 < alpha.entries.size(); ++k) {
        if (alpha[k] < alpha[k + 1]) return false;
        if (alpha[k] == alpha[k + 1] && beta[k] > beta[k + 1]) return false;
    }
    return true;
}

bool DoubleIndex::is_terminal() const {
    for (std::size_t k = 0; k + 1 < beta.entries.size(); ++k) {
        if (beta[k] > beta[k + 1]) return false;
        if (beta[k] == beta[k + 1] && alpha[k] < alpha[k + 1]) return false;
    }
    return true;
}

DoubleIndex DoubleIndex::initial_form() const {
    auto p = pairs_of(*this);
    std::sort(p.begin(), p.end(), [](const Pair& x, const Pair& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    return from_pairs(p);
}

DoubleIndex DoubleIndex::terminal_form() const {
    auto p = pairs_of(*this);
    std::sort(p.begin(), p.end(), [](const Pair& x, const Pair& y) {
        return x.second != y.second ? x.second < y.second : x.first > y.first;
    });
    return from_pairs(p);
}

GeneratorWord DoubleIndex::word() const { return pairs_of(*this); }

DoubleIndex DoubleIndex::from_word(const GeneratorWord& w) { return from_pairs(w); }

// ---- NCPolynomial ----

NCPolynomial NCPolynomial::one(int m, int n) {
    NCPolynomial r(m, n);
    r.add(DoubleIndex{}, LaurentPoly(1));
    return r;
}

NCPolynomial NCPolynomial::generator(int m, int n, int i, int j) {
    check_word(m, n, {{i, j}});
    NCPolynomial r(m, n);
    r.add(DoubleIndex{MultiIndex{i}, MultiIndex{j}}, LaurentPoly(1));
    return r;
}

NCPolynomial NCPolynomial::monomial(int m, int n, const DoubleIndex& ab, const LaurentPoly& c) {
    check_word(m, n, ab.word());
    NCPolynomial r(m, n);
    r.add(ab, c);
    return r;
}

LaurentPoly NCPolynomial::coefficient(const DoubleIndex& ab) const {
    auto it = coeffs_.find(ab);
    return it == coeffs_.end() ? LaurentPoly() : it->second;
}

void NCPolynomial::add(const DoubleIndex& ab, const LaurentPoly& c) {
    if (!ab.is_initial()) throw std::invalid_argument("monomial index is not initial");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(ab, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    if (o.m_ != m_ || o.n_ != n_) throw std::invalid_argument("adding elements of different algebras");
    for (const auto& [ab, c] : o.coeffs_) add(ab, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    if (o.m_ != m_ || o.n_ != n_) throw std::invalid_argument("subtracting elements of different algebras");
    for (const auto& [ab, c] : o.coeffs_) add(ab, -c);
    return *this;
}

NCPolynomial operator*(const LaurentPoly& c, const NCPolynomial& a) {
    NCPolynomial r(a.m_, a.n_);
    for (const auto& [ab, e] : a.coeffs_) r.add(ab, c * e);
    return r;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) { return multiply(a, b); }

std::string NCPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [ab, c] : coeffs_) {
        bool negative = c.is_monomial() && c.terms()[0].coeff < Integer(0);
        LaurentPoly mag = negative ? -c : c;
        if (first) s += negative ? "-" : "";
        else s += negative ? " - " : " + ";
        first = false;
        std::string factors = word_string(ab);
        if (mag == LaurentPoly(1)) {
            s += factors.empty() ? "1" : factors;
            continue;
        }
        std::string cs = mag.to_string();
        if (!mag.is_monomial()) cs = "(" + cs + ")";
        s += factors.empty() ? cs : cs + "*" + factors;
    }
    return s;
}

// ---- rewriting ----

NCPolynomial normal_form(int m, int n, const GeneratorWord& word, const LaurentPoly& c, RewriteStrategy strategy) {
    check_word(m, n, word);
    NCPolynomial result(m, n);
    // Each step either swaps an alpha ascent, lowering the number of alpha inversions and
    // adding a correction with the same alpha sequence, or swaps a beta descent inside an
    // alpha run with alpha unchanged; so (alpha inversions, beta inversions) decreases.
    std::map<GeneratorWord, LaurentPoly> pending;
    if (!c.is_zero()) pending.emplace(word, c);
    auto push = [&](GeneratorWord w, const LaurentPoly& e) {
        auto [it, inserted] = pending.emplace(std::move(w), e);
        if (!inserted) {
            it->second += e;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        GeneratorWord w = std::move(node.key());
        LaurentPoly e = std::move(node.mapped());
        long p = find_disorder(w, strategy);
        if (p < 0) {
            result.add(DoubleIndex::from_word(w), e);
            continue;
        }
        const auto pu = static_cast<std::size_t>(p);
        const auto [i, j] = w[pu];
        const auto [k, l] = w[pu + 1];
        GeneratorWord swapped = w;
        std::swap(swapped[pu], swapped[pu + 1]);
        if (i < k) {
            if (j > l) {
                push(std::move(swapped), e);
            } else if (j < l) {
                GeneratorWord corr = w;
                corr[pu] = {k, j};
                corr[pu + 1] = {i, l};
                push(std::move(swapped), e);
                push(std::move(corr), e * q_minus_qinv());
            } else {
                push(std::move(swapped), e * LaurentPoly::q(1));
            }
        } else {
            // i == k, j > l
            push(std::move(swapped), e * LaurentPoly::q(-1));
        }
    }
    return result;
}

NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("multiplying elements of different algebras");
    NCPolynomial r(a.rows(), a.cols());
    for (const auto& [x, c] : a.coeffs()) {
        GeneratorWord wx = x.word();
        for (const auto& [y, e] : b.coeffs()) {
            GeneratorWord w = wx;
            GeneratorWord wy = y.word();
            w.insert(w.end(), wy.begin(), wy.end());
            r += normal_form(a.rows(), a.cols(), w, c * e);
        }
    }
    return r;
}

NCPolynomial bar_qcoord(const NCPolynomial& a) {
    NCPolynomial r(a.rows(), a.cols());
    for (const auto& [ab, c] : a.coeffs()) r += normal_form(a.rows(), a.cols(), ab.terminal_form().word(), c.bar());
    return r;
}

// ---- identification with the symmetric powers ----

PowerVector identify_with_powers(const NCPolynomial& a, const Weight& mu, const Weight& nu) {
    if (mu.length() != a.rows() || nu.length() != a.cols())
        throw std::invalid_argument("identify: weights do not match the matrix size");
    PowerVector v{PowerKind::Sym, mu, a.cols(), {}};
    for (const auto& [ab, c] : a.coeffs()) {
        if (ab.alpha.weight(a.rows()) != mu || ab.beta.weight(a.cols()) != nu)
            throw std::invalid_argument("identify: element is not homogeneous of the given degree");
        v.add(row_tableau_from_reading(ab.beta, mu), c);
    }
    return v;
}

NCPolynomial from_powers(const PowerVector& v) {
    if (v.kind != PowerKind::Sym) throw std::invalid_argument("from_powers: needs a symmetric power vector");
    const int m = v.mu.length();
    NCPolynomial r(m, v.n);
    for (const auto& [A, c] : v.coeffs) {
        DoubleIndex ab;
        ab.beta = row_reading(A);
        for (int i = m; i >= 1; --i)
            ab.alpha.entries.insert(ab.alpha.entries.end(), static_cast<std::size_t>(v.mu.parts[static_cast<std::size_t>(i - 1)]), i);
        r.add(ab, c);
    }
    return r;
}

NCPolynomial dual_canonical_q(int m, int n, const DoubleIndex& ab) {
    if (!ab.is_initial()) throw std::invalid_argument("dual_canonical_q: index is not initial");
    check_word(m, n, ab.word());
    Weight mu = ab.alpha.weight(m);
    Tableau A = row_tableau_from_reading(ab.beta, mu);
    return from_powers(lifted_basis(PowerKind::Sym, A, n));
}

std::map<DoubleIndex, LaurentPoly> expand_dual_canonical(const NCPolynomial& a) {
    std::map<DoubleIndex, LaurentPoly> out;
    NCPolynomial rest = a;
    // L_B is M_B plus terms with fewer beta inversions, so peel from the top
    while (!rest.is_zero()) {
        auto top = rest.coeffs().begin();
        for (auto it = rest.coeffs().begin(); it != rest.coeffs().end(); ++it)
            if (it->first.beta.inversions() > top->first.beta.inversions()) top = it;
        DoubleIndex ab = top->first;
        LaurentPoly c = top->second;
        out[ab] = c;
        rest -= c * dual_canonical_q(a.rows(), a.cols(), ab);
    }
    return out;
}

// ---- flag minors and transpose ----

NCPolynomial flag_minor(int m, int n, const MultiIndex& beta) {
    const int d = beta.size();
    for (int k = 0; k + 1 < d; ++k)
        if (beta[static_cast<std::size_t>(k)] >= beta[static_cast<std::size_t>(k + 1)])
            throw std::invalid_argument("flag minor needs a strictly increasing index");
    if (d > m) throw std::invalid_argument("flag minor has more rows than the matrix");
    NCPolynomial r(m, n);
    if (d == 0) return NCPolynomial::one(m, n);
    for (const auto& w : all_permutations(d)) {
        GeneratorWord word;
        for (int k = 1; k <= d; ++k) word.emplace_back(w(k), beta[static_cast<std::size_t>(k - 1)]);
        const int len = w.length();
        LaurentPoly c = len % 2 == 0 ? LaurentPoly::q(len) : -LaurentPoly::q(len);
        r += normal_form(m, n, word, c);
    }
    return r;
}

NCPolynomial transpose_tau(const NCPolynomial& a) {
    NCPolynomial r(a.cols(), a.rows());
    for (const auto& [ab, c] : a.coeffs()) {
        GeneratorWord w;
        for (int k = ab.size() - 1; k >= 0; --k)
            w.emplace_back(ab.beta[static_cast<std::size_t>(k)], ab.alpha[static_cast<std::size_t>(k)]);
        r += normal_form(a.cols(), a.rows(), w, c.bar());
    }
    return r;
}

// ---- two rows ----

bool two_row_admissible(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t t = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < t; ++i) {
        std::optional<int> best;
        for (std::size_t j = i; j < a.size(); ++j)
            for (std::size_t k = i; k < b.size(); ++k)
                if (a[j] > b[k] && (!best || a[j] - b[k] < *best)) best = a[j] - b[k];
        if (best && (a[i] <= b[i] || a[i] - b[i] != *best)) return false;
    }
    return true;
}

std::pair<std::vector<int>, std::vector<int>> two_row_order(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t t = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < t; ++i) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t j = i; j < a.size(); ++j)
            for (std::size_t k = i; k < b.size(); ++k)
                if (a[j] > b[k] && (!best || a[j] - b[k] < a[best->first] - b[best->second])) best = std::make_pair(j, k);
        if (!best) break;
        std::swap(a[i], a[best->first]);
        std::swap(b[i], b[best->second]);
    }
    return {a, b};
}

NCPolynomial two_row_closed_form(const std::vector<int>& a, const std::vector<int>& b, int n) {
    const int m = 2;
    const std::size_t t = std::min(a.size(), b.size());
    NCPolynomial r = NCPolynomial::one(m, n);
    for (std::size_t i = 0; i < t; ++i) {
        if (a[i] <= b[i]) continue;
        NCPolynomial minor = normal_form(m, n, {{2, a[i]}, {1, b[i]}});
        minor -= normal_form(m, n, {{2, b[i]}, {1, a[i]}}, LaurentPoly::q(-1));
        r = multiply(r, minor);
    }
    GeneratorWord rest;
    for (std::size_t i = 0; i < t; ++i)
        if (a[i] <= b[i]) {
            rest.emplace_back(2, a[i]);
            rest.emplace_back(1, b[i]);
        }
    for (std::size_t j = t; j < a.size(); ++j) rest.emplace_back(2, a[j]);
    for (std::size_t k = t; k < b.size(); ++k) rest.emplace_back(1, b[k]);
    return multiply(r, normal_form(m, n, rest));
}

TwoRowComparison two_row_dual_canonical(const std::vector<int>& a, const std::vector<int>& b, int n) {
    TwoRowComparison out;
    out.admissible = two_row_admissible(a, b);
    out.closed = two_row_closed_form(a, b, n);
    DoubleIndex ab;
    std::vector<int> sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    ab.alpha.entries.assign(sa.size(), 2);
    ab.alpha.entries.insert(ab.alpha.entries.end(), sb.size(), 1);
    ab.beta.entries = sa;
    ab.beta.entries.insert(ab.beta.entries.end(), sb.begin(), sb.end());
    out.lifted = dual_canonical_q(2, n, ab);
    LaurentPoly lead = out.closed.coefficient(ab);
    if (lead.is_monomial() && lead.terms()[0].coeff == Integer(1)) {
        int k = lead.terms()[0].exp;
        if (out.closed == LaurentPoly::q(k) * out.lifted) out.q_power = k;
    }
    return out;
}

// ---- parsing ----

namespace {

struct ExprParser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression: " + what + " at position " + std::to_string(pos));
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    int integer() {
        skip();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        int v = std::stoi(std::string(s.substr(start, pos - start)));
        return neg ? -v : v;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    // factor: integer | q[^k] | x[i,j] | (laurent)
    bool factor(LaurentPoly& coeff, GeneratorWord& word) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= LaurentPoly(integer());
        } else if (c == 'q') {
            ++pos;
            int e = 1;
            if (peek() == '^') {
                ++pos;
                e = integer();
            }
            coeff *= LaurentPoly::q(e);
        } else if (c == 'x') {
            ++pos;
            expect('[');
            int i = integer();
            expect(',');
            int j = integer();
            expect(']');
            word.emplace_back(i, j);
        } else if (c == '(') {
            std::size_t close = s.find(')', pos);
            if (close == std::string_view::npos) fail("unbalanced parenthesis");
            coeff *= LaurentPoly::parse(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else {
            return false;
        }
        return true;
    }
};

}  // namespace

NCPolynomial parse_qcoord(std::string_view text, int m, int n) {
    ExprParser p{text};
    std::vector<std::pair<GeneratorWord, LaurentPoly>> terms;
    if (p.at_end()) throw std::invalid_argument("expression: empty");
    bool first = true;
    while (!p.at_end()) {
        LaurentPoly coeff(1);
        char c = p.peek();
        if (c == '+' || c == '-') {
            ++p.pos;
            if (c == '-') coeff = LaurentPoly(-1);
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        first = false;
        GeneratorWord word;
        if (!p.factor(coeff, word)) p.fail("expected a factor");
        while (!p.at_end()) {
            if (p.peek() == '*') {
                ++p.pos;
                if (!p.factor(coeff, word)) p.fail("expected a factor after '*'");
            } else if (!p.factor(coeff, word)) {
                break;
            }
        }
        terms.emplace_back(std::move(word), std::move(coeff));
    }
    int mm = m, nn = n;
    for (const auto& [w, c] : terms)
        for (const auto& [i, j] : w) {
            if (m == 0) mm = std::max(mm, i);
            if (n == 0) nn = std::max(nn, j);
        }
    mm = std::max(mm, 1);
    nn = std::max(nn, 1);
    NCPolynomial r(mm, nn);
    for (const auto& [w, c] : terms) r += normal_form(mm, nn, w, c);
    return r;
}

}  // namespace canonica
