#include "canonica/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "canonica/hecke.hpp"
#include "canonica/irreps.hpp"
#include "canonica/powers.hpp"
#include "canonica/qcoord.hpp"
#include "canonica/tableau.hpp"
#include "canonica/tensor.hpp"

namespace canonica {

void SuiteReport::check(bool cond, const std::string& what) {
    ++checked;
    if (!cond && failures.size() < 20) failures.push_back(what);
    else if (!cond) failures.back() = "... (more failures)";
}

std::vector<Weight> weak_compositions(int d, int n) {
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

std::vector<Weight> compositions(int d, int max_part) {
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

namespace {

std::string block_name(const Weight& mu, const Weight& nu) { return "mu=" + mu.to_string() + " nu=" + nu.to_string(); }

// (mu, nu): mu with parts <= max_part, nu of length 1..max_n
template <class F>
void for_blocks(int max_d, int max_n, int max_part, F&& f) {
    for (int d = 1; d <= max_d; ++d)
        for (int n = 1; n <= max_n; ++n)
            for (const auto& mu : compositions(d, max_part))
                for (const auto& nu : weak_compositions(d, n)) f(mu, nu);
}

const PowerKind kKinds[] = {PowerKind::Sym, PowerKind::SymTilde, PowerKind::Ext, PowerKind::ExtTilde};

std::vector<DoubleIndex> initial_indexes(int m, int n, int d) {
    std::vector<DoubleIndex> out;
    std::vector<int> pick(static_cast<std::size_t>(d), 0);
    const int letters = m * n;
    while (true) {
        GeneratorWord w;
        for (int p : pick) w.emplace_back(p / n + 1, p % n + 1);
        DoubleIndex ab = DoubleIndex::from_word(w);
        if (ab.is_initial()) out.push_back(ab);
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == letters) pick[k++] = 0;
        if (k == pick.size()) break;
    }
    return out;
}

// The filling of a row tableau cut into columns.
Tableau columns_of(const Tableau& A) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : A.lines)
        for (std::size_t h = 0; h < row.size(); ++h) {
            if (cols.size() <= h) cols.emplace_back();
            cols[h].push_back(row[h]);
        }
    return {Orientation::Col, cols};
}

}  // namespace

SuiteReport verify_routes(const VerifyOptions& o) {
    SuiteReport r{"routes", 0, {}, {}};
    for_blocks(o.max_d, o.max_n, 4, [&](const Weight& mu, const Weight& nu) {
        for (PowerKind kind : kKinds)
            r.check(transition(kind, mu, nu, o.exec) == transition_kl(kind, mu, nu, o.exec),
                    family_name(kind) + " " + block_name(mu, nu));
    });
    return r;
}

SuiteReport verify_inversion(const VerifyOptions& o) {
    SuiteReport r{"inversion", 0, {}, {}};
    for_blocks(o.max_d, o.max_n, 4, [&](const Weight& mu, const Weight& nu) {
        IdentityReport c = identity_checks(mu, nu);
        r.checked += c.checked;
        for (const auto& v : c.violations) r.check(false, v + " " + block_name(mu, nu));
    });
    // sum_g l_{a,g} bar(l*_{b,g}) = delta on T^d(V_n)
    for (int d = 1; d <= std::min(o.max_d, 4); ++d)
        for (int n = 1; n <= o.max_n; ++n)
            for (const auto& nu : weak_compositions(d, n)) {
                auto ws = WeightSpace::get(nu);
                const auto& words = ws->words();
                std::vector<TensorVector> dual, can;
                for (const auto& g : words) {
                    dual.push_back(dual_canonical(g, n));
                    can.push_back(canonical(g, n));
                }
                for (const auto& a : words)
                    for (const auto& b : words) {
                        LaurentPoly s;
                        for (std::size_t g = 0; g < words.size(); ++g)
                            s += dual[g].coefficient(a) * can[g].coefficient(b).bar();
                        r.check(s == (a == b ? LaurentPoly(1) : LaurentPoly()),
                                "tensor inversion at " + a.to_string() + ", " + b.to_string());
                    }
            }
    return r;
}

SuiteReport verify_qbar(const VerifyOptions& o) {
    SuiteReport r{"qbar", 0, {}, {}};
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= o.max_d; ++d)
                for (const auto& ab : initial_indexes(m, n, d)) {
                    const std::string name = "alpha=" + ab.alpha.to_string() + " beta=" + ab.beta.to_string();
                    NCPolynomial mono = NCPolynomial::monomial(m, n, ab);
                    NCPolynomial b = bar_qcoord(mono);
                    r.check(bar_qcoord(b) == mono, "bar is not an involution at " + name);
                    // the bar of the power module, carried over
                    const Weight mu = ab.alpha.weight(m), nu = ab.beta.weight(n);
                    r.check(identify_with_powers(normal_form(m, n, ab.terminal_form().word()), mu, nu) ==
                                bar_power(identify_with_powers(mono, mu, nu)),
                            "bar(M) is not the terminal monomial at " + name);
                    // bar(xy) = q^{(mu,mu')-(nu,nu')} bar(y) bar(x), one generator at a time
                    int e = 0;
                    for (int k = 0; k < d; ++k)
                        for (int i = k + 1; i < d; ++i) {
                            e += ab.alpha[static_cast<std::size_t>(i)] == ab.alpha[static_cast<std::size_t>(k)];
                            e -= ab.beta[static_cast<std::size_t>(i)] == ab.beta[static_cast<std::size_t>(k)];
                        }
                    GeneratorWord w = ab.word();
                    std::reverse(w.begin(), w.end());
                    r.check(b == normal_form(m, n, w, LaurentPoly::q(e)), "reversal rule fails at " + name);
                }
    return r;
}

SuiteReport verify_main1(const VerifyOptions& o) {
    SuiteReport r{"main1", 0, {}, {}};
    auto run = [&](const Weight& mu, const Weight& nu) {
        IrrepReport rep = main1_check(mu, nu, o.exec);
        r.checked += rep.checked;
        for (const auto& v : rep.violations) r.check(false, v + " " + block_name(mu, nu));
    };
    for (int d = 1; d <= o.max_d; ++d)
        for (int n = 1; n <= o.max_n; ++n)
            for (const auto& mu : compositions(d, n))
                for (const auto& nu : weak_compositions(d, n)) run(mu, nu);
    if (o.max_d >= 8) run({3, 2, 2, 1}, {2, 2, 2, 1, 1});
    return r;
}

SuiteReport verify_main2(const VerifyOptions& o) {
    SuiteReport r{"main2", 0, {}, {}};
    auto run = [&](const Weight& mu, const Weight& nu) {
        IrrepReport rep = main2_check(mu, nu, o.exec);
        r.checked += rep.checked;
        for (const auto& v : rep.violations) r.check(false, v + " " + block_name(mu, nu));
    };
    for (int d = 1; d <= o.max_d; ++d)
        for (int n = 1; n <= o.max_n; ++n)
            for (const auto& mu : compositions(d, n))
                for (const auto& nu : weak_compositions(d, n)) run(mu, nu);
    if (o.max_d >= 8) run({3, 2, 2, 1}, {2, 2, 2, 1, 1});
    return r;
}

SuiteReport verify_positivity(const VerifyOptions& o) {
    SuiteReport r{"positivity", 0, {}, {}};
    for_blocks(o.max_d, o.max_n, 4, [&](const Weight& mu, const Weight& nu) {
        TransitionMatrix t = transition(PowerKind::ExtTilde, mu, nu, o.exec);
        for (std::size_t a = 0; a < t.labels.size(); ++a)
            for (std::size_t b = 0; b < t.labels.size(); ++b)
                r.check(t.entries[a][b].has_nonnegative_coefficients(),
                        "k*(" + t.labels[a].to_string() + ", " + t.labels[b].to_string() + ") " + block_name(mu, nu));
    });
    // structure constants of products of dual canonical elements
    std::mt19937_64 rng(o.seed);
    const int m = 2, n = 3;
    std::vector<DoubleIndex> pool;
    for (int d = 1; d <= 2; ++d)
        for (const auto& ab : initial_indexes(m, n, d)) pool.push_back(ab);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const int samples = std::max(1, o.samples / 10);
    for (int s = 0; s < samples; ++s) {
        const DoubleIndex& x = pool[pick(rng)];
        const DoubleIndex& y = pool[pick(rng)];
        NCPolynomial prod = multiply(dual_canonical_q(m, n, x), dual_canonical_q(m, n, y));
        for (const auto& [z, c] : expand_dual_canonical(prod))
            r.check(c.has_nonnegative_coefficients(), "structure constant of L" + x.beta.to_string() + " L" +
                                                          y.beta.to_string() + " at " + z.beta.to_string());
    }
    return r;
}

SuiteReport verify_pod(const VerifyOptions& o) {
    SuiteReport r{"pod", 0, {}, {}};
    std::mt19937_64 rng(o.seed);
    std::map<int, int> powers;
    for (int s = 0; s < o.samples; ++s) {
        std::uniform_int_distribution<int> nn(1, 6), dd(1, 8);
        const int n = nn(rng), d = dd(rng);
        std::uniform_int_distribution<int> rr(0, d), letter(1, n);
        const int top = rr(rng);
        std::vector<int> a, b;
        for (int k = 0; k < top; ++k) a.push_back(letter(rng));
        for (int k = top; k < d; ++k) b.push_back(letter(rng));
        auto [oa, ob] = two_row_order(a, b);
        auto cmp = two_row_dual_canonical(oa, ob, n);
        std::string name = "n=" + std::to_string(n) + " a=" + MultiIndex{oa}.to_string() + " b=" + MultiIndex{ob}.to_string();
        r.check(cmp.admissible, "ordering is not admissible: " + name);
        r.check(cmp.q_power.has_value(), "closed product is not a q-power multiple: " + name);
        if (cmp.q_power) ++powers[*cmp.q_power];
    }
    std::string hist = "closed = q^k lifted, k counts:";
    for (const auto& [k, c] : powers) hist += " " + std::to_string(k) + ":" + std::to_string(c);
    r.notes.push_back(hist);
    return r;
}

SuiteReport verify_crystal(const VerifyOptions& o) {
    SuiteReport r{"crystal", 0, {}, {}};
    for (int d = 1; d <= o.max_d; ++d)
        for (int n = 1; n <= o.max_n; ++n)
            for (const auto& mu : compositions(d, n)) {
                const Weight lambda = mu.conjugate().trimmed();
                std::set<Tableau> all_std;
                for (const auto& nu : weak_compositions(d, n)) {
                    auto s = enumerate_std(mu, nu);
                    auto dom = enumerate_dom(lambda, nu);
                    std::set<Tableau> image;
                    for (const auto& A : s) image.insert(rectify(A));
                    r.check(image == std::set<Tableau>(dom.begin(), dom.end()) && image.size() == s.size(),
                            "R is not a bijection onto Dom for " + block_name(mu, nu));
                    all_std.insert(s.begin(), s.end());
                }
                for (const auto& A : all_std)
                    for (int i = 1; i < n; ++i) {
                        const std::string name = A.to_string() + " i=" + std::to_string(i);
                        auto fa = crystal_f(A, i);
                        auto fr = crystal_f(rectify(A), i);
                        r.check(fa.has_value() == fr.has_value(), "f defined on one side only: " + name);
                        if (fa && fr) {
                            r.check(rectify(*fa) == *fr, "R does not commute with f: " + name);
                            r.check(all_std.count(*fa) == 1, "f leaves Std: " + name);
                        }
                        auto ea = crystal_e(A, i);
                        auto er = crystal_e(rectify(A), i);
                        r.check(ea.has_value() == er.has_value(), "e defined on one side only: " + name);
                        if (ea && er) r.check(rectify(*ea) == *er, "R does not commute with e: " + name);
                        if (fa) r.check(crystal_e(*fa, i) == A, "e f != id: " + name);
                    }
            }
    return r;
}

SuiteReport verify_orders(const VerifyOptions& o) {
    SuiteReport r{"orders", 0, {}, {}};
    for_blocks(o.max_d, o.max_n, 4, [&](const Weight& mu, const Weight& nu) {
        auto rows = enumerate_row(mu, nu);
        for (const auto& X : rows)
            for (const auto& Y : rows) {
                bool v = bruhat_leq_row(X, Y);
                r.check(v == bruhat_leq_row_by_cosets(X, Y) && v == bruhat_leq_row_by_row_weights(X, Y) &&
                            v == bruhat_leq_row_by_entry_shapes(X, Y),
                        "order criteria disagree at " + X.to_string() + ", " + Y.to_string());
            }
        if (!mu.is_partition()) return;
        auto dom = enumerate_dom(mu, nu);
        for (const auto& X : dom)
            for (const auto& Y : dom)
                r.check(bruhat_leq_row(X, Y) == bruhat_leq_col(columns_of(X), columns_of(Y)),
                        "row and column orders disagree at " + X.to_string() + ", " + Y.to_string());
    });
    return r;
}

SuiteReport verify_kl(const VerifyOptions&) {
    SuiteReport r{"kl", 0, {}, {}};
    const LaurentPoly one(1), one_t = LaurentPoly::parse("1+t", 't');
    for (const auto& x : all_permutations(3))
        for (const auto& y : all_permutations(3)) {
            LaurentPoly want = bruhat_leq_standard(x, y) ? one : LaurentPoly();
            r.check(kl_polynomial_regular(x, y, false) == want && kl_polynomial_regular(x, y, true) == want,
                    "P in S_3 at " + x.to_string() + ", " + y.to_string());
        }
    std::set<std::string> distinct;
    std::vector<std::string> pairs;
    for (const auto& x : all_permutations(4))
        for (const auto& y : all_permutations(4)) {
            LaurentPoly p = kl_polynomial_regular(x, y, false);
            r.check(p == kl_polynomial_regular(x, y, true), "linear extensions disagree at " + x.to_string() + ", " + y.to_string());
            r.check(p == kl_polynomial(x, y), "parabolic route disagrees at " + x.to_string() + ", " + y.to_string());
            if (!p.is_zero() && p != one) {
                distinct.insert(p.to_string('t'));
                pairs.push_back("(" + x.to_string() + " | " + y.to_string() + ")");
            }
        }
    r.check(distinct.size() == 1 && *distinct.begin() == one_t.to_string('t'), "S_4 nontrivial values are not exactly {1+t}");
    std::string list;
    for (const auto& p : pairs) list += " " + p;
    r.notes.push_back("S_4: one distinct nontrivial polynomial " + one_t.to_string('t') + ", attained at " + std::to_string(pairs.size()) +
                      " pairs (x | y):" + list);
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"routes", "inversion", "qbar",    "main1",  "main2",
                                                "positivity", "pod",   "crystal", "orders", "kl"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
    if (name == "routes") return verify_routes(o);
    if (name == "inversion") return verify_inversion(o);
    if (name == "qbar") return verify_qbar(o);
    if (name == "main1") return verify_main1(o);
    if (name == "main2") return verify_main2(o);
    if (name == "positivity") return verify_positivity(o);
    if (name == "pod") return verify_pod(o);
    if (name == "crystal") return verify_crystal(o);
    if (name == "orders") return verify_orders(o);
    if (name == "kl") return verify_kl(o);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace canonica
