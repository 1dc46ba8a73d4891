#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "canonica/tensor.hpp"

using namespace canonica;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
MultiIndex W(const char* s) { return MultiIndex::parse(s); }

TensorVector basis_m(const char* s, int n) { return TensorVector::basis_vector(W(s), n, TensorBasis::M); }

TensorVector random_vector(std::mt19937_64& rng, int n, int d, TensorBasis b, int terms = 4) {
    auto words = oracle::all_words(n, d);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
    TensorVector v(n, d, b);
    for (int k = 0; k < terms; ++k) v.add(words[pick(rng)], LaurentPoly::monomial(e(rng), Integer(c(rng))));
    return v;
}

HeckeElement random_hecke(std::mt19937_64& rng, int d) {
    auto perms = all_permutations(d);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> e(-1, 1), c(-2, 2);
    HeckeElement h(d);
    for (int k = 0; k < 3; ++k) h.add(perms[pick(rng)], LaurentPoly::monomial(e(rng), Integer(c(rng))));
    return h;
}

const LaurentPoly qq = LaurentPoly::parse("q-q^-1");

}  // namespace

TEST_CASE("Hecke action on tensor space") {
    CHECK(hecke_act(basis_m("2,2", 2), 1) == LaurentPoly::q(-1) * basis_m("2,2", 2));
    CHECK(hecke_act(basis_m("1,2", 2), 1) == basis_m("2,1", 2));
    TensorVector expect = basis_m("1,2", 2);
    expect -= qq * basis_m("2,1", 2);
    CHECK(hecke_act(basis_m("2,1", 2), 1) == expect);
    std::mt19937_64 rng(61);
    for (int k = 0; k < 100; ++k) {
        TensorVector v = random_vector(rng, 3, 4, TensorBasis::M);
        for (int i = 1; i < 4; ++i) {
            TensorVector vh = hecke_act(v, i);
            TensorVector rhs = v;
            rhs -= qq * vh;
            CHECK(hecke_act(vh, i) == rhs);
            for (const auto& [b, c] : v.coeffs)
                for (const auto& [a, e] : hecke_act(TensorVector::basis_vector(b, 3, TensorBasis::M), i).coeffs)
                    CHECK(a.weight(3) == b.weight(3));
        }
    }
    for (int k = 0; k < 20; ++k) {
        TensorVector v = random_vector(rng, 3, 4, TensorBasis::M);
        HeckeElement a = random_hecke(rng, 4), b = random_hecke(rng, 4);
        CHECK(hecke_act_element(hecke_act_element(v, a), b) == hecke_act_element(v, hecke_mul(a, b)));
    }
}

TEST_CASE("bar involution on tensor space") {
    const int n = 3;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            MultiIndex ij{i, j}, ji{j, i};
            TensorVector v = TensorVector::basis_vector(ij, n, TensorBasis::M);
            TensorVector expect = v;
            if (i > j) expect += qq * TensorVector::basis_vector(ji, n, TensorBasis::M);
            CHECK(bar_tensor(v) == expect);
        }
    for (const auto& a : oracle::all_words(3, 3)) {
        TensorVector v = TensorVector::basis_vector(a, 3, TensorBasis::M);
        CHECK(bar_tensor(bar_tensor(v)) == v);
    }
    std::mt19937_64 rng(67);
    for (int k = 0; k < 30; ++k) {
        TensorVector v = random_vector(rng, 3, 4, TensorBasis::M);
        HeckeElement h = random_hecke(rng, 4);
        CHECK(bar_tensor(hecke_act_element(v, h)) == hecke_act_element(bar_tensor(v), hecke_bar(h)));
        CHECK(bar_tensor(bar_tensor(v)) == v);
    }
}

TEST_CASE("bar is unitriangular in the coset order") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d)
            for (const auto& a : oracle::all_words(n, d)) {
                TensorVector b = bar_tensor(TensorVector::basis_vector(a, n, TensorBasis::M));
                CHECK(b.coefficient(a) == LaurentPoly(1));
                Permutation da = index_to_coset(a);
                for (const auto& [g, c] : b.coeffs) {
                    CHECK(g.weight(n) == a.weight(n));
                    if (g != a) CHECK(bruhat_leq_opposite(da, index_to_coset(g)));
                }
            }
}

TEST_CASE("bar in the star basis") {
    TensorVector flat = TensorVector::basis_vector(W("2,2,2"), 2, TensorBasis::Mstar);
    CHECK(bar_tensor_star(flat) == flat);
    CHECK_THROWS(bar_tensor_star(basis_m("1,2", 2)));
    for (int d = 1; d <= 4; ++d) {
        HeckeElement wd_inv = HeckeElement::basis(Permutation::identity(d));
        auto word = longest_element(d).reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) wd_inv = hecke_mul(wd_inv, generator_inverse(d, *it));
        for (const auto& beta : oracle::all_words(3, d)) {
            int same = 0;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) same += beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(j)];
            TensorVector formula = LaurentPoly::q(-same) *
                                   hecke_act_element(TensorVector::basis_vector(beta, 3, TensorBasis::M), wd_inv);
            TensorVector route = bar_tensor_star(TensorVector::basis_vector(beta, 3, TensorBasis::Mstar));
            CHECK(to_basis(route, TensorBasis::M) == formula);
            CHECK(bar_tensor(to_basis(TensorVector::basis_vector(beta, 3, TensorBasis::Mstar), TensorBasis::M)) ==
                  to_basis(route, TensorBasis::M));
        }
    }
}

TEST_CASE("dual canonical and canonical bases") {
    CHECK(dual_canonical(W("1,1,2,3"), 3) == basis_m("1,1,2,3", 3));
    TensorVector l21 = basis_m("2,1", 2);
    l21 -= LaurentPoly::q(-1) * basis_m("1,2", 2);
    CHECK(dual_canonical(W("2,1"), 2) == l21);
    CHECK(dual_canonical_coefficient(W("1,2"), W("2,1"), 2) == -LaurentPoly::q(-1));
    CHECK(dual_canonical_coefficient(W("1,1"), W("2,1"), 2).is_zero());
    // L*_{(1,2)} = M*_{(1,2)} + q M*_{(2,1)}: the lift of bar(M_{(2,1)}) = M_{(2,1)} + (q - q^-1) M_{(1,2)} in the star labels
    TensorVector ls = TensorVector::basis_vector(W("1,2"), 2, TensorBasis::Mstar);
    ls += LaurentPoly::q(1) * TensorVector::basis_vector(W("2,1"), 2, TensorBasis::Mstar);
    CHECK(canonical(W("1,2"), 2) == ls);

    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            for (const auto& a : oracle::all_words(n, d)) {
                TensorVector L = dual_canonical(a, n);
                TensorVector Ls = canonical(a, n);
                CHECK(bar_tensor(L) == L);
                CHECK(bar_tensor_star(Ls) == Ls);
                CHECK(L.coefficient(a) == LaurentPoly(1));
                CHECK(Ls.coefficient(a) == LaurentPoly(1));
                for (const auto& [g, c] : L.coeffs)
                    if (g != a) CHECK(c.max_exponent() < 0);
                for (const auto& [g, c] : Ls.coeffs)
                    if (g != a) CHECK(c.min_exponent() > 0);
            }
}

TEST_CASE("lift order and execution do not matter") {
    for (const auto& nu : oracle::weak_compositions(5, 3)) {
        auto ws = WeightSpace::get(nu);
        std::vector<std::size_t> all(ws->size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
        auto d1 = ws->dual_lift().columns(all, Execution::Serial);
        auto d2 = ws->dual_lift(true).columns(all, Execution::Parallel);
        CHECK(d1 == d2);
        auto c1 = ws->canonical_lift().columns(all, Execution::Parallel);
        auto c2 = ws->canonical_lift(true).columns(all, Execution::Serial);
        CHECK(c1 == c2);
    }
}

TEST_CASE("bilinear form") {
    for (const auto& a : oracle::all_words(2, 3))
        for (const auto& b : oracle::all_words(2, 3)) {
            TensorVector mb = bar_tensor_star(TensorVector::basis_vector(b, 2, TensorBasis::Mstar));
            CHECK(bilinear_form(TensorVector::basis_vector(a, 2, TensorBasis::M), mb) ==
                  (a == b ? LaurentPoly(1) : LaurentPoly()));
        }
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= (n == 2 ? 4 : 3); ++d) {
            auto words = oracle::all_words(n, d);
            for (const auto& a : words)
                for (const auto& b : words) {
                    LaurentPoly f = bilinear_form(dual_canonical(a, n), canonical(b, n));
                    CHECK(f == (a == b ? LaurentPoly(1) : LaurentPoly()));
                }
        }
    std::mt19937_64 rng(71);
    for (int k = 0; k < 30; ++k) {
        TensorVector v = random_vector(rng, 3, 3, TensorBasis::M);
        TensorVector w = random_vector(rng, 3, 3, TensorBasis::Mstar);
        HeckeElement h = random_hecke(rng, 3);
        CHECK(bilinear_form(hecke_act_element(v, h), w) == bilinear_form(v, hecke_act_element(w, tau_hecke(h))));
        CHECK(bilinear_form(v, w) == bilinear_form(to_basis(w, TensorBasis::M), v));
    }
}

TEST_CASE("inversion of the transition matrices") {
    const int n = 3, d = 4;
    for (const auto& nu : oracle::weak_compositions(d, n)) {
        auto ws = WeightSpace::get(nu);
        const auto& words = ws->words();
        for (const auto& a : words)
            for (const auto& b : words) {
                LaurentPoly s;
                for (const auto& g : words)
                    s += dual_canonical_coefficient(a, g, n) * canonical_coefficient(b, g, n).bar();
                CHECK(s == (a == b ? LaurentPoly(1) : LaurentPoly()));
            }
    }
}

TEST_CASE("tensor lifts agree with the parabolic module") {
    for (int d = 1; d <= 5; ++d)
        for (const auto& lambda : oracle::compositions(d, 3)) {
            int n = lambda.length();
            auto M = ParabolicModule::get(lambda);
            auto ws = WeightSpace::get(lambda);
            const BarLift& pd = M->lift(LiftDirection::Dual);
            const BarLift& pc = M->lift(LiftDirection::Canonical);
            for (const auto& a : ws->words()) {
                // psi: M_alpha -> M_{d(alpha)}
                auto psi = [&](const TensorVector& v, bool star) {
                    SparseColumn col;
                    std::map<std::size_t, LaurentPoly> acc;
                    for (const auto& [g, c] : v.coeffs) acc[M->index_of(index_to_coset(star ? g.reversed() : g))] += c;
                    for (auto& [k, c] : acc)
                        if (!c.is_zero()) col.emplace_back(k, c);
                    return col;
                };
                CHECK(psi(dual_canonical(a, n), false) == pd.column(M->index_of(index_to_coset(a))));
                CHECK(psi(canonical(a, n), true) == pc.column(M->index_of(index_to_coset(a.reversed()))));
            }
        }
}
