#include "canonica/irreps.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "canonica/qcoord.hpp"

namespace canonica {

namespace {

PowerVector zero_vector(PowerKind kind, const Weight& mu, int n) { return PowerVector{kind, mu, n, {}}; }

Weight weight_of(const PowerVector& v) {
    if (v.coeffs.empty()) throw std::invalid_argument("weight of the zero vector is undefined");
    return v.coeffs.begin()->first.weight(v.n);
}

std::string describe(const char* what, const Tableau& A) { return std::string(what) + " " + A.to_string(); }

// V_C for every C in Col(mu, nu), in enumeration order.
struct Block {
    Weight mu, nu, lambda;
    int n = 0;
    std::vector<Tableau> cols;
    std::vector<PowerVector> v;

    Block(const Weight& mu_, const Weight& nu_, Execution exec)
        : mu(mu_), nu(nu_), lambda(irrep_shape(mu_)), n(nu_.length()), cols(enumerate_col(mu_, nu_)) {
        v.resize(cols.size());
        for_each_index(cols.size(), exec, [&](std::size_t i) { v[i] = xi_mu(cols[i], n); });
    }

    // xi*(M*_B) for B in Row(lambda, nu), filled on first use
    mutable std::map<Tableau, PowerVector> xstar;

    // (V_C, M*_B) = sum_B' V_C[B'] bar(beta_{B',B}) with bar(M*_B) = sum_B' beta_{B',B} M*_B',
    // since (M_B', bar(M*_B'')) = delta; xi*(M*_B) = sum_C (V_C, M*_B) bar(N*_C)
    const std::map<Tableau, PowerVector>& xi_star_basis() const {
        if (!xstar.empty() || cols.empty()) return xstar;
        auto ext = PowerSpace::get(PowerKind::ExtTilde, mu, nu);
        std::vector<PowerVector> dual;
        for (const auto& C : cols) dual.push_back(ext->to_vector(ext->lift().bar_of(ext->index_of(C))));
        auto sym = PowerSpace::get(PowerKind::SymTilde, lambda, nu);
        for (std::size_t b = 0; b < sym->size(); ++b) {
            std::map<Tableau, LaurentPoly> gram;
            for (const auto& [j, beta] : sym->lift().bar_of(b)) gram[sym->labels()[j]] = beta.bar();
            PowerVector out = zero_vector(PowerKind::ExtTilde, mu, n);
            for (std::size_t i = 0; i < cols.size(); ++i) {
                LaurentPoly c;
                for (const auto& [B, e] : v[i].coeffs) {
                    auto it = gram.find(B);
                    if (it != gram.end()) c += e * it->second;
                }
                if (!c.is_zero()) out += c * dual[i];
            }
            xstar.emplace(sym->labels()[b], std::move(out));
        }
        return xstar;
    }

    PowerVector xi_star(const PowerVector& w) const {
        PowerVector out = zero_vector(PowerKind::ExtTilde, mu, n);
        if (cols.empty()) return out;
        const auto& basis = xi_star_basis();
        for (const auto& [B, c] : w.coeffs) out += c * basis.at(B);
        return out;
    }
};

}  // namespace

Weight irrep_shape(const Weight& mu) {
    if (mu.size() == 0) throw std::invalid_argument("irrep: empty shape");
    return mu.conjugate().trimmed();
}

PowerVector xi_mu(const Tableau& A, int n) {
    if (A.orientation != Orientation::Col) throw std::invalid_argument("xi: needs a column tableau");
    const Weight lambda = irrep_shape(A.shape());
    const int m = lambda.length();
    if (m > n) throw std::invalid_argument("xi: more rows than the alphabet size");
    NCPolynomial r = NCPolynomial::one(m, n);
    for (const auto& line : A.lines) {
        if (line.empty()) continue;
        MultiIndex beta;
        beta.entries = line;
        r = multiply(r, flag_minor(m, n, beta));
    }
    return identify_with_powers(r, lambda, A.weight(n));
}

PowerVector xi_mu(const PowerVector& v) {
    if (v.kind != PowerKind::Ext) throw std::invalid_argument("xi: needs an exterior power vector");
    PowerVector out = zero_vector(PowerKind::Sym, irrep_shape(v.mu), v.n);
    for (const auto& [A, c] : v.coeffs) out += c * xi_mu(A, v.n);
    return out;
}

PowerVector xi_star(const PowerVector& w, const Weight& mu) {
    if (w.kind != PowerKind::SymTilde) throw std::invalid_argument("xi*: needs a SymTilde vector");
    if (w.mu != irrep_shape(mu)) throw std::invalid_argument("xi*: shape is not the conjugate of mu");
    if (w.coeffs.empty()) return zero_vector(PowerKind::ExtTilde, mu, w.n);
    Weight nu = weight_of(w);
    return Block(mu, nu, Execution::Serial).xi_star(w);
}

PowerVector v_star(const Tableau& A, const Weight& mu, int n) {
    return xi_star(standard_basis(PowerKind::SymTilde, A, n), mu);
}

std::map<Tableau, LaurentPoly> expand_in_dual_canonical(const PowerVector& v) {
    if (v.kind != PowerKind::Sym) throw std::invalid_argument("expand: needs a symmetric power vector");
    std::map<Tableau, LaurentPoly> out;
    PowerVector rest = v;
    while (!rest.coeffs.empty()) {
        // L_B is M_B plus terms below B
        const Tableau* top = nullptr;
        for (const auto& [B, c] : rest.coeffs) {
            bool maximal = true;
            for (const auto& [C, e] : rest.coeffs)
                if (C != B && bruhat_leq_row(B, C)) maximal = false;
            if (maximal) {
                top = &B;
                break;
            }
        }
        Tableau B = *top;
        LaurentPoly c = rest.coefficient(B);
        out[B] = c;
        rest += (-c) * lifted_basis(PowerKind::Sym, B, v.n);
    }
    return out;
}

bool in_irrep(const PowerVector& v) {
    for (const auto& [B, c] : expand_in_dual_canonical(v))
        if (!is_dom(B)) return false;
    return true;
}

std::map<Tableau, LaurentPoly> expand_in_standard_monomials(const PowerVector& v, const Weight& mu) {
    if (v.kind != PowerKind::Sym) throw std::invalid_argument("expand: needs a symmetric power vector");
    if (v.mu != irrep_shape(mu)) throw std::invalid_argument("expand: shape is not the conjugate of mu");
    std::map<Tableau, LaurentPoly> out;
    if (v.coeffs.empty()) return out;
    const Weight nu = weight_of(v);
    const auto basis = enumerate_std(mu, nu);
    const auto dom = enumerate_dom(v.mu, nu);
    std::map<Tableau, std::size_t> pos;
    for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = i;
    auto coords = [&](const PowerVector& x) {
        std::vector<LaurentPoly> c(dom.size());
        for (const auto& [B, e] : expand_in_dual_canonical(x)) {
            auto it = pos.find(B);
            if (it == pos.end()) throw std::invalid_argument("expand: vector is not in the irreducible submodule");
            c[it->second] = e;
        }
        return c;
    };
    // system: sum_A x_A coords(V_A) = coords(v); rows are L-coordinates, columns are A
    const std::size_t rows = dom.size(), cols = basis.size();
    std::vector<std::vector<LaurentPoly>> m(rows, std::vector<LaurentPoly>(cols + 1));
    for (std::size_t a = 0; a < cols; ++a) {
        auto c = coords(xi_mu(basis[a], v.n));
        for (std::size_t r = 0; r < rows; ++r) m[r][a] = c[r];
    }
    auto rhs = coords(v);
    for (std::size_t r = 0; r < rows; ++r) m[r][cols] = rhs[r];

    std::vector<std::optional<std::size_t>> pivot_row(cols);
    std::vector<bool> used(rows, false);
    for (std::size_t step = 0; step < cols; ++step) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        std::size_t best_count = 0;
        for (std::size_t a = 0; a < cols; ++a) {
            if (pivot_row[a]) continue;
            std::size_t count = 0;
            std::optional<std::size_t> unit;
            for (std::size_t r = 0; r < rows; ++r) {
                if (used[r] || m[r][a].is_zero()) continue;
                ++count;
                if (!unit && m[r][a].is_monomial() && (m[r][a].terms()[0].coeff == Integer(1) || m[r][a].terms()[0].coeff == Integer(-1))) unit = r;
            }
            if (unit && (!best || count < best_count)) {
                best = std::make_pair(*unit, a);
                best_count = count;
            }
        }
        if (!best) throw std::logic_error("expand: no unit pivot");
        auto [r, a] = *best;
        const auto& t = m[r][a].terms()[0];
        LaurentPoly inv = LaurentPoly::monomial(-t.exp, t.coeff);
        for (auto& e : m[r]) e = inv * e;
        for (std::size_t o = 0; o < rows; ++o) {
            if (o == r || m[o][a].is_zero()) continue;
            LaurentPoly f = m[o][a];
            for (std::size_t k = 0; k <= cols; ++k) m[o][k] -= f * m[r][k];
        }
        used[r] = true;
        pivot_row[a] = r;
    }
    for (std::size_t r = 0; r < rows; ++r)
        if (!used[r] && !m[r][cols].is_zero()) throw std::invalid_argument("expand: inconsistent system");
    for (std::size_t a = 0; a < cols; ++a)
        if (!m[*pivot_row[a]][cols].is_zero()) out[basis[a]] = m[*pivot_row[a]][cols];
    return out;
}

LaurentPoly irrep_pairing(const PowerVector& v, const PowerVector& w, const Weight& mu) {
    if (w.kind != PowerKind::ExtTilde || w.mu != mu) throw std::invalid_argument("pairing: w is not in ExtTilde(mu)");
    PowerVector x = zero_vector(PowerKind::Ext, mu, v.n);
    for (const auto& [A, c] : expand_in_standard_monomials(v, mu)) x += c * standard_basis(PowerKind::Ext, A, v.n);
    return power_pairing(x, w);
}

Tableau rectify_inverse(const Tableau& B, const Weight& mu, const Weight& nu) {
    for (const auto& A : enumerate_std(mu, nu))
        if (rectify(A) == B) return A;
    throw std::invalid_argument("rectify_inverse: not in the image of R");
}

IrrepMatrix standard_to_dual_canonical(const Weight& mu, const Weight& nu) {
    return standard_to_dual_canonical(transition(PowerKind::ExtTilde, mu, nu));
}

IrrepMatrix standard_to_dual_canonical(const TransitionMatrix& t) {
    if (t.kind != PowerKind::ExtTilde) throw std::invalid_argument("standard_to_dual_canonical: needs the k* matrix");
    IrrepMatrix out{t.mu, t.nu, enumerate_std(t.mu, t.nu), {}, {}};
    std::map<Tableau, std::size_t> pos;
    for (std::size_t i = 0; i < t.labels.size(); ++i) pos[t.labels[i]] = i;
    for (const auto& B : out.row_labels) out.col_labels.push_back(rectify(B));
    for (const auto& A : out.row_labels) {
        std::vector<LaurentPoly> row;
        for (const auto& B : out.row_labels) row.push_back(t.entries[pos.at(A)][pos.at(B)].bar());
        out.entries.push_back(std::move(row));
    }
    return out;
}

IrrepReport main1_check(const Weight& mu, const Weight& nu, Execution exec) {
    IrrepReport rep;
    Block blk(mu, nu, exec);
    const int n = blk.n;
    const TransitionMatrix k = transition(PowerKind::Ext, mu, nu, exec);
    const TransitionMatrix kstar = transition(PowerKind::ExtTilde, mu, nu, exec);
    const auto std_labels = enumerate_std(mu, nu);
    if (std_labels.size() != enumerate_dom(blk.lambda, nu).size())
        rep.violations.push_back("dimension: |Std(mu,nu)| != |Dom(lambda,nu)|");
    for (std::size_t b = 0; b < blk.cols.size(); ++b) {
        const Tableau& B = blk.cols[b];
        PowerVector image = zero_vector(PowerKind::Sym, blk.lambda, n);
        for (std::size_t a = 0; a < blk.cols.size(); ++a)
            if (!k.entries[a][b].is_zero()) image += k.entries[a][b] * blk.v[a];
        PowerVector want =
            is_std(B) ? lifted_basis(PowerKind::Sym, rectify(B), n) : zero_vector(PowerKind::Sym, blk.lambda, n);
        ++rep.checked;
        if (image != want) rep.violations.push_back(describe("xi(K_A) != L_R(A) or 0 for A =", B));
    }
    for (std::size_t a = 0; a < blk.cols.size(); ++a) {
        PowerVector sum = zero_vector(PowerKind::Sym, blk.lambda, n);
        for (std::size_t b = 0; b < blk.cols.size(); ++b)
            if (is_std(blk.cols[b]) && !kstar.entries[a][b].is_zero())
                sum += kstar.entries[a][b].bar() * lifted_basis(PowerKind::Sym, rectify(blk.cols[b]), n);
        ++rep.checked;
        if (sum != blk.v[a]) rep.violations.push_back(describe("V_A != sum k*(q^-1) L for A =", blk.cols[a]));
    }
    return rep;
}

IrrepReport main2_check(const Weight& mu, const Weight& nu, Execution exec) {
    IrrepReport rep;
    Block blk(mu, nu, exec);
    const int n = blk.n;
    const TransitionMatrix l = transition(PowerKind::Sym, blk.lambda, nu, exec);
    std::map<Tableau, Tableau> preimage;
    for (const auto& A : enumerate_std(mu, nu)) preimage.emplace(rectify(A), A);
    for (std::size_t a = 0; a < l.labels.size(); ++a) {
        const Tableau& A = l.labels[a];
        PowerVector image = blk.xi_star(lifted_basis(PowerKind::SymTilde, A, n));
        auto it = preimage.find(A);
        PowerVector want = it != preimage.end() ? lifted_basis(PowerKind::ExtTilde, it->second, n)
                                                : zero_vector(PowerKind::ExtTilde, mu, n);
        ++rep.checked;
        if (image != want) rep.violations.push_back(describe("xi*(L*_A) != K*_{R^-1(A)} or 0 for A =", A));

        PowerVector vstar = blk.xi_star(standard_basis(PowerKind::SymTilde, A, n));
        PowerVector sum = zero_vector(PowerKind::ExtTilde, mu, n);
        for (std::size_t b = 0; b < l.labels.size(); ++b) {
            auto pb = preimage.find(l.labels[b]);
            if (pb != preimage.end() && !l.entries[a][b].is_zero())
                sum += l.entries[a][b].bar() * lifted_basis(PowerKind::ExtTilde, pb->second, n);
        }
        ++rep.checked;
        if (vstar != sum) rep.violations.push_back(describe("V*_A != sum l(q^-1) K* for A =", A));
    }
    for (const auto& [A, pa] : preimage) {
        PowerVector la = lifted_basis(PowerKind::Sym, A, n);
        for (const auto& [RB, B] : preimage) {
            LaurentPoly want = RB == A ? LaurentPoly(1) : LaurentPoly();
            ++rep.checked;
            if (irrep_pairing(la, lifted_basis(PowerKind::ExtTilde, B, n), mu) != want)
                rep.violations.push_back(describe("(L_A, K*_B) != delta for A =", A) + describe(", B =", B));
        }
    }
    return rep;
}

}  // namespace canonica
