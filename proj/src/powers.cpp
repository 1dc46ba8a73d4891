#include "canonica/powers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>
#include <stdexcept>

#include "canonica/hecke.hpp"

namespace canonica {

namespace {

LaurentPoly signed_q(int e) { return e % 2 == 0 ? LaurentPoly::q(e) : -LaurentPoly::q(e); }  // (-q)^e

// M_alpha in Sym: sort each row block, q^{-inv} per block.
std::pair<Tableau, int> reduce_sym(const MultiIndex& alpha, const Weight& mu) {
    Tableau A = row_tableau_from_reading(alpha, mu);
    int inv = 0;
    for (auto& line : A.lines) {
        inv += MultiIndex(line).inversions();
        std::sort(line.begin(), line.end());
    }
    return {A, -inv};
}

// M*_beta in the quotient exterior power: the column blocks of rev(beta) sorted
// increasing with (-q) per swap; a repeated letter gives zero.
std::optional<std::pair<Tableau, int>> reduce_exttilde(const MultiIndex& beta, const Weight& mu) {
    Tableau A = col_tableau_from_reading(beta, mu);
    int inv = 0;
    for (auto& line : A.lines) {
        inv += MultiIndex(line).inversions();
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end()) return std::nullopt;
    }
    return std::make_pair(A, inv);
}

void accumulate(std::map<std::size_t, LaurentPoly>& acc, std::size_t k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto& e = acc[k];
    e += c;
}

SparseColumn to_column(std::map<std::size_t, LaurentPoly>&& acc) {
    SparseColumn out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.emplace_back(k, std::move(c));
    return out;
}

MultiIndex reading_of(PowerKind kind, const Tableau& A) {
    return is_row_kind(kind) ? row_reading(A) : column_reading(A);
}

Orientation orientation_of(PowerKind kind) { return is_row_kind(kind) ? Orientation::Row : Orientation::Col; }

}  // namespace

PowerKind parse_family(const std::string& name) {
    if (name == "l") return PowerKind::Sym;
    if (name == "lstar") return PowerKind::SymTilde;
    if (name == "k") return PowerKind::Ext;
    if (name == "kstar") return PowerKind::ExtTilde;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(PowerKind kind) {
    switch (kind) {
        case PowerKind::Sym: return "l";
        case PowerKind::SymTilde: return "lstar";
        case PowerKind::Ext: return "k";
        case PowerKind::ExtTilde: return "kstar";
    }
    return "";
}

bool is_row_kind(PowerKind kind) { return kind == PowerKind::Sym || kind == PowerKind::SymTilde; }

// ---- PowerVector ----

LaurentPoly PowerVector::coefficient(const Tableau& A) const {
    auto it = coeffs.find(A);
    return it == coeffs.end() ? LaurentPoly() : it->second;
}

void PowerVector::add(const Tableau& A, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(A, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

PowerVector& PowerVector::operator+=(const PowerVector& o) {
    if (o.kind != kind || o.mu != mu) throw std::invalid_argument("adding vectors of different modules");
    for (const auto& [A, c] : o.coeffs) add(A, c);
    return *this;
}

PowerVector operator*(const LaurentPoly& c, const PowerVector& v) {
    PowerVector r{v.kind, v.mu, v.n, {}};
    for (const auto& [A, e] : v.coeffs) r.add(A, c * e);
    return r;
}

// ---- PowerSpace ----

PowerSpace::PowerSpace(PowerKind kind, Weight mu, Weight nu) : kind_(kind), mu_(std::move(mu)), nu_(std::move(nu)) {
    if (mu_.size() != nu_.size()) throw std::invalid_argument("shape and weight have different sizes");
    check_degree(mu_.size());
    labels_ = is_row_kind(kind_) ? enumerate_row(mu_, nu_) : enumerate_col(mu_, nu_);
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        readings_.push_back(reading_of(kind_, labels_[k]));
        index_.emplace(labels_[k], k);
    }
}

std::shared_ptr<const PowerSpace> PowerSpace::get(PowerKind kind, const Weight& mu, const Weight& nu) {
    static std::mutex m;
    static std::map<std::tuple<int, Weight, Weight>, std::shared_ptr<const PowerSpace>> registry;
    auto key = std::make_tuple(static_cast<int>(kind), mu, nu);
    {
        std::lock_guard<std::mutex> lock(m);
        if (auto it = registry.find(key); it != registry.end()) return it->second;
    }
    auto built = std::make_shared<const PowerSpace>(kind, mu, nu);
    std::lock_guard<std::mutex> lock(m);
    return registry.emplace(key, std::move(built)).first->second;
}

std::size_t PowerSpace::index_of(const Tableau& A) const {
    auto it = index_.find(A);
    if (it == index_.end()) throw std::out_of_range("tableau not in this space: " + A.to_string());
    return it->second;
}

SparseColumn PowerSpace::bar_basis(std::size_t k) const {
    auto ws = WeightSpace::get(nu_);
    const auto& words = ws->words();
    std::map<std::size_t, LaurentPoly> acc;
    switch (kind_) {
        case PowerKind::Sym:
            for (const auto& [j, c] : ws->bar_basis(ws->index_of(readings_[k]))) {
                auto [A, e] = reduce_sym(words[j], mu_);
                accumulate(acc, index_of(A), c.shift(e));
            }
            break;
        case PowerKind::ExtTilde:
            for (const auto& [j, c] : ws->bar_star_basis(ws->index_of(readings_[k]))) {
                auto r = reduce_exttilde(words[j], mu_);
                if (r) accumulate(acc, index_of(r->first), c * signed_q(r->second));
            }
            break;
        case PowerKind::SymTilde:
        case PowerKind::Ext: {
            // bar of the embedded vector, read off at the standard readings
            const bool sym = kind_ == PowerKind::SymTilde;
            for (const auto& [B, dist] : line_orbit(labels_[k])) {
                const LaurentPoly barc = sym ? LaurentPoly::q(-dist) : signed_q(dist);
                std::size_t w = ws->index_of(reading_of(kind_, B));
                for (const auto& [j, c] : sym ? ws->bar_star_basis(w) : ws->bar_basis(w)) {
                    Tableau C = sym ? row_tableau_from_reading(words[j], mu_) : col_tableau_from_reading(words[j], mu_);
                    if (auto it = index_.find(C); it != index_.end()) accumulate(acc, it->second, barc * c);
                }
            }
            break;
        }
    }
    return to_column(std::move(acc));
}

const BarLift& PowerSpace::lift(bool alternate_order) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = lifts_.find(alternate_order); it != lifts_.end()) return *it->second;
    const bool dual = kind_ == PowerKind::Sym || kind_ == PowerKind::Ext;
    std::vector<int> inv(labels_.size());
    for (std::size_t k = 0; k < labels_.size(); ++k) inv[k] = readings_[k].inversions();
    std::vector<std::size_t> order(labels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (inv[a] != inv[b]) return dual ? inv[a] > inv[b] : inv[a] < inv[b];
        return alternate_order ? a > b : a < b;
    });
    auto lift = std::make_unique<BarLift>(std::move(order), [this](std::size_t k) { return bar_basis(k); },
                                          dual ? LiftDirection::Dual : LiftDirection::Canonical);
    const BarLift& ref = *lift;
    lifts_.emplace(alternate_order, std::move(lift));
    return ref;
}

PowerVector PowerSpace::to_vector(const SparseColumn& col) const {
    PowerVector v{kind_, mu_, alphabet(), {}};
    for (const auto& [k, c] : col) v.add(labels_[k], c);
    return v;
}

SparseColumn PowerSpace::from_vector(const PowerVector& v) const {
    if (v.kind != kind_ || v.mu != mu_) throw std::invalid_argument("vector is not in this space");
    std::map<std::size_t, LaurentPoly> acc;
    for (const auto& [A, c] : v.coeffs) accumulate(acc, index_of(A), c);
    return to_column(std::move(acc));
}

// ---- embeddings and projections ----

TensorVector embed_symtilde(const Tableau& A, int n) {
    if (A.orientation != Orientation::Row || !A.is_standard_form()) throw std::invalid_argument("embed: not row standard");
    TensorVector r(n, A.size(), TensorBasis::Mstar);
    for (const auto& [B, dist] : line_orbit(A)) r.add(row_reading(B), LaurentPoly::q(dist));
    return r;
}

TensorVector embed_ext(const Tableau& A, int n) {
    if (A.orientation != Orientation::Col || !A.is_standard_form()) throw std::invalid_argument("embed: not column strict");
    TensorVector r(n, A.size(), TensorBasis::M);
    for (const auto& [B, dist] : line_orbit(A)) r.add(column_reading(B), signed_q(-dist));
    return r;
}

TensorVector embed(const PowerVector& v) {
    if (v.kind != PowerKind::SymTilde && v.kind != PowerKind::Ext)
        throw std::invalid_argument("embed: only the divided and exterior powers embed");
    const bool sym = v.kind == PowerKind::SymTilde;
    TensorVector r(v.n, v.mu.size(), sym ? TensorBasis::Mstar : TensorBasis::M);
    for (const auto& [A, c] : v.coeffs) r += c * (sym ? embed_symtilde(A, v.n) : embed_ext(A, v.n));
    return r;
}

PowerVector project_sym(const TensorVector& v0, const Weight& mu) {
    TensorVector v = to_basis(v0, TensorBasis::M);
    if (v.d != mu.size()) throw std::invalid_argument("project: shape does not match degree");
    PowerVector r{PowerKind::Sym, mu, v.n, {}};
    for (const auto& [alpha, c] : v.coeffs) {
        auto [A, e] = reduce_sym(alpha, mu);
        r.add(A, c.shift(e));
    }
    return r;
}

PowerVector project_exttilde(const TensorVector& v0, const Weight& mu) {
    TensorVector v = to_basis(v0, TensorBasis::Mstar);
    if (v.d != mu.size()) throw std::invalid_argument("project: shape does not match degree");
    PowerVector r{PowerKind::ExtTilde, mu, v.n, {}};
    for (const auto& [beta, c] : v.coeffs)
        if (auto red = reduce_exttilde(beta, mu)) r.add(red->first, c * signed_q(red->second));
    return r;
}

PowerVector project(const TensorVector& v, PowerKind kind, const Weight& mu) {
    if (kind == PowerKind::Sym) return project_sym(v, mu);
    if (kind == PowerKind::ExtTilde) return project_exttilde(v, mu);
    throw std::invalid_argument("project: only the symmetric and quotient exterior powers are quotients");
}

// ---- bar, bases, pairing ----

PowerVector bar_power(const PowerVector& v) {
    PowerVector r{v.kind, v.mu, v.n, {}};
    std::map<Weight, std::vector<std::pair<Tableau, LaurentPoly>>> by_weight;
    for (const auto& [A, c] : v.coeffs) by_weight[A.weight(v.n)].emplace_back(A, c);
    for (const auto& [nu, terms] : by_weight) {
        auto sp = PowerSpace::get(v.kind, v.mu, nu);
        for (const auto& [A, c] : terms) {
            LaurentPoly cb = c.bar();
            for (const auto& [j, e] : sp->bar_basis(sp->index_of(A))) r.add(sp->labels()[j], cb * e);
        }
    }
    return r;
}

PowerVector standard_basis(PowerKind kind, const Tableau& A, int n) {
    if (A.orientation != orientation_of(kind) || !A.is_standard_form())
        throw std::invalid_argument("tableau does not label a basis vector of this module: " + A.to_string());
    PowerVector r{kind, A.shape(), n, {}};
    r.add(A, LaurentPoly(1));
    return r;
}

PowerVector lifted_basis(PowerKind kind, const Tableau& A, int n) {
    standard_basis(kind, A, n);
    auto sp = PowerSpace::get(kind, A.shape(), A.weight(n));
    return sp->to_vector(sp->lift().column(sp->index_of(A)));
}

LaurentPoly power_pairing(const PowerVector& v, const PowerVector& w) {
    if (v.n != w.n || v.mu != w.mu) throw std::invalid_argument("pairing: spaces differ");
    TensorVector tv(v.n, v.mu.size(), TensorBasis::M);
    TensorVector tw(v.n, v.mu.size(), TensorBasis::Mstar);
    if (v.kind == PowerKind::Sym && w.kind == PowerKind::SymTilde) {
        for (const auto& [A, c] : v.coeffs) tv.add(row_reading(A), c);
        tw = embed(w);
    } else if (v.kind == PowerKind::Ext && w.kind == PowerKind::ExtTilde) {
        tv = embed(v);
        for (const auto& [A, c] : w.coeffs) tw.add(column_reading(A), c);
    } else {
        throw std::invalid_argument("pairing: modules are not dual");
    }
    return bilinear_form(tv, tw);
}

// ---- transition matrices ----

TransitionMatrix transition(PowerKind kind, const Weight& mu, const Weight& nu, Execution exec) {
    auto sp = PowerSpace::get(kind, mu, nu);
    std::vector<std::size_t> all(sp->size());
    std::iota(all.begin(), all.end(), 0);
    auto cols = sp->lift().columns(all, exec);
    return {kind, mu, nu, sp->labels(), to_dense(cols, sp->size())};
}

LaurentPoly transition_via_kl(PowerKind kind, const Tableau& A, const Tableau& B, const Weight& mu, const Weight& nu) {
    const int d = mu.size();
    const Permutation wd = longest_element(d);
    LaurentPoly sum;
    switch (kind) {
        case PowerKind::Sym: {
            Permutation x = to_double_coset(A), y = to_double_coset(B);
            for (const auto& z : double_coset_members(nu, mu, x, false)) {
                LaurentPoly p = kl_polynomial(z * wd, y * wd).substitute_power(2);
                sum += (length(z) + length(y)) % 2 == 0 ? p : -p;
            }
            return LaurentPoly::q(length(y) - length(x)) * sum;
        }
        case PowerKind::SymTilde: {
            Permutation x = to_double_coset(A), y = to_double_coset(B);
            return LaurentPoly::q(length(y) - length(x)) * kl_polynomial(x, y).substitute_power(-2);
        }
        case PowerKind::Ext: {
            Permutation x = index_to_coset(column_reading(A)), y = index_to_coset(column_reading(B));
            for (const auto& z : double_coset_members(nu, Weight(std::vector<int>(static_cast<std::size_t>(d), 1)),
                                                      Permutation::identity(d), false)) {
                LaurentPoly p = kl_polynomial(z * x, y).substitute_power(2);
                sum += length(z) % 2 == 0 ? p : -p;
            }
            return signed_q(length(x) - length(y)) * sum;
        }
        case PowerKind::ExtTilde: {
            Permutation x = index_to_coset(column_reading(A)), y = index_to_coset(column_reading(B));
            for (const auto& z : double_coset_members(nu, mu, x, true)) {
                LaurentPoly p = kl_polynomial(z * wd, y * wd).substitute_power(-2);
                sum += (length(z) + length(y)) % 2 == 0 ? p : -p;
            }
            return signed_q(length(x) - length(y)) * sum;
        }
    }
    return sum;
}

TransitionMatrix transition_kl(PowerKind kind, const Weight& mu, const Weight& nu, Execution exec) {
    auto sp = PowerSpace::get(kind, mu, nu);
    const auto& labels = sp->labels();
    const std::size_t n = labels.size();
    TransitionMatrix t{kind, mu, nu, labels, std::vector<std::vector<LaurentPoly>>(n, std::vector<LaurentPoly>(n))};
    for_each_index(n * n, exec, [&](std::size_t k) {
        std::size_t a = k / n, b = k % n;
        t.entries[a][b] = transition_via_kl(kind, labels[a], labels[b], mu, nu);
    });
    return t;
}

// ---- identities between the four families ----

namespace {

using Dense = std::vector<std::vector<LaurentPoly>>;

struct TensorTables {
    std::shared_ptr<const WeightSpace> ws;
    Dense l;      // l[g][a]: coefficient of M_g in L_a
    Dense lstar;  // lstar[g][a]: coefficient of M*_g in L*_a
};

TensorTables tensor_tables(const Weight& nu) {
    TensorTables t;
    t.ws = WeightSpace::get(nu);
    std::vector<std::size_t> all(t.ws->size());
    std::iota(all.begin(), all.end(), 0);
    t.l = to_dense(t.ws->dual_lift().columns(all, Execution::Parallel), all.size());
    t.lstar = to_dense(t.ws->canonical_lift().columns(all, Execution::Parallel), all.size());
    return t;
}

void expect_eq(IdentityReport& rep, const std::string& what, const LaurentPoly& got, const LaurentPoly& want) {
    ++rep.checked;
    if (got != want) rep.violations.push_back(what + ": got " + got.to_string() + ", expected " + want.to_string());
}

void check_inversion(IdentityReport& rep, const char* name, const TransitionMatrix& x, const TransitionMatrix& y) {
    const std::size_t n = x.labels.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            LaurentPoly s;
            for (std::size_t c = 0; c < n; ++c) s += x.entries[a][c] * y.entries[b][c].bar();
            expect_eq(rep, std::string(name) + " A=" + x.labels[a].to_string() + " B=" + x.labels[b].to_string(), s,
                      a == b ? LaurentPoly(1) : LaurentPoly());
        }
}

}  // namespace

IdentityReport identity_checks(const Weight& mu, const Weight& nu) {
    IdentityReport rep;
    const int n = nu.length();
    auto T = tensor_tables(nu);
    auto widx = [&](const MultiIndex& a) { return T.ws->index_of(a); };

    TransitionMatrix l = transition(PowerKind::Sym, mu, nu);
    TransitionMatrix ls = transition(PowerKind::SymTilde, mu, nu);
    TransitionMatrix k = transition(PowerKind::Ext, mu, nu);
    TransitionMatrix ks = transition(PowerKind::ExtTilde, mu, nu);
    check_inversion(rep, "l/lstar inversion", l, ls);
    check_inversion(rep, "k/kstar inversion", k, ks);

    const auto& rows = l.labels;
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const std::string tag = " A=" + rows[a].to_string() + " B=" + rows[b].to_string();
            std::size_t rb = widx(row_reading(rows[b]));
            LaurentPoly s;
            for (const auto& [C, dist] : line_orbit(rows[a])) s += LaurentPoly::q(-dist) * T.l[widx(row_reading(C))][rb];
            expect_eq(rep, "l via tensor" + tag, l.entries[a][b], s);
            expect_eq(rep, "lstar via tensor" + tag, ls.entries[a][b], T.lstar[widx(row_reading(rows[a]))][rb]);
        }

    const auto& cols = k.labels;
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) {
            const std::string tag = " A=" + cols[a].to_string() + " B=" + cols[b].to_string();
            std::size_t gb = widx(column_reading(cols[b]));
            expect_eq(rep, "k via tensor" + tag, k.entries[a][b], T.l[widx(column_reading(cols[a]))][gb]);
            LaurentPoly s;
            for (const auto& [C, dist] : line_orbit(cols[a])) s += signed_q(dist) * T.lstar[widx(column_reading(C))][gb];
            expect_eq(rep, "kstar via tensor" + tag, ks.entries[a][b], s);
        }

    // transpose symmetry Row(mu,nu) -> Row(nu,mu)
    {
        TransitionMatrix lt = transition(PowerKind::Sym, nu, mu);
        TransitionMatrix lst = transition(PowerKind::SymTilde, nu, mu);
        auto sp_t = PowerSpace::get(PowerKind::Sym, nu, mu);
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = 0; b < rows.size(); ++b) {
                std::size_t ta = sp_t->index_of(transpose_tau(rows[a], n));
                std::size_t tb = sp_t->index_of(transpose_tau(rows[b], n));
                const std::string tag = " A=" + rows[a].to_string() + " B=" + rows[b].to_string();
                expect_eq(rep, "l transpose" + tag, l.entries[a][b], lt.entries[ta][tb]);
                expect_eq(rep, "lstar transpose" + tag, ls.entries[a][b], lst.entries[ta][tb]);
            }
    }
    return rep;
}

}  // namespace canonica
