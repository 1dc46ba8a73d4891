#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "canonica/lift.hpp"
#include "canonica/tableau.hpp"
#include "canonica/tensor.hpp"

namespace canonica {

// Sym:      S^mu(V_n),        basis M_A, dual canonical L_A,    A in Row(mu,nu)
// SymTilde: divided powers,   basis M*_A, canonical L*_A,       A in Row(mu,nu)
// Ext:      exterior powers,  basis N_A, dual canonical K_A,    A in Col(mu,nu)
// ExtTilde: quotient powers,  basis N*_A, canonical K*_A,       A in Col(mu,nu)
enum class PowerKind { Sym, SymTilde, Ext, ExtTilde };

// Transition families named after their coefficients l, l*, k, k*.
PowerKind parse_family(const std::string& name);
std::string family_name(PowerKind kind);
bool is_row_kind(PowerKind kind);

struct PowerVector {
    PowerKind kind = PowerKind::Sym;
    Weight mu;
    int n = 0;  // alphabet size
    std::map<Tableau, LaurentPoly> coeffs;

    LaurentPoly coefficient(const Tableau& A) const;
    void add(const Tableau& A, const LaurentPoly& c);
    bool is_zero() const { return coeffs.empty(); }
    PowerVector& operator+=(const PowerVector& o);
    friend PowerVector operator+(PowerVector a, const PowerVector& b) { return a += b; }
    friend PowerVector operator*(const LaurentPoly& c, const PowerVector& v);
    bool operator==(const PowerVector&) const = default;
};

// One nu-weight space of one of the four modules.
class PowerSpace {
public:
    PowerSpace(PowerKind kind, Weight mu, Weight nu);
    static std::shared_ptr<const PowerSpace> get(PowerKind kind, const Weight& mu, const Weight& nu);

    PowerKind kind() const { return kind_; }
    const Weight& mu() const { return mu_; }
    const Weight& nu() const { return nu_; }
    int alphabet() const { return nu_.length(); }
    std::size_t size() const { return labels_.size(); }
    // Row(mu,nu) or Col(mu,nu), lexicographic in the reading word.
    const std::vector<Tableau>& labels() const { return labels_; }
    std::size_t index_of(const Tableau& A) const;
    bool contains(const Tableau& A) const { return index_.count(A) > 0; }
    // rho(A) for row kinds, gamma(A) for column kinds.
    const MultiIndex& reading(std::size_t k) const { return readings_[k]; }

    // Bar of a basis vector, transported from tensor space.
    SparseColumn bar_basis(std::size_t k) const;
    const BarLift& lift(bool alternate_order = false) const;

    PowerVector to_vector(const SparseColumn& col) const;
    SparseColumn from_vector(const PowerVector& v) const;

private:
    PowerKind kind_;
    Weight mu_;
    Weight nu_;
    std::vector<Tableau> labels_;
    std::vector<MultiIndex> readings_;
    std::unordered_map<Tableau, std::size_t, TableauHash> index_;
    mutable std::mutex mutex_;
    mutable std::map<bool, std::unique_ptr<BarLift>> lifts_;
};

// iota for SymTilde (into the M* basis) and Ext (into the M basis).
TensorVector embed(const PowerVector& v);
TensorVector embed_symtilde(const Tableau& A, int n);
TensorVector embed_ext(const Tableau& A, int n);
// pi onto Sym (from M) and ExtTilde (from M*); mu is the row or column shape.
// Zero blocks are allowed in mu.
PowerVector project(const TensorVector& v, PowerKind kind, const Weight& mu);
PowerVector project_sym(const TensorVector& v, const Weight& mu);
PowerVector project_exttilde(const TensorVector& v, const Weight& mu);

PowerVector bar_power(const PowerVector& v);
PowerVector standard_basis(PowerKind kind, const Tableau& A, int n);
// L_A, L*_A, K_A or K*_A according to kind.
PowerVector lifted_basis(PowerKind kind, const Tableau& A, int n);

// (v, w) for v in Sym and w in SymTilde, or v in Ext and w in ExtTilde.
LaurentPoly power_pairing(const PowerVector& v, const PowerVector& w);

struct TransitionMatrix {
    PowerKind kind = PowerKind::Sym;
    Weight mu;
    Weight nu;
    std::vector<Tableau> labels;
    // entries[a][b]: coefficient of the standard basis vector a in the lifted vector b.
    std::vector<std::vector<LaurentPoly>> entries;
    bool operator==(const TransitionMatrix&) const = default;
};

TransitionMatrix transition(PowerKind kind, const Weight& mu, const Weight& nu,
                            Execution exec = Execution::Parallel);
// Same matrix from the Kazhdan-Lusztig closed forms.
LaurentPoly transition_via_kl(PowerKind kind, const Tableau& A, const Tableau& B, const Weight& mu, const Weight& nu);
TransitionMatrix transition_kl(PowerKind kind, const Weight& mu, const Weight& nu,
                               Execution exec = Execution::Parallel);

struct IdentityReport {
    std::vector<std::string> violations;
    std::size_t checked = 0;
    bool ok() const { return violations.empty(); }
};

// Inversion (l with l*, k with k*), the reductions to tensor space and the
// transpose symmetry of l and l*.
IdentityReport identity_checks(const Weight& mu, const Weight& nu);

}  // namespace canonica
