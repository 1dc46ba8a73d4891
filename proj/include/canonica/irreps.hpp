#pragma once

#include <map>
#include <string>
#include <vector>

#include "canonica/powers.hpp"

namespace canonica {

// lambda = mu' for a composition mu, with trailing zeros dropped.
Weight irrep_shape(const Weight& mu);

// V_A: product of the flag minors of the columns of A, in Sym(lambda, nu), lambda = mu'.
PowerVector xi_mu(const Tableau& A, int n);
// Linear extension to Ext(mu, nu), N_A -> V_A.
PowerVector xi_mu(const PowerVector& v);
// Adjoint map SymTilde(lambda, nu) -> ExtTilde(mu, nu).
PowerVector xi_star(const PowerVector& w, const Weight& mu);
// V*_A = xi*_mu(M*_A) for A in Row(lambda, nu).
PowerVector v_star(const Tableau& A, const Weight& mu, int n);

// Coordinates of v in Sym(lambda, nu) with respect to {L_B : B in Row(lambda, nu)}.
std::map<Tableau, LaurentPoly> expand_in_dual_canonical(const PowerVector& v);
// True when every L_B in the expansion has B in Dom(lambda, nu).
bool in_irrep(const PowerVector& v);
// Coordinates with respect to {V_A : A in Std(mu, nu)}, by elimination on unit pivots.
std::map<Tableau, LaurentPoly> expand_in_standard_monomials(const PowerVector& v, const Weight& mu);

// Pairing of v in P^lambda (inside Sym) with w in the image of xi*_mu (inside ExtTilde).
LaurentPoly irrep_pairing(const PowerVector& v, const PowerVector& w, const Weight& mu);

// Unique A in Std(mu, nu) with R(A) = B.
Tableau rectify_inverse(const Tableau& B, const Weight& mu, const Weight& nu);

// Rows A in Std(mu, nu), columns labelled R(B) for B in Std(mu, nu), entries k*_{A,B}(q^-1).
struct IrrepMatrix {
    Weight mu;
    Weight nu;
    std::vector<Tableau> row_labels;
    std::vector<Tableau> col_labels;
    std::vector<std::vector<LaurentPoly>> entries;
};
IrrepMatrix standard_to_dual_canonical(const Weight& mu, const Weight& nu);
// From a precomputed k* matrix of the same block.
IrrepMatrix standard_to_dual_canonical(const TransitionMatrix& t);

struct IrrepReport {
    std::size_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
// xi(K_A) = L_{R(A)} or 0, and V_A = sum_B k*_{A,B}(q^-1) L_{R(B)}.
IrrepReport main1_check(const Weight& mu, const Weight& nu, Execution exec = Execution::Parallel);
// xi*(L*_A) = K*_{R^-1(A)} or 0, V*_A = sum_B l_{A,B}(q^-1) K*_{R^-1(B)}, (L_A, K*_B) = delta.
IrrepReport main2_check(const Weight& mu, const Weight& nu, Execution exec = Execution::Parallel);

}  // namespace canonica
