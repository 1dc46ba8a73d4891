#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canonica/laurent.hpp"
#include "canonica/powers.hpp"
#include "canonica/symgroup.hpp"

namespace canonica {

// Word x_{i_1,j_1} ... x_{i_d,j_d} in the generators of O_q(M_{m,n}).
using GeneratorWord = std::vector<std::pair<int, int>>;

struct DoubleIndex {
    MultiIndex alpha;  // row indexes, 1..m
    MultiIndex beta;   // column indexes, 1..n

    int size() const { return alpha.size(); }
    // alpha weakly decreasing, beta weakly increasing on constant alpha runs
    bool is_initial() const;
    // beta weakly increasing, alpha weakly decreasing on constant beta runs
    bool is_terminal() const;
    // the initial / terminal member of the S_d-orbit
    DoubleIndex initial_form() const;
    DoubleIndex terminal_form() const;
    GeneratorWord word() const;
    static DoubleIndex from_word(const GeneratorWord& w);

    auto operator<=>(const DoubleIndex&) const = default;
};

// Element of O_q(M_{m,n}) in the basis of initial monomials M_{alpha,beta}.
class NCPolynomial {
public:
    NCPolynomial() = default;
    NCPolynomial(int m, int n) : m_(m), n_(n) {}
    static NCPolynomial one(int m, int n);
    static NCPolynomial generator(int m, int n, int i, int j);
    // M_{alpha,beta} for an initial double index
    static NCPolynomial monomial(int m, int n, const DoubleIndex& ab, const LaurentPoly& c = LaurentPoly(1));

    int rows() const { return m_; }
    int cols() const { return n_; }
    const std::map<DoubleIndex, LaurentPoly>& coeffs() const { return coeffs_; }
    LaurentPoly coefficient(const DoubleIndex& ab) const;
    bool is_zero() const { return coeffs_.empty(); }
    // requires an initial index
    void add(const DoubleIndex& ab, const LaurentPoly& c);

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator*(const LaurentPoly& c, const NCPolynomial& a);
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    bool operator==(const NCPolynomial&) const = default;

    // Terms in index order, e.g. "x[2,2]*x[1,1] - q^-1*x[2,1]*x[1,2]"; "0" when zero.
    std::string to_string() const;

private:
    int m_ = 0;
    int n_ = 0;
    std::map<DoubleIndex, LaurentPoly> coeffs_;
};

// Which out-of-order adjacent pair the rewriting fixes first.
enum class RewriteStrategy { Leftmost, Rightmost };

// Rewrites c * word to the initial monomial basis with the four defining relations.
NCPolynomial normal_form(int m, int n, const GeneratorWord& word, const LaurentPoly& c = LaurentPoly(1),
                         RewriteStrategy strategy = RewriteStrategy::Leftmost);
NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b);

// bar(M_{alpha,beta}) = M of the terminal member of the orbit, rewritten.
NCPolynomial bar_qcoord(const NCPolynomial& a);

// M_{alpha,beta} <-> M_A with beta = rho(A); mu has length m.
PowerVector identify_with_powers(const NCPolynomial& a, const Weight& mu, const Weight& nu);
NCPolynomial from_powers(const PowerVector& v);

// L_{alpha,beta} for an initial double index.
NCPolynomial dual_canonical_q(int m, int n, const DoubleIndex& ab);
// Expansion in the dual canonical basis, keyed by initial double index.
std::map<DoubleIndex, LaurentPoly> expand_dual_canonical(const NCPolynomial& a);

// D_beta = sum_w (-q)^{l(w)} x_{w1,beta_1} ... x_{wd,beta_d}, beta strictly increasing, d <= m.
NCPolynomial flag_minor(int m, int n, const MultiIndex& beta);

// Antilinear antiautomorphism O_q(M_{m,n}) -> O_q(M_{n,m}) with x_{i,j} -> x_{j,i}.
NCPolynomial transpose_tau(const NCPolynomial& a);

// Two-row tableau with entries a on row 2 and b on row 1, as sequences in a chosen order.
bool two_row_admissible(const std::vector<int>& a, const std::vector<int>& b);
// Reorders a and b so that the admissibility condition holds.
std::pair<std::vector<int>, std::vector<int>> two_row_order(std::vector<int> a, std::vector<int> b);
// Product of 2x2 minors (x_{2,a}x_{1,b} - q^-1 x_{2,b}x_{1,a}) for a_i > b_i, monomials
// x_{2,a_i}x_{1,b_i} otherwise, then the leftover x_{2,a_j} and x_{1,b_k}.
NCPolynomial two_row_closed_form(const std::vector<int>& a, const std::vector<int>& b, int n);

struct TwoRowComparison {
    bool admissible = false;
    NCPolynomial closed;
    NCPolynomial lifted;
    std::optional<int> q_power;  // closed = q^k lifted
};
TwoRowComparison two_row_dual_canonical(const std::vector<int>& a, const std::vector<int>& b, int n);

// Sums of terms built from integers, q, q^k and x[i,j], joined by '*' or spaces.
NCPolynomial parse_qcoord(std::string_view text, int m = 0, int n = 0);

}  // namespace canonica
