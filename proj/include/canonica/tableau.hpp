#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canonica/symgroup.hpp"

namespace canonica {

enum class Orientation { Row, Col };

// Filling of a row diagram (lines are rows, bottom row first) or a column
// diagram (lines are columns, entries listed bottom to top).
struct Tableau {
    Orientation orientation = Orientation::Row;
    std::vector<std::vector<int>> lines;

    Tableau() = default;
    Tableau(Orientation o, std::vector<std::vector<int>> l) : orientation(o), lines(std::move(l)) {}

    Weight shape() const;
    Weight weight(int n) const;
    int size() const;
    int max_entry() const;
    // Reflection in the diagonal: rows become columns and vice versa.
    Tableau mirror() const { return {orientation == Orientation::Row ? Orientation::Col : Orientation::Row, lines}; }
    // Row orientation: rows weakly increase. Column orientation: columns strictly increase.
    bool is_standard_form() const;

    // Lines separated by ';', entries by ',', bottom first.
    std::string to_string() const;
    static Tableau parse(std::string_view text, Orientation o);

    auto operator<=>(const Tableau&) const = default;
};

struct TableauHash {
    std::size_t operator()(const Tableau& t) const;
};

// m x n matrix; entry (i,j) counts entries equal to j in row i.
struct MarginMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> data;

    MarginMatrix() = default;
    MarginMatrix(int m, int n) : rows(m), cols(n), data(static_cast<std::size_t>(m * n), 0) {}
    int& at(int i, int j) { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }
    int at(int i, int j) const { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }
    Weight row_sums() const;
    Weight col_sums() const;
    MarginMatrix transpose() const;
    bool operator==(const MarginMatrix&) const = default;
};

// Row reading: rows left to right, top row first.
MultiIndex row_reading(const Tableau& A);
// Column reading: columns top to bottom, leftmost column first.
MultiIndex column_reading(const Tableau& A);
// Inverses of the readings: cut the word into blocks of the given shape.
Tableau row_tableau_from_reading(const MultiIndex& rho, const Weight& mu);
Tableau col_tableau_from_reading(const MultiIndex& gamma, const Weight& mu);

// Row-standard tableau <-> matrix with row sums mu and column sums nu (n columns).
MarginMatrix to_matrix(const Tableau& A, int n);
Tableau from_matrix(const MarginMatrix& M);
// A -> d(rho(A)) w_d, a maximal length double coset representative.
Permutation to_double_coset(const Tableau& A);
Tableau from_double_coset(const Permutation& x, const Weight& mu, const Weight& nu);
// The orbit of (alpha, beta) under simultaneous permutation: row i of A holds the
// beta_k with alpha_k = i.
Tableau from_double_index(const MultiIndex& alpha, const MultiIndex& beta, const Weight& mu);
// Initial representative (alpha weakly decreasing) of the orbit of A.
std::pair<MultiIndex, MultiIndex> to_double_index(const Tableau& A);

// Robinson-Schensted row insertion tableau, as a row-shape tableau.
Tableau rsk_insert(const MultiIndex& alpha);
// R(A) = P(gamma(A)) for a column-shape tableau.
Tableau rectify(const Tableau& A);
// P(gamma(A)) has row shape equal to the conjugate of the shape of A.
bool is_std(const Tableau& A);
// Row-shape tableau of partition shape, row standard, columns strictly increasing.
bool is_dom(const Tableau& A);

// Crystal operators on words via reduced i-signatures.
std::optional<MultiIndex> crystal_e(const MultiIndex& alpha, int i);
std::optional<MultiIndex> crystal_f(const MultiIndex& alpha, int i);
int crystal_eps(const MultiIndex& alpha, int i);
int crystal_phi(const MultiIndex& alpha, int i);
// Tableau versions act through the row reading (row shape) or column reading (column shape).
std::optional<Tableau> crystal_e(const Tableau& A, int i);
std::optional<Tableau> crystal_f(const Tableau& A, int i);

// Order on Row(mu,nu) by partial sums of the matrices.
bool bruhat_leq_row(const Tableau& A, const Tableau& B);
// Same order via d(rho(.)) w_d and the opposite Bruhat order.
bool bruhat_leq_row_by_cosets(const Tableau& A, const Tableau& B);
// Same order via dominance of the weights of the bottom i rows.
bool bruhat_leq_row_by_row_weights(const Tableau& A, const Tableau& B);
// Same order via dominance of the shapes of the subtableaux of entries <= j.
bool bruhat_leq_row_by_entry_shapes(const Tableau& A, const Tableau& B);
// Order on Col(mu,nu): A <=' B iff A' >= B'.
bool bruhat_leq_col(const Tableau& A, const Tableau& B);

// Matrix-transpose bijection Row(mu,nu) -> Row(nu,mu).
Tableau transpose_tau(const Tableau& A, int n);

// Complete lists, lexicographic in the reading word.
std::vector<Tableau> enumerate_row(const Weight& mu, const Weight& nu);
std::vector<Tableau> enumerate_col(const Weight& mu, const Weight& nu);
std::vector<Tableau> enumerate_dom(const Weight& lambda, const Weight& nu);
std::vector<Tableau> enumerate_std(const Weight& mu, const Weight& nu);

// Minimal number of adjacent transpositions turning word a into word b (same multiset).
int rearrangement_distance(const std::vector<int>& a, const std::vector<int>& b);
// All B obtained by permuting entries within lines, with the distance to A.
std::vector<std::pair<Tableau, int>> line_orbit(const Tableau& A);
// l(A,B) / l'(A,B): summed per line.
int line_distance(const Tableau& A, const Tableau& B);

}  // namespace canonica
