#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canonica {

class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Largest d accepted by enumerations that walk S_d or a full weight space.
int degree_limit();
void set_degree_limit(int d);
void check_degree(int d);

// Sequence of nonnegative parts, e.g. a composition or a partition.
struct Weight {
    std::vector<int> parts;

    Weight() = default;
    explicit Weight(std::vector<int> p) : parts(std::move(p)) {}
    Weight(std::initializer_list<int> p) : parts(p) {}

    int size() const;  // sum of parts
    int length() const { return static_cast<int>(parts.size()); }
    bool is_partition() const;
    // Conjugate partition; for compositions this sorts first.
    Weight conjugate() const;
    // Drops trailing zeros.
    Weight trimmed() const;
    // Position blocks: part i occupies [start(i), start(i)+parts[i]) in 1..d.
    std::vector<int> block_starts() const;

    std::string to_string() const;  // "3,2,2,1"
    static Weight parse(std::string_view text);

    auto operator<=>(const Weight&) const = default;
};

// a <= b in the dominance order; sizes must agree.
bool dominance_leq(const Weight& a, const Weight& b);

// Word in the alphabet {1,...,n}.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : entries(e) {}

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](std::size_t i) const { return entries[i]; }
    int& operator[](std::size_t i) { return entries[i]; }

    // Letter multiplicities over 1..n.
    Weight weight(int n) const;
    int max_letter() const;
    MultiIndex reversed() const;  // the right action of the longest element
    MultiIndex sorted() const;
    // Pairs i < j with entries[i] > entries[j].
    int inversions() const;

    std::string to_string() const;  // "1,2,3"
    static MultiIndex parse(std::string_view text);

    auto operator<=>(const MultiIndex&) const = default;
};

class Permutation {
public:
    Permutation() = default;
    // One-line notation with values 1..d.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int d);
    static Permutation longest(int d);
    // s_i, 1 <= i < d
    static Permutation simple(int d, int i);
    // Product s_{w[0]} s_{w[1]} ...
    static Permutation from_word(int d, const std::vector<int>& word);

    int degree() const { return static_cast<int>(img_.size()); }
    // x(i) for 1 <= i <= d
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return img_; }

    int length() const;
    Permutation inverse() const;
    // (x y)(i) = x(y(i))
    friend Permutation operator*(const Permutation& x, const Permutation& y);
    Permutation times_simple_right(int i) const;  // x s_i
    Permutation times_simple_left(int i) const;   // s_i x
    bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
    bool has_left_descent(int i) const;

    // Reduced word i_1..i_k with x = s_{i_1}...s_{i_k}, found by stripping right
    // descents; the smallest descent is stripped first unless largest_first.
    std::vector<int> reduced_word(bool largest_first = false) const;

    std::string to_string() const;  // "2 1 3"
    static Permutation parse(std::string_view text);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& x) const;
};
struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& a) const;
};

// (alpha . x)_i = alpha_{x(i)}
MultiIndex act(const MultiIndex& alpha, const Permutation& x);

int length(const Permutation& x);
Permutation longest_element(int d);
// Product of the block reversals of lambda.
Permutation longest_parabolic(const Weight& lambda);

// Standard Bruhat order: identity is the minimum.
bool bruhat_leq_standard(const Permutation& x, const Permutation& y);
// Opposite Bruhat order: the longest element is the minimum.
bool bruhat_leq_opposite(const Permutation& x, const Permutation& y);

// All of S_d in lexicographic one-line order.
std::vector<Permutation> all_permutations(int d);
// Generators s_i of the parabolic subgroup S_lambda.
std::vector<int> parabolic_generators(const Weight& lambda);
bool in_parabolic(const Permutation& x, const Weight& lambda);
// x is the minimal length element of S_lambda x.
bool is_min_coset_rep(const Permutation& x, const Weight& lambda);
// All minimal length representatives of S_lambda \ S_d, lexicographic.
std::vector<Permutation> min_coset_reps(const Weight& lambda);
// Splits y = u x with u in S_lambda and x minimal in S_lambda y.
std::pair<Permutation, Permutation> parabolic_factor(const Permutation& y, const Weight& lambda);
// The unique x minimal in its coset with alpha . x^{-1} weakly increasing.
Permutation index_to_coset(const MultiIndex& alpha);
// Maximal length representatives of the (S_nu, S_mu)-double cosets, via the
// bijection with nonnegative integer matrices with row sums mu and column sums nu.
std::vector<Permutation> max_double_coset_reps(const Weight& nu, const Weight& mu);
// S_nu x S_mu, optionally intersected with the minimal left coset representatives for nu.
std::vector<Permutation> double_coset_members(const Weight& nu, const Weight& mu, const Permutation& x,
                                              bool restrict_to_min_reps);

}  // namespace canonica
