#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "canonica/integer.hpp"

namespace canonica {

// Sparse Laurent polynomial in q with integer coefficients. Terms are kept in
// ascending exponent order and no stored coefficient is zero.
class LaurentPoly {
public:
    struct Term {
        int exp;
        Integer coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;
    LaurentPoly(Integer c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exp, Integer coeff = 1);
    // q^k
    static LaurentPoly q(int k = 1) { return monomial(k); }
    // Builds from (exp, coeff) pairs in any order; duplicates are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exponent() const;  // requires nonzero
    int max_exponent() const;  // requires nonzero
    Integer coefficient(int exp) const;

    LaurentPoly bar() const;
    bool is_bar_invariant() const { return *this == bar(); }
    // Multiply by q^k.
    LaurentPoly shift(int k) const;
    // p(q^k); k may be negative.
    LaurentPoly substitute_power(int k) const;
    // Terms with exponent < 0, resp. > 0.
    LaurentPoly negative_part() const;
    LaurentPoly positive_part() const;
    bool has_nonnegative_coefficients() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const = default;

    // Canonical text: descending exponents, e.g. "q^3+q", "2*q^2", "q^-1", "0".
    std::string to_string(char var = 'q') const;
    // Accepts the canonical form plus juxtaposed coefficients ("2q^2") and spaces.
    static LaurentPoly parse(std::string_view text, char var = 'q');

private:
    void add_scaled(const LaurentPoly& o, int sign);

    std::vector<Term> terms_;
};

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
LaurentPoly quantum_integer(int n);
// [n]! = [n][n-1]...[1]
LaurentPoly quantum_factorial(int n);
// Exact quotient p / r; throws std::domain_error when r does not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& r);

}  // namespace canonica
