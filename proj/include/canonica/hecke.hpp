#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "canonica/laurent.hpp"
#include "canonica/lift.hpp"
#include "canonica/symgroup.hpp"

namespace canonica {

// Element of the Hecke algebra H_d in the standard basis H_x.
class HeckeElement {
public:
    explicit HeckeElement(int d = 0) : d_(d) {}
    static HeckeElement basis(const Permutation& x);
    static HeckeElement generator(int d, int i);

    int degree() const { return d_; }
    const std::map<Permutation, LaurentPoly>& coeffs() const { return coeffs_; }
    LaurentPoly coefficient(const Permutation& x) const;
    void add(const Permutation& x, const LaurentPoly& c);
    bool is_zero() const { return coeffs_.empty(); }

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a);
    bool operator==(const HeckeElement& o) const { return d_ == o.d_ && coeffs_ == o.coeffs_; }

private:
    int d_;
    std::map<Permutation, LaurentPoly> coeffs_;
};

// a H_i and a H_i^{-1}
HeckeElement mul_generator(const HeckeElement& a, int i);
HeckeElement mul_generator_inverse(const HeckeElement& a, int i);
// Right multiplication by generators along reduced words of the basis elements of b.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b, bool largest_first_words = false);
// H_i^{-1} = H_i + (q - q^{-1})
HeckeElement generator_inverse(int d, int i);
// Antilinear, bar(H_x) = (H_{x^{-1}})^{-1}.
HeckeElement hecke_bar(const HeckeElement& a);
// Linear antiautomorphism with H_i -> H_{d-i}.
HeckeElement tau_hecke(const HeckeElement& a);
// X_d = sum q^{l(w_d)-l(w)} H_w and Y_d = sum (-q)^{l(w)-l(w_d)} H_w.
HeckeElement symmetrizer_x(int d);
HeckeElement symmetrizer_y(int d);

// Vector of the induced module M^lambda in the basis M_x, x in D_lambda.
struct ParabolicVector {
    Weight lambda;
    std::map<Permutation, LaurentPoly> coeffs;
    bool operator==(const ParabolicVector&) const = default;
};

// M^lambda = 1_lambda H_d with 1_lambda H_i = q^{-1} 1_lambda for H_i in H_lambda.
class ParabolicModule {
public:
    explicit ParabolicModule(Weight lambda);
    // Shared instance per lambda; built once.
    static std::shared_ptr<const ParabolicModule> get(const Weight& lambda);

    const Weight& weight() const { return lambda_; }
    int degree() const { return d_; }
    // D_lambda in lexicographic order.
    const std::vector<Permutation>& basis() const { return basis_; }
    std::size_t index_of(const Permutation& x) const;
    bool contains(const Permutation& x) const { return index_.count(x) > 0; }

    SparseColumn act_generator(const SparseColumn& v, int i) const;
    SparseColumn act_generator_inverse(const SparseColumn& v, int i) const;
    // bar(M_x) = M_1 H_{i_1}^{-1} ... H_{i_k}^{-1} along a reduced word of x.
    SparseColumn bar_basis(std::size_t x) const;
    // 1_lambda (x) h
    ParabolicVector project(const HeckeElement& h) const;
    ParabolicVector to_vector(const SparseColumn& v) const;
    SparseColumn from_vector(const ParabolicVector& v) const;

    // Dual direction gives the q^{-1}-lattice elements, Canonical the q-lattice ones.
    // alternate_order uses the reversed tie-break inside each length.
    const BarLift& lift(LiftDirection dir, bool alternate_order = false) const;
    // Coefficient polynomials n_{x,y}(q) and m_{x,y}(q).
    LaurentPoly n_poly(const Permutation& x, const Permutation& y) const;
    LaurentPoly m_poly(const Permutation& x, const Permutation& y, bool alternate_order = false) const;

private:
    Weight lambda_;
    int d_;
    std::vector<Permutation> basis_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, bool>, std::unique_ptr<BarLift>> lifts_;
};

// bar on M^lambda by expanding bar(H_x) in H_d and projecting.
ParabolicVector parabolic_bar(const ParabolicVector& v);

// Classical Kazhdan-Lusztig polynomial P_{x,y}(t), standard Bruhat convention
// (nonzero only for x <= y). Computed from the canonical basis of the parabolic
// module cut out by the left descents of y; memoized.
LaurentPoly kl_polynomial(const Permutation& x, const Permutation& y);
// Same polynomial read from the regular module M^{(1,...,1)}.
LaurentPoly kl_polynomial_regular(const Permutation& x, const Permutation& y, bool alternate_order = false);

}  // namespace canonica
