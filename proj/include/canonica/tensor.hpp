#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "canonica/hecke.hpp"
#include "canonica/laurent.hpp"
#include "canonica/lift.hpp"
#include "canonica/symgroup.hpp"

namespace canonica {

// M: standard basis M_alpha = v_{alpha_1} (x) ... (x) v_{alpha_d}.
// Mstar: M*_alpha = M_{alpha reversed}.
enum class TensorBasis { M, Mstar };

struct TensorVector {
    int n = 0;
    int d = 0;
    TensorBasis basis = TensorBasis::M;
    std::map<MultiIndex, LaurentPoly> coeffs;

    TensorVector() = default;
    TensorVector(int n_, int d_, TensorBasis b) : n(n_), d(d_), basis(b) {}
    static TensorVector basis_vector(const MultiIndex& alpha, int n, TensorBasis b);

    LaurentPoly coefficient(const MultiIndex& alpha) const;
    void add(const MultiIndex& alpha, const LaurentPoly& c);
    bool is_zero() const { return coeffs.empty(); }
    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    friend TensorVector operator*(const LaurentPoly& c, const TensorVector& v);
    bool operator==(const TensorVector&) const = default;
};

// The words of weight nu over the alphabet 1..len(nu), lexicographic, with the
// Hecke action and bar involution in index form.
class WeightSpace {
public:
    explicit WeightSpace(Weight nu);
    static std::shared_ptr<const WeightSpace> get(const Weight& nu);

    const Weight& weight() const { return nu_; }
    int alphabet() const { return nu_.length(); }
    int degree() const { return d_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<MultiIndex>& words() const { return words_; }
    std::size_t index_of(const MultiIndex& alpha) const;
    // index of the word with positions i, i+1 exchanged
    std::size_t swapped(std::size_t k, int i) const { return swap_[k * static_cast<std::size_t>(d_ - 1) + static_cast<std::size_t>(i - 1)]; }
    std::size_t reversed(std::size_t k) const { return rev_[k]; }
    int inversions(std::size_t k) const { return inv_[k]; }

    SparseColumn act_generator(const SparseColumn& v, int i) const;
    SparseColumn act_generator_inverse(const SparseColumn& v, int i) const;
    // bar(M_alpha) in the M basis
    SparseColumn bar_basis(std::size_t k) const;
    // bar(M*_alpha) in the M* basis
    SparseColumn bar_star_basis(std::size_t k) const;

    // L_alpha over M (Dual) and L*_alpha over M* (Canonical).
    const BarLift& dual_lift(bool alternate_order = false) const;
    const BarLift& canonical_lift(bool alternate_order = false) const;

private:
    Weight nu_;
    int d_;
    std::vector<MultiIndex> words_;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index_;
    std::vector<std::size_t> swap_;
    std::vector<std::size_t> rev_;
    std::vector<int> inv_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, bool>, std::unique_ptr<BarLift>> lifts_;
};

TensorVector to_basis(const TensorVector& v, TensorBasis b);
// Right action of H_i; the result is in the M basis.
TensorVector hecke_act(const TensorVector& v, int i);
TensorVector hecke_act_word(const TensorVector& v, const std::vector<int>& word);
TensorVector hecke_act_element(const TensorVector& v, const HeckeElement& h);
// Bar involution, returned in the basis of the input.
TensorVector bar_tensor(const TensorVector& v);
TensorVector bar_tensor_star(const TensorVector& v);

TensorVector dual_canonical(const MultiIndex& alpha, int n);
TensorVector canonical(const MultiIndex& alpha, int n);
// l_{gamma,alpha}: coefficient of M_gamma in L_alpha; l*_{gamma,alpha}: of M*_gamma in L*_alpha.
LaurentPoly dual_canonical_coefficient(const MultiIndex& gamma, const MultiIndex& alpha, int n);
LaurentPoly canonical_coefficient(const MultiIndex& gamma, const MultiIndex& alpha, int n);

// Pairing with (M_alpha, bar(M*_beta)) = delta.
LaurentPoly bilinear_form(const TensorVector& v, const TensorVector& w);

}  // namespace canonica
