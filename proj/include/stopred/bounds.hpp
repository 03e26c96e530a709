#ifndef STOPRED_BOUNDS_HPP
#define STOPRED_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "stopred/bigint.hpp"
#include "stopred/gf2.hpp"
#include "stopred/stopping.hpp"

namespace stopred {

/// One evaluated bound. An empty value means the bound is vacuous for the
/// given parameters ("no information"), never silently clamped.
struct BoundResult {
    enum class Kind { lower, upper };
    std::optional<BigInt> value;
    Kind kind = Kind::lower;
    std::string target;      // which rho_l or mu_l
    std::string provenance;  // which theorem / equation

    bool vacuous() const { return !value.has_value(); }
};

/// Union-bound lower bound on rho_l from row-weight counting.
BoundResult lb_schwartz_vardy(std::size_t n, std::size_t k, std::size_t d_dual, std::size_t ell);

/// Bonferroni lower bound on rho_l for constant row weight omega; profiles
/// supply candidate pairwise intersection numbers and the largest pairwise
/// resolved count is used.
BoundResult lb_bonferroni_constweight(std::size_t n, std::size_t omega,
                                      const std::vector<IntersectionProfile>& profiles, std::size_t ell);

/// Local-lemma upper bound on rho_l; valid for ell <= floor((d+1)/2).
BoundResult ub_lll(std::size_t n, std::size_t k, std::size_t d, std::size_t ell);

/// High-probability local-lemma upper bound (failure probability eps),
/// including the n-k-ell+1 rank-completion rows.
BoundResult ub_lll_hp(std::size_t n, std::size_t k, std::size_t d, std::size_t ell, double eps);

/// Row-sum closure upper bound: sum_{i=1}^{ell-2} C(r, i). Pass r = n-k for
/// the base construction or r = K (minimum subcode dimension) for the
/// subcode variant.
BoundResult ub_sum_rows(std::size_t r, std::size_t ell);

/// Lower bound on the rows mu_l of a cyclic matrix generated by the QR
/// idempotent; n prime with n = 3 (mod 4).
BoundResult lb_mu_qr(std::size_t n, std::size_t ell);

/// Lower bound on mu_l for a cyclic matrix generated by a cyclic
/// difference set row with parameters (n, k, lambda).
BoundResult lb_mu_cds(std::size_t n, std::size_t k, std::size_t lambda, std::size_t ell);

/// Schoenheim covering bound: nested ceilings over the d-1 fractions
/// (n-i)/(k-i), evaluated innermost-out.
BoundResult schoenheim(std::size_t n, std::size_t k, std::size_t d);

/// Union bound on the ML frame error rate: sum_{w>=1} A_w ep^w.
double ml_union_bound_fer(const WeightEnumerator& enumerator, double ep);

}  // namespace stopred

#endif
