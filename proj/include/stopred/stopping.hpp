#ifndef STOPRED_STOPPING_HPP
#define STOPRED_STOPPING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stopred/bigint.hpp"
#include "stopred/gf2.hpp"

namespace stopred {

/// Thrown when an exhaustive routine would exceed its operation-count guard.
class GuardExceeded : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// True iff no row of h restricted to the index set has weight exactly one.
bool is_stopping_set(const BitMatrix& h, const std::vector<std::size_t>& index_set);

// --- colexicographic subset enumeration --------------------------------------

/// Colex rank of an ascending subset: sum_i C(s_i, i+1).
uint64_t colex_rank(const std::vector<std::size_t>& subset);
std::vector<std::size_t> colex_unrank(uint64_t rank, std::size_t sigma);

/// Column-mask view of a matrix for fast restriction-weight tests.
class ColumnMasks {
  public:
    explicit ColumnMasks(const BitMatrix& m);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words() const { return words_; }
    const uint64_t* col(std::size_t j) const { return &data_[j * words_]; }

  private:
    std::size_t rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

/// Counts sigma-subsets that are stopping sets of h. Guard: C(n, sigma)
/// must not exceed 10^8 subsets.
uint64_t count_unresolved(const BitMatrix& h, std::size_t sigma, unsigned threads = 0);

/// Smallest stopping-set size in 1..cap, or nullopt when every size up to
/// cap is clear (distance at least cap+1).
std::optional<std::size_t> stopping_distance(const BitMatrix& h, std::size_t cap, unsigned threads = 0);

/// Visits every stopping sigma-set. Serial; intended for small searches.
void for_each_stopping_set(const BitMatrix& h, std::size_t sigma,
                           const std::function<void(const std::vector<std::size_t>&)>& fn);

// --- resolution counting ------------------------------------------------------

/// Stopping sets of size sigma resolved by one row of weight w: w*C(n-w, sigma-1).
BigInt resolved_by_row(std::size_t n, std::size_t w, std::size_t sigma);

struct IntersectionProfile {
    std::size_t kappa = 0;
    std::size_t oo = 0, oz = 0, zo = 0, zz = 0;
};

/// Stopping sets resolved jointly by a row pair with the given
/// intersection numbers: oo*C(zz, sigma-1) + oz*zo*C(zz, sigma-2).
BigInt resolved_by_pair(const IntersectionProfile& p, std::size_t sigma);

/// Symbol-pair counts between h and its kappa-shift: positions (a, a+kappa mod n).
IntersectionProfile xy_kappa(const BitWord& h, std::size_t kappa);

/// Signed inclusion-exclusion partial sums S_{sigma,1..j_max}; with
/// j_max = m the alternating sum is the exact resolved count.
/// Guard: (sum_j C(m,j)) * C(n,sigma) evaluations <= 10^7.
std::vector<BigInt> pie_union_exact(const BitMatrix& h, std::size_t sigma, std::size_t j_max);

/// Bonferroni upper bound on the number of stopping sets of size sigma
/// resolved by m cyclic shifts of h (floor of the exact rational value).
BigInt bonferroni_upper_cyclic(const BitWord& h, std::size_t m, std::size_t sigma);

/// Marks, for every subset mask of an n <= 24 column set, whether it
/// contains a nonempty stopping set of h of size <= max_size (0 = no size
/// cap). Bit per mask; index = column bitmask.
std::vector<uint64_t> small_stopping_closure(const BitMatrix& h, std::size_t max_size);
inline bool closure_bit(const std::vector<uint64_t>& cl, uint32_t mask) {
    return (cl[mask >> 6] >> (mask & 63)) & 1u;
}

}  // namespace stopred

#endif
