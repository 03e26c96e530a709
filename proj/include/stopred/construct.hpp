#ifndef STOPRED_CONSTRUCT_HPP
#define STOPRED_CONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "stopred/codes.hpp"
#include "stopred/gf2.hpp"

namespace stopred {

struct ConstructionReport {
    BitMatrix matrix;
    std::size_t rows = 0;
    std::optional<std::size_t> stopping_dist;  // unset when >= checked_to + 1
    std::size_t checked_to = 0;                // largest size scanned
    std::string method;
};

/// m consecutive cyclic shifts of a cog; the result must have the expected
/// rank (n - k of the target code).
ConstructionReport cyclic_pcm(const BitWord& cog, std::size_t m, std::size_t expected_rank);

/// Appends the overall parity position to every row; each input row must be
/// a dual codeword of the base code so the output rows lie in the dual of
/// the extension. Rank must be preserved.
BitMatrix extend_with_parity(const BitMatrix& h_cyclic, const Code& base_code);

struct CogSearchRow {
    Cog cog;
    std::vector<std::optional<std::size_t>> min_rows;  // per target ell; nullopt = none
};
struct CogSearchResult {
    std::vector<std::size_t> targets;  // the ell values searched
    std::vector<CogSearchRow> per_cog;
    std::vector<std::optional<std::size_t>> global_min;  // per target ell
};

/// For each cog and each target ell, the least m in [n-k, m_max] whose
/// cyclic matrix reaches stopping distance >= ell (stopping distance is
/// monotone in m, so binary search over m is sound).
CogSearchResult search_min_rows(const std::vector<Cog>& cogs, std::size_t expected_rank,
                                const std::vector<std::size_t>& targets, std::size_t m_max, unsigned threads = 0);

/// Generic (m_bar, sigma_bar) erasure-correcting set: all length-m_bar
/// combination vectors with first coordinate 1 and weight <= sigma_bar.
BitMatrix generic_erasure_set(std::size_t m_bar, std::size_t sigma_bar);

/// Rows a*H over GF(2) for each row a of A.
BitMatrix apply_generic_set(const BitMatrix& a, const BitMatrix& h);

struct GeneralizedHtReport {
    BitMatrix matrix;             // the full construction
    std::size_t rows_distance4;   // rows needed for stopping distance >= 4
    std::size_t rows_distance5;   // rows needed for stopping distance >= 5
    std::size_t step1_rows, step2_rows, step3_rows, step4_rows;
};

/// Generalized Hollmann-Tolhuizen construction for a double-error
/// correcting BCH code of length 2^m - 1 (exponents {1,3}).
GeneralizedHtReport generalized_ht_bch(const Field2m& field, unsigned threads = 0);

/// All nonzero sums of at most ell-2 distinct rows of h.
BitMatrix closure_sums(const BitMatrix& h, std::size_t ell);

}  // namespace stopred

#endif
