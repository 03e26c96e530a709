#ifndef STOPRED_GF2_HPP
#define STOPRED_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stopred/bigint.hpp"

namespace stopred {

/// Packed bit vector over GF(2). Bit 0 is the leftmost printed symbol;
/// bits at index >= size() are always zero in the packed words.
class BitWord {
  public:
    BitWord() = default;
    explicit BitWord(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitWord from_string(const std::string& bits);
    static BitWord from_support(std::size_t n, const std::vector<std::size_t>& ones);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t bit = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= bit;
        else
            w_[i >> 6] &= ~bit;
    }

    std::size_t weight() const;
    bool any() const;

    BitWord& operator^=(const BitWord& o);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
    bool operator==(const BitWord& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitWord& o) const { return !(*this == o); }

    /// Lexicographic order on the bit string b0 b1 ... b_{n-1}, with 0 < 1.
    bool lex_less(const BitWord& o) const;

    /// GF(2) inner product; both operands must have equal length.
    bool dot(const BitWord& o) const;

    std::vector<std::size_t> support() const;
    std::string to_string() const;

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitWordHash {
    std::size_t operator()(const BitWord& v) const {
        std::size_t h = std::hash<std::size_t>{}(v.size());
        for (uint64_t x : v.words()) h ^= std::hash<uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

/// Index i of the result carries bit (i - s mod n) of the input.
BitWord cyclic_shift(const BitWord& v, std::size_t s);

/// Row-major binary matrix: an ordered list of equal-length BitWords.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitWord(cols)) {}
    explicit BitMatrix(std::vector<BitWord> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitWord& row(std::size_t i) const { return rows_[i]; }
    BitWord& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitWord>& row_list() const { return rows_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    void append_row(const BitWord& r);

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

  private:
    std::size_t cols_ = 0;
    std::vector<BitWord> rows_;
};

/// GF(2) row rank.
std::size_t rank(const BitMatrix& m);

/// Reduced row-echelon form together with the pivot column list.
/// Zero rows are kept so the row count is preserved.
std::pair<BitMatrix, std::vector<std::size_t>> rref(const BitMatrix& m);

/// Basis of {x : M x^T = 0}; row count is cols - rank.
BitMatrix nullspace_basis(const BitMatrix& m);

/// y = x * M over GF(2), x indexed over the rows of M.
BitWord mul_vec_mat(const BitWord& x, const BitMatrix& m);

bool is_zero_syndrome(const BitMatrix& h, const BitWord& v);

constexpr std::size_t kSpanDimGuard = 24;

/// Visits all 2^dim span words exactly once, in Gray-code order starting
/// from the all-zero word. Throws if the basis dimension exceeds the guard.
void for_each_span_word(const BitMatrix& basis, const std::function<void(const BitWord&)>& fn);

struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<BigInt> counts;  // counts[w] = A_w, w = 0..n

    BigInt total() const;
};

WeightEnumerator weight_enumerator(const BitMatrix& basis);

/// MacWilliams transform: from the enumerator of an (n, n-k) code to the
/// enumerator of its k-dimensional dual. Exact integer arithmetic.
WeightEnumerator macwilliams(const WeightEnumerator& dual_enum, std::size_t n, std::size_t k);

// Matrix text format: one row of '0'/'1' per line, '#' comments and blank
// lines ignored. Bit-exact round trip.
BitMatrix read_matrix_text(std::istream& in);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix_text(std::ostream& out, const BitMatrix& m);
void write_matrix_file(const std::string& path, const BitMatrix& m);

}  // namespace stopred

#endif
