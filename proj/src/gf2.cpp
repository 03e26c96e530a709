#include "stopred/gf2.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stopred {

BitWord BitWord::from_string(const std::string& bits) {
    BitWord v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitWord::from_string: expected '0'/'1'");
    }
    return v;
}

BitWord BitWord::from_support(std::size_t n, const std::vector<std::size_t>& ones) {
    BitWord v(n);
    for (std::size_t i : ones) {
        if (i >= n) throw std::out_of_range("BitWord::from_support: index out of range");
        v.set(i, true);
    }
    return v;
}

std::size_t BitWord::weight() const {
    std::size_t w = 0;
    for (uint64_t x : w_) w += std::popcount(x);
    return w;
}

bool BitWord::any() const {
    for (uint64_t x : w_)
        if (x) return true;
    return false;
}

BitWord& BitWord::operator^=(const BitWord& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitWord xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitWord::lex_less(const BitWord& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitWord::lex_less: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) {
        uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            uint64_t low = d & (~d + 1);
            // first differing bit: the word with a 0 there is smaller
            return (w_[i] & low) == 0;
        }
    }
    return false;
}

bool BitWord::dot(const BitWord& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitWord::dot: length mismatch");
    uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1u;
}

std::vector<std::size_t> BitWord::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

std::string BitWord::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitWord cyclic_shift(const BitWord& v, std::size_t s) {
    std::size_t n = v.size();
    s %= n;
    BitWord r(n);
    for (std::size_t i = 0; i < n; ++i)
        if (v.get(i)) r.set((i + s) % n, true);
    return r;
}

BitMatrix::BitMatrix(std::vector<BitWord> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("BitMatrix: no rows");
    cols_ = rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
}

void BitMatrix::append_row(const BitWord& r) {
    if (rows_.empty())
        cols_ = r.size();
    else if (r.size() != cols_)
        throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    rows_.push_back(r);
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitWord> basis;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitWord x = m.row(i);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (x.get(lead[b])) x ^= basis[b];
        auto sup = x.support();
        if (!sup.empty()) {
            basis.push_back(x);
            lead.push_back(sup.front());
        }
    }
    return basis.size();
}

std::pair<BitMatrix, std::vector<std::size_t>> rref(const BitMatrix& m) {
    std::vector<BitWord> rows = m.row_list();
    std::size_t nrows = rows.size(), ncols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && !rows[p].get(c)) ++p;
        if (p == nrows) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < nrows; ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    return {BitMatrix(std::move(rows)), pivots};
}

BitMatrix nullspace_basis(const BitMatrix& m) {
    auto [r, pivots] = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitWord> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitWord v(n);
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.row(i).get(f)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    BitMatrix out(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) out.row(i) = basis[i];
    return out;
}

BitWord mul_vec_mat(const BitWord& x, const BitMatrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("mul_vec_mat: dimension mismatch");
    BitWord y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (x.get(i)) y ^= m.row(i);
    return y;
}

bool is_zero_syndrome(const BitMatrix& h, const BitWord& v) {
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (h.row(i).dot(v)) return false;
    return true;
}

void for_each_span_word(const BitMatrix& basis, const std::function<void(const BitWord&)>& fn) {
    std::size_t dim = basis.rows();
    if (dim > kSpanDimGuard) throw std::length_error("for_each_span_word: dimension exceeds guard of 24");
    BitWord cur(basis.cols());
    fn(cur);
    uint64_t total = uint64_t(1) << dim;
    for (uint64_t g = 1; g < total; ++g) {
        // Gray code: word at step g differs from its predecessor in basis row ctz(g)
        cur ^= basis.row(std::countr_zero(g));
        fn(cur);
    }
}

BigInt WeightEnumerator::total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

WeightEnumerator weight_enumerator(const BitMatrix& basis) {
    WeightEnumerator e;
    e.n = basis.cols();
    std::vector<uint64_t> counts(e.n + 1, 0);
    for_each_span_word(basis, [&](const BitWord& w) { ++counts[w.weight()]; });
    e.counts.assign(counts.begin(), counts.end());
    return e;
}

WeightEnumerator macwilliams(const WeightEnumerator& dual_enum, std::size_t n, std::size_t k) {
    if (dual_enum.n != n) throw std::invalid_argument("macwilliams: block length mismatch");
    if (dual_enum.total() != pow2(n - k)) throw std::invalid_argument("macwilliams: enumerator total is not 2^(n-k)");

    // B_w = 2^{-(n-k)} sum_v A_v K_w(v), K_w(v) = sum_j (-1)^j C(v,j) C(n-v,w-j)
    WeightEnumerator out;
    out.n = n;
    out.counts.assign(n + 1, 0);
    for (std::size_t w = 0; w <= n; ++w) {
        BigInt acc = 0;
        for (std::size_t v = 0; v <= n; ++v) {
            if (dual_enum.counts[v] == 0) continue;
            BigInt kr = 0;
            for (std::size_t j = 0; j <= w; ++j) {
                BigInt term = binom(static_cast<long long>(v), static_cast<long long>(j)) *
                              binom(static_cast<long long>(n - v), static_cast<long long>(w - j));
                if (j & 1)
                    kr -= term;
                else
                    kr += term;
            }
            acc += dual_enum.counts[v] * kr;
        }
        BigInt denom = pow2(n - k);
        if (acc % denom != 0) throw std::runtime_error("macwilliams: transform not integral; inconsistent input");
        out.counts[w] = acc / denom;
    }
    return out;
}

BitMatrix read_matrix_text(std::istream& in) {
    std::vector<BitWord> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::string bits;
        for (char c : line) {
            if (c == '0' || c == '1')
                bits.push_back(c);
            else if (c != ' ' && c != '\t')
                throw std::invalid_argument("matrix text: unexpected character");
        }
        if (!bits.empty()) rows.push_back(BitWord::from_string(bits));
    }
    if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
    return BitMatrix(std::move(rows));
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open matrix file: " + path);
    return read_matrix_text(f);
}

void write_matrix_text(std::ostream& out, const BitMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
}

void write_matrix_file(const std::string& path, const BitMatrix& m) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open matrix file for writing: " + path);
    write_matrix_text(f, m);
}

}  // namespace stopred
