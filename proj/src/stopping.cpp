#include "stopred/stopping.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "stopred/parallel.hpp"

namespace stopred {

bool is_stopping_set(const BitMatrix& h, const std::vector<std::size_t>& index_set) {
    if (index_set.empty()) throw std::invalid_argument("is_stopping_set: empty index set");
    for (std::size_t j : index_set)
        if (j >= h.cols()) throw std::out_of_range("is_stopping_set: column index out of range");
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t w = 0;
        for (std::size_t j : index_set) {
            if (h.get(i, j) && ++w > 1) break;
        }
        if (w == 1) return false;
    }
    return true;
}

uint64_t colex_rank(const std::vector<std::size_t>& subset) {
    uint64_t r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) r += binom_u64(long(subset[i]), long(i + 1));
    return r;
}

std::vector<std::size_t> colex_unrank(uint64_t rank, std::size_t sigma) {
    std::vector<std::size_t> s(sigma);
    for (std::size_t i = sigma; i-- > 0;) {
        std::size_t c = i;  // smallest candidate for position i is i
        while (binom_u64(long(c + 1), long(i + 1)) <= rank) ++c;
        s[i] = c;
        rank -= binom_u64(long(c), long(i + 1));
    }
    return s;
}

ColumnMasks::ColumnMasks(const BitMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), words_((m.rows() + 63) / 64), data_(cols_ * words_, 0) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (m.get(i, j)) data_[j * words_ + (i >> 6)] |= uint64_t(1) << (i & 63);
}

namespace {

constexpr std::size_t kMaxStateWords = 8;  // up to 512 rows

// Incremental exactly-one state over rows: ge1 = rows covered at least
// once, ge2 = rows covered at least twice. A column set is a stopping set
// iff ge1 & ~ge2 == 0.
struct ScanState {
    std::size_t words;
    uint64_t ge1[kMaxStateWords];
    uint64_t ge2[kMaxStateWords];

    explicit ScanState(std::size_t w) : words(w) {
        std::fill(ge1, ge1 + words, 0);
        std::fill(ge2, ge2 + words, 0);
    }
    void add(const uint64_t* col) {
        for (std::size_t i = 0; i < words; ++i) {
            ge2[i] |= ge1[i] & col[i];
            ge1[i] |= col[i];
        }
    }
    bool stopping_with(const uint64_t* col) const {
        for (std::size_t i = 0; i < words; ++i) {
            uint64_t g1 = ge1[i] | col[i];
            uint64_t g2 = ge2[i] | (ge1[i] & col[i]);
            if (g1 & ~g2) return false;
        }
        return true;
    }
    bool stopping() const {
        for (std::size_t i = 0; i < words; ++i)
            if (ge1[i] & ~ge2[i]) return false;
        return true;
    }
};

// Enumerates sigma-subsets in colex order: the outermost level picks the
// largest element, so parallel tasks can fix the top one or two elements.
struct Scanner {
    const ColumnMasks& cm;
    std::size_t sigma;
    std::atomic<bool>* stop = nullptr;  // optional early-exit flag
    std::function<void(const std::vector<std::size_t>&)>* visitor = nullptr;
    std::vector<std::size_t> cur;  // elements chosen so far, highest first

    Scanner(const ColumnMasks& c, std::size_t s) : cm(c), sigma(s) { cur.reserve(s); }

    // Counts stopping subsets of {0..limit-1} of size `level+1` extending the
    // current state; `level` counts down, the innermost level is 0.
    uint64_t recurse(ScanState& st, std::size_t level, std::size_t limit) {
        uint64_t cnt = 0;
        if (level == 0) {
            for (std::size_t j = 0; j < limit; ++j) {
                if (st.stopping_with(cm.col(j))) {
                    ++cnt;
                    if (visitor) {
                        cur.push_back(j);
                        std::vector<std::size_t> s(cur.rbegin(), cur.rend());
                        (*visitor)(s);
                        cur.pop_back();
                    }
                    if (stop) {
                        stop->store(true, std::memory_order_relaxed);
                        return cnt;
                    }
                }
            }
            return cnt;
        }
        for (std::size_t j = level; j < limit; ++j) {
            ScanState sub = st;
            sub.add(cm.col(j));
            cur.push_back(j);
            cnt += recurse(sub, level - 1, j);
            cur.pop_back();
            if (stop && stop->load(std::memory_order_relaxed)) return cnt;
        }
        return cnt;
    }
};

uint64_t scan_count(const ColumnMasks& cm, std::size_t sigma, unsigned threads, std::atomic<bool>* stop,
                    std::function<void(const std::vector<std::size_t>&)>* visitor) {
    std::size_t n = cm.cols();
    if (sigma == 0 || sigma > n) return 0;
    if (cm.words() > kMaxStateWords) throw GuardExceeded("subset scan: too many rows (over 512)");

    if (sigma == 1 || visitor || threads == 1) {
        Scanner s(cm, sigma);
        s.stop = stop;
        s.visitor = visitor;
        ScanState st(cm.words());
        return s.recurse(st, sigma - 1, n);
    }

    // Parallel: fix the top element (and the second for large sigma) per task,
    // larger tasks first.
    struct Task {
        std::size_t top, second;  // second == SIZE_MAX when only top is fixed
        uint64_t size;
    };
    bool two_level = sigma >= 3 && n <= 64;
    std::vector<Task> tasks;
    for (std::size_t c = sigma - 1; c < n; ++c) {
        if (!two_level) {
            tasks.push_back({c, SIZE_MAX, binom_u64(long(c), long(sigma - 1))});
        } else {
            for (std::size_t c2 = sigma - 2; c2 < c; ++c2)
                tasks.push_back({c, c2, binom_u64(long(c2), long(sigma - 2))});
        }
    }
    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) { return a.size > b.size; });

    std::atomic<uint64_t> total{0};
    parallel_tasks(
        tasks.size(),
        [&](std::size_t t) {
            if (stop && stop->load(std::memory_order_relaxed)) return;
            const Task& tk = tasks[t];
            Scanner s(cm, sigma);
            s.stop = stop;
            ScanState st(cm.words());
            st.add(cm.col(tk.top));
            uint64_t c;
            if (tk.second == SIZE_MAX) {
                c = s.recurse(st, sigma - 2, tk.top);
            } else {
                st.add(cm.col(tk.second));
                c = sigma == 2 ? (st.stopping() ? 1 : 0) : s.recurse(st, sigma - 3, tk.second);
            }
            total.fetch_add(c, std::memory_order_relaxed);
        },
        threads);
    return total.load();
}

}  // namespace

uint64_t count_unresolved(const BitMatrix& h, std::size_t sigma, unsigned threads) {
    if (binom(long(h.cols()), long(sigma)) > BigInt(100000000))
        throw GuardExceeded("count_unresolved: C(n,sigma) exceeds the 10^8 enumeration guard");
    ColumnMasks cm(h);
    return scan_count(cm, sigma, threads, nullptr, nullptr);
}

std::optional<std::size_t> stopping_distance(const BitMatrix& h, std::size_t cap, unsigned threads) {
    if (cap > h.cols()) throw std::invalid_argument("stopping_distance: cap exceeds the block length");
    ColumnMasks cm(h);
    for (std::size_t sigma = 1; sigma <= cap; ++sigma) {
        std::atomic<bool> found{false};
        scan_count(cm, sigma, threads, &found, nullptr);
        if (found.load()) return sigma;
    }
    return std::nullopt;
}

void for_each_stopping_set(const BitMatrix& h, std::size_t sigma,
                           const std::function<void(const std::vector<std::size_t>&)>& fn) {
    ColumnMasks cm(h);
    auto vis = fn;
    scan_count(cm, sigma, 1, nullptr, &vis);
}

BigInt resolved_by_row(std::size_t n, std::size_t w, std::size_t sigma) {
    if (w > n) throw std::invalid_argument("resolved_by_row: weight exceeds length");
    return BigInt(w) * binom(long(n - w), long(sigma) - 1);
}

BigInt resolved_by_pair(const IntersectionProfile& p, std::size_t sigma) {
    return BigInt(p.oo) * binom(long(p.zz), long(sigma) - 1) +
           BigInt(p.oz) * BigInt(p.zo) * binom(long(p.zz), long(sigma) - 2);
}

IntersectionProfile xy_kappa(const BitWord& h, std::size_t kappa) {
    std::size_t n = h.size();
    if (kappa < 1 || kappa >= n) throw std::invalid_argument("xy_kappa: shift distance out of range");
    IntersectionProfile p;
    p.kappa = kappa;
    for (std::size_t a = 0; a < n; ++a) {
        bool x = h.get(a), y = h.get((a + kappa) % n);
        if (x && y)
            ++p.oo;
        else if (x)
            ++p.oz;
        else if (y)
            ++p.zo;
        else
            ++p.zz;
    }
    return p;
}

namespace {

// Number of sigma-subsets on which every row in `rows` restricts to weight
// exactly one. Brute force; callers stay within the PIE guard.
uint64_t resolved_by_all(const ColumnMasks& cm, const std::vector<std::size_t>& rows, std::size_t sigma) {
    std::size_t n = cm.cols();
    uint64_t need = 0;
    for (std::size_t r : rows) need |= uint64_t(1) << r;  // rows fit in 64 by guard

    std::vector<uint64_t> colbits(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        uint64_t b = 0;
        for (std::size_t r : rows)
            if ((cm.col(j)[r >> 6] >> (r & 63)) & 1) b |= uint64_t(1) << r;
        colbits[j] = b;
    }

    uint64_t count = 0;
    std::vector<std::size_t> idx(sigma);
    std::function<void(std::size_t, std::size_t, uint64_t, uint64_t)> rec = [&](std::size_t level, std::size_t start,
                                                                                uint64_t once, uint64_t twice) {
        if (level == sigma) {
            if (once == need && twice == 0) ++count;
            return;
        }
        for (std::size_t j = start; j + (sigma - level) <= n; ++j) {
            uint64_t b = colbits[j];
            rec(level + 1, j + 1, once | b, twice | (once & b));
        }
    };
    rec(0, 0, 0, 0);
    return count;
}

}  // namespace

std::vector<BigInt> pie_union_exact(const BitMatrix& h, std::size_t sigma, std::size_t j_max) {
    std::size_t m = h.rows();
    if (j_max > m) throw std::invalid_argument("pie_union_exact: depth exceeds row count");
    if (m > 63) throw GuardExceeded("pie_union_exact: more than 63 rows");
    BigInt evals = 0;
    for (std::size_t j = 1; j <= j_max; ++j) evals += binom(long(m), long(j));
    evals *= binom(long(h.cols()), long(sigma));
    if (evals > BigInt(10000000)) throw GuardExceeded("pie_union_exact: evaluation count exceeds the 10^7 guard");

    ColumnMasks cm(h);
    std::vector<BigInt> s(j_max + 1, 0);  // s[j] = S_{sigma,j}, s[0] unused
    std::vector<std::size_t> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!rows.empty()) s[rows.size()] += resolved_by_all(cm, rows, sigma);
        if (rows.size() == j_max) return;
        for (std::size_t r = start; r < m; ++r) {
            rows.push_back(r);
            rec(r + 1);
            rows.pop_back();
        }
    };
    rec(0);
    return std::vector<BigInt>(s.begin() + 1, s.end());
}

BigInt bonferroni_upper_cyclic(const BitWord& h, std::size_t m, std::size_t sigma) {
    std::size_t n = h.size();
    if (m < 1 || m > n) throw std::invalid_argument("bonferroni_upper_cyclic: m out of range");
    BigInt single = resolved_by_row(n, h.weight(), sigma);
    BigRat bound = BigRat(single) * m;
    BigRat pairs = 0;
    for (std::size_t kappa = 1; kappa < m; ++kappa)
        pairs += BigRat(resolved_by_pair(xy_kappa(h, kappa), sigma)) * BigInt(m - kappa);
    bound -= BigRat(2) / m * pairs;
    // floor of the exact rational: the count it bounds is an integer
    BigInt num = boost::multiprecision::numerator(bound), den = boost::multiprecision::denominator(bound);
    BigInt q = num / den;
    if (q * den > num) q -= 1;
    return q;
}

std::vector<uint64_t> small_stopping_closure(const BitMatrix& h, std::size_t max_size) {
    std::size_t n = h.cols();
    if (n > 24) throw GuardExceeded("small_stopping_closure: block length over 24");
    if (max_size == 0) max_size = n;
    const uint32_t total = uint32_t(1) << n;

    std::vector<uint32_t> rowmask(h.rows(), 0);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.get(i, j)) rowmask[i] |= uint32_t(1) << j;

    std::vector<uint64_t> f(total / 64 + 1, 0);
    const std::size_t chunk = 1 << 16;
    parallel_tasks((total + chunk - 1) / chunk, [&](std::size_t t) {
        uint32_t lo = uint32_t(t * chunk), hi = uint32_t(std::min<uint64_t>(total, (t + 1) * chunk));
        for (uint32_t mask = lo; mask < hi; ++mask) {
            if (mask == 0 || std::size_t(std::popcount(mask)) > max_size) continue;
            bool stop = true;
            for (uint32_t r : rowmask) {
                uint32_t x = r & mask;
                if (x && !(x & (x - 1))) {  // restriction weight exactly 1
                    stop = false;
                    break;
                }
            }
            if (stop) f[mask >> 6] |= uint64_t(1) << (mask & 63);
        }
    });

    // upward closure over the subset lattice
    for (std::size_t b = 0; b < n; ++b) {
        if (b < 6) {
            static const uint64_t lowmask[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                                0x0f0f0f0f0f0f0f0fULL, 0x00ff00ff00ff00ffULL,
                                                0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
            for (std::size_t w = 0; w < total / 64; ++w) f[w] |= (f[w] & lowmask[b]) << (1u << b);
        } else {
            std::size_t stride = std::size_t(1) << (b - 6);
            for (std::size_t base = 0; base < total / 64; base += 2 * stride)
                for (std::size_t j = 0; j < stride; ++j) f[base + stride + j] |= f[base + j];
        }
    }
    return f;
}

}  // namespace stopred
