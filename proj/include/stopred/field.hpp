#ifndef STOPRED_FIELD_HPP
#define STOPRED_FIELD_HPP

#include <cstdint>
#include <vector>

namespace stopred {

/// GF(2^m) with log/antilog tables over the 2^m - 1 nonzero elements.
/// Elements are polynomial-basis bit patterns; alpha = 0b10 is primitive.
class Field2m {
  public:
    /// Uses the conventional primitive polynomial for the given degree.
    explicit Field2m(int m);
    Field2m(int m, uint32_t primitive_poly);

    int degree() const { return m_; }
    uint32_t primitive_poly() const { return prim_; }
    uint32_t order() const { return n_; }  // multiplicative order 2^m - 1

    uint32_t antilog(uint32_t i) const { return alog_[i % n_]; }
    uint32_t log(uint32_t x) const;

    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow_alpha(uint64_t e) const { return alog_[e % n_]; }

    static uint32_t default_primitive_poly(int m);

  private:
    int m_;
    uint32_t prim_;
    uint32_t n_;
    std::vector<uint32_t> alog_;
    std::vector<uint32_t> log_;
};

// Dense GF(2) polynomial helpers (coefficient i = bit i). Used by the
// cyclic-code constructors.
namespace poly {
uint64_t mul(uint64_t a, uint64_t b);
std::pair<uint64_t, uint64_t> divmod(uint64_t a, uint64_t b);
uint64_t gcd(uint64_t a, uint64_t b);
int degree(uint64_t p);
}  // namespace poly

// Wide (beyond 64-bit) polynomial variants over coefficient vectors.
namespace wpoly {
using Poly = std::vector<uint64_t>;  // packed coefficients, bit i of word j = coeff 64j+i
Poly from_support(const std::vector<std::size_t>& exps);
Poly xn_plus_1(std::size_t n);
int degree(const Poly& p);
bool is_zero(const Poly& p);
Poly mod(Poly a, const Poly& b);
Poly gcd(Poly a, Poly b);
}  // namespace wpoly

}  // namespace stopred

#endif
