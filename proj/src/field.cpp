#include "stopred/field.hpp"

#include <stdexcept>

namespace stopred {

uint32_t Field2m::default_primitive_poly(int m) {
    // Conventional choices (coefficients of x^m + ... + 1).
    switch (m) {
        case 2: return 0b111;
        case 3: return 0b1011;          // x^3 + x + 1
        case 4: return 0b10011;         // x^4 + x + 1
        case 5: return 0b100101;        // x^5 + x^2 + 1
        case 6: return 0b1000011;       // x^6 + x + 1
        case 7: return 0b10001001;      // x^7 + x^3 + 1
        case 8: return 0b100011101;     // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0b1000010001;    // x^9 + x^4 + 1
        case 10: return 0b10000001001;  // x^10 + x^3 + 1
        default: throw std::invalid_argument("Field2m: no default primitive polynomial for this degree");
    }
}

Field2m::Field2m(int m) : Field2m(m, default_primitive_poly(m)) {}

Field2m::Field2m(int m, uint32_t primitive_poly) : m_(m), prim_(primitive_poly) {
    if (m < 1 || m > 16) throw std::invalid_argument("Field2m: degree out of range");
    n_ = (uint32_t(1) << m) - 1;
    alog_.assign(n_, 0);
    log_.assign(uint32_t(1) << m, 0);
    uint32_t x = 1;
    for (uint32_t i = 0; i < n_; ++i) {
        alog_[i] = x;
        log_[x] = i;
        x <<= 1;
        if (x >> m) x ^= prim_;
    }
    if (x != 1) throw std::invalid_argument("Field2m: polynomial is not primitive");
}

uint32_t Field2m::log(uint32_t x) const {
    if (x == 0 || x > n_) throw std::domain_error("Field2m::log of zero or out-of-range element");
    return log_[x];
}

uint32_t Field2m::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return alog_[(log_[a] + log_[b]) % n_];
}

uint32_t Field2m::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("Field2m::inv of zero");
    return alog_[(n_ - log_[a]) % n_];
}

namespace poly {

uint64_t mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int degree(uint64_t p) {
    return p ? 63 - __builtin_clzll(p) : -1;
}

std::pair<uint64_t, uint64_t> divmod(uint64_t a, uint64_t b) {
    if (!b) throw std::domain_error("poly::divmod by zero");
    uint64_t q = 0;
    int db = degree(b);
    while (a && degree(a) >= db) {
        int sh = degree(a) - db;
        q ^= uint64_t(1) << sh;
        a ^= b << sh;
    }
    return {q, a};
}

uint64_t gcd(uint64_t a, uint64_t b) {
    while (b) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace poly

namespace wpoly {

static void ensure_size(Poly& p, std::size_t words) {
    if (p.size() < words) p.resize(words, 0);
}

Poly from_support(const std::vector<std::size_t>& exps) {
    Poly p;
    for (std::size_t e : exps) {
        ensure_size(p, e / 64 + 1);
        p[e / 64] |= uint64_t(1) << (e % 64);
    }
    return p;
}

Poly xn_plus_1(std::size_t n) {
    Poly p;
    ensure_size(p, n / 64 + 1);
    p[0] |= 1;
    p[n / 64] |= uint64_t(1) << (n % 64);
    return p;
}

int degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i]) return int(i * 64 + 63 - __builtin_clzll(p[i]));
    return -1;
}

bool is_zero(const Poly& p) {
    return degree(p) < 0;
}

static void xor_shifted(Poly& a, const Poly& b, int sh) {
    int wsh = sh / 64, bsh = sh % 64;
    ensure_size(a, b.size() + wsh + 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + wsh] ^= b[i] << bsh;
        if (bsh && i + wsh + 1 < a.size()) a[i + wsh + 1] ^= b[i] >> (64 - bsh);
    }
}

Poly mod(Poly a, const Poly& b) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("wpoly::mod by zero");
    int da = degree(a);
    while (da >= db) {
        xor_shifted(a, b, da - db);
        da = degree(a);
    }
    return a;
}

Poly gcd(Poly a, Poly b) {
    while (!is_zero(b)) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace wpoly

}  // namespace stopred
