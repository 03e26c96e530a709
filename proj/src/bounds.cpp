#include "stopred/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

namespace stopred {

namespace {

// 50-digit floats for the logarithm-based bounds; the inputs are exact
// integers, so the final ceilings are stable far beyond double precision.
using HpFloat = boost::multiprecision::cpp_bin_float_50;

BigInt ceil_hp(const HpFloat& x) {
    return boost::multiprecision::ceil(x).convert_to<BigInt>();
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    // b > 0
    BigInt q = a / b;
    if (q * b < a) q += 1;
    return q;
}

std::string rho(std::size_t ell) {
    return "rho_" + std::to_string(ell);
}

}  // namespace

BoundResult lb_schwartz_vardy(std::size_t n, std::size_t k, std::size_t d_dual, std::size_t ell) {
    if (ell < 2) throw std::invalid_argument("lb_schwartz_vardy: ell must be at least 2");
    BigInt best = BigInt(n - k);
    for (std::size_t sigma = 1; sigma < ell; ++sigma) {
        std::size_t omega = std::max<std::size_t>((n + sigma) / sigma - 1, d_dual);  // ceil((n+1)/sigma) - 1
        BigInt denom = BigInt(omega) * binom(long(n - omega), long(sigma) - 1);
        if (denom <= 0) continue;
        best = std::max(best, ceil_div(binom(long(n), long(sigma)), denom));
    }
    return {best, BoundResult::Kind::lower, rho(ell), "union bound over row weights"};
}

BoundResult lb_bonferroni_constweight(std::size_t n, std::size_t omega,
                                      const std::vector<IntersectionProfile>& profiles, std::size_t ell) {
    if (omega > n) throw std::invalid_argument("lb_bonferroni_constweight: weight exceeds length");
    std::optional<BigInt> best;
    for (std::size_t sigma = 1; sigma < ell; ++sigma) {
        BigInt sigma_p = 0;
        for (const auto& p : profiles) sigma_p = std::max(sigma_p, resolved_by_pair(p, sigma));
        BigInt denom = resolved_by_row(n, omega, sigma) - sigma_p;
        if (denom <= 0) continue;  // vacuous at this sigma
        BigInt v = ceil_div(binom(long(n), long(sigma)) - sigma_p, denom);
        if (!best || v > *best) best = v;
    }
    return {best, BoundResult::Kind::lower, rho(ell), "Bonferroni, constant row weight"};
}

BoundResult ub_lll(std::size_t n, std::size_t k, std::size_t d, std::size_t ell) {
    if (ell > (d + 1) / 2) throw std::invalid_argument("ub_lll: requires ell <= floor((d+1)/2)");
    if (ell < 2) throw std::invalid_argument("ub_lll: ell must be at least 2");
    BigInt dep = 0;
    for (std::size_t j = 1; j <= ell - 1; ++j) dep += binom(long(n), long(j)) - binom(long(n - j), long(j));
    HpFloat num = 1 + boost::multiprecision::log(HpFloat(dep));
    HpFloat den = -boost::multiprecision::log(1 - HpFloat(ell - 1) / boost::multiprecision::pow(HpFloat(2), int(ell - 1)));
    BigInt v = ceil_hp(num / den) + BigInt(n - k - ell + 1);
    return {v, BoundResult::Kind::upper, rho(ell), "local lemma"};
}

BoundResult ub_lll_hp(std::size_t n, std::size_t k, std::size_t d, std::size_t ell, double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("ub_lll_hp: eps must be in (0,1)");
    if (ell > (d + 1) / 2) throw std::invalid_argument("ub_lll_hp: requires ell <= floor((d+1)/2)");
    if (ell < 2) throw std::invalid_argument("ub_lll_hp: ell must be at least 2");
    BigInt nn = 0, dep = 0;
    for (std::size_t j = 1; j <= ell - 1; ++j) {
        nn += binom(long(n), long(j));
        dep += binom(long(n), long(j)) - binom(long(n - j), long(j)) - 1;
    }
    HpFloat ratio = HpFloat(eps) / HpFloat(nn);
    HpFloat num = boost::multiprecision::log(ratio) + HpFloat(dep) * boost::multiprecision::log(1 - ratio);
    HpFloat den = boost::multiprecision::log(1 - HpFloat(ell - 1) / boost::multiprecision::pow(HpFloat(2), int(ell - 1)));
    BigInt v = ceil_hp(num / den) + BigInt(n - k - ell + 1);
    return {v, BoundResult::Kind::upper, rho(ell), "local lemma, high probability"};
}

BoundResult ub_sum_rows(std::size_t r, std::size_t ell) {
    if (r < 1 || ell < 3) throw std::invalid_argument("ub_sum_rows: need r >= 1 and ell >= 3");
    BigInt v = 0;
    for (std::size_t i = 1; i <= ell - 2; ++i) v += binom(long(r), long(i));
    return {v, BoundResult::Kind::upper, rho(ell), "row-sum closure"};
}

BoundResult lb_mu_qr(std::size_t n, std::size_t ell) {
    if (n % 4 != 3) throw std::invalid_argument("lb_mu_qr: n must be 3 (mod 4)");
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) throw std::invalid_argument("lb_mu_qr: n must be prime");
    std::optional<BigInt> best;
    long q1 = long((n + 1) / 4), q3 = long((n - 3) / 4);
    for (std::size_t sigma = 1; sigma < ell; ++sigma) {
        BigInt m = BigInt(q1) * (binom(q3, long(sigma) - 1) + BigInt(q1) * binom(q3, long(sigma) - 2));
        BigInt denom = BigInt((n + 1) / 2) * binom(long((n - 1) / 2), long(sigma) - 1) - m;
        if (denom <= 0) continue;
        BigInt v = ceil_div(binom(long(n), long(sigma)) - m, denom);
        if (!best || v > *best) best = v;
    }
    return {best, BoundResult::Kind::lower, "mu_" + std::to_string(ell), "QR idempotent pair count"};
}

BoundResult lb_mu_cds(std::size_t n, std::size_t k, std::size_t lambda, std::size_t ell) {
    if (k > n || lambda > k) throw std::invalid_argument("lb_mu_cds: invalid difference-set parameters");
    std::optional<BigInt> best;
    long zz = long(n) - 2 * long(k) + long(lambda);
    for (std::size_t sigma = 1; sigma < ell; ++sigma) {
        BigInt m = BigInt(lambda) * binom(zz, long(sigma) - 1) +
                   BigInt(k - lambda) * BigInt(k - lambda) * binom(zz, long(sigma) - 2);
        BigInt denom = BigInt(k) * binom(long(n - k), long(sigma) - 1) - m;
        if (denom <= 0) continue;
        BigInt v = ceil_div(binom(long(n), long(sigma)) - m, denom);
        if (!best || v > *best) best = v;
    }
    return {best, BoundResult::Kind::lower, "mu_" + std::to_string(ell), "CDS pair count"};
}

BoundResult schoenheim(std::size_t n, std::size_t k, std::size_t d) {
    if (d < 2 || k + 1 < d) throw std::invalid_argument("schoenheim: need k >= d-1 and d >= 2");
    // ceil(n/k ceil((n-1)/(k-1) ... ceil((n-d+2)/(k-d+2)) ...)); the
    // classical covering bound uses ceilings.
    BigInt v = 1;
    for (std::size_t i = d - 1; i-- > 0;) v = ceil_div(BigInt(n - i) * v, BigInt(k - i));
    return {v, BoundResult::Kind::lower, "covering size", "Schoenheim"};
}

double ml_union_bound_fer(const WeightEnumerator& enumerator, double ep) {
    if (!(ep > 0 && ep < 1)) throw std::invalid_argument("ml_union_bound_fer: ep must be in (0,1)");
    double acc = 0;
    for (std::size_t w = 1; w <= enumerator.n; ++w) {
        if (enumerator.counts[w] == 0) continue;
        acc += enumerator.counts[w].convert_to<double>() * std::pow(ep, double(w));
    }
    return acc;
}

}  // namespace stopred
