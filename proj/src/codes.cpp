#include "stopred/codes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "stopred/stopping.hpp"

namespace stopred {

Code make_code(BitMatrix generator, BitMatrix parity, std::optional<std::size_t> d, bool cyclic, bool extended,
               std::string name) {
    Code c;
    c.n = generator.cols();
    c.k = generator.rows();
    if (parity.cols() != c.n) throw std::invalid_argument("make_code: generator/parity length mismatch");
    if (parity.rows() != c.n - c.k) throw std::invalid_argument("make_code: parity row count is not n-k");
    if (rank(generator) != c.k) throw std::invalid_argument("make_code: generator basis is rank deficient");
    if (rank(parity) != c.n - c.k) throw std::invalid_argument("make_code: parity basis is rank deficient");
    for (std::size_t i = 0; i < generator.rows(); ++i)
        if (!is_zero_syndrome(parity, generator.row(i)))
            throw std::invalid_argument("make_code: generator and parity bases are not orthogonal");
    if (cyclic) {
        for (std::size_t i = 0; i < generator.rows(); ++i)
            if (!is_zero_syndrome(parity, cyclic_shift(generator.row(i), 1)))
                throw std::invalid_argument("make_code: cyclic tag but code is not shift closed");
    }
    c.d = d;
    c.generator = std::move(generator);
    c.parity = std::move(parity);
    c.cyclic = cyclic;
    c.extended = extended;
    c.name = std::move(name);
    return c;
}

Code cyclic_code_from_generator(uint64_t g, std::size_t n, std::optional<std::size_t> d, std::string name) {
    if (n > 63) throw std::invalid_argument("cyclic_code_from_generator: length over 63, use a pcm constructor");
    uint64_t xn1 = (uint64_t(1) << n) | 1;
    if (poly::divmod(xn1, g).second != 0)
        throw std::invalid_argument("cyclic_code_from_generator: g(x) does not divide x^n + 1");
    int r = poly::degree(g);
    std::size_t k = n - std::size_t(r);
    BitMatrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        uint64_t row = g << i;
        for (std::size_t j = 0; j < n; ++j)
            if ((row >> j) & 1) gen.set(i, j, true);
    }
    BitMatrix par = nullspace_basis(gen);
    return make_code(std::move(gen), std::move(par), d, true, false, std::move(name));
}

BitWord extend_parity(const BitWord& w) {
    BitWord r(w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) r.set(i, w.get(i));
    r.set(w.size(), w.weight() & 1u);
    return r;
}

Code extend_code(const Code& c) {
    BitMatrix gen(c.k, c.n + 1);
    for (std::size_t i = 0; i < c.k; ++i) gen.row(i) = extend_parity(c.generator.row(i));
    BitMatrix par = nullspace_basis(gen);
    Code e = make_code(std::move(gen), std::move(par), c.d ? std::optional<std::size_t>(*c.d + (*c.d % 2))
                                                           : std::nullopt,
                       false, true, c.name + "-ext");
    return e;
}

BitMatrix hamming_standard_pcm(int m) {
    if (m < 2) throw std::invalid_argument("hamming_standard_pcm: m must be at least 2");
    Field2m f(m);
    std::size_t n = f.order();
    BitMatrix h(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        uint32_t a = f.pow_alpha(j);
        for (int i = 0; i < m; ++i)
            if ((a >> i) & 1) h.set(i, j, true);
    }
    return h;
}

Code hamming_code(int m) {
    BitMatrix h = hamming_standard_pcm(m);
    BitMatrix gen = nullspace_basis(h);
    return make_code(std::move(gen), std::move(h), 3, true, false, "hamming-" + std::to_string((1 << m) - 1));
}

BitMatrix bch_pcm(const Field2m& field, const std::vector<uint32_t>& exponents) {
    if (exponents.empty()) throw std::invalid_argument("bch_pcm: empty exponent list");
    std::size_t n = field.order();
    int m = field.degree();
    BitMatrix h(exponents.size() * m, n);
    std::size_t r = 0;
    for (uint32_t e : exponents) {
        if (e < 1 || e > field.order() - 1) throw std::invalid_argument("bch_pcm: exponent out of range");
        for (std::size_t j = 0; j < n; ++j) {
            uint32_t a = field.pow_alpha(uint64_t(e) * j);
            for (int i = 0; i < m; ++i)
                if ((a >> i) & 1) h.set(r + i, j, true);
        }
        r += m;
    }
    return h;
}

Code bch_code(const Field2m& field, const std::vector<uint32_t>& exponents, std::optional<std::size_t> d,
              std::string name) {
    BitMatrix h = bch_pcm(field, exponents);
    auto [rr, pivots] = rref(h);
    BitMatrix basis(pivots.size(), h.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.row(i) = rr.row(i);
    BitMatrix gen = nullspace_basis(basis);
    return make_code(std::move(gen), std::move(basis), d, true, false, std::move(name));
}

Code golay(bool extended) {
    // g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1; the paper's printed
    // cogs are dual codewords under this representative.
    const uint64_t g = 0xC75;
    Code c = cyclic_code_from_generator(g, 23, 7, "golay23");
    if (!extended) return c;
    Code e = extend_code(c);
    e.d = 8;
    e.name = "golay24";
    return e;
}

namespace {

bool is_quadratic_residue(std::size_t a, std::size_t n) {
    // Euler criterion: a^((n-1)/2) == 1 (mod n) for prime n.
    uint64_t e = (n - 1) / 2, base = a % n, r = 1;
    while (e) {
        if (e & 1) r = r * base % n;
        base = base * base % n;
        e >>= 1;
    }
    return r == 1;
}

bool is_prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Full circulant of a word: rows are all n cyclic shifts.
BitMatrix circulant(const BitWord& w) {
    BitMatrix m(w.size(), w.size());
    for (std::size_t s = 0; s < w.size(); ++s) m.row(s) = cyclic_shift(w, s);
    return m;
}

BitMatrix row_basis(const BitMatrix& m) {
    auto [rr, pivots] = rref(m);
    BitMatrix basis(pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.row(i) = rr.row(i);
    return basis;
}

std::optional<std::size_t> min_distance_if_small(const BitMatrix& gen) {
    if (gen.rows() > kSpanDimGuard) return std::nullopt;
    std::size_t best = gen.cols() + 1;
    for_each_span_word(gen, [&](const BitWord& w) {
        std::size_t wt = w.weight();
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

}  // namespace

QrCode qr_code(std::size_t n) {
    if (!is_prime(n) || n % 4 != 3) throw std::invalid_argument("qr_code: n must be prime with n = 3 (mod 4)");
    BitWord idem(n);
    idem.set(0, true);
    for (std::size_t j = 1; j < n; ++j)
        if (!is_quadratic_residue(j, n)) idem.set(j, true);

    BitMatrix par = row_basis(circulant(idem));
    if (par.rows() != (n - 1) / 2) throw std::runtime_error("qr_code: unexpected idempotent rank");
    BitMatrix gen = nullspace_basis(par);
    std::optional<std::size_t> d = min_distance_if_small(gen);
    QrCode q{make_code(std::move(gen), std::move(par), d, true, false, "qr-" + std::to_string(n)), idem};
    return q;
}

CdsCode cds_code(int s) {
    if (s < 1 || 3 * s > 16) throw std::invalid_argument("cds_code: s out of range");
    const uint32_t q = uint32_t(1) << s;
    const std::size_t n = std::size_t(q) * (q + 1) + 1;  // q^2 + q + 1
    Field2m big(3 * s);

    // Singer difference set: exponents i (mod n) with zero GF(q)-trace,
    // Tr(x) = x + x^q + x^{q^2}.
    std::vector<std::size_t> dset;
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t t = big.pow_alpha(i) ^ big.pow_alpha(uint64_t(i) * q) ^ big.pow_alpha(uint64_t(i) * q * q);
        if (t == 0) dset.push_back(i);
    }
    if (dset.size() != q + 1) throw std::runtime_error("cds_code: Singer construction failed (wrong set size)");

    // Verify the difference-set property: every nonzero residue appears as a
    // difference exactly lambda = 1 times.
    std::vector<int> diff_count(n, 0);
    for (std::size_t a : dset)
        for (std::size_t b : dset)
            if (a != b) ++diff_count[(a + n - b) % n];
    for (std::size_t i = 1; i < n; ++i)
        if (diff_count[i] != 1) throw std::runtime_error("cds_code: Singer construction failed (lambda != 1)");

    BitWord z = BitWord::from_support(n, dset);
    wpoly::Poly zp = wpoly::from_support(dset);
    wpoly::Poly h = wpoly::gcd(zp, wpoly::xn_plus_1(n));

    BitMatrix par = row_basis(circulant(z));
    BitMatrix gen = nullspace_basis(par);
    std::optional<std::size_t> d = min_distance_if_small(gen);
    CdsCode out{make_code(std::move(gen), std::move(par), d, true, false, "cds-" + std::to_string(n)), dset, z,
                wpoly::degree(h)};
    return out;
}

Code simplex(int s) {
    if (s < 2) throw std::invalid_argument("simplex: s must be at least 2");
    BitMatrix gen = hamming_standard_pcm(s);
    BitMatrix par = nullspace_basis(gen);
    return make_code(std::move(gen), std::move(par), std::size_t(1) << (s - 1), true, false,
                     "simplex-" + std::to_string(s));
}

BitWord parse_octal_cog(const std::string& octal_digits, std::size_t n) {
    std::vector<int> digits;
    for (char c : octal_digits) {
        if (c == ' ' || c == '\t' || c == '[' || c == ']' || c == ',') continue;
        if (c < '0' || c > '7') throw std::invalid_argument("parse_octal_cog: not an octal digit");
        digits.push_back(c - '0');
    }
    if (digits.size() * 3 < n) throw std::invalid_argument("parse_octal_cog: too few digits for the length");
    std::size_t pad = digits.size() * 3 - n;
    if (pad >= 3) throw std::invalid_argument("parse_octal_cog: too many digits for the length");

    BitWord w(n);
    for (std::size_t b = 0; b < digits.size() * 3; ++b) {
        // MSB-first within each digit
        bool bit = (digits[b / 3] >> (2 - b % 3)) & 1;
        if (b < pad) {
            if (bit) throw std::invalid_argument("parse_octal_cog: nonzero pad bits");
        } else {
            w.set(b - pad, bit);
        }
    }
    if (!w.any()) throw std::invalid_argument("parse_octal_cog: cog must be nonzero");
    return w;
}

std::string print_octal_cog(const BitWord& w) {
    std::size_t n = w.size();
    std::size_t digits = (n + 2) / 3;
    std::size_t pad = digits * 3 - n;
    std::string out;
    for (std::size_t d = 0; d < digits; ++d) {
        int val = 0;
        for (int j = 0; j < 3; ++j) {
            std::size_t b = d * 3 + j;
            bool bit = b >= pad && w.get(b - pad);
            val = (val << 1) | (bit ? 1 : 0);
        }
        if (d) out.push_back(' ');
        out.push_back(char('0' + val));
    }
    return out;
}

namespace {

BitWord canonical_rotation(const BitWord& w) {
    BitWord best = w;
    BitWord cur = w;
    for (std::size_t s = 1; s < w.size(); ++s) {
        cur = cyclic_shift(cur, 1);
        if (cur.lex_less(best)) best = cur;
    }
    return best;
}

std::size_t orbit_size(const BitWord& w) {
    BitWord cur = w;
    for (std::size_t s = 1; s <= w.size(); ++s) {
        cur = cyclic_shift(cur, 1);
        if (cur == w) return s;
    }
    return w.size();
}

}  // namespace

std::vector<CogOrbit> cog_orbits(const BitMatrix& dual_basis, std::size_t w) {
    std::unordered_map<BitWord, std::size_t, BitWordHash> orbits;  // canonical -> member count
    for_each_span_word(dual_basis, [&](const BitWord& v) {
        if (v.weight() != w) return;
        ++orbits[canonical_rotation(v)];
    });
    std::vector<BitWord> canon;
    canon.reserve(orbits.size());
    for (auto& [c, cnt] : orbits) canon.push_back(c);
    std::sort(canon.begin(), canon.end(), [](const BitWord& a, const BitWord& b) { return a.lex_less(b); });

    std::vector<CogOrbit> out;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        CogOrbit o;
        o.cog.word = canon[i];
        o.cog.orbit_id = int(i);
        o.cog.weight = w;
        o.orbit_size = orbit_size(canon[i]);
        if (o.orbit_size != orbits[canon[i]])
            throw std::runtime_error("cog_orbits: orbit member count does not match stabilizer size");
        out.push_back(std::move(o));
    }
    return out;
}

CogFamilies cog_families(const std::vector<Cog>& cogs) {
    CogFamilies fam;
    if (cogs.empty()) return fam;
    std::size_t n = cogs[0].word.size();
    for (const Cog& c : cogs)
        if (c.word.size() != n) throw std::invalid_argument("cog_families: mixed lengths");

    std::map<std::vector<std::array<std::size_t, 4>>, int> seen;
    fam.family_of.resize(cogs.size());
    for (std::size_t i = 0; i < cogs.size(); ++i) {
        std::vector<std::array<std::size_t, 4>> sig;
        for (std::size_t kappa = 1; kappa < n; ++kappa) {
            IntersectionProfile p = xy_kappa(cogs[i].word, kappa);
            sig.push_back({p.oo, p.oz, p.zo, p.zz});
        }
        std::sort(sig.begin(), sig.end());
        auto it = seen.find(sig);
        if (it == seen.end()) it = seen.emplace(std::move(sig), fam.family_count++).first;
        fam.family_of[i] = it->second;
    }
    return fam;
}

BitWord named_cog(const std::string& code_name, char letter) {
    struct Entry {
        const char* code;
        char letter;
        std::size_t n;
        const char* octal;
    };
    static const Entry table[] = {
        {"golay23", 'A', 23, "2 1 2 1 3 5 0 0"},
        {"golay23", 'D', 23, "3 4 6 0 3 2 0 0"},
        {"bch-31-16", 'A', 31, "1 4 1 4 0 5 0 0 0 2 2"},
        {"bch-31-16", 'B', 31, "1 4 0 6 1 0 4 1 0 2 0"},
        {"bch-31-16", 'C', 31, "1 5 0 0 0 5 0 0 4 1 4"},
        {"bch-31-16", 'D', 31, "1 5 0 4 0 2 0 0 1 3 0"},
        {"bch-127-113", 'A', 127,
         "1 7 6 4 0 3 0 6 5 4 4 5 4 0 7 5 0 4 5 4 7 6 5 1 6 1 6 0 2 0 4 2 6 5 2 4 2 4 4 0 0 5 6"},
        {"bch-127-113", 'B', 127,
         "1 7 2 4 2 5 0 2 6 1 2 1 5 4 1 1 1 1 5 2 6 1 0 7 2 1 2 5 5 1 6 1 4 0 4 6 5 4 1 4 2 7 4"},
        {"bch-127-113", 'C', 127,
         "1 7 5 2 6 5 5 3 3 6 4 6 1 3 1 2 6 4 2 1 0 7 1 1 7 0 4 0 2 4 0 2 5 4 0 3 0 4 5 2 2 4 2"},
        {"bch-127-113", 'D', 127,
         "1 7 5 1 7 0 3 1 2 5 2 6 7 3 4 6 5 0 2 1 0 2 0 7 0 3 6 5 4 0 6 1 2 2 1 0 1 4 3 0 6 4 4"},
        {"hamming-63", 'A', 63, "4 1 4 2 4 7 5 0 7 1 1 3 3 5 4 6 5 3 7 4 0"},
        {"hamming-127", 'A', 127,
         "1 0 4 6 1 3 5 3 3 0 1 4 6 5 1 6 3 6 6 4 1 2 5 7 5 1 2 1 5 6 1 7 7 0 3 5 7 1 3 1 1 0 0"},
    };
    for (const Entry& e : table)
        if (code_name == e.code && letter == e.letter) return parse_octal_cog(e.octal, e.n);
    throw std::invalid_argument("named_cog: unknown cog " + code_name + "/" + std::string(1, letter));
}

Code catalog_code(const std::string& name) {
    if (name == "golay23") return golay(false);
    if (name == "golay24") return golay(true);
    if (name == "bch-31-16") return bch_code(Field2m(5), {1, 3, 5}, 7, "bch-31-16");
    if (name == "bch-127-113") return bch_code(Field2m(7), {1, 3}, 5, "bch-127-113");
    if (name == "hamming-7") return hamming_code(3);
    if (name == "hamming-15") return hamming_code(4);
    if (name == "hamming-63") return hamming_code(6);
    if (name == "hamming-127") return hamming_code(7);
    if (name == "qr-23") return qr_code(23).code;
    if (name == "qr-47") return qr_code(47).code;
    if (name == "cds-21") return cds_code(2).code;
    if (name == "simplex-3") return simplex(3);
    if (name == "simplex-4") return simplex(4);
    if (name == "simplex-5") return simplex(5);
    throw std::invalid_argument("catalog_code: unknown code " + name);
}

std::vector<std::string> catalog_names() {
    return {"golay23",  "golay24",    "bch-31-16", "bch-127-113", "hamming-7", "hamming-15", "hamming-63",
            "hamming-127", "qr-23",   "qr-47",     "cds-21",      "simplex-3", "simplex-4",  "simplex-5"};
}

}  // namespace stopred
