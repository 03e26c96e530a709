#ifndef STOPRED_CODES_HPP
#define STOPRED_CODES_HPP

#include <optional>
#include <string>
#include <vector>

#include "stopred/field.hpp"
#include "stopred/gf2.hpp"

namespace stopred {

/// A binary [n,k,d] linear code with generator and parity-check bases.
/// d is left unset when it has not been established.
struct Code {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d;
    BitMatrix generator;  // k x n, rank k
    BitMatrix parity;     // (n-k) x n, rank n-k
    bool cyclic = false;
    bool extended = false;
    std::string name;

    std::size_t redundancy() const { return n - k; }
};

/// Builds a code from bases, checking rank and orthogonality.
Code make_code(BitMatrix generator, BitMatrix parity, std::optional<std::size_t> d, bool cyclic, bool extended,
               std::string name);

/// Cyclic code generated by g(x) (must divide x^n + 1).
Code cyclic_code_from_generator(uint64_t g, std::size_t n, std::optional<std::size_t> d, std::string name);

/// Appends the overall parity bit at index n (the last position of the
/// extended code).
BitWord extend_parity(const BitWord& w);
Code extend_code(const Code& c);

// --- code families ---------------------------------------------------------

/// m x (2^m - 1) matrix whose column j is the binary expansion of alpha^j.
BitMatrix hamming_standard_pcm(int m);
Code hamming_code(int m);

/// Stacks, for each exponent e in `exponents`, the m binary rows expanding
/// the vector (alpha^{e*0}, alpha^{e*1}, ..., alpha^{e*(n-1)}).
BitMatrix bch_pcm(const Field2m& field, const std::vector<uint32_t>& exponents);
Code bch_code(const Field2m& field, const std::vector<uint32_t>& exponents, std::optional<std::size_t> d,
              std::string name);

/// [23,12,7] binary Golay code (generator x^11+x^10+x^6+x^5+x^4+x^2+1),
/// or its [24,12,8] extension with the parity bit at position 23.
Code golay(bool extended);

struct QrCode {
    Code code;
    BitWord idempotent;  // support {0} + quadratic nonresidues
};

/// Quadratic-residue code of prime length n = 3 (mod 4), together with the
/// idempotent of its dual.
QrCode qr_code(std::size_t n);

struct CdsCode {
    Code code;
    std::vector<std::size_t> difference_set;  // Singer set, size 2^s + 1
    BitWord z_row;                            // z(x) = sum x^{d_i}
    int h_degree;                             // deg gcd(z, x^n + 1)
};

/// Cyclic difference-set code from the Singer set with parameters
/// (2^s(2^s+1)+1, 2^s+1, 1). Dimension and distance are computed, not
/// assumed.
CdsCode cds_code(int s);

/// [2^s - 1, s, 2^{s-1}] simplex code.
Code simplex(int s);

// --- cogs -------------------------------------------------------------------

/// Cyclic orbit generator: a designated dual codeword together with its
/// orbit bookkeeping.
struct Cog {
    BitWord word;
    int orbit_id = -1;
    int family_id = -1;
    std::size_t weight = 0;
};

/// Expands MSB-first octal digits, drops the leading pad bits (which must
/// be zero), and maps the remaining bit j to the coefficient of x^j.
BitWord parse_octal_cog(const std::string& octal_digits, std::size_t n);
std::string print_octal_cog(const BitWord& w);

struct CogOrbit {
    Cog cog;                 // canonical representative: lexicographically smallest rotation
    std::size_t orbit_size;  // divides n
};

/// Partitions the weight-w words of the span of `dual_basis` into cyclic
/// orbits. Orbits are sorted by canonical word for reproducibility.
std::vector<CogOrbit> cog_orbits(const BitMatrix& dual_basis, std::size_t w);

/// Groups cogs by the multiset of intersection-number quadruples
/// (|OO_k|,|OZ_k|,|ZO_k|,|ZZ_k|) over k = 1..n-1. Returns, per input cog,
/// its family id, plus the number of families.
struct CogFamilies {
    std::vector<int> family_of;  // parallel to the input cog list
    int family_count = 0;
};
CogFamilies cog_families(const std::vector<Cog>& cogs);

// --- paper fixtures ----------------------------------------------------------

/// Fixture matrices: "wolfmann" ([I12|M]), "h24_21row", "h24_star".
BitMatrix fixture(const std::string& name);

/// Named cogs for the catalog codes, e.g. named_cog("golay23", 'A').
BitWord named_cog(const std::string& code_name, char letter);

// --- catalog -----------------------------------------------------------------

/// Codes addressable by name from the CLI: golay23, golay24, bch-31-16,
/// bch-127-113, hamming-7|15|63|127, qr-23|47, cds-21, simplex-3|4|5.
Code catalog_code(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace stopred

#endif
