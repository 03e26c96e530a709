#include <stdexcept>
#include <string>
#include <vector>

#include "stopred/codes.hpp"

namespace stopred {

namespace {

BitMatrix from_strings(const std::vector<std::string>& rows) {
    std::vector<BitWord> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(BitWord::from_string(r));
    return BitMatrix(std::move(out));
}

// 21-row redundant parity-check matrix of the [24,12,8] extended Golay
// code: 20 consecutive cyclic shifts of a weight-8 dual codeword of the
// [23,12,7] code, parity-extended, plus one rank-completing row.
BitMatrix h24_21row() {
    return from_strings({
        "100001100101100010100000",
        "010000110010110001010000",
        "001000011001011000101000",
        "000100001100101100010100",
        "000010000110010110001010",
        "100001000011001011000100",
        "010000100001100101100010",
        "101000010000110010110000",
        "010100001000011001011000",
        "001010000100001100101100",
        "000101000010000110010110",
        "100010100001000011001010",
        "110001010000100001100100",
        "011000101000010000110010",
        "101100010100001000011000",
        "010110001010000100001100",
        "001011000101000010000110",
        "100101100010100001000010",
        "110010110001010000100000",
        "011001011000101000010000",
        "101011100011000000000001",
    });
}

// 12-row parity-check matrix of the extended Golay code built from
// distinct cogs; decoded with the 23 cyclic-shift automorphisms.
BitMatrix h24_star() {
    return from_strings({
        "111000001001100000100001",
        "110000100001001110000001",
        "110100101010010000000001",
        "111000110000000000010101",
        "110001000101010000000101",
        "110100010100000010100001",
        "011000100001010001001001",
        "110110000001000000011001",
        "111101000000001001000001",
        "110010000010001000100101",
        "001100101001001000010001",
        "001101010011001000000010",
    });
}

// [I12|M] with M assembled from 3x3 blocks I, A, A^2, A^4.
BitMatrix wolfmann() {
    const int A[3][3] = {{1, 1, 1}, {1, 0, 0}, {1, 0, 1}};
    int A2[3][3], A4[3][3], I3[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto mul = [](const int a[3][3], const int b[3][3], int out[3][3]) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k) s ^= a[i][k] & b[k][j];
                out[i][j] = s;
            }
    };
    mul(A, A, A2);
    mul(A2, A2, A4);
    const int (*blocks[4][4])[3] = {
        {I3, A, A2, A4},
        {A, I3, A4, A2},
        {A2, A4, I3, A},
        {A4, A2, A, I3},
    };
    BitMatrix h(12, 24);
    for (int i = 0; i < 12; ++i) {
        h.set(i, i, true);
        for (int bj = 0; bj < 4; ++bj)
            for (int j = 0; j < 3; ++j)
                if (blocks[i / 3][bj][i % 3][j]) h.set(i, 12 + 3 * bj + j, true);
    }
    return h;
}

}  // namespace

BitMatrix fixture(const std::string& name) {
    if (name == "wolfmann") return wolfmann();
    if (name == "h24_21row") return h24_21row();
    if (name == "h24_star") return h24_star();
    throw std::invalid_argument("fixture: unknown name " + name);
}

}  // namespace stopred
