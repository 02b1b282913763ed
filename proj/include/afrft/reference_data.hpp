#pragma once

#include <array>
#include <cstdint>

// Frozen known-good data for the 11-dimensional reference suite. These
// grids are transcribed reference values, kept literal on purpose: the
// regression tests must not recompute them through the same code paths
// they are checking.

namespace afrft::reference {

inline constexpr std::int64_t kDim = 11;

// Exponent grid (powers of omega_11, unit scale 1/sqrt(11)) of the
// fractional transform with rotation parameters a=3, b=-5.
inline constexpr std::array<std::array<std::int32_t, 11>, 11> kAfrft35 = {{
    {0, 8, 10, 6, 7, 2, 2, 7, 6, 10, 8},
    {8, 7, 0, 9, 1, 9, 0, 7, 8, 3, 3},
    {10, 0, 6, 6, 0, 10, 3, 1, 4, 1, 3},
    {6, 9, 6, 8, 4, 5, 0, 0, 5, 4, 8},
    {7, 1, 0, 4, 2, 5, 2, 4, 0, 1, 7},
    {2, 9, 10, 5, 5, 10, 9, 2, 0, 3, 0},
    {2, 0, 3, 0, 2, 9, 10, 5, 5, 10, 9},
    {7, 7, 1, 0, 4, 2, 5, 2, 4, 0, 1},
    {6, 8, 4, 5, 0, 0, 5, 4, 8, 6, 9},
    {10, 3, 1, 4, 1, 3, 10, 0, 6, 6, 0},
    {8, 3, 3, 8, 7, 0, 9, 1, 9, 0, 7},
}};

// Diagonal exponents of the quadratic chirp with gamma = 8 (mod 11).
inline constexpr std::array<std::int32_t, 11> kDiag8 = {0, 8, 10, 6, 7, 2,
                                                        2, 7, 6, 10, 8};

// Permutation of the multiply-by-6 map: column l carries its 1 in row
// (6*l mod 11).
inline constexpr std::int64_t kMultiplier = 6;

// Exponent grids of the 11-point Fourier matrix and its lambda=2 variant.
inline constexpr std::array<std::array<std::int32_t, 11>, 11> kQft11 = {{
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9},
    {0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8},
    {0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7},
    {0, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6},
    {0, 6, 1, 7, 2, 8, 3, 9, 4, 10, 5},
    {0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4},
    {0, 8, 5, 2, 10, 7, 4, 1, 9, 6, 3},
    {0, 9, 7, 5, 3, 1, 10, 8, 6, 4, 2},
    {0, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
}};

inline constexpr std::array<std::array<std::int32_t, 11>, 11> kMqft2 = {{
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9},
    {0, 4, 8, 1, 5, 9, 2, 6, 10, 3, 7},
    {0, 6, 1, 7, 2, 8, 3, 9, 4, 10, 5},
    {0, 8, 5, 2, 10, 7, 4, 1, 9, 6, 3},
    {0, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {0, 3, 6, 9, 1, 4, 7, 10, 2, 5, 8},
    {0, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6},
    {0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4},
    {0, 9, 7, 5, 3, 1, 10, 8, 6, 4, 2},
}};

}  // namespace afrft::reference
