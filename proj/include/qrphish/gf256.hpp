/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace qrphish::gf256 {

// GF(256) with the QR primitive polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11D).

inline constexpr std::uint16_t kPrimitivePoly = 0x11D;

namespace detail {
struct Tables {
    std::array<std::uint8_t, 512> exp{};
    std::array<std::uint8_t, 256> log{};
};
constexpr Tables build_tables() {
    Tables t{};
    std::uint16_t x = 1;
    for (int i = 0; i < 255; ++i) {
        t.exp[i] = static_cast<std::uint8_t>(x);
        t.log[x] = static_cast<std::uint8_t>(i);
        x <<= 1;
        if (x & 0x100) x ^= kPrimitivePoly;
    }
    for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
    return t;
}
inline constexpr Tables kTables = build_tables();
}  // namespace detail

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return detail::kTables.exp[detail::kTables.log[a] + detail::kTables.log[b]];
}

inline std::uint8_t exp_alpha(int i) { return detail::kTables.exp[i % 255]; }

// Coefficients of prod_{i=0}^{degree-1} (x - alpha^i), highest power first,
// leading coefficient included (always 1).
std::vector<std::uint8_t> rs_generator(int degree);

// Remainder of data(x) * x^degree divided by the generator polynomial:
// the `degree` Reed-Solomon codewords appended after the data bytes.
std::vector<std::uint8_t> rs_remainder(std::span<const std::uint8_t> data, int degree);

}  // namespace qrphish::gf256
