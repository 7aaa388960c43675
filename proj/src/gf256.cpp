/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "qrphish/gf256.hpp"

namespace qrphish::gf256 {

std::vector<std::uint8_t> rs_generator(int degree) {
    std::vector<std::uint8_t> g{1};
    for (int i = 0; i < degree; ++i) {
        // Multiply g(x) by (x - alpha^i); subtraction is XOR in GF(2^8).
        std::vector<std::uint8_t> next(g.size() + 1, 0);
        const std::uint8_t root = exp_alpha(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j] ^= g[j];
            next[j + 1] ^= mul(g[j], root);
        }
        g = std::move(next);
    }
    return g;
}

std::vector<std::uint8_t> rs_remainder(std::span<const std::uint8_t> data, int degree) {
    const std::vector<std::uint8_t> gen = rs_generator(degree);
    // Synthetic long division of data(x) * x^degree by gen(x).
    std::vector<std::uint8_t> rem(static_cast<std::size_t>(degree), 0);
    for (std::uint8_t byte : data) {
        const std::uint8_t factor = byte ^ rem.front();
        rem.erase(rem.begin());
        rem.push_back(0);
        for (std::size_t j = 0; j < rem.size(); ++j)
            rem[j] ^= mul(gen[j + 1], factor);
    }
    return rem;
}

}  // namespace qrphish::gf256
