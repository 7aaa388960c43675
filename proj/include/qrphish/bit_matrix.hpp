/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qrphish {

// Generation parameters. The pipeline is pinned to version 13, error
// correction level L, one pixel per module and no quiet zone, so the
// constructor rejects anything else.
struct QrConfig {
    int version = 13;
    char ec_level = 'L';
    int box_size = 1;
    int border = 0;

    QrConfig() = default;
    QrConfig(int version_, char ec_level_, int box_size_, int border_);

    int side() const { return 4 * version + 17; }
};

// A square grid of QR modules: 1 = dark, 0 = light.
class BitMatrix {
public:
    explicit BitMatrix(int side) : side_(side), cells_(static_cast<std::size_t>(side) * side, 0) {}

    int side() const { return side_; }

    std::uint8_t at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row) * side_ + col];
    }
    void set(int row, int col, bool dark) {
        cells_[static_cast<std::size_t>(row) * side_ + col] = dark ? 1 : 0;
    }
    void flip(int row, int col) {
        cells_[static_cast<std::size_t>(row) * side_ + col] ^= 1;
    }

    // Row-major flatten; feature index of module (r, c) is side*r + c.
    const std::vector<std::uint8_t>& flat() const { return cells_; }

    std::size_t dark_count() const;

    bool operator==(const BitMatrix& other) const = default;

private:
    int side_;
    std::vector<std::uint8_t> cells_;
};

// Binary PGM ("P5", maxval 255) with dark modules written as 0 and light as
// 255, `scale` pixels per module and a light quiet zone of `border` modules.
void write_pgm(const BitMatrix& m, const std::string& path, int scale = 1, int border = 0);

}  // namespace qrphish
