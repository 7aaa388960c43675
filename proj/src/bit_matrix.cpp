/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "qrphish/bit_matrix.hpp"

#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "qrphish/errors.hpp"

namespace qrphish {

QrConfig::QrConfig(int version_, char ec_level_, int box_size_, int border_)
    : version(version_), ec_level(ec_level_), box_size(box_size_), border(border_) {
    if (version != 13) throw std::invalid_argument("QrConfig: only version 13 is supported");
    if (ec_level != 'L') throw std::invalid_argument("QrConfig: only EC level L is supported");
    if (box_size != 1) throw std::invalid_argument("QrConfig: only box size 1 is supported");
    if (border != 0) throw std::invalid_argument("QrConfig: only border 0 is supported");
}

std::size_t BitMatrix::dark_count() const {
    return std::accumulate(cells_.begin(), cells_.end(), std::size_t{0});
}

void write_pgm(const BitMatrix& m, const std::string& path, int scale, int border) {
    const int px = (m.side() + 2 * border) * scale;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    char header[64];
    const int n = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", px, px);
    out.write(header, n);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(px));
    for (int r = 0; r < px; ++r) {
        const int mr = r / scale - border;
        for (int c = 0; c < px; ++c) {
            const int mc = c / scale - border;
            const bool dark = mr >= 0 && mr < m.side() && mc >= 0 && mc < m.side() && m.at(mr, mc);
            row[static_cast<std::size_t>(c)] = dark ? 0 : 255;
        }
        out.write(reinterpret_cast<const char*>(row.data()), px);
    }
    if (!out) throw IoError("short write to " + path);
}

}  // namespace qrphish
