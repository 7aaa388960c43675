/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "qrphish/qr_encoder.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "qrphish/errors.hpp"
#include "qrphish/gf256.hpp"

namespace qrphish::qr {

namespace {

class BitWriter {
public:
    void append(std::uint32_t value, int bits) {
        for (int i = bits - 1; i >= 0; --i) bits_.push_back((value >> i) & 1);
    }
    std::size_t size() const { return bits_.size(); }
    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out[i >> 3] |= static_cast<std::uint8_t>(0x80 >> (i & 7));
        return out;
    }

private:
    std::vector<std::uint8_t> bits_;
};

bool mask_bit(int mask_id, int r, int c) {
    switch (mask_id) {
        case 0: return (r + c) % 2 == 0;
        case 1: return r % 2 == 0;
        case 2: return c % 3 == 0;
        case 3: return (r + c) % 3 == 0;
        case 4: return (r / 2 + c / 3) % 2 == 0;
        case 5: return (r * c) % 2 + (r * c) % 3 == 0;
        case 6: return ((r * c) % 2 + (r * c) % 3) % 2 == 0;
        case 7: return ((r + c) % 2 + (r * c) % 3) % 2 == 0;
        default: throw std::invalid_argument("mask id out of range");
    }
}

// 15-bit format field: EC level L (01), 3-bit mask id, BCH(15,5) remainder,
// XORed with the fixed format mask 0x5412. Bit 0 is the LSB.
std::uint32_t format_bits(int mask_id) {
    const std::uint32_t data = (1u << 3) | static_cast<std::uint32_t>(mask_id);
    std::uint32_t rem = data;
    for (int i = 0; i < 10; ++i) rem = (rem << 1) ^ ((rem >> 9) * 0x537u);
    return ((data << 10) | rem) ^ 0x5412u;
}

// 18-bit version field: 6-bit version, BCH(18,6) remainder.
std::uint32_t version_bits() {
    std::uint32_t rem = kVersion;
    for (int i = 0; i < 12; ++i) rem = (rem << 1) ^ ((rem >> 11) * 0x1F25u);
    return (static_cast<std::uint32_t>(kVersion) << 12) | rem;
}

struct Template {
    BitMatrix base = BitMatrix(kSide);       // function patterns drawn, data region light
    BitMatrix is_function = BitMatrix(kSide);  // 1 where the cell is payload-independent
};

void draw_finder(Template& t, int r0, int c0) {
    for (int dr = -1; dr <= 7; ++dr) {
        const int r = r0 + dr;
        if (r < 0 || r >= kSide) continue;
        for (int dc = -1; dc <= 7; ++dc) {
            const int c = c0 + dc;
            if (c < 0 || c >= kSide) continue;
            const bool dark = (dr >= 0 && dr <= 6 && (dc == 0 || dc == 6)) ||
                              (dc >= 0 && dc <= 6 && (dr == 0 || dr == 6)) ||
                              (dr >= 2 && dr <= 4 && dc >= 2 && dc <= 4);
            t.base.set(r, c, dark);
            t.is_function.set(r, c, true);
        }
    }
}

Template build_template() {
    Template t;
    draw_finder(t, 0, 0);
    draw_finder(t, 0, kSide - 7);
    draw_finder(t, kSide - 7, 0);

    // Alignment patterns at every {6,34,62} pair whose centre is free.
    for (int cr : kAlignmentCenters) {
        for (int cc : kAlignmentCenters) {
            if (t.is_function.at(cr, cc)) continue;
            for (int dr = -2; dr <= 2; ++dr)
                for (int dc = -2; dc <= 2; ++dc) {
                    const bool dark = std::max(std::abs(dr), std::abs(dc)) != 1;
                    t.base.set(cr + dr, cc + dc, dark);
                    t.is_function.set(cr + dr, cc + dc, true);
                }
        }
    }

    // Timing patterns along row 6 and column 6.
    for (int i = 8; i <= kSide - 9; ++i) {
        if (!t.is_function.at(6, i)) {
            t.base.set(6, i, i % 2 == 0);
            t.is_function.set(6, i, true);
        }
        if (!t.is_function.at(i, 6)) {
            t.base.set(i, 6, i % 2 == 0);
            t.is_function.set(i, 6, true);
        }
    }

    // Reserve the format areas and the dark module (bits written per mask).
    for (int i = 0; i <= 5; ++i) t.is_function.set(i, 8, true);
    t.is_function.set(7, 8, true);
    t.is_function.set(8, 8, true);
    t.is_function.set(8, 7, true);
    for (int c = 0; c <= 5; ++c) t.is_function.set(8, c, true);
    for (int i = 0; i < 8; ++i) t.is_function.set(8, kSide - 1 - i, true);
    for (int i = 8; i < 15; ++i) t.is_function.set(kSide - 15 + i, 8, true);
    t.is_function.set(kSide - 8, 8, true);

    // Reserve the two version information blocks.
    for (int i = 0; i < 18; ++i) {
        t.is_function.set(i / 3, kSide - 11 + i % 3, true);
        t.is_function.set(kSide - 11 + i % 3, i / 3, true);
    }
    return t;
}

const Template& symbol_template() {
    static const Template t = build_template();
    return t;
}

void write_format_and_version(BitMatrix& m, int mask_id) {
    const std::uint32_t fmt = format_bits(mask_id);
    const auto bit = [&](int i) { return ((fmt >> i) & 1) != 0; };
    for (int i = 0; i <= 5; ++i) m.set(i, 8, bit(i));
    m.set(7, 8, bit(6));
    m.set(8, 8, bit(7));
    m.set(8, 7, bit(8));
    for (int i = 9; i < 15; ++i) m.set(8, 14 - i, bit(i));
    for (int i = 0; i < 8; ++i) m.set(8, kSide - 1 - i, bit(i));
    for (int i = 8; i < 15; ++i) m.set(kSide - 15 + i, 8, bit(i));
    m.set(kSide - 8, 8, true);  // dark module

    const std::uint32_t ver = version_bits();
    for (int i = 0; i < 18; ++i) {
        const bool b = ((ver >> i) & 1) != 0;
        m.set(i / 3, kSide - 11 + i % 3, b);
        m.set(kSide - 11 + i % 3, i / 3, b);
    }
}

}  // namespace

std::vector<std::uint8_t> encode_payload_bits(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxPayloadBytes))
        throw CapacityExceeded(text.size());

    BitWriter bw;
    bw.append(0b0100, 4);  // byte mode
    bw.append(static_cast<std::uint32_t>(text.size()), 16);
    for (unsigned char ch : text) bw.append(ch, 8);

    const std::size_t capacity_bits = static_cast<std::size_t>(kDataCodewords) * 8;
    const std::size_t terminator = std::min<std::size_t>(4, capacity_bits - bw.size());
    bw.append(0, static_cast<int>(terminator));
    if (bw.size() % 8 != 0) bw.append(0, static_cast<int>(8 - bw.size() % 8));

    std::vector<std::uint8_t> codewords = bw.to_bytes();
    for (std::uint8_t pad = 0xEC; codewords.size() < static_cast<std::size_t>(kDataCodewords);
         pad ^= 0xEC ^ 0x11)
        codewords.push_back(pad);
    return codewords;
}

std::vector<std::uint8_t> rs_ec_block(std::span<const std::uint8_t> data) {
    if (data.size() != static_cast<std::size_t>(kDataCodewordsPerBlock))
        throw std::invalid_argument("rs_ec_block expects exactly 107 bytes");
    return gf256::rs_remainder(data, kEcCodewordsPerBlock);
}

std::vector<std::uint8_t> interleave(std::span<const Block> blocks) {
    if (blocks.size() != static_cast<std::size_t>(kNumBlocks))
        throw std::invalid_argument("interleave expects exactly 4 blocks");
    for (const Block& b : blocks)
        if (b.data.size() != static_cast<std::size_t>(kDataCodewordsPerBlock) ||
            b.ec.size() != static_cast<std::size_t>(kEcCodewordsPerBlock))
            throw std::invalid_argument("interleave: block has wrong shape");

    std::vector<std::uint8_t> stream;
    stream.reserve(kTotalCodewords);
    for (int i = 0; i < kDataCodewordsPerBlock; ++i)
        for (const Block& b : blocks) stream.push_back(b.data[static_cast<std::size_t>(i)]);
    for (int i = 0; i < kEcCodewordsPerBlock; ++i)
        for (const Block& b : blocks) stream.push_back(b.ec[static_cast<std::size_t>(i)]);
    return stream;
}

BitMatrix build_matrix(std::span<const std::uint8_t> stream, int mask_id) {
    if (stream.size() != static_cast<std::size_t>(kTotalCodewords))
        throw std::invalid_argument("build_matrix expects a 532-byte stream");
    if (mask_id < 0 || mask_id > 7) throw std::invalid_argument("mask id out of range");

    const Template& t = symbol_template();
    BitMatrix m = t.base;

    // Zigzag data placement: column pairs from the right edge, alternating
    // upward/downward, skipping the vertical timing column.
    const std::size_t total_bits = stream.size() * 8;
    std::size_t bit_index = 0;
    for (int right = kSide - 1; right >= 1; right -= 2) {
        if (right == 6) right = 5;
        const bool upward = ((right + 1) & 2) == 0;
        for (int vert = 0; vert < kSide; ++vert) {
            const int row = upward ? kSide - 1 - vert : vert;
            for (int j = 0; j < 2; ++j) {
                const int col = right - j;
                if (t.is_function.at(row, col) || bit_index >= total_bits) continue;
                bool bit = ((stream[bit_index >> 3] >> (7 - (bit_index & 7))) & 1) != 0;
                if (mask_bit(mask_id, row, col)) bit = !bit;
                m.set(row, col, bit);
                ++bit_index;
            }
        }
    }
    // Version 13 has no remainder bits: the data region holds exactly 4256 bits.
    if (bit_index != total_bits)
        throw std::logic_error("data region mismatch: placed " + std::to_string(bit_index) +
                               " bits");

    write_format_and_version(m, mask_id);
    return m;
}

const BitMatrix& function_pattern_mask() { return symbol_template().is_function; }

std::int64_t penalty_score(const BitMatrix& m) {
    const int n = m.side();
    std::int64_t penalty = 0;

    // N1: same-colour runs of length >= 5 score 3 + (len - 5).
    for (int axis = 0; axis < 2; ++axis) {
        for (int i = 0; i < n; ++i) {
            int run = 1;
            for (int j = 1; j <= n; ++j) {
                const bool end = j == n;
                const std::uint8_t prev = axis == 0 ? m.at(i, j - 1) : m.at(j - 1, i);
                const std::uint8_t cur = end ? 2 : (axis == 0 ? m.at(i, j) : m.at(j, i));
                if (!end && cur == prev) {
                    ++run;
                } else {
                    if (run >= 5) penalty += 3 + (run - 5);
                    run = 1;
                }
            }
        }
    }

    // N2: every 2x2 block of one colour scores 3.
    for (int r = 0; r + 1 < n; ++r)
        for (int c = 0; c + 1 < n; ++c) {
            const std::uint8_t v = m.at(r, c);
            if (m.at(r, c + 1) == v && m.at(r + 1, c) == v && m.at(r + 1, c + 1) == v)
                penalty += 3;
        }

    // N3: finder-like 1:1:3:1:1 pattern with a 4-module light area on either
    // side, scanned as 11-cell windows in both orientations, 40 each.
    static constexpr std::uint8_t kPat1[11] = {1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0};
    static constexpr std::uint8_t kPat2[11] = {0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1};
    const auto window_matches = [&](int r, int c, int dr, int dc) {
        bool m1 = true, m2 = true;
        for (int k = 0; k < 11 && (m1 || m2); ++k) {
            const std::uint8_t v = m.at(r + k * dr, c + k * dc);
            m1 = m1 && v == kPat1[k];
            m2 = m2 && v == kPat2[k];
        }
        return m1 || m2;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 10 < n; ++j) {
            if (window_matches(i, j, 0, 1)) penalty += 40;
            if (window_matches(j, i, 1, 0)) penalty += 40;
        }

    // N4: 10 points per 5% deviation of the dark-module proportion from 50%.
    const std::int64_t total = static_cast<std::int64_t>(n) * n;
    const std::int64_t dark = static_cast<std::int64_t>(m.dark_count());
    penalty += 10 * (std::abs(dark * 100 - 50 * total) / (5 * total));
    return penalty;
}

std::pair<int, BitMatrix> select_mask(std::span<const BitMatrix> candidates) {
    if (candidates.size() != 8) throw std::invalid_argument("select_mask expects 8 candidates");
    int best = 0;
    std::int64_t best_penalty = penalty_score(candidates[0]);
    for (int i = 1; i < 8; ++i) {
        const std::int64_t p = penalty_score(candidates[static_cast<std::size_t>(i)]);
        if (p < best_penalty) {
            best_penalty = p;
            best = i;
        }
    }
    return {best, candidates[static_cast<std::size_t>(best)]};
}

BitMatrix encode(std::string_view text, const QrConfig& config) {
    (void)config;  // constructor already validated the fixed parameters
    const std::vector<std::uint8_t> data = encode_payload_bits(text);

    std::vector<Block> blocks(kNumBlocks);
    for (int b = 0; b < kNumBlocks; ++b) {
        auto first = data.begin() + static_cast<std::ptrdiff_t>(b) * kDataCodewordsPerBlock;
        blocks[static_cast<std::size_t>(b)].data.assign(first, first + kDataCodewordsPerBlock);
        blocks[static_cast<std::size_t>(b)].ec =
            rs_ec_block(blocks[static_cast<std::size_t>(b)].data);
    }
    const std::vector<std::uint8_t> stream = interleave(blocks);

    std::vector<BitMatrix> candidates;
    candidates.reserve(8);
    for (int mask = 0; mask < 8; ++mask) candidates.push_back(build_matrix(stream, mask));
    return select_mask(candidates).second;
}

}  // namespace qrphish::qr
