/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qrphish/bit_matrix.hpp"

namespace qrphish::qr {

// Version-13-L symbol geometry and codeword structure.
inline constexpr int kVersion = 13;
inline constexpr int kSide = 69;
inline constexpr int kTotalCodewords = 532;
inline constexpr int kEcCodewordsPerBlock = 26;
inline constexpr int kNumBlocks = 4;
inline constexpr int kDataCodewordsPerBlock = 107;
inline constexpr int kDataCodewords = kNumBlocks * kDataCodewordsPerBlock;  // 428
inline constexpr int kMaxPayloadBytes = (kDataCodewords * 8 - 20) / 8;      // 425
inline constexpr std::array<int, 3> kAlignmentCenters = {6, 34, 62};

// Byte-mode segment (4-bit mode 0100, 16-bit count), terminator, bit padding,
// then alternating 0xEC/0x11 pad codewords up to 428 bytes.
// Throws CapacityExceeded if text is longer than 425 bytes.
std::vector<std::uint8_t> encode_payload_bits(std::string_view text);

// 26 Reed-Solomon codewords for one 107-byte data block.
std::vector<std::uint8_t> rs_ec_block(std::span<const std::uint8_t> data);

struct Block {
    std::vector<std::uint8_t> data;  // 107 bytes
    std::vector<std::uint8_t> ec;    // 26 bytes
};

// Column-wise interleaving of data codewords across the 4 blocks, followed by
// the EC codewords interleaved the same way: 532 bytes.
std::vector<std::uint8_t> interleave(std::span<const Block> blocks);

// Complete symbol for one mask id: function patterns, reserved areas, data in
// the standard zigzag order, the mask applied to the data region, and the
// format/version bit fields for that mask.
BitMatrix build_matrix(std::span<const std::uint8_t> stream, int mask_id);

// Dark cells mark modules that do not depend on the payload (finders,
// separators, timing, alignment, format/version areas, dark module).
const BitMatrix& function_pattern_mask();

// Total penalty N1+N2+N3+N4 (weights 3, 3, 40, 10).
std::int64_t penalty_score(const BitMatrix& m);

// Candidate with the minimal penalty; ties go to the lowest mask id.
std::pair<int, BitMatrix> select_mask(std::span<const BitMatrix> candidates);

// Full pipeline: payload -> codewords -> RS blocks -> interleave -> best mask.
BitMatrix encode(std::string_view text, const QrConfig& config = QrConfig());

}  // namespace qrphish::qr
