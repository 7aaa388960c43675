/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrphish/bit_matrix.hpp"

namespace qrphish {

struct UrlRecord {
    std::string url;
    std::uint8_t label = 0;  // 0 = legitimate, 1 = phishing
};

// N x width binary matrix, one bit-packed row per sample.
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    FeatureMatrix(std::size_t rows, std::size_t width)
        : rows_(rows), width_(width), wpr_((width + 63) / 64), bits_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t width() const { return width_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t row, std::size_t f) const {
        return (bits_[row * wpr_ + (f >> 6)] >> (f & 63)) & 1;
    }
    void set(std::size_t row, std::size_t f) { bits_[row * wpr_ + (f >> 6)] |= 1ull << (f & 63); }

    std::span<const std::uint64_t> row_words(std::size_t row) const {
        return {bits_.data() + row * wpr_, wpr_};
    }

    // Calls fn(feature_index) for every set bit of the row, ascending.
    template <typename Fn>
    void for_each_set(std::size_t row, Fn&& fn) const {
        const std::uint64_t* w = bits_.data() + row * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t word = w[k];
            while (word) {
                const int b = std::countr_zero(word);
                fn(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
                word &= word - 1;
            }
        }
    }

    // Same, but restricted by a word-mask of selected features.
    template <typename Fn>
    void for_each_set_masked(std::size_t row, std::span<const std::uint64_t> mask, Fn&& fn) const {
        const std::uint64_t* w = bits_.data() + row * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) {
            std::uint64_t word = w[k] & mask[k];
            while (word) {
                const int b = std::countr_zero(word);
                fn(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
                word &= word - 1;
            }
        }
    }

    bool operator==(const FeatureMatrix&) const = default;

private:
    std::size_t rows_ = 0, width_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Feature rows plus labels and provenance URLs. URLs are never model input.
struct SampleSet {
    FeatureMatrix features;
    std::vector<std::uint8_t> labels;
    std::vector<std::string> urls;

    std::size_t size() const { return labels.size(); }
    SampleSet subset(std::span<const std::uint32_t> indices) const;

    bool operator==(const SampleSet&) const = default;
};

struct SplitSpec {
    double train_fraction = 0.8;
    bool stratified = true;
    std::uint64_t seed = 0;
};

struct RejectedUrl {
    std::string url;
    std::size_t length = 0;
};

// Reads a `url,label` CSV (header required). Labels may be 0/1 or
// legitimate/phishing (case-insensitive); URLs may contain commas, the label
// is taken after the last one. Throws MalformedRow / EmptyFile.
std::vector<UrlRecord> load_url_csv(const std::string& path);

// Keeps records whose URL fits the 425-byte version-13-L capacity.
std::pair<std::vector<UrlRecord>, std::vector<RejectedUrl>> filter_encodable(
    std::span<const UrlRecord> records);

// Encodes every URL and flattens the 69x69 matrix row-major into 4761 features.
SampleSet build_feature_matrix(std::span<const UrlRecord> records);

struct SplitIndices {
    std::vector<std::uint32_t> train;
    std::vector<std::uint32_t> test;
};

// Per-class seeded shuffle; floor(train_fraction * class size) rows per class
// go to train, the rest to test. Throws DegenerateSplit if either part would
// lose a class entirely.
SplitIndices split_train_test(std::span<const std::uint8_t> labels, const SplitSpec& spec);

void save_sample_set(const SampleSet& set, const std::string& path);
SampleSet load_sample_set(const std::string& path);

void save_split(const SplitIndices& split, const std::string& path);
SplitIndices load_split(const std::string& path);

}  // namespace qrphish
