/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#include "qrphish/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "qrphish/errors.hpp"
#include "qrphish/parallel.hpp"
#include "qrphish/qr_encoder.hpp"
#include "qrphish/rng.hpp"

namespace qrphish {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SampleSet SampleSet::subset(std::span<const std::uint32_t> indices) const {
    SampleSet out;
    out.features = FeatureMatrix(indices.size(), features.width());
    out.labels.reserve(indices.size());
    out.urls.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const std::uint32_t src = indices[i];
        features.for_each_set(src, [&](std::uint32_t f) { out.features.set(i, f); });
        out.labels.push_back(labels[src]);
        out.urls.push_back(urls[src]);
    }
    return out;
}

std::vector<UrlRecord> load_url_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw EmptyFile(path);
    ++line_no;  // header consumed

    std::vector<UrlRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        // URLs may contain commas; the label never does.
        const std::size_t cut = line.rfind(',');
        if (cut == std::string::npos) throw MalformedRow(line_no, "no label field");
        UrlRecord rec;
        rec.url = strip(line.substr(0, cut));
        if (rec.url.size() >= 2 && rec.url.front() == '"' && rec.url.back() == '"')
            rec.url = rec.url.substr(1, rec.url.size() - 2);
        if (rec.url.empty()) throw MalformedRow(line_no, "empty url");
        const std::string label = lower(strip(line.substr(cut + 1)));
        if (label == "0" || label == "legitimate")
            rec.label = 0;
        else if (label == "1" || label == "phishing")
            rec.label = 1;
        else
            throw MalformedRow(line_no, "unparseable label '" + label + "'");
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw EmptyFile(path);
    return records;
}

std::pair<std::vector<UrlRecord>, std::vector<RejectedUrl>> filter_encodable(
    std::span<const UrlRecord> records) {
    std::vector<UrlRecord> kept;
    std::vector<RejectedUrl> rejected;
    for (const UrlRecord& r : records) {
        if (r.url.size() <= static_cast<std::size_t>(qr::kMaxPayloadBytes))
            kept.push_back(r);
        else
            rejected.push_back({r.url, r.url.size()});
    }
    return {std::move(kept), std::move(rejected)};
}

SampleSet build_feature_matrix(std::span<const UrlRecord> records) {
    const std::size_t width = static_cast<std::size_t>(qr::kSide) * qr::kSide;
    SampleSet set;
    set.features = FeatureMatrix(records.size(), width);
    set.labels.resize(records.size());
    set.urls.resize(records.size());

    parallel_for(records.size(), [&](std::size_t i) {
        const BitMatrix m = qr::encode(records[i].url);
        const std::vector<std::uint8_t>& flat = m.flat();
        for (std::size_t f = 0; f < flat.size(); ++f)
            if (flat[f]) set.features.set(i, f);
        set.labels[i] = records[i].label;
        set.urls[i] = records[i].url;
    });
    return set;
}

SplitIndices split_train_test(std::span<const std::uint8_t> labels, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw DegenerateSplit("train_fraction must be in (0,1)");

    std::vector<std::uint32_t> by_class[2];
    for (std::size_t i = 0; i < labels.size(); ++i)
        by_class[labels[i] ? 1 : 0].push_back(static_cast<std::uint32_t>(i));
    if (by_class[0].empty() || by_class[1].empty())
        throw DegenerateSplit("both classes must be present");

    Rng rng(derive_seed(spec.seed, "split"));
    SplitIndices out;
    for (auto& cls : by_class) {
        rng.shuffle(cls);
        const std::size_t n_train =
            static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(cls.size())));
        if (n_train == 0 || n_train == cls.size())
            throw DegenerateSplit("a class would have an empty train or test part");
        out.train.insert(out.train.end(), cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(n_train));
        out.test.insert(out.test.end(), cls.begin() + static_cast<std::ptrdiff_t>(n_train), cls.end());
    }
    std::sort(out.train.begin(), out.train.end());
    std::sort(out.test.begin(), out.test.end());
    return out;
}

namespace {

constexpr char kMagic[4] = {'Q', 'R', 'S', 'S'};
constexpr std::uint32_t kFormatVersion = 1;

template <typename T>
void write_pod(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T read_pod(std::ifstream& in, const std::string& path) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) throw IoError("truncated file: " + path);
    return v;
}

}  // namespace

void save_sample_set(const SampleSet& set, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kMagic, 4);
    write_pod(out, kFormatVersion);
    write_pod(out, static_cast<std::uint64_t>(set.size()));
    write_pod(out, static_cast<std::uint32_t>(set.features.width()));
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto words = set.features.row_words(i);
        out.write(reinterpret_cast<const char*>(words.data()),
                  static_cast<std::streamsize>(words.size() * sizeof(std::uint64_t)));
    }
    out.write(reinterpret_cast<const char*>(set.labels.data()),
              static_cast<std::streamsize>(set.labels.size()));
    for (const std::string& url : set.urls) {
        write_pod(out, static_cast<std::uint32_t>(url.size()));
        out.write(url.data(), static_cast<std::streamsize>(url.size()));
    }
    if (!out) throw IoError("short write to " + path);
}

SampleSet load_sample_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatVersionMismatch(path + ": not a sample-set file");
    const auto version = read_pod<std::uint32_t>(in, path);
    if (version != kFormatVersion)
        throw FormatVersionMismatch(path + ": format version " + std::to_string(version) +
                                    ", expected " + std::to_string(kFormatVersion));
    const auto n = read_pod<std::uint64_t>(in, path);
    const auto width = read_pod<std::uint32_t>(in, path);

    SampleSet set;
    set.features = FeatureMatrix(n, width);
    const std::size_t wpr = set.features.words_per_row();
    std::vector<std::uint64_t> row(wpr);
    for (std::size_t i = 0; i < n; ++i) {
        in.read(reinterpret_cast<char*>(row.data()),
                static_cast<std::streamsize>(wpr * sizeof(std::uint64_t)));
        if (!in) throw IoError("truncated file: " + path);
        for (std::size_t k = 0; k < wpr; ++k) {
            std::uint64_t word = row[k];
            while (word) {
                const int b = std::countr_zero(word);
                set.features.set(i, k * 64 + static_cast<std::size_t>(b));
                word &= word - 1;
            }
        }
    }
    set.labels.resize(n);
    in.read(reinterpret_cast<char*>(set.labels.data()), static_cast<std::streamsize>(n));
    if (!in && n > 0) throw IoError("truncated file: " + path);
    set.urls.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto len = read_pod<std::uint32_t>(in, path);
        set.urls[i].resize(len);
        in.read(set.urls[i].data(), len);
        if (!in) throw IoError("truncated file: " + path);
    }
    return set;
}

void save_split(const SplitIndices& split, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write("QRSP", 4);
    write_pod(out, kFormatVersion);
    for (const auto* part : {&split.train, &split.test}) {
        write_pod(out, static_cast<std::uint64_t>(part->size()));
        out.write(reinterpret_cast<const char*>(part->data()),
                  static_cast<std::streamsize>(part->size() * sizeof(std::uint32_t)));
    }
    if (!out) throw IoError("short write to " + path);
}

SplitIndices load_split(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "QRSP", 4) != 0)
        throw FormatVersionMismatch(path + ": not a split file");
    const auto version = read_pod<std::uint32_t>(in, path);
    if (version != kFormatVersion)
        throw FormatVersionMismatch(path + ": unsupported split format version");
    SplitIndices split;
    for (auto* part : {&split.train, &split.test}) {
        const auto n = read_pod<std::uint64_t>(in, path);
        part->resize(n);
        in.read(reinterpret_cast<char*>(part->data()),
                static_cast<std::streamsize>(n * sizeof(std::uint32_t)));
        if (!in) throw IoError("truncated file: " + path);
    }
    return split;
}

}  // namespace qrphish
