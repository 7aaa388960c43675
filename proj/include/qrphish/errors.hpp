/*
* Copyright 2026 The qrphish authors
*/
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrphish {

// Payload too long for a version-13-L symbol (max 425 bytes).
class CapacityExceeded : public std::runtime_error {
public:
    explicit CapacityExceeded(std::size_t length)
        : std::runtime_error("payload of " + std::to_string(length) +
                             " bytes exceeds the 425-byte version-13-L capacity"),
          length_(length) {}
    std::size_t length() const { return length_; }

private:
    std::size_t length_;
};

class MalformedRow : public std::runtime_error {
public:
    MalformedRow(std::size_t line_no, const std::string& why)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + why),
          line_no_(line_no) {}
    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

class EmptyFile : public std::runtime_error {
public:
    explicit EmptyFile(const std::string& path)
        : std::runtime_error("no data rows in " + path) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class FormatVersionMismatch : public std::runtime_error {
public:
    explicit FormatVersionMismatch(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateSplit : public std::runtime_error {
public:
    explicit DegenerateSplit(const std::string& what) : std::runtime_error(what) {}
};

class SingleClassTraining : public std::runtime_error {
public:
    SingleClassTraining() : std::runtime_error("training data contains a single class") {}
};

class ShapeMismatch : public std::runtime_error {
public:
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedFamily : public std::runtime_error {
public:
    explicit UnsupportedFamily(const std::string& what) : std::runtime_error(what) {}
};

class LengthMismatch : public std::runtime_error {
public:
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

class EmptyInput : public std::runtime_error {
public:
    explicit EmptyInput(const std::string& what) : std::runtime_error(what) {}
};

class SingleClassLabels : public std::runtime_error {
public:
    SingleClassLabels() : std::runtime_error("labels contain a single class") {}
};

class TooFewSamplesPerClass : public std::runtime_error {
public:
    explicit TooFewSamplesPerClass(const std::string& what) : std::runtime_error(what) {}
};

class EmptyParamSpace : public std::runtime_error {
public:
    EmptyParamSpace() : std::runtime_error("hyperparameter space is empty") {}
};

class EmptySelection : public std::runtime_error {
public:
    EmptySelection() : std::runtime_error("importance vector selects no features") {}
};

class MissingCell : public std::runtime_error {
public:
    explicit MissingCell(const std::string& cell)
        : std::runtime_error("missing result cell: " + cell) {}
};

}  // namespace qrphish
