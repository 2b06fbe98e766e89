// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace inimage {

// Base for all library errors. Subtypes map onto CLI exit codes:
// UsageError -> 1, DataError -> 2, TransportError/ProviderError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

// Malformed inputs: bad manifests, invalid cue geometry, undecodable images.
class DataError : public Error {
public:
    using Error::Error;
};

class DecodeError : public DataError {
public:
    using DataError::DataError;
};

// Request rejected locally before any call was made.
class SizeError : public DataError {
public:
    using DataError::DataError;
};

// Network-level failure after the retry budget was exhausted.
class TransportError : public Error {
public:
    using Error::Error;
};

// The provider answered with an error payload.
class ProviderError : public Error {
public:
    ProviderError(int status, const std::string& what)
        : Error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

// Rating response could not be parsed after the re-ask; carries the raw text.
class RatingParseError : public DataError {
public:
    explicit RatingParseError(const std::string& raw)
        : DataError("unparseable rating response: " + raw), raw_(raw) {}
    const std::string& raw_text() const { return raw_; }

private:
    std::string raw_;
};

}  // namespace inimage
