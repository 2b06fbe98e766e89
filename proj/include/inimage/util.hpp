// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace inimage::util {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text_file(const std::filesystem::path& path, std::string_view text);
// Write to a sibling temp file and rename into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

std::string base64_encode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> base64_decode(std::string_view text);

// 64 lowercase hex characters (SHA-256).
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

// FNV-1a over a seed and a string; used to derive per-item RNG seeds.
std::uint64_t fnv1a64(std::uint64_t seed, std::string_view text);

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);

}  // namespace inimage::util
