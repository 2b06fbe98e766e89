// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "inimage/raster/image.hpp"

namespace inimage::raster {

enum class ImageFormat { png, jpeg };

// Sniffs the container from magic bytes; throws DecodeError otherwise.
ImageFormat sniff_format(std::span<const std::uint8_t> bytes);

Image decode_image(std::span<const std::uint8_t> bytes);
Image decode_png(std::span<const std::uint8_t> bytes);
Image decode_jpeg(std::span<const std::uint8_t> bytes);

// Deterministic PNG stream: fixed zlib level, filter NONE, no ancillary
// chunks. Equal images encode to equal bytes.
std::vector<std::uint8_t> encode_png(const Image& img);

Image read_image_file(const std::filesystem::path& path);
void write_png_file(const std::filesystem::path& path, const Image& img);

}  // namespace inimage::raster
