// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

#include "inimage/raster/codec.hpp"

#include <jpeglib.h>
#include <png.h>

#include <csetjmp>
#include <cstring>

#include "inimage/errors.hpp"
#include "inimage/util.hpp"

namespace inimage::raster {

namespace {

struct PngReadState {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t offset;
};

void png_read_fn(png_structp png, png_bytep out, png_size_t count) {
    auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
    if (st->offset + count > st->size) {
        png_error(png, "truncated PNG stream");
    }
    std::memcpy(out, st->data + st->offset, count);
    st->offset += count;
}

void png_write_fn(png_structp png, png_bytep data, png_size_t count) {
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + count);
}

void png_flush_fn(png_structp) {}

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

}  // namespace

ImageFormat sniff_format(std::span<const std::uint8_t> bytes) {
    static const std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_sig, 8) == 0) {
        return ImageFormat::png;
    }
    if (bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff) {
        return ImageFormat::jpeg;
    }
    throw DecodeError("unrecognized image container (expected PNG or JPEG)");
}

Image decode_png(std::span<const std::uint8_t> bytes) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("invalid PNG stream");
    }
    PngReadState st{bytes.data(), bytes.size(), 0};
    png_set_read_fn(png, &st, png_read_fn);
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    if (png_get_rowbytes(png, info) != static_cast<std::size_t>(width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("unexpected PNG row layout after expansion");
    }

    Image img(width, height);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) rows[y] = img.row(y).data();
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

Image decode_jpeg(std::span<const std::uint8_t> bytes) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("invalid JPEG stream");
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    Image img(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height));
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = img.row(static_cast<int>(cinfo.output_scanline)).data();
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

Image decode_image(std::span<const std::uint8_t> bytes) {
    switch (sniff_format(bytes)) {
        case ImageFormat::png:
            return decode_png(bytes);
        case ImageFormat::jpeg:
            return decode_jpeg(bytes);
    }
    throw DecodeError("unreachable");
}

std::vector<std::uint8_t> encode_png(const Image& img) {
    if (img.empty()) throw DataError("cannot encode an empty image");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("png_create_info_struct failed");
    }
    std::vector<std::uint8_t> out;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("PNG encode failed");
    }
    png_set_write_fn(png, &out, png_write_fn, png_flush_fn);

    // Pinned encoder configuration: level 6, filter NONE only, IHDR/IDAT/IEND.
    png_set_compression_level(png, 6);
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height(); ++y) {
        png_write_row(png, const_cast<png_bytep>(img.row(y).data()));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

Image read_image_file(const std::filesystem::path& path) {
    return decode_image(util::read_file(path));
}

void write_png_file(const std::filesystem::path& path, const Image& img) {
    auto bytes = encode_png(img);
    util::write_file(path, bytes);
}

}  // namespace inimage::raster
