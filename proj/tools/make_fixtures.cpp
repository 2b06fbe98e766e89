// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

// Regenerates the committed test fixtures: deterministic base images under
// tests/testdata/images and frozen goldens under tests/testdata/golden.
//
//   ./make_fixtures <testdata_dir> [--skip-goldens]
//
// Goldens freeze the output of the current renderer; regenerate them only on
// an intentional rendering change and review the diff.

#include <cstddef>
#include <cstdio>

#include <jpeglib.h>

#include <filesystem>
#include <iostream>
#include <map>
#include <vector>

#include "inimage/cue_renderer.hpp"
#include "inimage/errors.hpp"
#include "inimage/harness.hpp"
#include "inimage/layout.hpp"
#include "inimage/prompt.hpp"
#include "inimage/raster/codec.hpp"
#include "inimage/raster/kernels.hpp"
#include "inimage/util.hpp"

namespace {

using namespace inimage;
using raster::Image;
using raster::Rect;
using raster::Rgb;

const Rgb kBarColors[] = {{60, 120, 216}, {216, 80, 60}, {70, 180, 90},
                          {230, 160, 40}, {150, 90, 200}};

void draw_line(Image& img, double x0, double y0, double x1, double y1, Rgb color, int width) {
    CueAnnotation cue;
    cue.kind = CueKind::line;
    cue.x0 = x0;
    cue.y0 = y0;
    cue.x1 = x1;
    cue.y1 = y1;
    cue.stroke_color = color;
    cue.stroke_width = width;
    img = apply_cues(img, {cue});
}

Image bar_chart(const std::vector<int>& values) {
    Image img(320, 240);
    raster::kernels::fill_rect(img, Rect{24, 20, 2, 181}, raster::kBlack);
    raster::kernels::fill_rect(img, Rect{24, 200, 280, 2}, raster::kBlack);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int h = values[i] * 30;
        raster::kernels::fill_rect(img, Rect{30 + static_cast<int>(i) * 60, 200 - h, 40, h},
                                   kBarColors[i % 5]);
    }
    return img;
}

Image triangle_scene() {
    Image img(160, 120);
    draw_line(img, 0.125, 0.833, 0.8125, 0.833, raster::kBlack, 2);
    draw_line(img, 0.8125, 0.833, 0.8125, 0.166, raster::kBlack, 2);
    draw_line(img, 0.125, 0.833, 0.8125, 0.166, raster::kBlack, 2);
    return img;
}

Image squares_scene() {
    Image img(160, 120);
    for (int row = 0; row < 3; ++row) {
        for (int col = 0; col < 4; ++col) {
            raster::kernels::fill_rect(img, Rect{14 + col * 36, 12 + row * 36, 24, 24},
                                       Rgb{200, 120, 40});
        }
    }
    return img;
}

Image diagram_scene() {
    Image img(160, 120);
    raster::kernels::fill_rect(img, Rect{10, 30, 40, 60}, Rgb{120, 170, 230});
    raster::kernels::fill_rect(img, Rect{70, 15, 80, 90}, Rgb{240, 200, 90});
    return img;
}

Image blocks_scene() {
    Image img(160, 120, Rgb{235, 235, 225});
    raster::kernels::fill_rect(img, Rect{20, 70, 28, 28}, Rgb{40, 40, 70});
    raster::kernels::fill_rect(img, Rect{66, 70, 28, 28}, Rgb{40, 40, 70});
    raster::kernels::fill_rect(img, Rect{112, 70, 28, 28}, Rgb{40, 40, 70});
    return img;
}

// Unique deterministic stripe pattern per index.
Image pattern(int index, int w = 64, int h = 48) {
    Image img(w, h);
    const Rgb a{static_cast<std::uint8_t>((index * 37 + 20) % 256),
                static_cast<std::uint8_t>((index * 91 + 60) % 256),
                static_cast<std::uint8_t>((index * 53 + 100) % 256)};
    const Rgb b{250, 250, 245};
    const int stripe = 4 + index % 5;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            img.set(x, y, ((x + 2 * y) / stripe) % 2 == 0 ? a : b);
        }
    }
    return img;
}

std::vector<std::uint8_t> encode_jpeg(const Image& img, int quality) {
    jpeg_compress_struct cinfo;
    jpeg_error_mgr jerr;
    cinfo.err = jpeg_std_error(&jerr);
    jpeg_create_compress(&cinfo);
    unsigned char* buffer = nullptr;
    unsigned long size = 0;
    jpeg_mem_dest(&cinfo, &buffer, &size);
    cinfo.image_width = static_cast<JDIMENSION>(img.width());
    cinfo.image_height = static_cast<JDIMENSION>(img.height());
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width()) * 3);
    while (cinfo.next_scanline < cinfo.image_height) {
        const auto src = img.row(static_cast<int>(cinfo.next_scanline));
        std::copy(src.begin(), src.end(), row.begin());
        JSAMPROW rows[1] = {row.data()};
        jpeg_write_scanlines(&cinfo, rows, 1);
    }
    jpeg_finish_compress(&cinfo);
    std::vector<std::uint8_t> out(buffer, buffer + size);
    jpeg_destroy_compress(&cinfo);
    free(buffer);
    return out;
}

void write_images(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    raster::write_png_file(dir / "bar_chart.png", bar_chart({3, 1, 2, 5, 4}));
    raster::write_png_file(dir / "chart2.png", bar_chart({2, 3, 1, 5, 4}));
    raster::write_png_file(dir / "triangle.png", triangle_scene());
    raster::write_png_file(dir / "squares.png", squares_scene());
    raster::write_png_file(dir / "diagram.png", diagram_scene());
    raster::write_png_file(dir / "scene.png", blocks_scene());
    for (int i = 1; i <= 20; ++i) {
        char name[16];
        std::snprintf(name, sizeof(name), "q%02d.png", i);
        raster::write_png_file(dir / name, pattern(i));
    }
    for (int i = 1; i <= 4; ++i) {
        raster::write_png_file(dir / ("mv" + std::to_string(i) + ".png"), pattern(100 + i));
    }
    const auto jpg = encode_jpeg(pattern(105), 90);
    util::write_file(dir / "mv5.jpg", jpg);
}

Demonstration find_demo(const std::vector<Demonstration>& pool, const std::string& id) {
    for (const auto& d : pool) {
        if (d.id == id) return d;
    }
    throw DataError("fixture demo missing: " + id);
}

QueryInstance find_query(const std::vector<QueryInstance>& dataset, const std::string& id) {
    for (const auto& q : dataset) {
        if (q.id == id) return q;
    }
    throw DataError("fixture query missing: " + id);
}

void write_goldens(const std::filesystem::path& testdata) {
    namespace fs = std::filesystem;
    const auto golden = testdata / "golden";
    fs::create_directories(golden);

    const auto pool = load_demo_pool(testdata / "pool.json");
    const auto dataset = load_dataset(testdata / "dataset_20.jsonl");
    const QueryInstance query = find_query(dataset, "q01");
    const std::vector<Demonstration> one = {find_demo(pool, "d_fqa")};
    const std::vector<Demonstration> two = {find_demo(pool, "d_fqa"), find_demo(pool, "d_sta")};
    const LayoutStyle style;

    struct Config {
        const char* name;
        const std::vector<Demonstration>* demos;
        LayoutOrder order;
    };
    const Config configs[] = {
        {"agg_k1_t2b", &one, LayoutOrder::T2B}, {"agg_k1_b2t", &one, LayoutOrder::B2T},
        {"agg_k1_l2r", &one, LayoutOrder::L2R}, {"agg_k1_r2l", &one, LayoutOrder::R2L},
        {"agg_k2_t2b", &two, LayoutOrder::T2B},
    };
    for (const auto& cfg : configs) {
        const AggregateImage agg = build_aggregate(*cfg.demos, query, cfg.order, 1.0, style);
        raster::write_png_file(golden / (std::string(cfg.name) + ".png"), agg.pixels);
        util::write_text_file(golden / (std::string(cfg.name) + ".regions.json"),
                              region_map_to_json(agg.region_map).dump(2) + "\n");
    }

    // Prompt goldens for the four single-mode builders, 1-shot.
    CaptionMap captions;
    captions["d_fqa"] =
        "A bar chart with five bars; the second bar is the lowest and the first bar holds the "
        "middle value.";
    captions["q01"] = "A small striped pattern.";
    util::write_text_file(golden / "prompt_t_icl.json",
                          canonical_serialize(build_t_icl(one, query)));
    util::write_text_file(golden / "prompt_t_icl_img.json",
                          canonical_serialize(build_t_icl_img(one, captions, query)));
    util::write_text_file(golden / "prompt_vt_icl.json",
                          canonical_serialize(build_vt_icl(one, query, true)));
    const AggregateImage agg = build_aggregate(one, query, LayoutOrder::T2B, 1.0, style);
    util::write_text_file(golden / "prompt_i2l.json", canonical_serialize(build_i2l(agg)));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: make_fixtures <testdata_dir> [--skip-goldens]\n";
        return 1;
    }
    const std::filesystem::path testdata(argv[1]);
    const bool skip_goldens = argc > 2 && std::string(argv[2]) == "--skip-goldens";
    try {
        write_images(testdata / "images");
        if (!skip_goldens) {
            write_goldens(testdata);
        }
    } catch (const std::exception& e) {
        std::cerr << "make_fixtures failed: " << e.what() << "\n";
        return 1;
    }
    std::cout << "fixtures written under " << testdata.generic_string() << "\n";
    return 0;
}
