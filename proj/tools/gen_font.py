#!/usr/bin/env python3
# Copyright (C) 2026 The inimage Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates src/raster/embedded_font.cpp.

Rasterizes a fixed glyph set (printable ASCII plus common math symbols) from
DejaVu Sans Mono into 10x20 1-bit cells. The output file is committed; this
script only needs rerunning to change the glyph set.

Usage: python3 tools/gen_font.py > src/raster/embedded_font.cpp
"""

import sys

from PIL import Image, ImageDraw, ImageFont

CELL_W, CELL_H = 10, 20
FONT_SIZE = 16

MATH_EXTRAS = "×÷°±≤≥≠√π∆θμΣ∠²³½→≈"


def find_font() -> str:
    import matplotlib

    from pathlib import Path

    p = Path(matplotlib.__file__).parent / "mpl-data" / "fonts" / "ttf" / "DejaVuSansMono.ttf"
    if p.exists():
        return str(p)
    for candidate in Path("/usr/share/fonts").rglob("DejaVuSansMono.ttf"):
        return str(candidate)
    raise SystemExit("DejaVuSansMono.ttf not found")


def render_glyph(font: ImageFont.FreeTypeFont, ch: str) -> list[int]:
    img = Image.new("L", (CELL_W, CELL_H), 0)
    draw = ImageDraw.Draw(img)
    ascent, descent = font.getmetrics()
    y0 = (CELL_H - (ascent + descent)) // 2
    adv = font.getlength(ch)
    x0 = int(round((CELL_W - adv) / 2))
    draw.text((x0, y0), ch, font=font, fill=255)
    rows = []
    px = img.load()
    for y in range(CELL_H):
        bits = 0
        for x in range(CELL_W):
            if px[x, y] > 127:
                bits |= 1 << x
        rows.append(bits)
    return rows


def main() -> None:
    font = ImageFont.truetype(find_font(), FONT_SIZE)
    glyphs = {}
    for code in range(0x20, 0x7F):
        glyphs[code] = render_glyph(font, chr(code))
    for ch in MATH_EXTRAS:
        glyphs[ord(ch)] = render_glyph(font, ch)

    out = sys.stdout
    out.write("// Copyright (C) 2026 The inimage Authors\n")
    out.write("// SPDX-License-Identifier: Apache-2.0\n\n")
    out.write("// Generated by tools/gen_font.py. Do not edit by hand.\n\n")
    out.write('#include "inimage/raster/font.hpp"\n\n')
    out.write("namespace inimage::raster::detail {\n\n")
    out.write(f"const GlyphBitmap kGlyphs[] = {{\n")
    for code in sorted(glyphs):
        rows = ", ".join(f"0x{r:03x}" for r in glyphs[code])
        name = chr(code) if 0x20 < code < 0x7F and chr(code) != "\\" else ""
        comment = f"  // '{name}'" if name else ""
        out.write(f"    {{0x{code:04x}, {{{rows}}}}},{comment}\n")
    out.write("};\n\n")
    out.write(f"const std::size_t kGlyphCount = sizeof(kGlyphs) / sizeof(kGlyphs[0]);\n\n")
    out.write("}  // namespace inimage::raster::detail\n")


if __name__ == "__main__":
    main()
