// Copyright (C) 2026 The inimage Authors
// SPDX-License-Identifier: Apache-2.0

// Generated by tools/gen_font.py. Do not edit by hand.

#include "inimage/raster/font.hpp"

namespace inimage::raster::detail {

const GlyphBitmap kGlyphs[] = {
    {0x0020, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x0021, {0x000, 0x000, 0x000, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x010, 0x000, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '!'
    {0x0022, {0x000, 0x000, 0x000, 0x048, 0x048, 0x048, 0x048, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '"'
    {0x0023, {0x000, 0x000, 0x000, 0x000, 0x090, 0x090, 0x098, 0x3fe, 0x048, 0x048, 0x04c, 0x1ff, 0x024, 0x024, 0x026, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '#'
    {0x0024, {0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x084, 0x004, 0x004, 0x03c, 0x0f0, 0x180, 0x180, 0x084, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '$'
    {0x0025, {0x000, 0x000, 0x000, 0x00e, 0x012, 0x011, 0x012, 0x18e, 0x060, 0x018, 0x0e6, 0x120, 0x110, 0x120, 0x0e0, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '%'
    {0x0026, {0x000, 0x000, 0x000, 0x078, 0x00c, 0x004, 0x00c, 0x00c, 0x01c, 0x132, 0x122, 0x163, 0x1c2, 0x0c6, 0x1bc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '&'
    {0x0027, {0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '''
    {0x0028, {0x000, 0x000, 0x000, 0x060, 0x020, 0x030, 0x010, 0x010, 0x018, 0x018, 0x018, 0x018, 0x010, 0x010, 0x030, 0x020, 0x060, 0x000, 0x000, 0x000}},  // '('
    {0x0029, {0x000, 0x000, 0x000, 0x008, 0x018, 0x010, 0x030, 0x030, 0x020, 0x020, 0x020, 0x020, 0x030, 0x030, 0x010, 0x018, 0x008, 0x000, 0x000, 0x000}},  // ')'
    {0x002a, {0x000, 0x000, 0x000, 0x010, 0x010, 0x094, 0x078, 0x078, 0x094, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '*'
    {0x002b, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x1fe, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '+'
    {0x002c, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x030, 0x010, 0x018, 0x000, 0x000}},  // ','
    {0x002d, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '-'
    {0x002e, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '.'
    {0x002f, {0x000, 0x000, 0x000, 0x080, 0x0c0, 0x040, 0x060, 0x020, 0x030, 0x010, 0x018, 0x008, 0x00c, 0x004, 0x004, 0x006, 0x000, 0x000, 0x000, 0x000}},  // '/'
    {0x0030, {0x000, 0x000, 0x000, 0x078, 0x0cc, 0x084, 0x086, 0x186, 0x1b6, 0x1b6, 0x186, 0x086, 0x084, 0x0cc, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '0'
    {0x0031, {0x000, 0x000, 0x000, 0x038, 0x024, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '1'
    {0x0032, {0x000, 0x000, 0x000, 0x03c, 0x0c6, 0x0c0, 0x080, 0x0c0, 0x0c0, 0x060, 0x030, 0x018, 0x00c, 0x004, 0x0fe, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '2'
    {0x0033, {0x000, 0x000, 0x000, 0x038, 0x0c0, 0x0c0, 0x080, 0x0c0, 0x078, 0x0c0, 0x080, 0x080, 0x080, 0x0c2, 0x07c, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '3'
    {0x0034, {0x000, 0x000, 0x000, 0x060, 0x060, 0x050, 0x058, 0x048, 0x044, 0x046, 0x042, 0x1fe, 0x040, 0x040, 0x040, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '4'
    {0x0035, {0x000, 0x000, 0x000, 0x0fc, 0x004, 0x004, 0x004, 0x03c, 0x0c0, 0x0c0, 0x080, 0x080, 0x0c0, 0x0c2, 0x03c, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '5'
    {0x0036, {0x000, 0x000, 0x000, 0x078, 0x08c, 0x004, 0x006, 0x07e, 0x0ce, 0x086, 0x186, 0x186, 0x084, 0x0cc, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '6'
    {0x0037, {0x000, 0x000, 0x000, 0x0fe, 0x0c0, 0x0c0, 0x040, 0x060, 0x060, 0x020, 0x030, 0x030, 0x010, 0x018, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '7'
    {0x0038, {0x000, 0x000, 0x000, 0x078, 0x0cc, 0x086, 0x086, 0x0c4, 0x078, 0x0c4, 0x086, 0x186, 0x086, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '8'
    {0x0039, {0x000, 0x000, 0x000, 0x078, 0x0c4, 0x086, 0x086, 0x086, 0x186, 0x1c4, 0x0b8, 0x080, 0x080, 0x044, 0x038, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '9'
    {0x003a, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // ':'
    {0x003b, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x030, 0x010, 0x018, 0x000, 0x000}},  // ';'
    {0x003c, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x100, 0x1e0, 0x038, 0x00e, 0x00e, 0x038, 0x1e0, 0x100, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '<'
    {0x003d, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1fe, 0x000, 0x000, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '='
    {0x003e, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x002, 0x00e, 0x078, 0x1c0, 0x1c0, 0x078, 0x00e, 0x002, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '>'
    {0x003f, {0x000, 0x000, 0x000, 0x078, 0x0c4, 0x0c0, 0x0c0, 0x060, 0x020, 0x030, 0x010, 0x010, 0x000, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '?'
    {0x0040, {0x000, 0x000, 0x000, 0x000, 0x078, 0x18c, 0x106, 0x1e2, 0x192, 0x119, 0x109, 0x109, 0x11b, 0x192, 0x1e2, 0x006, 0x00c, 0x0f0, 0x000, 0x000}},  // '@'
    {0x0041, {0x000, 0x000, 0x000, 0x030, 0x038, 0x078, 0x068, 0x048, 0x04c, 0x0cc, 0x0c4, 0x0fe, 0x186, 0x182, 0x103, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'A'
    {0x0042, {0x000, 0x000, 0x000, 0x07e, 0x0c6, 0x086, 0x086, 0x0c6, 0x07e, 0x0c6, 0x186, 0x186, 0x186, 0x0c6, 0x07e, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'B'
    {0x0043, {0x000, 0x000, 0x000, 0x0f0, 0x08c, 0x004, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x004, 0x08c, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'C'
    {0x0044, {0x000, 0x000, 0x000, 0x03e, 0x066, 0x0c6, 0x086, 0x186, 0x186, 0x186, 0x186, 0x086, 0x0c6, 0x066, 0x03e, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'D'
    {0x0045, {0x000, 0x000, 0x000, 0x0fc, 0x004, 0x004, 0x004, 0x004, 0x0fc, 0x004, 0x004, 0x004, 0x004, 0x004, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'E'
    {0x0046, {0x000, 0x000, 0x000, 0x1fc, 0x004, 0x004, 0x004, 0x004, 0x0fc, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'F'
    {0x0047, {0x000, 0x000, 0x000, 0x078, 0x08c, 0x004, 0x006, 0x006, 0x002, 0x1e2, 0x186, 0x186, 0x186, 0x18c, 0x0f8, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'G'
    {0x0048, {0x000, 0x000, 0x000, 0x186, 0x186, 0x186, 0x186, 0x186, 0x1fe, 0x186, 0x186, 0x186, 0x186, 0x186, 0x186, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'H'
    {0x0049, {0x000, 0x000, 0x000, 0x0fc, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x0fc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'I'
    {0x004a, {0x000, 0x000, 0x000, 0x078, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x040, 0x062, 0x03c, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'J'
    {0x004b, {0x000, 0x000, 0x000, 0x186, 0x0c6, 0x066, 0x036, 0x01e, 0x01e, 0x036, 0x066, 0x066, 0x0c6, 0x186, 0x186, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'K'
    {0x004c, {0x000, 0x000, 0x000, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x004, 0x1fc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'L'
    {0x004d, {0x000, 0x000, 0x000, 0x186, 0x1c6, 0x1ce, 0x1ca, 0x1ea, 0x1ba, 0x1b2, 0x1b2, 0x182, 0x182, 0x182, 0x182, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'M'
    {0x004e, {0x000, 0x000, 0x000, 0x186, 0x18e, 0x18e, 0x18e, 0x196, 0x196, 0x1b6, 0x1a6, 0x1a6, 0x1c6, 0x1c6, 0x1c6, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'N'
    {0x004f, {0x000, 0x000, 0x000, 0x078, 0x0cc, 0x086, 0x086, 0x186, 0x186, 0x186, 0x186, 0x086, 0x086, 0x0cc, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'O'
    {0x0050, {0x000, 0x000, 0x000, 0x07c, 0x0c4, 0x184, 0x184, 0x184, 0x0c4, 0x07c, 0x004, 0x004, 0x004, 0x004, 0x004, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'P'
    {0x0051, {0x000, 0x000, 0x000, 0x078, 0x0cc, 0x086, 0x086, 0x186, 0x186, 0x186, 0x186, 0x086, 0x086, 0x0cc, 0x078, 0x040, 0x0c0, 0x000, 0x000, 0x000}},  // 'Q'
    {0x0052, {0x000, 0x000, 0x000, 0x07e, 0x0c6, 0x0c6, 0x086, 0x086, 0x0c6, 0x07e, 0x046, 0x0c6, 0x086, 0x186, 0x106, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'R'
    {0x0053, {0x000, 0x000, 0x000, 0x078, 0x0c4, 0x006, 0x006, 0x006, 0x03c, 0x0f0, 0x080, 0x180, 0x080, 0x0c6, 0x07c, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'S'
    {0x0054, {0x000, 0x000, 0x000, 0x1ff, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'T'
    {0x0055, {0x000, 0x000, 0x000, 0x086, 0x086, 0x086, 0x086, 0x086, 0x086, 0x086, 0x086, 0x086, 0x086, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'U'
    {0x0056, {0x000, 0x000, 0x000, 0x182, 0x182, 0x086, 0x086, 0x0c4, 0x0c4, 0x04c, 0x048, 0x068, 0x038, 0x038, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'V'
    {0x0057, {0x000, 0x000, 0x000, 0x303, 0x103, 0x103, 0x132, 0x132, 0x1ba, 0x1aa, 0x1ea, 0x0ce, 0x0ce, 0x0cc, 0x0c4, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'W'
    {0x0058, {0x000, 0x000, 0x000, 0x186, 0x084, 0x0cc, 0x048, 0x038, 0x030, 0x030, 0x078, 0x04c, 0x0c4, 0x186, 0x103, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'X'
    {0x0059, {0x000, 0x000, 0x000, 0x182, 0x086, 0x0c4, 0x04c, 0x068, 0x038, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'Y'
    {0x005a, {0x000, 0x000, 0x000, 0x1fe, 0x180, 0x0c0, 0x0c0, 0x060, 0x030, 0x030, 0x018, 0x008, 0x00c, 0x006, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'Z'
    {0x005b, {0x000, 0x000, 0x000, 0x070, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x070, 0x000, 0x000, 0x000}},  // '['
    {0x005c, {0x000, 0x000, 0x000, 0x006, 0x004, 0x004, 0x00c, 0x008, 0x018, 0x010, 0x030, 0x020, 0x060, 0x040, 0x0c0, 0x080, 0x000, 0x000, 0x000, 0x000}},
    {0x005d, {0x000, 0x000, 0x000, 0x038, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x038, 0x000, 0x000, 0x000}},  // ']'
    {0x005e, {0x000, 0x000, 0x000, 0x030, 0x078, 0x0c4, 0x182, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '^'
    {0x005f, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x3ff, 0x000}},  // '_'
    {0x0060, {0x000, 0x000, 0x008, 0x018, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '`'
    {0x0061, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x0c4, 0x080, 0x0f8, 0x084, 0x086, 0x0c6, 0x0c6, 0x0bc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'a'
    {0x0062, {0x000, 0x000, 0x000, 0x004, 0x004, 0x004, 0x074, 0x0cc, 0x084, 0x184, 0x184, 0x184, 0x084, 0x0cc, 0x074, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'b'
    {0x0063, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0f0, 0x00c, 0x004, 0x004, 0x004, 0x004, 0x004, 0x00c, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'c'
    {0x0064, {0x000, 0x000, 0x000, 0x080, 0x080, 0x080, 0x0b8, 0x0c4, 0x0c6, 0x086, 0x086, 0x086, 0x0c6, 0x0c4, 0x0b8, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'd'
    {0x0065, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x0cc, 0x086, 0x186, 0x1fe, 0x006, 0x006, 0x08c, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'e'
    {0x0066, {0x000, 0x000, 0x000, 0x0e0, 0x030, 0x010, 0x0fc, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'f'
    {0x0067, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0b8, 0x0c4, 0x0c6, 0x086, 0x086, 0x086, 0x0c6, 0x0c4, 0x0b8, 0x080, 0x0c4, 0x078, 0x000, 0x000}},  // 'g'
    {0x0068, {0x000, 0x000, 0x000, 0x004, 0x004, 0x004, 0x074, 0x0cc, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'h'
    {0x0069, {0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x03c, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'i'
    {0x006a, {0x000, 0x000, 0x000, 0x020, 0x020, 0x000, 0x03c, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x020, 0x030, 0x01e, 0x000, 0x000}},  // 'j'
    {0x006b, {0x000, 0x000, 0x000, 0x004, 0x004, 0x004, 0x084, 0x044, 0x024, 0x03c, 0x03c, 0x064, 0x0c4, 0x084, 0x184, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'k'
    {0x006c, {0x000, 0x000, 0x000, 0x01e, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x0e0, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'l'
    {0x006d, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0de, 0x1b2, 0x132, 0x132, 0x132, 0x132, 0x132, 0x132, 0x132, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'm'
    {0x006e, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x074, 0x0cc, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'n'
    {0x006f, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x0cc, 0x086, 0x086, 0x186, 0x086, 0x086, 0x0cc, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'o'
    {0x0070, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x076, 0x0ce, 0x086, 0x186, 0x186, 0x186, 0x086, 0x0ce, 0x076, 0x006, 0x006, 0x006, 0x000, 0x000}},  // 'p'
    {0x0071, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0b8, 0x0cc, 0x0c6, 0x086, 0x086, 0x086, 0x0c6, 0x0cc, 0x0b8, 0x080, 0x080, 0x080, 0x000, 0x000}},  // 'q'
    {0x0072, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0e8, 0x138, 0x018, 0x008, 0x008, 0x008, 0x008, 0x008, 0x008, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'r'
    {0x0073, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x078, 0x00c, 0x004, 0x00c, 0x078, 0x0c0, 0x080, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 's'
    {0x0074, {0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x0fe, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x010, 0x0f0, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 't'
    {0x0075, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x0cc, 0x0b8, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'u'
    {0x0076, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x182, 0x086, 0x084, 0x0c4, 0x04c, 0x048, 0x068, 0x038, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'v'
    {0x0077, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x303, 0x103, 0x102, 0x1b2, 0x1b2, 0x0ae, 0x0ee, 0x0cc, 0x0cc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'w'
    {0x0078, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x086, 0x0cc, 0x068, 0x038, 0x030, 0x038, 0x04c, 0x0c4, 0x186, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'x'
    {0x0079, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x186, 0x086, 0x084, 0x0cc, 0x048, 0x068, 0x078, 0x030, 0x030, 0x010, 0x018, 0x00e, 0x000, 0x000}},  // 'y'
    {0x007a, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0fc, 0x0c0, 0x060, 0x060, 0x030, 0x018, 0x00c, 0x004, 0x0fc, 0x000, 0x000, 0x000, 0x000, 0x000}},  // 'z'
    {0x007b, {0x000, 0x000, 0x000, 0x0e0, 0x030, 0x030, 0x030, 0x030, 0x030, 0x010, 0x01c, 0x010, 0x030, 0x030, 0x030, 0x030, 0x030, 0x0e0, 0x000, 0x000}},  // '{'
    {0x007c, {0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x010, 0x000}},  // '|'
    {0x007d, {0x000, 0x000, 0x000, 0x01c, 0x010, 0x010, 0x010, 0x010, 0x030, 0x030, 0x0e0, 0x030, 0x030, 0x010, 0x010, 0x010, 0x010, 0x01c, 0x000, 0x000}},  // '}'
    {0x007e, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x11e, 0x0e0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '~'
    {0x00b0, {0x000, 0x000, 0x000, 0x038, 0x048, 0x044, 0x048, 0x038, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x00b1, {0x000, 0x000, 0x000, 0x000, 0x000, 0x010, 0x010, 0x010, 0x1fe, 0x010, 0x010, 0x010, 0x000, 0x000, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x00b2, {0x000, 0x000, 0x000, 0x038, 0x060, 0x040, 0x020, 0x010, 0x008, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x00b3, {0x000, 0x000, 0x000, 0x038, 0x040, 0x040, 0x030, 0x040, 0x040, 0x038, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x00bd, {0x000, 0x000, 0x00e, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x1de, 0x07c, 0x0f3, 0x080, 0x080, 0x0c0, 0x060, 0x020, 0x1f0, 0x000, 0x000, 0x000}},
    {0x00d7, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x084, 0x0cc, 0x078, 0x030, 0x078, 0x0cc, 0x084, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x00f7, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x030, 0x030, 0x000, 0x1fe, 0x000, 0x030, 0x030, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x03a3, {0x000, 0x000, 0x000, 0x1fe, 0x006, 0x00c, 0x008, 0x018, 0x030, 0x030, 0x018, 0x008, 0x00c, 0x006, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x03b8, {0x000, 0x000, 0x000, 0x078, 0x0cc, 0x084, 0x086, 0x086, 0x1fe, 0x186, 0x086, 0x086, 0x0c4, 0x0cc, 0x078, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x03bc, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x084, 0x0cc, 0x1bc, 0x004, 0x004, 0x004, 0x000, 0x000}},
    {0x03c0, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x1fe, 0x1fe, 0x0c4, 0x0c4, 0x0c4, 0x0c4, 0x084, 0x084, 0x184, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2192, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x040, 0x080, 0x1fe, 0x180, 0x0c0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2206, {0x000, 0x000, 0x000, 0x000, 0x030, 0x038, 0x078, 0x068, 0x04c, 0x0c4, 0x0c4, 0x086, 0x182, 0x102, 0x3ff, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x221a, {0x000, 0x000, 0x100, 0x100, 0x080, 0x080, 0x080, 0x0c0, 0x046, 0x044, 0x06c, 0x028, 0x038, 0x038, 0x010, 0x010, 0x000, 0x000, 0x000, 0x000}},
    {0x2220, {0x000, 0x000, 0x000, 0x000, 0x000, 0x080, 0x040, 0x060, 0x030, 0x010, 0x008, 0x0fc, 0x0fe, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2248, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x11e, 0x0e0, 0x000, 0x11e, 0x0e0, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2260, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x080, 0x0c0, 0x1fe, 0x030, 0x010, 0x1fe, 0x004, 0x002, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2264, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x180, 0x1f0, 0x03c, 0x006, 0x03c, 0x1e0, 0x180, 0x000, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},
    {0x2265, {0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x002, 0x01e, 0x0f0, 0x1c0, 0x0f0, 0x01e, 0x002, 0x000, 0x1fe, 0x000, 0x000, 0x000, 0x000, 0x000}},
};

const std::size_t kGlyphCount = sizeof(kGlyphs) / sizeof(kGlyphs[0]);

}  // namespace inimage::raster::detail
