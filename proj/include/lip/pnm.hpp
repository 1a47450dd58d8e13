#ifndef LIP_PNM_HPP
#define LIP_PNM_HPP

#include <string>

#include "lip/image.hpp"

namespace lip {

/// Reads a P2 (ASCII) or P5 (binary) PGM with maxval <= 255.
/// Values are kept as-is on the [0, 256) scale. Throws IoError on a
/// malformed header, truncated payload, or unsupported maxval.
GreyImage read_pgm(const std::string& path);

/// Writes a P5 PGM with maxval 255. Pixels must be integer-valued in
/// [0, 255]; quantize() first for real-valued images. Round trip
/// through read_pgm is bit-exact.
void write_pgm(const GreyImage& img, const std::string& path);

/// Mask I/O on top of PGM: 255 = inside the region. Any nonzero pixel
/// reads back as set.
RegionMask read_mask_pgm(const std::string& path);
void write_mask_pgm(const RegionMask& mask, const std::string& path);

/// True when the build carries the optional PNG reader.
bool png_supported();

/// Reads an 8-bit greyscale or RGB PNG; RGB input goes through
/// luminance(). Throws IoError when PNG support is compiled out or the
/// file is unsupported (16-bit, alpha, palette with transparency, ...).
GreyImage read_png(const std::string& path);

/// Dispatches on the file suffix: .png to read_png, anything else to
/// read_pgm.
GreyImage read_image(const std::string& path);

} // namespace lip

#endif
