#include "lip/pnm.hpp"

#include "lip/errors.hpp"

#ifdef LIPSEG_HAVE_PNG

#include <csetjmp>
#include <cstdio>
#include <memory>

#include <png.h>

namespace lip {

bool png_supported() { return true; }

GreyImage read_png(const std::string& path) {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.c_str(), "rb"),
                                                       &std::fclose);
    if (!fp) throw IoError(path + ": cannot open");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError(path + ": libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError(path + ": libpng init failed");
    }

    std::vector<png_bytep> rows;
    std::vector<png_byte> data;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(path + ": not a valid PNG");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int depth = png_get_bit_depth(png, info);
    int color = png_get_color_type(png, info);

    if (depth == 16) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(path + ": 16-bit PNG not supported");
    }
    if (color == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
        color = PNG_COLOR_TYPE_RGB;
    }
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (color == PNG_COLOR_TYPE_GRAY_ALPHA || color == PNG_COLOR_TYPE_RGB_ALPHA ||
        png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError(path + ": PNG alpha channel not supported");
    }
    png_read_update_info(png, info);

    const std::size_t stride = png_get_rowbytes(png, info);
    data.resize(stride * h);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = data.data() + y * stride;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);

    const int width = static_cast<int>(w), height = static_cast<int>(h);
    if (color == PNG_COLOR_TYPE_GRAY) {
        GreyImage img(width, height);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                img(x, y) = data[y * stride + x];
        return img;
    }
    if (color == PNG_COLOR_TYPE_RGB) {
        RgbImage rgb;
        rgb.width = width;
        rgb.height = height;
        rgb.data.resize(static_cast<std::size_t>(width) * height * 3);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < 3 * width; ++x)
                rgb.data[static_cast<std::size_t>(y) * 3 * width + x] = data[y * stride + x];
        return luminance(rgb);
    }
    throw IoError(path + ": unsupported PNG colour type");
}

} // namespace lip

#else // !LIPSEG_HAVE_PNG

namespace lip {

bool png_supported() { return false; }

GreyImage read_png(const std::string& path) {
    throw IoError(path + ": PNG support not compiled in");
}

} // namespace lip

#endif
