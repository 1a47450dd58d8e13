#ifndef LIP_IMAGE_HPP
#define LIP_IMAGE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lip/algebra.hpp"

namespace lip {

enum class Connectivity { Four = 4, Eight = 8 };

/// 2-D raster of real grey tones on the LIP scale [0, M).
/// Row-major storage; the scale travels with the image.
class GreyImage {
public:
    GreyImage() = default;
    GreyImage(int width, int height, GreyScale scale = GreyScale(), double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pix_.size(); }
    const GreyScale& scale() const { return scale_; }

    double operator()(int x, int y) const { return pix_[index(x, y)]; }
    double& operator()(int x, int y) { return pix_[index(x, y)]; }
    double at_index(std::size_t i) const { return pix_[i]; }
    double& at_index(std::size_t i) { return pix_[i]; }

    std::span<const double> pixels() const { return pix_; }
    std::span<double> pixels() { return pix_; }

    bool inside(int x, int y) const {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    bool same_pixels(const GreyImage& other) const;

private:
    int width_ = 0, height_ = 0;
    GreyScale scale_;
    std::vector<double> pix_;
};

/// Boolean raster selecting a region R of the spatial support.
class RegionMask {
public:
    RegionMask() = default;
    RegionMask(int width, int height, bool fill = false);

    int width() const { return width_; }
    int height() const { return height_; }

    bool test(int x, int y) const { return bits_[index(x, y)] != 0; }
    void set(int x, int y, bool v = true) { bits_[index(x, y)] = v ? 1 : 0; }
    bool test_index(std::size_t i) const { return bits_[i] != 0; }
    void set_index(std::size_t i, bool v = true) { bits_[i] = v ? 1 : 0; }

    std::size_t size() const { return bits_.size(); }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    bool inside(int x, int y) const {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    /// True when every set pixel of this mask is also set in other.
    bool subset_of(const RegionMask& other) const;

    friend bool operator==(const RegionMask&, const RegionMask&) = default;

private:
    int width_ = 0, height_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Flat structuring element: a set of (dx, dy) offsets containing (0,0).
class StructuringElement {
public:
    explicit StructuringElement(std::vector<std::pair<int, int>> offsets);

    /// Square of side `side` centred on the origin; side must be odd.
    static StructuringElement square(int side = 3);

    const std::vector<std::pair<int, int>>& offsets() const { return offsets_; }

private:
    std::vector<std::pair<int, int>> offsets_;
};

/// [min, max] of an image over a region.
struct DynamicRange {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Interleaved 8-bit RGB raster, used only as a luminance source.
struct RgbImage {
    int width = 0, height = 0;
    std::vector<std::uint8_t> data; // 3 bytes per pixel, row-major
};

/// Pixel-wise LIP transform of an image, optionally conjugated by the
/// grey-scale complement (op applied to f^c, then complemented back).
enum class TransformOp { Add, Sub, Mul };

/// ITU-R BT.601 luminance, kept real-valued: 0.299 R + 0.587 G + 0.114 B.
GreyImage luminance(const RgbImage& rgb);

/// Applies lip_add / lip_sub / lip_mul with the given amount to every
/// pixel. With in_complement set, computes (op(f^c, amount))^c, the
/// form used for exposure and opacity simulation.
///
/// Throws std::domain_error naming the first pixel whose value leaves
/// [0, M) at any stage (e.g. f^c < C under Sub).
GreyImage lip_transform_image(const GreyImage& img, TransformOp op, double amount,
                              bool in_complement);

/// Complement every pixel: f^c = M - 1 - f. Requires all pixels <= M-1.
GreyImage complement_image(const GreyImage& img);

/// Rounds each pixel to the nearest integer, clamped to [0, M-1].
GreyImage quantize(const GreyImage& img);

/// Minkowski dilation of a mask, clipped to the raster bounds.
RegionMask dilate(const RegionMask& mask, const StructuringElement& se);

/// (min, max) of the image over a non-empty region.
/// Throws std::domain_error on an empty region or dimension mismatch.
DynamicRange dynamic_range(const GreyImage& img, const RegionMask& region);

/// Keeps the connected components of `mask` that share at least one
/// pixel with `anchor`. Used to restore connectivity after histogram
/// truncation steps.
RegionMask components_touching(const RegionMask& mask, const RegionMask& anchor,
                               Connectivity conn);

/// Throws std::domain_error unless the two rasters have equal dimensions.
void require_same_dims(const GreyImage& img, const RegionMask& mask);

} // namespace lip

#endif
