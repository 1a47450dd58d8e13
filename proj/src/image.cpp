#include "lip/image.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lip {

GreyImage::GreyImage(int width, int height, GreyScale scale, double fill)
    : width_(width), height_(height), scale_(scale) {
    if (width <= 0 || height <= 0)
        throw std::domain_error("GreyImage: dimensions must be positive");
    if (!(fill >= 0.0 && fill < scale_.m_bound))
        throw std::domain_error("GreyImage: fill value outside [0, M)");
    pix_.assign(static_cast<std::size_t>(width) * height, fill);
}

bool GreyImage::same_pixels(const GreyImage& other) const {
    return width_ == other.width_ && height_ == other.height_ && pix_ == other.pix_;
}

RegionMask::RegionMask(int width, int height, bool fill)
    : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
        throw std::domain_error("RegionMask: dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

std::size_t RegionMask::count() const {
    return static_cast<std::size_t>(
        std::count_if(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; }));
}

bool RegionMask::subset_of(const RegionMask& other) const {
    if (width_ != other.width_ || height_ != other.height_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i]) return false;
    return true;
}

StructuringElement::StructuringElement(std::vector<std::pair<int, int>> offsets)
    : offsets_(std::move(offsets)) {
    if (std::find(offsets_.begin(), offsets_.end(), std::make_pair(0, 0)) == offsets_.end())
        throw std::domain_error("StructuringElement: offsets must include the origin");
}

StructuringElement StructuringElement::square(int side) {
    if (side < 1 || side % 2 == 0)
        throw std::domain_error("StructuringElement::square: side must be odd and positive");
    const int r = side / 2;
    std::vector<std::pair<int, int>> offs;
    offs.reserve(static_cast<std::size_t>(side) * side);
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
            offs.emplace_back(dx, dy);
    return StructuringElement(std::move(offs));
}

GreyImage luminance(const RgbImage& rgb) {
    if (rgb.width <= 0 || rgb.height <= 0)
        throw std::domain_error("luminance: empty input");
    const std::size_t n = static_cast<std::size_t>(rgb.width) * rgb.height;
    if (rgb.data.size() != 3 * n)
        throw std::domain_error("luminance: unsupported channel count (expected 3)");
    GreyImage out(rgb.width, rgb.height);
    for (std::size_t i = 0; i < n; ++i) {
        out.at_index(i) = 0.299 * rgb.data[3 * i] + 0.587 * rgb.data[3 * i + 1] +
                          0.114 * rgb.data[3 * i + 2];
    }
    return out;
}

namespace {

[[noreturn]] void pixel_fail(const char* stage, int x, int y, double v) {
    std::ostringstream msg;
    msg << "lip_transform_image: " << stage << " out of range at pixel (" << x << ", "
        << y << "), value " << v;
    throw std::domain_error(msg.str());
}

} // namespace

GreyImage lip_transform_image(const GreyImage& img, TransformOp op, double amount,
                              bool in_complement) {
    const GreyScale& scale = img.scale();
    const double m = scale.m_bound;
    if (op == TransformOp::Mul) {
        if (!(amount >= 0.0))
            throw std::domain_error("lip_transform_image: lambda must be non-negative");
    } else if (!(amount >= 0.0 && amount < m)) {
        throw std::domain_error("lip_transform_image: constant outside [0, M)");
    }

    GreyImage out(img.width(), img.height(), scale);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            double v = img(x, y);
            if (!(v >= 0.0 && v < m)) pixel_fail("input", x, y, v);
            if (in_complement) {
                if (v > scale.white_cap()) pixel_fail("complement of input", x, y, v);
                v = complement(v, scale);
            }
            switch (op) {
            case TransformOp::Add: v = lip_add(v, amount, scale); break;
            case TransformOp::Sub: v = lip_sub(v, amount, scale); break;
            case TransformOp::Mul: v = lip_mul(amount, v, scale); break;
            }
            if (!(v >= 0.0 && v < m)) pixel_fail("transform result", x, y, v);
            if (in_complement) {
                if (v > scale.white_cap()) pixel_fail("complement of result", x, y, v);
                v = complement(v, scale);
            }
            out(x, y) = v;
        }
    }
    return out;
}

GreyImage complement_image(const GreyImage& img) {
    GreyImage out(img.width(), img.height(), img.scale());
    for (std::size_t i = 0; i < img.size(); ++i)
        out.at_index(i) = complement(img.at_index(i), img.scale());
    return out;
}

GreyImage quantize(const GreyImage& img) {
    GreyImage out(img.width(), img.height(), img.scale());
    const double cap = img.scale().white_cap();
    for (std::size_t i = 0; i < img.size(); ++i) {
        double v = std::round(img.at_index(i));
        out.at_index(i) = std::clamp(v, 0.0, cap);
    }
    return out;
}

RegionMask dilate(const RegionMask& mask, const StructuringElement& se) {
    RegionMask out(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask.test(x, y)) continue;
            for (auto [dx, dy] : se.offsets()) {
                const int nx = x + dx, ny = y + dy;
                if (out.inside(nx, ny)) out.set(nx, ny);
            }
        }
    }
    return out;
}

DynamicRange dynamic_range(const GreyImage& img, const RegionMask& region) {
    require_same_dims(img, region);
    bool seen = false;
    DynamicRange r;
    for (std::size_t i = 0; i < region.size(); ++i) {
        if (!region.test_index(i)) continue;
        const double v = img.at_index(i);
        if (!seen) {
            r.lo = r.hi = v;
            seen = true;
        } else {
            r.lo = std::min(r.lo, v);
            r.hi = std::max(r.hi, v);
        }
    }
    if (!seen) throw std::domain_error("dynamic_range: empty region");
    return r;
}

RegionMask components_touching(const RegionMask& mask, const RegionMask& anchor,
                               Connectivity conn) {
    if (mask.width() != anchor.width() || mask.height() != anchor.height())
        throw std::domain_error("components_touching: dimension mismatch");

    static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int nn = conn == Connectivity::Four ? 4 : 8;

    RegionMask out(mask.width(), mask.height());
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask.test_index(i) && anchor.test_index(i) && !out.test_index(i)) {
            out.set_index(i);
            stack.push_back(i);
            while (!stack.empty()) {
                const std::size_t p = stack.back();
                stack.pop_back();
                const int px = static_cast<int>(p % mask.width());
                const int py = static_cast<int>(p / mask.width());
                for (int k = 0; k < nn; ++k) {
                    const int nx = px + dx8[k], ny = py + dy8[k];
                    if (!mask.inside(nx, ny)) continue;
                    const std::size_t q = mask.index(nx, ny);
                    if (mask.test_index(q) && !out.test_index(q)) {
                        out.set_index(q);
                        stack.push_back(q);
                    }
                }
            }
        }
    }
    return out;
}

void require_same_dims(const GreyImage& img, const RegionMask& mask) {
    if (img.width() != mask.width() || img.height() != mask.height())
        throw std::domain_error("image and mask dimensions differ");
}

} // namespace lip
