#include "lip/pnm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lip/errors.hpp"

namespace lip {

namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_separators(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_header_int(std::istream& in, const std::string& path, const char* field) {
    skip_separators(in);
    int v = 0;
    if (!(in >> v))
        throw IoError(path + ": malformed PGM header (bad " + std::string(field) + ")");
    return v;
}

} // namespace

GreyImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open");

    std::string magic;
    in >> magic;
    if (magic != "P2" && magic != "P5")
        throw IoError(path + ": not a PGM file (magic '" + magic + "')");

    const int width = read_header_int(in, path, "width");
    const int height = read_header_int(in, path, "height");
    const int maxval = read_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0)
        throw IoError(path + ": malformed PGM header (non-positive dimensions)");
    if (maxval <= 0 || maxval > 255)
        throw IoError(path + ": unsupported maxval " + std::to_string(maxval));

    GreyImage img(width, height);
    const std::size_t n = img.size();

    if (magic == "P5") {
        // Exactly one whitespace byte separates the header from the raster.
        in.get();
        std::vector<unsigned char> buf(n);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            throw IoError(path + ": truncated PGM payload");
        for (std::size_t i = 0; i < n; ++i) {
            if (buf[i] > maxval)
                throw IoError(path + ": sample exceeds maxval");
            img.at_index(i) = buf[i];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            skip_separators(in);
            int v = 0;
            if (!(in >> v)) throw IoError(path + ": truncated PGM payload");
            if (v < 0 || v > maxval) throw IoError(path + ": sample exceeds maxval");
            img.at_index(i) = v;
        }
    }
    return img;
}

void write_pgm(const GreyImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");

    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> buf(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double v = img.at_index(i);
        if (v != std::floor(v) || v < 0.0 || v > 255.0)
            throw std::domain_error("write_pgm: pixels must be integers in [0, 255]; quantize first");
        buf[i] = static_cast<unsigned char>(v);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError(path + ": write failed");
}

RegionMask read_mask_pgm(const std::string& path) {
    const GreyImage img = read_pgm(path);
    RegionMask mask(img.width(), img.height());
    for (std::size_t i = 0; i < img.size(); ++i)
        mask.set_index(i, img.at_index(i) != 0.0);
    return mask;
}

void write_mask_pgm(const RegionMask& mask, const std::string& path) {
    GreyImage img(mask.width(), mask.height());
    for (std::size_t i = 0; i < mask.size(); ++i)
        img.at_index(i) = mask.test_index(i) ? 255.0 : 0.0;
    write_pgm(img, path);
}

GreyImage read_image(const std::string& path) {
    const auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == "png") return read_png(path);
    return read_pgm(path);
}

} // namespace lip
