#include "scoot/imageio.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>

namespace scoot {

namespace {

using Kind = ImageIoError::Kind;

int read_pnm_token(std::istream& in, const std::string& path) {
    // skips whitespace and '#' comments, then reads one unsigned integer
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        throw ImageIoError(Kind::Unreadable, path, "malformed PGM header");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30)
            throw ImageIoError(Kind::Unreadable, path, "malformed PGM header");
        c = in.get();
    }
    return static_cast<int>(value);
}

bool has_png_signature(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    unsigned char sig[8] = {};
    in.read(reinterpret_cast<char*>(sig), 8);
    return in.gcount() == 8 && png_sig_cmp(sig, 0, 8) == 0;
}

}  // namespace

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    long v = std::lround(0.299 * r + 0.587 * g + 0.114 * b);
    if (v < 0) v = 0;
    if (v > 255) v = 255;
    return static_cast<std::uint8_t>(v);
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ImageIoError(Kind::Unreadable, path, "cannot open file");
    char magic[2] = {};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
        throw ImageIoError(Kind::UnsupportedFormat, path, "not a binary PGM (P5)");
    const int w = read_pnm_token(in, path);
    const int h = read_pnm_token(in, path);
    const int maxval = read_pnm_token(in, path);
    if (w < 1 || h < 1)
        throw ImageIoError(Kind::BadDimensions, path, "zero-dimension image");
    if (maxval != 255)
        throw ImageIoError(Kind::UnsupportedFormat, path, "unsupported PGM maxval (expected 255)");
    // the token reader already consumed the single separator byte after maxval
    GrayImage img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw ImageIoError(Kind::Unreadable, path, "truncated PGM pixel data");
    return img;
}

void save_pgm(const GrayImage& img, const std::string& path) {
    if (img.width < 1 || img.height < 1)
        throw ImageIoError(Kind::BadDimensions, path, "refusing to write zero-dimension image");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ImageIoError(Kind::Unreadable, path, "cannot open file for writing");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out)
        throw ImageIoError(Kind::Unreadable, path, "short write");
}

GrayImage load_png(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp)
        throw ImageIoError(Kind::Unreadable, path, "cannot open file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw ImageIoError(Kind::Unreadable, path, "libpng initialization failed");
    }

    std::vector<std::uint8_t> raw;
    int w = 0, h = 0, channels = 0;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw ImageIoError(Kind::Unreadable, path, "PNG decode failed");
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);
    if (bit_depth != 8 || color_type == PNG_COLOR_TYPE_PALETTE) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw ImageIoError(Kind::UnsupportedFormat, path, "unsupported PNG bit depth or palette");
    }
    if (color_type & PNG_COLOR_MASK_ALPHA)
        png_set_strip_alpha(png);
    png_read_update_info(png, info);

    w = static_cast<int>(png_get_image_width(png, info));
    h = static_cast<int>(png_get_image_height(png, info));
    channels = png_get_channels(png, info);
    if (w < 1 || h < 1) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw ImageIoError(Kind::BadDimensions, path, "zero-dimension image");
    }
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw ImageIoError(Kind::UnsupportedFormat, path, "unsupported PNG channel count");
    }

    raw.resize(static_cast<std::size_t>(w) * h * channels);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = raw.data() + static_cast<std::size_t>(y) * w * channels;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);

    GrayImage img(w, h);
    if (channels == 1) {
        std::memcpy(img.pixels.data(), raw.data(), img.pixels.size());
    } else {
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] = luma(raw[i * 3], raw[i * 3 + 1], raw[i * 3 + 2]);
    }
    return img;
}

GrayImage load_gray(const std::string& path) {
    if (has_png_signature(path))
        return load_png(path);
    return load_pgm(path);
}

QuantizedImage quantize(const GrayImage& img, int n_levels) {
    if (n_levels < 2 || n_levels > 256)
        throw std::invalid_argument("quantize: n_levels must be in [2, 256]");
    QuantizedImage q;
    q.width = img.width;
    q.height = img.height;
    q.n_levels = n_levels;
    q.grades.resize(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        int g = img.pixels[i] * n_levels / 256;
        if (g > n_levels - 1) g = n_levels - 1;
        q.grades[i] = static_cast<std::uint8_t>(g);
    }
    return q;
}

GrayImage resize_nn(const GrayImage& img, int new_width, int new_height) {
    if (new_width < 1 || new_height < 1)
        throw std::invalid_argument("resize_nn: target dimensions must be >= 1");
    GrayImage out(new_width, new_height);
    for (int y = 0; y < new_height; ++y) {
        int sy = static_cast<int>((y + 0.5) * img.height / new_height);
        if (sy > img.height - 1) sy = img.height - 1;
        for (int x = 0; x < new_width; ++x) {
            int sx = static_cast<int>((x + 0.5) * img.width / new_width);
            if (sx > img.width - 1) sx = img.width - 1;
            out.at(x, y) = img.at(sx, sy);
        }
    }
    return out;
}

GrayImage rotate_nn(const GrayImage& img, double degrees_ccw, std::uint8_t fill) {
    if (!std::isfinite(degrees_ccw))
        throw std::invalid_argument("rotate_nn: angle must be finite");
    const double rad = degrees_ccw * std::numbers::pi / 180.0;
    const double c = std::cos(rad);
    const double s = std::sin(rad);
    const double cx = (img.width - 1) / 2.0;
    const double cy = (img.height - 1) / 2.0;
    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        const double dy = y - cy;
        for (int x = 0; x < img.width; ++x) {
            const double dx = x - cx;
            const long sx = std::lround(cx + c * dx - s * dy);
            const long sy = std::lround(cy + s * dx + c * dy);
            out.at(x, y) = (sx >= 0 && sx < img.width && sy >= 0 && sy < img.height)
                               ? img.at(static_cast<int>(sx), static_cast<int>(sy))
                               : fill;
        }
    }
    return out;
}

StrokeSplit split_strokes(const GrayImage& img, std::uint8_t threshold) {
    StrokeSplit result{GrayImage(img.width, img.height), GrayImage(img.width, img.height)};
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        if (img.pixels[i] < threshold)
            result.dark.pixels[i] = img.pixels[i];
        else
            result.light.pixels[i] = img.pixels[i];
    }
    return result;
}

}  // namespace scoot
