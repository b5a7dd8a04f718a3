#include "png_writer.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "config.hpp"

namespace wigflow::cli {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};

std::array<png_byte, 3> color(double v) {
  const double x = std::clamp(v, -1.0, 1.0);
  const auto shade = [](double s) { return static_cast<png_byte>(std::lround(255.0 * (1.0 - s))); };
  if (x >= 0.0) return {255, shade(x), shade(x)};
  return {shade(-x), shade(-x), 255};
}

}  // namespace

void write_field_png(const std::filesystem::path& path, const Field2D& field, double scale) {
  std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.string().c_str(), "wb"));
  if (!file) throw IoError("cannot open " + path.string() + " for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng failed writing " + path.string());
  }
  const auto width = static_cast<png_uint_32>(field.rows());
  const auto height = static_cast<png_uint_32>(field.cols());
  png_init_io(png, file.get());
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const double inv = scale > 0.0 ? 1.0 / scale : 0.0;
  std::vector<png_byte> line(3 * static_cast<std::size_t>(width));
  for (png_uint_32 y = 0; y < height; ++y) {
    const std::size_t k = height - 1 - y;
    for (png_uint_32 x = 0; x < width; ++x) {
      const auto c = color(field(x, k) * inv);
      std::copy(c.begin(), c.end(), line.begin() + 3 * static_cast<std::ptrdiff_t>(x));
    }
    png_write_row(png, line.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace wigflow::cli
