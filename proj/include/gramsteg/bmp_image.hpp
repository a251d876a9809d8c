#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gramsteg {

struct Pixel {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

// A 24-bit uncompressed BMP held as a pixel grid with the origin at the
// top-left: x is the column, y is the row. Bottom-up files (positive height,
// the common case) are flipped to this logical order on load and flipped
// back on save. Every non-pixel byte of the source file is kept verbatim,
// so an image that is loaded and saved untouched round-trips byte-for-byte.
class Image {
 public:
  // Fresh all-black canvas with a canonical 54-byte header.
  Image(std::uint32_t width, std::uint32_t height);

  static Image load(std::span<const std::uint8_t> file);
  std::vector<std::uint8_t> save() const;

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::uint64_t pixel_count() const {
    return std::uint64_t{width_} * height_;
  }

  Pixel get_pixel(std::uint32_t x, std::uint32_t y) const;
  void set_pixel(std::uint32_t x, std::uint32_t y, Pixel p);

  friend bool operator==(const Image&, const Image&) = default;

 private:
  Image() = default;
  std::size_t checked_index(std::uint32_t x, std::uint32_t y) const;

  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  bool bottom_up_ = true;                // row order in the serialized file
  std::vector<Pixel> pixels_;            // row-major, top row first
  std::vector<std::uint8_t> preamble_;   // all bytes before the pixel array
  std::vector<std::uint8_t> trailer_;    // any bytes after the pixel array
};

}  // namespace gramsteg
