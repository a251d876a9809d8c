#include "gramsteg/bmp_image.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gramsteg/error.hpp"

namespace gramsteg {

namespace {

constexpr std::size_t kFileHeaderSize = 14;
constexpr std::size_t kInfoHeaderSize = 40;  // BITMAPINFOHEADER
constexpr std::size_t kMinFileSize = kFileHeaderSize + kInfoHeaderSize;

std::uint16_t rd_u16(std::span<const std::uint8_t> f, std::size_t at) {
  return static_cast<std::uint16_t>(f[at] | (f[at + 1] << 8));
}

std::uint32_t rd_u32(std::span<const std::uint8_t> f, std::size_t at) {
  return static_cast<std::uint32_t>(f[at]) | (static_cast<std::uint32_t>(f[at + 1]) << 8) |
         (static_cast<std::uint32_t>(f[at + 2]) << 16) |
         (static_cast<std::uint32_t>(f[at + 3]) << 24);
}

std::int32_t rd_s32(std::span<const std::uint8_t> f, std::size_t at) {
  return static_cast<std::int32_t>(rd_u32(f, at));
}

void wr_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void wr_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

std::uint64_t row_stride(std::uint32_t width) {
  return (std::uint64_t{width} * 3 + 3) / 4 * 4;  // rows pad to 4 bytes
}

std::vector<std::uint8_t> canonical_header(std::uint32_t width, std::uint32_t height) {
  const std::uint64_t data_size = row_stride(width) * height;
  std::vector<std::uint8_t> h;
  h.reserve(kMinFileSize);
  h.push_back('B');
  h.push_back('M');
  wr_u32(h, static_cast<std::uint32_t>(kMinFileSize + data_size));
  wr_u32(h, 0);                                   // reserved
  wr_u32(h, kMinFileSize);                        // pixel data offset
  wr_u32(h, kInfoHeaderSize);
  wr_u32(h, width);
  wr_u32(h, height);                              // positive: bottom-up
  wr_u16(h, 1);                                   // planes
  wr_u16(h, 24);                                  // bits per pixel
  wr_u32(h, 0);                                   // BI_RGB, no compression
  wr_u32(h, static_cast<std::uint32_t>(data_size));
  wr_u32(h, 2835);                                // 72 DPI
  wr_u32(h, 2835);
  wr_u32(h, 0);                                   // colors used
  wr_u32(h, 0);                                   // important colors
  return h;
}

}  // namespace

Image::Image(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("image dimensions must be at least 1x1");
  }
  width_ = width;
  height_ = height;
  bottom_up_ = true;
  pixels_.assign(pixel_count(), Pixel{});
  preamble_ = canonical_header(width, height);
}

Image Image::load(std::span<const std::uint8_t> file) {
  if (file.size() < 2 || file[0] != 'B' || file[1] != 'M') {
    raise(Errc::NotBmp, "missing BM magic; not a BMP file");
  }
  if (file.size() < kMinFileSize) {
    raise(Errc::CorruptFile, "file too short for BMP headers (" +
                                 std::to_string(file.size()) + " bytes)");
  }

  const std::uint32_t data_offset = rd_u32(file, 10);
  const std::uint32_t info_size = rd_u32(file, 14);
  const std::int32_t raw_width = rd_s32(file, 18);
  const std::int32_t raw_height = rd_s32(file, 22);
  const std::uint16_t planes = rd_u16(file, 26);
  const std::uint16_t bits_per_pixel = rd_u16(file, 28);
  const std::uint32_t compression = rd_u32(file, 30);

  if (bits_per_pixel != 24) {
    raise(Errc::UnsupportedDepth, "only 24 bits/pixel supported, file has " +
                                      std::to_string(bits_per_pixel));
  }
  if (compression != 0) {
    raise(Errc::UnsupportedCompression,
          "only uncompressed (BI_RGB) supported, compression field is " +
              std::to_string(compression));
  }
  if (info_size < kInfoHeaderSize) {
    raise(Errc::CorruptFile,
          "info header of " + std::to_string(info_size) + " bytes is below BITMAPINFOHEADER");
  }
  if (planes != 1) {
    raise(Errc::CorruptFile, "plane count must be 1, got " + std::to_string(planes));
  }
  if (raw_width <= 0 || raw_height == 0) {
    raise(Errc::CorruptFile, "invalid dimensions " + std::to_string(raw_width) + "x" +
                                 std::to_string(raw_height));
  }

  Image img;
  img.width_ = static_cast<std::uint32_t>(raw_width);
  img.bottom_up_ = raw_height > 0;  // negative height means top-down storage
  img.height_ = static_cast<std::uint32_t>(img.bottom_up_ ? raw_height : -std::int64_t{raw_height});

  const std::uint64_t stride = row_stride(img.width_);
  const std::uint64_t data_size = stride * img.height_;
  if (data_offset < kFileHeaderSize + info_size || data_offset > file.size() ||
      data_offset + data_size > file.size()) {
    raise(Errc::CorruptFile, "pixel array (offset " + std::to_string(data_offset) + ", " +
                                 std::to_string(data_size) + " bytes) exceeds file of " +
                                 std::to_string(file.size()) + " bytes");
  }

  img.pixels_.resize(img.pixel_count());
  for (std::uint32_t row = 0; row < img.height_; ++row) {
    const std::uint32_t y = img.bottom_up_ ? img.height_ - 1 - row : row;
    const std::uint8_t* src = file.data() + data_offset + row * stride;
    Pixel* dst = img.pixels_.data() + std::size_t{y} * img.width_;
    for (std::uint32_t x = 0; x < img.width_; ++x) {
      dst[x] = Pixel{src[3 * x + 2], src[3 * x + 1], src[3 * x]};  // stored B,G,R
    }
  }

  img.preamble_.assign(file.begin(), file.begin() + data_offset);
  img.trailer_.assign(file.begin() + static_cast<std::size_t>(data_offset + data_size),
                      file.end());
  return img;
}

std::vector<std::uint8_t> Image::save() const {
  const std::uint64_t stride = row_stride(width_);
  std::vector<std::uint8_t> out;
  out.reserve(preamble_.size() + stride * height_ + trailer_.size());
  out.insert(out.end(), preamble_.begin(), preamble_.end());

  for (std::uint32_t row = 0; row < height_; ++row) {
    const std::uint32_t y = bottom_up_ ? height_ - 1 - row : row;
    const Pixel* src = pixels_.data() + std::size_t{y} * width_;
    for (std::uint32_t x = 0; x < width_; ++x) {
      out.push_back(src[x].b);
      out.push_back(src[x].g);
      out.push_back(src[x].r);
    }
    for (std::uint64_t pad = std::uint64_t{width_} * 3; pad < stride; ++pad) {
      out.push_back(0);
    }
  }

  out.insert(out.end(), trailer_.begin(), trailer_.end());
  return out;
}

std::size_t Image::checked_index(std::uint32_t x, std::uint32_t y) const {
  if (x >= width_ || y >= height_) {
    raise(Errc::OutOfBounds, "pixel (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") outside " + std::to_string(width_) + "x" +
                                 std::to_string(height_) + " image");
  }
  return std::size_t{y} * width_ + x;
}

Pixel Image::get_pixel(std::uint32_t x, std::uint32_t y) const {
  return pixels_[checked_index(x, y)];
}

void Image::set_pixel(std::uint32_t x, std::uint32_t y, Pixel p) {
  pixels_[checked_index(x, y)] = p;
}

}  // namespace gramsteg
