#include <doctest.h>

#include <cstdint>
#include <vector>

#include "gramsteg/bmp_image.hpp"
#include "gramsteg/error.hpp"
#include "support/fixtures.hpp"

using namespace gramsteg;
using testsupport::data_path;
using testsupport::noise_image;
using testsupport::read_bytes;
using testsupport::thrown_errc;

namespace {

// Minimal 1x1 file (58 bytes), single pixel RGB(16,32,48); byte layout
// cross-checked against a reference image library.
const std::vector<std::uint8_t> k1x1 = {
    0x42, 0x4d, 0x3a, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x36, 0x00,
    0x00, 0x00, 0x28, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00,
    0x00, 0x00, 0x01, 0x00, 0x18, 0x00, 0x00, 0x00, 0x00, 0x00, 0x04, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x30, 0x20, 0x10, 0x00};

// 2x2 bottom-up file: logical top row (1,2,3) (4,5,6), bottom row (7,8,9)
// (10,11,12); rows are stored bottom-first in BGR with 2 pad bytes each.
const std::vector<std::uint8_t> k2x2 = {
    0x42, 0x4d, 0x46, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x36, 0x00,
    0x00, 0x00, 0x28, 0x00, 0x00, 0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x00,
    0x00, 0x00, 0x01, 0x00, 0x18, 0x00, 0x00, 0x00, 0x00, 0x00, 0x10, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x09, 0x08, 0x07, 0x0c, 0x0b, 0x0a,
    0x00, 0x00, 0x03, 0x02, 0x01, 0x06, 0x05, 0x04, 0x00, 0x00};

// Same logical image as k2x2 but stored top-down (height = -2).
std::vector<std::uint8_t> top_down_2x2() {
  auto file = k2x2;
  file[22] = 0xFE;  // height -2, little-endian two's complement
  file[23] = 0xFF;
  file[24] = 0xFF;
  file[25] = 0xFF;
  // rows now top-first
  const std::vector<std::uint8_t> rows = {0x03, 0x02, 0x01, 0x06, 0x05, 0x04, 0x00, 0x00,
                                          0x09, 0x08, 0x07, 0x0c, 0x0b, 0x0a, 0x00, 0x00};
  std::copy(rows.begin(), rows.end(), file.begin() + 54);
  return file;
}

}  // namespace

TEST_SUITE("bmp_image") {

TEST_CASE("loads a minimal 1x1 file") {
  const Image img = Image::load(k1x1);
  CHECK(img.width() == 1);
  CHECK(img.height() == 1);
  CHECK(img.pixel_count() == 1);
  CHECK(img.get_pixel(0, 0) == Pixel{16, 32, 48});
}

TEST_CASE("save reproduces the loaded file byte for byte") {
  CHECK(Image::load(k1x1).save() == k1x1);
  CHECK(Image::load(k2x2).save() == k2x2);
  const auto td = top_down_2x2();
  CHECK(Image::load(td).save() == td);
}

TEST_CASE("bottom-up rows are flipped to top-left origin") {
  const Image img = Image::load(k2x2);
  CHECK(img.get_pixel(0, 0) == Pixel{1, 2, 3});
  CHECK(img.get_pixel(1, 0) == Pixel{4, 5, 6});
  CHECK(img.get_pixel(0, 1) == Pixel{7, 8, 9});
  CHECK(img.get_pixel(1, 1) == Pixel{10, 11, 12});
}

TEST_CASE("negative height means rows are already top-down") {
  const Image img = Image::load(top_down_2x2());
  CHECK(img.height() == 2);
  CHECK(img.get_pixel(0, 0) == Pixel{1, 2, 3});
  CHECK(img.get_pixel(1, 0) == Pixel{4, 5, 6});
  CHECK(img.get_pixel(0, 1) == Pixel{7, 8, 9});
  CHECK(img.get_pixel(1, 1) == Pixel{10, 11, 12});
}

TEST_CASE("rows pad to four-byte boundaries") {
  const Image img(3, 1);  // 9 data bytes -> stride 12
  CHECK(img.save().size() == 54 + 12);
  const Image back = Image::load(img.save());
  CHECK(back.width() == 3);
  CHECK(back.height() == 1);
}

TEST_CASE("fresh images round-trip through save and load") {
  const Image img = noise_image(13, 7, 123);  // odd width exercises padding
  const Image back = Image::load(img.save());
  CHECK(back.width() == img.width());
  CHECK(back.height() == img.height());
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      CHECK(back.get_pixel(x, y) == img.get_pixel(x, y));
    }
  }
  CHECK(back.save() == img.save());
}

TEST_CASE("reference library output loads and round-trips") {
  const auto file = read_bytes(data_path("carrier_16x16.bmp"));
  REQUIRE(!file.empty());
  const Image img = Image::load(file);
  CHECK(img.width() == 16);
  CHECK(img.height() == 16);
  CHECK(img.get_pixel(0, 0) == Pixel{57, 12, 140});
  CHECK(img.get_pixel(1, 0) == Pixel{125, 114, 71});
  CHECK(img.get_pixel(7, 3) == Pixel{142, 248, 109});
  CHECK(img.get_pixel(15, 15) == Pixel{104, 136, 67});
  CHECK(img.save() == file);
}

TEST_CASE("set_pixel survives the save/load round trip") {
  Image img(4, 4);
  img.set_pixel(2, 1, Pixel{200, 100, 50});
  const Image back = Image::load(img.save());
  CHECK(back.get_pixel(2, 1) == Pixel{200, 100, 50});
  CHECK(back.get_pixel(0, 0) == Pixel{0, 0, 0});
}

TEST_CASE("rejects non-BMP input") {
  CHECK(thrown_errc([] { Image::load({}); }) == Errc::NotBmp);
  const std::vector<std::uint8_t> png = {0x89, 'P', 'N', 'G'};
  CHECK(thrown_errc([&] { Image::load(png); }) == Errc::NotBmp);
  const std::vector<std::uint8_t> just_magic = {'B', 'M'};
  CHECK(thrown_errc([&] { Image::load(just_magic); }) == Errc::CorruptFile);
}

TEST_CASE("rejects unsupported depth and compression") {
  auto depth16 = k1x1;
  depth16[28] = 16;
  CHECK(thrown_errc([&] { Image::load(depth16); }) == Errc::UnsupportedDepth);

  auto rle = k1x1;
  rle[30] = 1;  // BI_RLE8
  CHECK(thrown_errc([&] { Image::load(rle); }) == Errc::UnsupportedCompression);
}

TEST_CASE("rejects truncated pixel data and bad headers") {
  auto short_data = k2x2;
  short_data.resize(60);
  CHECK(thrown_errc([&] { Image::load(short_data); }) == Errc::CorruptFile);

  auto zero_width = k1x1;
  zero_width[18] = 0;
  CHECK(thrown_errc([&] { Image::load(zero_width); }) == Errc::CorruptFile);

  auto planes2 = k1x1;
  planes2[26] = 2;
  CHECK(thrown_errc([&] { Image::load(planes2); }) == Errc::CorruptFile);
}

TEST_CASE("pixel access is bounds-checked") {
  const Image img(4, 2);
  CHECK(thrown_errc([&] { img.get_pixel(4, 0); }) == Errc::OutOfBounds);
  CHECK(thrown_errc([&] { img.get_pixel(0, 2); }) == Errc::OutOfBounds);
  Image mut(4, 2);
  CHECK(thrown_errc([&] { mut.set_pixel(9, 9, Pixel{}); }) == Errc::OutOfBounds);
}

TEST_CASE("constructor rejects empty dimensions") {
  CHECK_THROWS_AS(Image(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Image(1, 0), std::invalid_argument);
}

}  // TEST_SUITE
