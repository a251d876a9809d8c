#pragma once

#include <cstdint>
#include <vector>

#include "gramsteg/bmp_image.hpp"
#include "gramsteg/payload_codec.hpp"

namespace gramsteg {

struct Coordinate {
  std::uint32_t x = 0;  // column
  std::uint32_t y = 0;  // row

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

// Ordered carrier pixels, one per chunk; coordinates are pairwise distinct.
using PixelPlan = std::vector<Coordinate>;

// Generic n-LSB substitution: the low n bits of value are replaced by bits,
// everything above stays untouched.
constexpr std::uint8_t substitute_lsbs(std::uint8_t value, unsigned n,
                                       std::uint8_t bits) {
  const auto mask = static_cast<std::uint8_t>((1u << n) - 1u);
  return static_cast<std::uint8_t>((value & ~mask) | (bits & mask));
}

// Draws `count` distinct coordinates uniformly without replacement from the
// width x height grid; deterministic for a given seed.
PixelPlan select_pixels(std::uint32_t width, std::uint32_t height,
                        std::uint64_t count, std::uint64_t seed);

// One 9-bit chunk per pixel, 3 bits in the low end of each channel. With
// chunk bits c8..c0 (MSB first): R carries c8 c7 c6, G carries c5 c4 c3,
// B carries c2 c1 c0.
Pixel embed_chunk(Pixel p, std::uint16_t chunk);
std::uint16_t extract_chunk(Pixel p);

Image embed_all(const Image& img, const PixelPlan& plan, const ChunkStream& chunks);
ChunkStream extract_all(const Image& img, const PixelPlan& plan);

}  // namespace gramsteg
