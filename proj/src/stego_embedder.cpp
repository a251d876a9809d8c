#include "gramsteg/stego_embedder.hpp"

#include <string>
#include <unordered_map>

#include "gramsteg/error.hpp"
#include "gramsteg/seed_stream.hpp"

namespace gramsteg {

PixelPlan select_pixels(std::uint32_t width, std::uint32_t height,
                        std::uint64_t count, std::uint64_t seed) {
  const std::uint64_t total = std::uint64_t{width} * height;
  if (count > total) {
    raise(Errc::CapacityExceeded,
          "need " + std::to_string(count) + " carrier pixels but the image has only " +
              std::to_string(total));
  }

  // Partial Fisher-Yates over the flat index space. Displaced values live in
  // a sparse overlay map, keeping memory at O(count) even for huge images.
  SeedStream stream(seed);
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(static_cast<std::size_t>(count));
  auto value_at = [&](std::uint64_t pos) {
    const auto it = displaced.find(pos);
    return it == displaced.end() ? pos : it->second;
  };

  PixelPlan plan;
  plan.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + stream.below(total - i);
    const std::uint64_t picked = value_at(j);
    const std::uint64_t displaced_value = value_at(i);
    displaced[j] = displaced_value;  // position i is never revisited
    plan.push_back(Coordinate{static_cast<std::uint32_t>(picked % width),
                              static_cast<std::uint32_t>(picked / width)});
  }
  return plan;
}

Pixel embed_chunk(Pixel p, std::uint16_t chunk) {
  return Pixel{
      substitute_lsbs(p.r, 3, static_cast<std::uint8_t>(chunk >> 6)),
      substitute_lsbs(p.g, 3, static_cast<std::uint8_t>(chunk >> 3)),
      substitute_lsbs(p.b, 3, static_cast<std::uint8_t>(chunk)),
  };
}

std::uint16_t extract_chunk(Pixel p) {
  return static_cast<std::uint16_t>(((p.r & 7u) << 6) | ((p.g & 7u) << 3) | (p.b & 7u));
}

Image embed_all(const Image& img, const PixelPlan& plan, const ChunkStream& chunks) {
  if (plan.size() != chunks.chunks.size()) {
    raise(Errc::PlanMismatch, "plan has " + std::to_string(plan.size()) +
                                  " coordinates for " +
                                  std::to_string(chunks.chunks.size()) + " chunks");
  }
  Image out = img;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto [x, y] = plan[i];
    out.set_pixel(x, y, embed_chunk(out.get_pixel(x, y), chunks.chunks[i]));
  }
  return out;
}

ChunkStream extract_all(const Image& img, const PixelPlan& plan) {
  ChunkStream out;
  out.chunks.reserve(plan.size());
  for (const auto& [x, y] : plan) {
    out.chunks.push_back(extract_chunk(img.get_pixel(x, y)));
  }
  return out;
}

}  // namespace gramsteg
