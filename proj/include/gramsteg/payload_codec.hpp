#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gramsteg {

inline constexpr unsigned kChunkBits = 9;     // payload bits per carrier pixel
inline constexpr std::size_t kHeaderBits = 32;

// Framed payload bitstream: a 32-bit big-endian payload byte count followed
// by the payload bytes, MSB-first within every byte. Since both parts are
// whole bytes the stream is stored packed; bit(i) addresses the i-th bit.
struct FramedBits {
  std::vector<std::uint8_t> bytes;  // 4 header bytes + payload
  std::size_t bit_count = 0;        // 32 + 8 * payload size

  int bit(std::size_t i) const {
    return (bytes[i >> 3] >> (7 - (i & 7))) & 1;
  }
};

// The framed stream cut into 9-bit chunks, one per carrier pixel. The last
// chunk is right-padded with zero bits; pad_bits records how many (0..8).
// Streams read back out of an image cannot know the original pad width and
// carry pad_bits = 0; decoding never consults it (the header length does
// the trimming).
struct ChunkStream {
  std::vector<std::uint16_t> chunks;  // each 0..511
  unsigned pad_bits = 0;
};

FramedBits frame(std::span<const std::uint8_t> payload);
ChunkStream chunk(const FramedBits& framed);
std::vector<std::uint8_t> unframe(const ChunkStream& stream);

}  // namespace gramsteg
