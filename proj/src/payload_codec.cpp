#include "gramsteg/payload_codec.hpp"

#include <string>

#include "gramsteg/error.hpp"

namespace gramsteg {

FramedBits frame(std::span<const std::uint8_t> payload) {
  if (payload.size() > 0xFFFFFFFFull) {
    raise(Errc::PayloadTooLarge,
          "payload of " + std::to_string(payload.size()) +
              " bytes exceeds the 32-bit length header");
  }
  const auto n = static_cast<std::uint32_t>(payload.size());

  FramedBits framed;
  framed.bytes.reserve(4 + payload.size());
  framed.bytes.push_back(static_cast<std::uint8_t>(n >> 24));
  framed.bytes.push_back(static_cast<std::uint8_t>(n >> 16));
  framed.bytes.push_back(static_cast<std::uint8_t>(n >> 8));
  framed.bytes.push_back(static_cast<std::uint8_t>(n));
  framed.bytes.insert(framed.bytes.end(), payload.begin(), payload.end());
  framed.bit_count = kHeaderBits + 8 * payload.size();
  return framed;
}

ChunkStream chunk(const FramedBits& framed) {
  ChunkStream out;
  const std::size_t count = (framed.bit_count + kChunkBits - 1) / kChunkBits;
  out.chunks.reserve(count);
  out.pad_bits = static_cast<unsigned>(count * kChunkBits - framed.bit_count);

  std::uint16_t acc = 0;
  unsigned filled = 0;
  for (std::size_t i = 0; i < framed.bit_count; ++i) {
    acc = static_cast<std::uint16_t>((acc << 1) | framed.bit(i));
    if (++filled == kChunkBits) {
      out.chunks.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled > 0) {  // right-pad the final partial chunk with zeros
    out.chunks.push_back(static_cast<std::uint16_t>(acc << (kChunkBits - filled)));
  }
  return out;
}

std::vector<std::uint8_t> unframe(const ChunkStream& stream) {
  const std::size_t total_bits = stream.chunks.size() * kChunkBits;
  if (total_bits < kHeaderBits) {
    raise(Errc::MalformedHeader,
          "stream of " + std::to_string(total_bits) +
              " bits is shorter than the 32-bit length header");
  }

  auto bit_at = [&](std::size_t i) -> std::uint32_t {
    return (stream.chunks[i / kChunkBits] >> (kChunkBits - 1 - i % kChunkBits)) & 1u;
  };

  std::uint32_t declared = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i) {
    declared = (declared << 1) | bit_at(i);
  }
  const std::size_t needed = kHeaderBits + 8ull * declared;
  if (needed > total_bits) {
    raise(Errc::TruncatedStream,
          "header declares " + std::to_string(declared) + " payload bytes (" +
              std::to_string(needed) + " bits) but only " +
              std::to_string(total_bits) + " bits are present");
  }

  std::vector<std::uint8_t> payload(declared, 0);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    std::uint8_t byte = 0;
    for (unsigned b = 0; b < 8; ++b) {
      byte = static_cast<std::uint8_t>((byte << 1) | bit_at(kHeaderBits + 8 * i + b));
    }
    payload[i] = byte;
  }
  return payload;
}

}  // namespace gramsteg
