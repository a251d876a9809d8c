#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gramsteg/cfg_engine.hpp"
#include "gramsteg/lexicon_store.hpp"
#include "gramsteg/seed_stream.hpp"
#include "gramsteg/stego_embedder.hpp"

namespace gramsteg {

// Fixed digit widths for rendering coordinates, derived from the carrier
// dimensions alone so both parties compute the same layout independently.
struct DigitLayout {
  unsigned x_digits = 1;
  unsigned y_digits = 1;

  // Widths are the decimal digit counts of (width-1) and (height-1).
  static DigitLayout for_image(std::uint32_t width, std::uint32_t height);

  unsigned total() const { return x_digits + y_digits; }
  bool operator==(const DigitLayout&) const = default;
};

struct StegoText {
  std::vector<std::vector<std::string>> sentences;  // one per plan coordinate
  std::string rendering;                            // "Word word word. Word ..."
};

// Zero-padded decimal x followed by zero-padded decimal y.
std::string coord_to_digits(Coordinate c, const DigitLayout& layout);
Coordinate digits_to_coord(std::string_view digits, const DigitLayout& layout);

// One word per digit: a grammar-derivable POS sequence of matching length is
// chosen in seeded random order among those whose (digit, POS) lexicon slots
// are all populated, then words are drawn from the slots.
std::vector<std::string> encode_sentence(std::string_view digits, const CfgEngine& engine,
                                         const Lexicon& lex, SeedStream& stream);

// Inverse of encode_sentence: each word's lexicon category is its digit.
// Grammar recognition is not required for decoding.
std::string decode_sentence(std::span<const std::string> words, const Lexicon& lex);

StegoText encode_text(const PixelPlan& plan, const DigitLayout& layout, const CfgEngine& engine,
                      const Lexicon& lex, SeedStream& stream);

// Splits on '.', tokenizes on whitespace, lowercases, and maps words back to
// coordinates. Rejects duplicate coordinates (a valid plan never repeats one).
std::vector<Coordinate> decode_text(std::string_view text, const DigitLayout& layout,
                                    const Lexicon& lex);

}  // namespace gramsteg
