#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gramsteg/cfg_engine.hpp"
#include "gramsteg/seed_stream.hpp"

namespace gramsteg {

inline constexpr int kCategoryCount = 10;

// The ten-category word lexicon. Every word belongs to exactly one digit
// category (cross-category duplicates are rejected at load) and may carry
// several POS tags within it. Lookups are case-insensitive; the spelling
// from the file is kept for generation.
//
// File format: "[category N]" section headers (N in 0..9), entry lines
// "POS: word1 word2 ...", "#" comments, words limited to [A-Za-z']+.
class Lexicon {
 public:
  static Lexicon load(std::string_view text);

  // The unique digit category of a (case-normalized) word.
  int word_to_digit(std::string_view word) const;
  std::optional<int> try_word_to_digit(std::string_view word) const;

  const std::vector<std::string>& words(int digit, PosTag pos) const;
  bool slot_nonempty(int digit, PosTag pos) const {
    return !words(digit, pos).empty();
  }

  // Uniform draw from the (digit, pos) slot.
  const std::string& pick_word(int digit, PosTag pos, SeedStream& stream) const;

  std::size_t size() const { return digit_of_.size(); }

 private:
  Lexicon() = default;

  std::unordered_map<std::string, int> digit_of_;  // lowercased word -> digit
  std::array<std::array<std::vector<std::string>, kPosTagCount>, kCategoryCount>
      by_slot_{};
};

struct CoverageReport {
  // (digit, pos) slots that are empty for a POS the grammar actually uses.
  std::vector<std::pair<int, PosTag>> missing_slots;
  bool total_coverage = false;
};

// Total coverage guarantees that any digit string of a derivable length can
// be encoded as a sentence.
CoverageReport check_coverage(const Lexicon& lex, const Grammar& grammar);

std::string to_lower_ascii(std::string_view s);

}  // namespace gramsteg
