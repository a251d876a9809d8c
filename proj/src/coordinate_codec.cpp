#include "gramsteg/coordinate_codec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "gramsteg/error.hpp"

namespace gramsteg {

namespace {

unsigned digit_count(std::uint32_t v) {
  unsigned n = 1;
  while (v >= 10) {
    v /= 10;
    ++n;
  }
  return n;
}

std::string pad_decimal(std::uint32_t v, unsigned width, const char* axis) {
  std::string s = std::to_string(v);
  if (s.size() > width) {
    raise(Errc::CoordinateOverflow, std::string(axis) + " coordinate " + s +
                                        " does not fit in " + std::to_string(width) + " digits");
  }
  return std::string(width - s.size(), '0') + s;
}

std::uint32_t parse_decimal(std::string_view digits) {
  std::uint64_t v = 0;
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      raise(Errc::MalformedDigits, "non-digit character '" + std::string(1, c) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v > 0xFFFFFFFFu) {
    raise(Errc::CoordinateOverflow, "coordinate value " + std::string(digits) + " is too large");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

DigitLayout DigitLayout::for_image(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0) {
    raise(Errc::EmptyInput, "image dimensions must be nonzero");
  }
  return {digit_count(width - 1), digit_count(height - 1)};
}

std::string coord_to_digits(Coordinate c, const DigitLayout& layout) {
  return pad_decimal(c.x, layout.x_digits, "x") + pad_decimal(c.y, layout.y_digits, "y");
}

Coordinate digits_to_coord(std::string_view digits, const DigitLayout& layout) {
  if (digits.size() != layout.total()) {
    raise(Errc::MalformedDigits, "expected " + std::to_string(layout.total()) +
                                     " digits, got " + std::to_string(digits.size()));
  }
  return {parse_decimal(digits.substr(0, layout.x_digits)),
          parse_decimal(digits.substr(layout.x_digits))};
}

std::vector<std::string> encode_sentence(std::string_view digits, const CfgEngine& engine,
                                         const Lexicon& lex, SeedStream& stream) {
  if (digits.empty()) {
    raise(Errc::UnderivableLength, "cannot encode an empty digit string");
  }
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      raise(Errc::MalformedDigits, "non-digit character '" + std::string(1, c) + "'");
    }
  }

  const std::size_t length = digits.size();
  const auto& candidates = engine.pos_sequences(length);
  if (candidates.empty()) {
    raise(Errc::UnderivableLength,
          "grammar derives no sentence of length " + std::to_string(length));
  }

  const auto coverable = [&](const PosSeq& seq) {
    for (std::size_t i = 0; i < length; ++i) {
      if (!lex.slot_nonempty(digits[i] - '0', seq[i])) return false;
    }
    return true;
  };

  // A few random probes find a sequence immediately when the lexicon covers
  // every slot; the exhaustive pass below only runs for sparse lexicons.
  const PosSeq* chosen = nullptr;
  for (int probe = 0; probe < 4 && !chosen; ++probe) {
    const PosSeq& cand = candidates[stream.below(candidates.size())];
    if (coverable(cand)) chosen = &cand;
  }
  if (!chosen) {
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::swap(order[i], order[i + stream.below(order.size() - i)]);
      if (coverable(candidates[order[i]])) {
        chosen = &candidates[order[i]];
        break;
      }
    }
  }
  if (!chosen) {
    std::set<std::pair<int, PosTag>> blocking;
    for (const PosSeq& seq : candidates) {
      for (std::size_t i = 0; i < length; ++i) {
        if (!lex.slot_nonempty(digits[i] - '0', seq[i])) {
          blocking.emplace(digits[i] - '0', seq[i]);
        }
      }
    }
    std::string detail;
    for (const auto& [digit, tag] : blocking) {
      if (!detail.empty()) detail += ", ";
      detail += "(" + std::to_string(digit) + ", " + std::string(pos_tag_name(tag)) + ")";
    }
    raise(Errc::SentenceEncodingFailed,
          "no POS sequence of length " + std::to_string(length) +
              " is fully coverable; empty slots: " + detail);
  }

  std::vector<std::string> words;
  words.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    words.push_back(lex.pick_word(digits[i] - '0', (*chosen)[i], stream));
  }
  return words;
}

std::string decode_sentence(std::span<const std::string> words, const Lexicon& lex) {
  if (words.empty()) {
    raise(Errc::EmptyInput, "cannot decode an empty word list");
  }
  std::string digits;
  digits.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto digit = lex.try_word_to_digit(words[i]);
    if (!digit) {
      raise(Errc::UnknownWord, "word \"" + words[i] + "\" at position " +
                                   std::to_string(i + 1) + " is not in the lexicon");
    }
    digits += static_cast<char>('0' + *digit);
  }
  return digits;
}

namespace {

std::string render(const std::vector<std::vector<std::string>>& sentences) {
  std::string out;
  for (const auto& sentence : sentences) {
    if (!out.empty()) out += ' ';
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      std::string word = sentence[i];
      if (i == 0 && !word.empty()) {
        word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
      }
      if (i != 0) out += ' ';
      out += word;
    }
    out += '.';
  }
  return out;
}

}  // namespace

StegoText encode_text(const PixelPlan& plan, const DigitLayout& layout, const CfgEngine& engine,
                      const Lexicon& lex, SeedStream& stream) {
  StegoText text;
  text.sentences.reserve(plan.size());
  for (const Coordinate& c : plan) {
    text.sentences.push_back(encode_sentence(coord_to_digits(c, layout), engine, lex, stream));
  }
  text.rendering = render(text.sentences);
  return text;
}

std::vector<Coordinate> decode_text(std::string_view text, const DigitLayout& layout,
                                    const Lexicon& lex) {
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto dot = text.find('.', start);
    if (dot == std::string_view::npos) {
      segments.push_back(text.substr(start));
      break;
    }
    segments.push_back(text.substr(start, dot - start));
    start = dot + 1;
  }
  // The remainder after the final '.' is not a sentence unless it has words.
  const auto blank = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
  };
  if (!segments.empty() && blank(segments.back())) segments.pop_back();
  if (segments.empty()) {
    raise(Errc::EmptyText, "stego text contains no sentences");
  }

  const std::size_t expected = layout.total();
  std::vector<Coordinate> coords;
  coords.reserve(segments.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t si = 0; si < segments.size(); ++si) {
    std::vector<std::string> words;
    std::string word;
    for (const char c : segments[si]) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!word.empty()) words.push_back(std::exchange(word, {}));
      } else {
        word += c;
      }
    }
    if (!word.empty()) words.push_back(std::move(word));

    if (words.size() != expected) {
      raise(Errc::WrongSentenceLength,
            "sentence " + std::to_string(si + 1) + " has " + std::to_string(words.size()) +
                " words, expected " + std::to_string(expected));
    }
    std::string digits;
    try {
      digits = decode_sentence(words, lex);
    } catch (const Error& e) {
      if (e.code() == Errc::UnknownWord) {
        raise(Errc::UnknownWord, "sentence " + std::to_string(si + 1) + ": " + e.what());
      }
      throw;
    }
    const Coordinate c = digits_to_coord(digits, layout);
    if (!seen.emplace(c.x, c.y).second) {
      raise(Errc::DuplicateCoordinate, "sentence " + std::to_string(si + 1) +
                                           " repeats coordinate (" + std::to_string(c.x) + ", " +
                                           std::to_string(c.y) + ")");
    }
    coords.push_back(c);
  }
  return coords;
}

}  // namespace gramsteg
