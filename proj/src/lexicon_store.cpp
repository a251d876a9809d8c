#include "gramsteg/lexicon_store.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gramsteg/error.hpp"

namespace gramsteg {

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

namespace {

bool valid_word(std::string_view w) {
  if (w.empty()) return false;
  return std::all_of(w.begin(), w.end(), [](unsigned char c) {
    return std::isalpha(c) || c == '\'';
  });
}

// "[category N]" -> N, or nullopt if the line is not a section header.
std::optional<int> parse_section(std::string_view line) {
  if (line.size() < 2 || line.front() != '[' || line.back() != ']') {
    return std::nullopt;
  }
  std::string_view body = line.substr(1, line.size() - 2);
  constexpr std::string_view kPrefix = "category";
  if (!body.starts_with(kPrefix)) return std::nullopt;
  body.remove_prefix(kPrefix.size());
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.size() != 1 || body[0] < '0' || body[0] > '9') return std::nullopt;
  return body[0] - '0';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Lexicon Lexicon::load(std::string_view text) {
  Lexicon lex;
  std::array<bool, kCategoryCount> seen_category{};

  std::istringstream in{std::string(text)};
  std::string raw_line;
  std::size_t line_no = 0;
  int category = -1;

  while (std::getline(in, raw_line)) {
    ++line_no;
    if (const auto hash = raw_line.find('#'); hash != std::string::npos) {
      raw_line.resize(hash);
    }
    const std::string_view line = trim(raw_line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      const auto section = parse_section(line);
      if (!section) {
        raise(Errc::MalformedLine,
              "line " + std::to_string(line_no) + ": bad section header \"" +
                  std::string(line) + "\" (expected [category N], N in 0..9)");
      }
      category = *section;
      seen_category[static_cast<std::size_t>(category)] = true;
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      raise(Errc::MalformedLine,
            "line " + std::to_string(line_no) + ": expected \"POS: word ...\"");
    }
    if (category < 0) {
      raise(Errc::MalformedLine,
            "line " + std::to_string(line_no) + ": entry before any [category N] header");
    }
    const auto pos_name = trim(line.substr(0, colon));
    const auto tag = parse_pos_tag(pos_name);
    if (!tag) {
      raise(Errc::UnknownPosTag, "line " + std::to_string(line_no) + ": unknown POS tag \"" +
                                     std::string(pos_name) + "\"");
    }

    std::istringstream words{std::string(line.substr(colon + 1))};
    std::string word;
    while (words >> word) {
      if (!valid_word(word)) {
        raise(Errc::MalformedLine, "line " + std::to_string(line_no) + ": word \"" + word +
                                       "\" does not match [A-Za-z']+");
      }
      const std::string key = to_lower_ascii(word);
      const auto [it, inserted] = lex.digit_of_.emplace(key, category);
      if (!inserted && it->second != category) {
        raise(Errc::DuplicateWordAcrossCategories,
              "word \"" + word + "\" appears in category " + std::to_string(category) +
                  " but already belongs to category " + std::to_string(it->second));
      }
      auto& slot = lex.by_slot_[static_cast<std::size_t>(category)]
                              [static_cast<std::size_t>(*tag)];
      const bool already_in_slot =
          std::any_of(slot.begin(), slot.end(),
                      [&](const std::string& w) { return to_lower_ascii(w) == key; });
      if (!already_in_slot) slot.push_back(word);
    }
  }

  for (int d = 0; d < kCategoryCount; ++d) {
    if (!seen_category[static_cast<std::size_t>(d)]) {
      raise(Errc::MissingCategory, "lexicon has no [category " + std::to_string(d) + "] section");
    }
  }
  return lex;
}

int Lexicon::word_to_digit(std::string_view word) const {
  const auto digit = try_word_to_digit(word);
  if (!digit) {
    raise(Errc::UnknownWord, "word \"" + std::string(word) + "\" is not in the lexicon");
  }
  return *digit;
}

std::optional<int> Lexicon::try_word_to_digit(std::string_view word) const {
  const auto it = digit_of_.find(to_lower_ascii(word));
  if (it == digit_of_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& Lexicon::words(int digit, PosTag pos) const {
  return by_slot_[static_cast<std::size_t>(digit)][static_cast<std::size_t>(pos)];
}

const std::string& Lexicon::pick_word(int digit, PosTag pos, SeedStream& stream) const {
  const auto& slot = words(digit, pos);
  if (slot.empty()) {
    raise(Errc::EmptySlot, "no words for digit " + std::to_string(digit) + ", POS " +
                               std::string(pos_tag_name(pos)));
  }
  return slot[stream.below(slot.size())];
}

CoverageReport check_coverage(const Lexicon& lex, const Grammar& grammar) {
  CoverageReport report;
  const auto used = grammar.used_tags();
  for (int digit = 0; digit < kCategoryCount; ++digit) {
    for (const PosTag tag : kAllPosTags) {
      if (!used[static_cast<std::size_t>(tag)]) continue;
      if (!lex.slot_nonempty(digit, tag)) {
        report.missing_slots.emplace_back(digit, tag);
      }
    }
  }
  report.total_coverage = report.missing_slots.empty();
  return report;
}

}  // namespace gramsteg
