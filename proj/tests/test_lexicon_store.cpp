#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gramsteg/bundled_data.hpp"
#include "gramsteg/error.hpp"
#include "gramsteg/lexicon_store.hpp"
#include "support/fixtures.hpp"

using namespace gramsteg;
using testsupport::thrown_errc;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

// Minimal complete lexicon: every category has every POS, one word each.
// Word text drops the hyphen of "Proper-Noun" to stay within [A-Za-z']+.
std::string tiny_lexicon() {
  std::string text;
  const char* pos[] = {"Det", "Pronoun", "Proper-Noun", "Noun", "Verb", "Preposition"};
  for (int cat = 0; cat < 10; ++cat) {
    text += "[category " + std::to_string(cat) + "]\n";
    for (const char* p : pos) {
      std::string word = std::string(1, static_cast<char>('a' + cat)) + p;
      word.erase(std::remove(word.begin(), word.end(), '-'), word.end());
      text += std::string(p) + ": " + word + "\n";
    }
  }
  return text;
}

}  // namespace

TEST_SUITE("lexicon_store") {

TEST_CASE("bundled lexicon resolves the reference lookups") {
  const Lexicon lex = Lexicon::load(kBundledLexicon);
  CHECK(lex.word_to_digit("this") == 0);
  CHECK(lex.word_to_digit("that") == 0);
  CHECK(lex.word_to_digit("Harvard") == 9);
  CHECK(lex.word_to_digit("Tony") == 9);
  CHECK(lex.word_to_digit("walk") == 0);
  CHECK(lex.word_to_digit("the") == 9);
}

TEST_CASE("lookups are case-insensitive") {
  const Lexicon lex = Lexicon::load(kBundledLexicon);
  CHECK(lex.word_to_digit("The") == lex.word_to_digit("the"));
  CHECK(lex.word_to_digit("HARVARD") == 9);
  CHECK(lex.word_to_digit("i") == 0);
}

TEST_CASE("every loaded word maps back to its own category") {
  const Lexicon lex = Lexicon::load(kBundledLexicon);
  for (int digit = 0; digit < kCategoryCount; ++digit) {
    for (const auto tag : kAllPosTags) {
      for (const auto& w : lex.words(digit, tag)) {
        CHECK(lex.word_to_digit(w) == digit);
      }
    }
  }
}

TEST_CASE("unknown words are reported") {
  const Lexicon lex = Lexicon::load(tiny_lexicon());
  CHECK(thrown_errc([&] { lex.word_to_digit("ocean"); }) == Errc::UnknownWord);
  CHECK(!lex.try_word_to_digit("ocean").has_value());
  CHECK(lex.try_word_to_digit("aDet") == 0);
}

TEST_CASE("cross-category duplicates are rejected and named") {
  const char* text =
      "[category 0]\nDet: this that\n"
      "[category 3]\nDet: this\n";
  CHECK(thrown_errc([&] { Lexicon::load(text); }) == Errc::DuplicateWordAcrossCategories);
  const auto msg = message_of([&] { Lexicon::load(text); });
  CHECK(msg.find("this") != std::string::npos);
  CHECK(msg.find('0') != std::string::npos);
  CHECK(msg.find('3') != std::string::npos);
}

TEST_CASE("duplicates are case-insensitive too") {
  const char* text =
      "[category 0]\nDet: This\n"
      "[category 1]\nDet: this\n";
  CHECK(thrown_errc([&] { Lexicon::load(text); }) == Errc::DuplicateWordAcrossCategories);
}

TEST_CASE("a word may carry several POS within one category") {
  const std::string text = tiny_lexicon() + "[category 4]\nNoun: eVerb\n";
  const Lexicon lex = Lexicon::load(text);
  CHECK(lex.word_to_digit("eVerb") == 4);
  CHECK(lex.words(4, PosTag::Noun).size() == 2);  // eNoun and eVerb
  CHECK(lex.slot_nonempty(4, PosTag::Verb));
}

TEST_CASE("all ten categories must be present") {
  std::string text;
  for (int cat = 0; cat < 9; ++cat) {
    text += "[category " + std::to_string(cat) + "]\nDet: w" +
            static_cast<char>('a' + cat) + "\n";
  }
  CHECK(thrown_errc([&] { Lexicon::load(text); }) == Errc::MissingCategory);
  CHECK(message_of([&] { Lexicon::load(text); }).find('9') != std::string::npos);
}

TEST_CASE("rejects unknown POS tags and malformed lines") {
  CHECK(thrown_errc([] { Lexicon::load("[category 0]\nAdjective: big\n"); }) ==
        Errc::UnknownPosTag);
  CHECK(thrown_errc([] { Lexicon::load("[category 0]\njust words\n"); }) ==
        Errc::MalformedLine);
  CHECK(thrown_errc([] { Lexicon::load("Det: orphan\n[category 0]\n"); }) ==
        Errc::MalformedLine);
  CHECK(thrown_errc([] { Lexicon::load("[category x]\nDet: a\n"); }) == Errc::MalformedLine);
  CHECK(thrown_errc([] { Lexicon::load("[category 0]\nDet: bad1word\n"); }) ==
        Errc::MalformedLine);
}

TEST_CASE("comments and apostrophes are accepted") {
  const std::string text = tiny_lexicon() + "# trailing comment\n[category 0]\nNoun: o'clock\n";
  const Lexicon lex = Lexicon::load(text);
  CHECK(lex.word_to_digit("O'CLOCK") == 0);
}

TEST_CASE("pick_word draws from the right slot") {
  const Lexicon lex = Lexicon::load(tiny_lexicon());
  SeedStream stream(3);
  for (int i = 0; i < 20; ++i) {
    CHECK(lex.pick_word(2, PosTag::Noun, stream) == "cNoun");
  }
}

TEST_CASE("pick_word on an empty slot reports digit and POS") {
  const char* sparse =
      "[category 0]\nDet: a\n[category 1]\nDet: b\n[category 2]\nDet: c\n"
      "[category 3]\nDet: d\n[category 4]\nDet: e\n[category 5]\nDet: f\n"
      "[category 6]\nDet: g\n[category 7]\nDet: h\n[category 8]\nDet: i\n"
      "[category 9]\nDet: j\n";
  const Lexicon sparse_lex = Lexicon::load(sparse);
  SeedStream stream(4);
  CHECK(thrown_errc([&] { sparse_lex.pick_word(5, PosTag::Verb, stream); }) == Errc::EmptySlot);
  const auto msg = message_of([&] { sparse_lex.pick_word(5, PosTag::Verb, stream); });
  CHECK(msg.find('5') != std::string::npos);
  CHECK(msg.find("Verb") != std::string::npos);
}

TEST_CASE("pick_word is uniform over a four-word slot") {
  const std::string text = tiny_lexicon() + "[category 6]\nVerb: vOne vTwo vThree\n";
  const Lexicon lex = Lexicon::load(text);  // slot (6, Verb) now has 4 words
  REQUIRE(lex.words(6, PosTag::Verb).size() == 4);

  SeedStream stream(12345);
  std::map<std::string, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ++counts[lex.pick_word(6, PosTag::Verb, stream)];
  CHECK(counts.size() == 4);
  for (const auto& [word, n] : counts) {
    const double freq = static_cast<double>(n) / draws;
    CHECK(freq > 0.25 - 0.03);
    CHECK(freq < 0.25 + 0.03);
  }
}

TEST_CASE("coverage reflects the grammar's tag usage") {
  const Lexicon full = Lexicon::load(kBundledLexicon);
  const Grammar english = Grammar::parse(kBundledGrammar);
  const auto report = check_coverage(full, english);
  CHECK(report.total_coverage);
  CHECK(report.missing_slots.empty());

  // category 7 loses its verbs -> exactly that slot goes missing
  std::string text;
  const char* pos[] = {"Det", "Pronoun", "ProperNoun", "Noun", "Verb", "Preposition"};
  for (int cat = 0; cat < 10; ++cat) {
    text += "[category " + std::to_string(cat) + "]\n";
    for (const char* p : pos) {
      if (cat == 7 && std::string(p) == "Verb") continue;
      text += std::string(p) + ": " + static_cast<char>('a' + cat) + std::string(p) + "\n";
    }
  }
  const auto sparse = check_coverage(Lexicon::load(text), english);
  CHECK(!sparse.total_coverage);
  REQUIRE(sparse.missing_slots.size() == 1);
  CHECK(sparse.missing_slots[0] == std::pair{7, PosTag::Verb});

  // a grammar that never uses Verb does not require the slot
  const Grammar det_noun = Grammar::parse("S -> Det Noun");
  CHECK(check_coverage(Lexicon::load(text), det_noun).total_coverage);
}

TEST_CASE("size counts distinct words") {
  CHECK(Lexicon::load(tiny_lexicon()).size() == 60);
  CHECK(Lexicon::load(kBundledLexicon).size() == 155);
}

}  // TEST_SUITE
