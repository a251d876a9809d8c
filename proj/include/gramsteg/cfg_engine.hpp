#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gramsteg {

// Preterminal part-of-speech tags: the closed alphabet shared by the
// grammar's productions and the lexicon's entry lines.
enum class PosTag : std::uint8_t {
  Det,
  Pronoun,
  ProperNoun,
  Noun,
  Verb,
  Preposition,
};

inline constexpr std::size_t kPosTagCount = 6;
inline constexpr std::array<PosTag, kPosTagCount> kAllPosTags = {
    PosTag::Det,  PosTag::Pronoun, PosTag::ProperNoun,
    PosTag::Noun, PosTag::Verb,    PosTag::Preposition,
};

std::string_view pos_tag_name(PosTag tag);
// Accepts the hyphenated spelling "Proper-Noun" as well.
std::optional<PosTag> parse_pos_tag(std::string_view name);

using PosSeq = std::vector<PosTag>;

// A context-free grammar over the PosTag alphabet. Loaded from text, one
// production per line ("LHS -> RHS1 RHS2", | for alternatives, # comments).
// Every right-hand side must be nonempty; that non-erasing property is what
// makes exact-length enumeration finite. The start symbol is the first
// left-hand side in the file.
class Grammar {
 public:
  struct Symbol {
    bool is_tag = false;
    PosTag tag = PosTag::Det;       // valid when is_tag
    std::uint32_t nonterminal = 0;  // valid when !is_tag

    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  struct Production {
    std::uint32_t lhs = 0;
    std::vector<Symbol> rhs;
  };

  static Grammar parse(std::string_view text);

  std::uint32_t start() const { return start_; }
  std::size_t nonterminal_count() const { return nonterminal_names_.size(); }
  const std::string& nonterminal_name(std::uint32_t id) const {
    return nonterminal_names_[id];
  }
  const std::vector<Production>& productions() const { return productions_; }

  // Which tags appear on any right-hand side (drives coverage checking).
  std::array<bool, kPosTagCount> used_tags() const;

 private:
  Grammar() = default;

  std::vector<std::string> nonterminal_names_;
  std::vector<Production> productions_;
  std::uint32_t start_ = 0;
};

inline constexpr std::size_t kDefaultLengthCap = 12;

// Length-indexed derivation tables over a grammar. For each (nonterminal,
// exact terminal length) the table holds every derivable POS sequence; the
// levels are built bottom-up, so the recursive rules of the grammar need no
// normal-form conversion. Tables are memoized lazily under a lock; built
// levels are immutable, so concurrent readers are safe.
class CfgEngine {
 public:
  explicit CfgEngine(Grammar grammar, std::size_t length_cap = kDefaultLengthCap);

  const Grammar& grammar() const { return grammar_; }
  std::size_t length_cap() const { return cap_; }

  // All POS sequences of exactly `length` derivable from the start symbol,
  // in lexicographic order.
  const std::vector<PosSeq>& pos_sequences(std::size_t length) const;

  // True iff the start symbol derives `tags` (chart parse over the same
  // production rules; agrees with pos_sequences membership).
  bool recognize(std::span<const PosTag> tags) const;

  // Lengths in [1, max] with at least one derivable sequence. Computed from
  // a boolean reachability table, so it is independent of the length cap.
  std::set<std::size_t> derivable_lengths(std::size_t max) const;

 private:
  void build_level(std::size_t length) const;

  Grammar grammar_;
  std::size_t cap_;

  mutable std::mutex mutex_;
  // table_[nonterminal][length] -> sorted sequences; levels 1..built_ done.
  mutable std::vector<std::map<std::size_t, std::vector<PosSeq>>> table_;
  mutable std::size_t built_ = 0;
};

}  // namespace gramsteg
