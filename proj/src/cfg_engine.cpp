#include "gramsteg/cfg_engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "gramsteg/error.hpp"

namespace gramsteg {

std::string_view pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::Det: return "Det";
    case PosTag::Pronoun: return "Pronoun";
    case PosTag::ProperNoun: return "ProperNoun";
    case PosTag::Noun: return "Noun";
    case PosTag::Verb: return "Verb";
    case PosTag::Preposition: return "Preposition";
  }
  return "?";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  if (name == "Det") return PosTag::Det;
  if (name == "Pronoun") return PosTag::Pronoun;
  if (name == "ProperNoun" || name == "Proper-Noun") return PosTag::ProperNoun;
  if (name == "Noun") return PosTag::Noun;
  if (name == "Verb") return PosTag::Verb;
  if (name == "Preposition") return PosTag::Preposition;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Grammar Grammar::parse(std::string_view text) {
  struct RawProduction {
    std::string lhs;
    std::vector<std::string> rhs;
    std::size_t line_no;
  };
  std::vector<RawProduction> raw;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    const auto tokens_probe = split_tokens(line);
    if (tokens_probe.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      raise(Errc::MalformedGrammar,
            "line " + std::to_string(line_no) + ": expected \"LHS -> RHS\"");
    }
    const auto lhs_tokens = split_tokens(line.substr(0, arrow));
    if (lhs_tokens.size() != 1) {
      raise(Errc::MalformedGrammar,
            "line " + std::to_string(line_no) + ": left side must be a single symbol");
    }
    if (parse_pos_tag(lhs_tokens[0])) {
      raise(Errc::MalformedGrammar,
            "line " + std::to_string(line_no) + ": \"" + lhs_tokens[0] +
                "\" is a POS tag; its words belong in the lexicon, not the grammar");
    }

    // Alternatives: one production per |-separated piece.
    std::string_view rest{line};
    rest.remove_prefix(arrow + 2);
    while (true) {
      const auto bar = rest.find('|');
      const auto piece = rest.substr(0, bar);
      auto symbols = split_tokens(piece);
      if (symbols.empty()) {
        raise(Errc::MalformedGrammar,
              "line " + std::to_string(line_no) +
                  ": empty right-hand side (erasing productions are not allowed)");
      }
      raw.push_back({lhs_tokens[0], std::move(symbols), line_no});
      if (bar == std::string_view::npos) break;
      rest.remove_prefix(bar + 1);
    }
  }

  if (raw.empty()) {
    raise(Errc::MalformedGrammar, "grammar has no productions");
  }

  Grammar g;
  std::unordered_map<std::string, std::uint32_t> ids;
  for (const auto& p : raw) {
    if (ids.emplace(p.lhs, static_cast<std::uint32_t>(g.nonterminal_names_.size())).second) {
      g.nonterminal_names_.push_back(p.lhs);
    }
  }
  g.start_ = ids.at(raw.front().lhs);

  for (const auto& p : raw) {
    Production prod;
    prod.lhs = ids.at(p.lhs);
    for (const auto& name : p.rhs) {
      Symbol sym;
      if (const auto tag = parse_pos_tag(name)) {
        sym.is_tag = true;
        sym.tag = *tag;
      } else if (const auto it = ids.find(name); it != ids.end()) {
        sym.nonterminal = it->second;
      } else {
        raise(Errc::UnknownGrammarSymbol,
              "line " + std::to_string(p.line_no) + ": \"" + name +
                  "\" is neither a POS tag nor a defined nonterminal");
      }
      prod.rhs.push_back(sym);
    }
    g.productions_.push_back(std::move(prod));
  }
  return g;
}

std::array<bool, kPosTagCount> Grammar::used_tags() const {
  std::array<bool, kPosTagCount> used{};
  for (const auto& p : productions_) {
    for (const auto& s : p.rhs) {
      if (s.is_tag) used[static_cast<std::size_t>(s.tag)] = true;
    }
  }
  return used;
}

CfgEngine::CfgEngine(Grammar grammar, std::size_t length_cap)
    : grammar_(std::move(grammar)), cap_(length_cap) {
  table_.resize(grammar_.nonterminal_count());
}

// Builds the derivation sets for one exact length. Productions with two or
// more right-hand symbols only consult strictly shorter levels (each part
// yields at least one terminal); unit productions A -> B stay within the
// level and are closed by fixpoint iteration.
void CfgEngine::build_level(std::size_t n) const {
  const std::size_t nts = grammar_.nonterminal_count();
  std::vector<std::set<PosSeq>> level(nts);

  auto shorter = [&](std::uint32_t nt, std::size_t len) -> const std::vector<PosSeq>& {
    static const std::vector<PosSeq> empty;
    const auto& per_len = table_[nt];
    const auto it = per_len.find(len);
    return it == per_len.end() ? empty : it->second;
  };

  // Appends to `out` every concatenation of part sequences for
  // rhs[from..] of total terminal length `rem`, prefixed by `acc`.
  auto expand = [&](const auto& self, const std::vector<Grammar::Symbol>& rhs,
                    std::size_t from, std::size_t rem, PosSeq& acc,
                    std::set<PosSeq>& out) -> void {
    const std::size_t parts_left = rhs.size() - from;
    if (parts_left == 1) {
      const auto& sym = rhs[from];
      if (sym.is_tag) {
        if (rem == 1) {
          acc.push_back(sym.tag);
          out.insert(acc);
          acc.pop_back();
        }
      } else {
        for (const auto& seq : shorter(sym.nonterminal, rem)) {
          const std::size_t mark = acc.size();
          acc.insert(acc.end(), seq.begin(), seq.end());
          out.insert(acc);
          acc.resize(mark);
        }
      }
      return;
    }
    const auto& sym = rhs[from];
    if (sym.is_tag) {
      if (rem - 1 >= parts_left - 1) {
        acc.push_back(sym.tag);
        self(self, rhs, from + 1, rem - 1, acc, out);
        acc.pop_back();
      }
      return;
    }
    for (std::size_t take = 1; take + (parts_left - 1) <= rem; ++take) {
      for (const auto& seq : shorter(sym.nonterminal, take)) {
        const std::size_t mark = acc.size();
        acc.insert(acc.end(), seq.begin(), seq.end());
        self(self, rhs, from + 1, rem - take, acc, out);
        acc.resize(mark);
      }
    }
  };

  for (const auto& prod : grammar_.productions()) {
    if (prod.rhs.size() == 1 && !prod.rhs[0].is_tag) continue;  // unit: later
    PosSeq acc;
    expand(expand, prod.rhs, 0, n, acc, level[prod.lhs]);
  }

  // Unit-production closure within the level.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& prod : grammar_.productions()) {
      if (prod.rhs.size() != 1 || prod.rhs[0].is_tag) continue;
      auto& dst = level[prod.lhs];
      const auto before = dst.size();
      const auto& src = level[prod.rhs[0].nonterminal];
      dst.insert(src.begin(), src.end());
      changed |= dst.size() != before;
    }
  }

  for (std::size_t nt = 0; nt < nts; ++nt) {
    table_[nt].emplace(n, std::vector<PosSeq>(level[nt].begin(), level[nt].end()));
  }
}

const std::vector<PosSeq>& CfgEngine::pos_sequences(std::size_t length) const {
  if (length < 1) {
    raise(Errc::EmptyInput, "sequence length must be at least 1");
  }
  if (length > cap_) {
    raise(Errc::LengthCapExceeded, "length " + std::to_string(length) +
                                       " exceeds the table cap of " +
                                       std::to_string(cap_));
  }
  std::lock_guard lock(mutex_);
  while (built_ < length) {
    build_level(built_ + 1);
    ++built_;
  }
  return table_[grammar_.start()].at(length);
}

bool CfgEngine::recognize(std::span<const PosTag> tags) const {
  if (tags.empty()) {
    raise(Errc::EmptyInput, "cannot recognize an empty tag sequence");
  }
  const std::size_t n = tags.size();
  const std::size_t nts = grammar_.nonterminal_count();

  // chart[nt][start][len] <=> nt derives tags[start, start+len)
  auto idx = [n](std::size_t start, std::size_t len) { return start * (n + 1) + len; };
  std::vector<std::vector<char>> chart(nts, std::vector<char>((n + 1) * (n + 1), 0));

  // Can rhs[from..] match tags[at, at+rem)? Spans shorter than `len` are
  // already final in the chart.
  auto matches = [&](const auto& self, const std::vector<Grammar::Symbol>& rhs,
                     std::size_t from, std::size_t at, std::size_t rem) -> bool {
    const std::size_t parts_left = rhs.size() - from;
    if (parts_left == 1) {
      const auto& sym = rhs[from];
      if (sym.is_tag) return rem == 1 && tags[at] == sym.tag;
      return chart[sym.nonterminal][idx(at, rem)] != 0;
    }
    const auto& sym = rhs[from];
    if (sym.is_tag) {
      return rem >= parts_left && tags[at] == sym.tag &&
             self(self, rhs, from + 1, at + 1, rem - 1);
    }
    for (std::size_t take = 1; take + (parts_left - 1) <= rem; ++take) {
      if (chart[sym.nonterminal][idx(at, take)] &&
          self(self, rhs, from + 1, at + take, rem - take)) {
        return true;
      }
    }
    return false;
  };

  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t start = 0; start + len <= n; ++start) {
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& prod : grammar_.productions()) {
          auto& cell = chart[prod.lhs][idx(start, len)];
          if (cell) continue;
          const bool unit = prod.rhs.size() == 1 && !prod.rhs[0].is_tag;
          const bool ok =
              unit ? chart[prod.rhs[0].nonterminal][idx(start, len)] != 0
                   : matches(matches, prod.rhs, 0, start, len);
          if (ok) {
            cell = 1;
            changed = true;
          }
        }
      }
    }
  }
  return chart[grammar_.start()][idx(0, n)] != 0;
}

std::set<std::size_t> CfgEngine::derivable_lengths(std::size_t max) const {
  const std::size_t nts = grammar_.nonterminal_count();
  // derivable[nt][len]: nt derives some sequence of exactly len terminals
  std::vector<std::vector<char>> derivable(nts, std::vector<char>(max + 1, 0));

  auto feasible = [&](const auto& self, const std::vector<Grammar::Symbol>& rhs,
                      std::size_t from, std::size_t rem) -> bool {
    const std::size_t parts_left = rhs.size() - from;
    if (parts_left == 1) {
      const auto& sym = rhs[from];
      if (sym.is_tag) return rem == 1;
      return derivable[sym.nonterminal][rem] != 0;
    }
    const auto& sym = rhs[from];
    if (sym.is_tag) {
      return rem >= parts_left && self(self, rhs, from + 1, rem - 1);
    }
    for (std::size_t take = 1; take + (parts_left - 1) <= rem; ++take) {
      if (derivable[sym.nonterminal][take] && self(self, rhs, from + 1, rem - take)) {
        return true;
      }
    }
    return false;
  };

  for (std::size_t len = 1; len <= max; ++len) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& prod : grammar_.productions()) {
        auto& cell = derivable[prod.lhs][len];
        if (cell) continue;
        if (feasible(feasible, prod.rhs, 0, len)) {
          cell = 1;
          changed = true;
        }
      }
    }
  }

  std::set<std::size_t> out;
  for (std::size_t len = 1; len <= max; ++len) {
    if (derivable[grammar_.start()][len]) out.insert(len);
  }
  return out;
}

}  // namespace gramsteg
