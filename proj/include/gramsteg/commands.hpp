#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gramsteg {

struct EncodeConfig {
  std::string carrier_path;
  std::optional<std::string> message_file;     // exactly one of these two
  std::optional<std::string> message_literal;  // must be set
  std::string lexicon_path;  // empty -> bundled default
  std::string grammar_path;  // empty -> bundled default
  std::string out_image_path;
  std::string out_text_path;
  std::optional<std::uint64_t> seed;  // unset -> OS entropy
};

struct DecodeConfig {
  std::string stego_image_path;
  std::string text_path;
  std::string lexicon_path;      // empty -> bundled default
  std::string out_payload_path;  // "-" -> standard output
};

// Workflow entry points shared by the CLI and the test harness. Reports go
// to `out`, diagnostics to `err`; the return value is the process exit code:
//   0 success
//   1 I/O or internal failure
//   2 encode: capacity exceeded / decode: malformed stego text
//   3 carrier or stego image invalid
//   4 lexicon or grammar invalid
//   5 sentence generation failed
//   6 recovered bit stream inconsistent (bad frame)
int cmd_encode(const EncodeConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decode(const DecodeConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_capacity(const std::string& carrier_path, std::ostream& out, std::ostream& err);
int cmd_validate(const std::string& lexicon_path, const std::string& grammar_path,
                 std::ostream& out, std::ostream& err);

}  // namespace gramsteg
