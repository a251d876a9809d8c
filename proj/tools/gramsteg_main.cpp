#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gramsteg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hide binary payloads in BMP pixel LSBs, keyed by grammatical English text"};
  app.require_subcommand(1);

  gramsteg::EncodeConfig enc;
  std::string enc_message_file;
  std::string enc_message_literal;
  std::uint64_t enc_seed = 0;
  auto* encode = app.add_subcommand("encode", "Embed a payload into a carrier image");
  encode->add_option("--carrier", enc.carrier_path, "24-bit BMP carrier image")->required();
  auto* mf = encode->add_option("--message-file", enc_message_file, "Payload file to hide");
  auto* ml = encode->add_option("--message", enc_message_literal, "Payload string to hide");
  mf->excludes(ml);
  ml->excludes(mf);
  encode->add_option("--lexicon", enc.lexicon_path, "Lexicon file (default: bundled)");
  encode->add_option("--grammar", enc.grammar_path, "Grammar file (default: bundled)");
  encode->add_option("--out-image", enc.out_image_path, "Output stego BMP")->required();
  encode->add_option("--out-text", enc.out_text_path, "Output stego text")->required();
  auto* seed_opt = encode->add_option("--seed", enc_seed, "64-bit seed for reproducible output");

  gramsteg::DecodeConfig dec;
  auto* decode = app.add_subcommand("decode", "Recover a payload from a stego image and text");
  decode->add_option("--image", dec.stego_image_path, "Stego BMP image")->required();
  decode->add_option("--text", dec.text_path, "Stego text file")->required();
  decode->add_option("--lexicon", dec.lexicon_path, "Lexicon file (default: bundled)");
  decode->add_option("--out", dec.out_payload_path, "Recovered payload file, or - for stdout")
      ->default_val("-");

  std::string cap_carrier;
  auto* capacity = app.add_subcommand("capacity", "Report how much a carrier can hold");
  capacity->add_option("--carrier", cap_carrier, "24-bit BMP carrier image")->required();

  std::string val_lexicon;
  std::string val_grammar;
  auto* validate = app.add_subcommand("validate", "Check a lexicon and grammar for use");
  validate->add_option("--lexicon", val_lexicon, "Lexicon file (default: bundled)");
  validate->add_option("--grammar", val_grammar, "Grammar file (default: bundled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's internal exit codes so usage errors land on 1,
    // keeping 2-6 reserved for the workflow failures documented above.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (encode->parsed()) {
    if (mf->count() == 0 && ml->count() == 0) {
      std::cerr << "error: one of --message-file or --message is required\n";
      return 1;
    }
    if (mf->count() > 0) enc.message_file = enc_message_file;
    if (ml->count() > 0) enc.message_literal = enc_message_literal;
    if (seed_opt->count() > 0) enc.seed = enc_seed;
    return gramsteg::cmd_encode(enc, std::cout, std::cerr);
  }
  if (decode->parsed()) {
    return gramsteg::cmd_decode(dec, std::cout, std::cerr);
  }
  if (capacity->parsed()) {
    return gramsteg::cmd_capacity(cap_carrier, std::cout, std::cerr);
  }
  return gramsteg::cmd_validate(val_lexicon, val_grammar, std::cout, std::cerr);
}
