#include "gramsteg/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gramsteg/bundled_data.hpp"
#include "gramsteg/coordinate_codec.hpp"
#include "gramsteg/error.hpp"
#include "gramsteg/payload_codec.hpp"
#include "gramsteg/stego_embedder.hpp"

namespace gramsteg {

namespace {

// Pairs a domain error with the exit code of the workflow stage it hit.
struct ExitError {
  int code;
  std::string message;
};

template <typename F>
auto stage(int exit_code, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw ExitError{exit_code, e.what()};
  }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::FileReadFailed, "cannot open " + path);
  std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                 std::istreambuf_iterator<char>()};
  if (in.bad()) raise(Errc::FileReadFailed, "cannot read " + path);
  return data;
}

std::string read_text_file(const std::string& path) {
  const auto data = read_file(path);
  return {data.begin(), data.end()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::FileWriteFailed, "cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) raise(Errc::FileWriteFailed, "cannot write " + path);
}

std::string lexicon_text(const std::string& path) {
  return path.empty() ? std::string(kBundledLexicon) : read_text_file(path);
}

std::string grammar_text(const std::string& path) {
  return path.empty() ? std::string(kBundledGrammar) : read_text_file(path);
}

std::vector<std::uint8_t> load_message(const EncodeConfig& cfg) {
  if (cfg.message_file.has_value() == cfg.message_literal.has_value()) {
    raise(Errc::EmptyInput, "exactly one of message file and message literal must be given");
  }
  if (cfg.message_file) return read_file(*cfg.message_file);
  return {cfg.message_literal->begin(), cfg.message_literal->end()};
}

}  // namespace

int cmd_encode(const EncodeConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Image carrier =
        stage(3, [&] { return Image::load(read_file(cfg.carrier_path)); });
    const Lexicon lex = stage(4, [&] { return Lexicon::load(lexicon_text(cfg.lexicon_path)); });
    const Grammar grammar =
        stage(4, [&] { return Grammar::parse(grammar_text(cfg.grammar_path)); });
    const std::vector<std::uint8_t> payload = stage(1, [&] { return load_message(cfg); });

    const ChunkStream chunks = stage(2, [&] { return chunk(frame(payload)); });

    SeedStream base(cfg.seed ? *cfg.seed : entropy_seed());
    const std::uint64_t plan_seed = base.next();
    const std::uint64_t text_seed = base.next();

    const PixelPlan plan = stage(2, [&] {
      return select_pixels(carrier.width(), carrier.height(), chunks.chunks.size(), plan_seed);
    });

    const CfgEngine engine(grammar);
    const DigitLayout layout = DigitLayout::for_image(carrier.width(), carrier.height());
    SeedStream text_stream(text_seed);
    const StegoText text =
        stage(5, [&] { return encode_text(plan, layout, engine, lex, text_stream); });

    const Image stego = stage(1, [&] { return embed_all(carrier, plan, chunks); });
    stage(1, [&] {
      write_file(cfg.out_image_path, stego.save());
      const std::string& rendering = text.rendering;
      write_file(cfg.out_text_path,
                 {reinterpret_cast<const std::uint8_t*>(rendering.data()), rendering.size()});
    });

    const std::uint64_t total_pixels =
        std::uint64_t{carrier.width()} * std::uint64_t{carrier.height()};
    std::ostringstream util;
    util.precision(3);
    util << std::fixed << (100.0 * static_cast<double>(plan.size()) /
                           static_cast<double>(total_pixels));
    out << "payload_bytes: " << payload.size() << "\n"
        << "pixels_used: " << plan.size() << "\n"
        << "sentences: " << text.sentences.size() << "\n"
        << "capacity_utilization: " << plan.size() << "/" << total_pixels << " pixels ("
        << util.str() << "%)\n";
    return 0;
  } catch (const ExitError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
}

int cmd_decode(const DecodeConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Image stego =
        stage(3, [&] { return Image::load(read_file(cfg.stego_image_path)); });
    const std::string text = stage(2, [&] { return read_text_file(cfg.text_path); });
    const Lexicon lex = stage(4, [&] { return Lexicon::load(lexicon_text(cfg.lexicon_path)); });

    const DigitLayout layout = DigitLayout::for_image(stego.width(), stego.height());
    const std::vector<Coordinate> plan =
        stage(2, [&] { return decode_text(text, layout, lex); });
    for (const Coordinate& c : plan) {
      if (c.x >= stego.width() || c.y >= stego.height()) {
        err << "error: sentence coordinate (" << c.x << ", " << c.y
            << ") lies outside the " << stego.width() << "x" << stego.height() << " image\n";
        return 2;
      }
    }

    const ChunkStream chunks = stage(2, [&] { return extract_all(stego, plan); });
    const std::vector<std::uint8_t> payload = stage(6, [&] { return unframe(chunks); });

    if (cfg.out_payload_path == "-") {
      out.write(reinterpret_cast<const char*>(payload.data()),
                static_cast<std::streamsize>(payload.size()));
      out.flush();
    } else {
      stage(1, [&] { write_file(cfg.out_payload_path, payload); });
    }
    err << "recovered " << payload.size() << " bytes from " << plan.size() << " pixels\n";
    return 0;
  } catch (const ExitError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
}

int cmd_capacity(const std::string& carrier_path, std::ostream& out, std::ostream& err) {
  try {
    const Image img = stage(3, [&] { return Image::load(read_file(carrier_path)); });
    const std::uint64_t pixels = std::uint64_t{img.width()} * std::uint64_t{img.height()};
    const std::uint64_t raw_bits = pixels * kChunkBits;
    const std::uint64_t max_payload =
        raw_bits >= kHeaderBits ? (raw_bits - kHeaderBits) / 8 : 0;
    out << "width: " << img.width() << "\n"
        << "height: " << img.height() << "\n"
        << "pixels: " << pixels << "\n"
        << "raw_bits: " << raw_bits << "\n"
        << "ratio: 9/24 = 37.5%\n"
        << "max_payload_bytes: " << max_payload << "\n";
    return 0;
  } catch (const ExitError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
}

int cmd_validate(const std::string& lexicon_path, const std::string& grammar_path,
                 std::ostream& out, std::ostream& err) {
  try {
    const Grammar grammar =
        stage(4, [&] { return Grammar::parse(grammar_text(grammar_path)); });
    const Lexicon lex = stage(4, [&] { return Lexicon::load(lexicon_text(lexicon_path)); });

    out << "lexicon: " << lex.size() << " words across " << kCategoryCount << " categories\n";
    out << "grammar: " << grammar.nonterminal_count() << " nonterminals, "
        << grammar.productions().size() << " productions\n";

    const CfgEngine engine(grammar);
    const auto lengths = engine.derivable_lengths(kDefaultLengthCap);
    out << "derivable sentence lengths (up to " << kDefaultLengthCap << "):";
    for (const std::size_t n : lengths) out << " " << n;
    out << "\n";

    const CoverageReport coverage = check_coverage(lex, grammar);
    if (!coverage.total_coverage) {
      for (const auto& [digit, tag] : coverage.missing_slots) {
        err << "missing words: category " << digit << ", POS " << pos_tag_name(tag) << "\n";
      }
      err << "error: lexicon does not cover every (category, POS) slot the grammar uses\n";
      return 4;
    }
    out << "coverage: complete (every grammar POS has words in all " << kCategoryCount
        << " categories)\n";
    return 0;
  } catch (const ExitError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  }
}

}  // namespace gramsteg
