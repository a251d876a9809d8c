#pragma once

#include <stdexcept>
#include <string>

namespace gramsteg {

// Stable error codes; the exception message carries the specifics
// (offending word, coordinate, line number, ...).
enum class Errc {
  // payload framing
  PayloadTooLarge,
  MalformedHeader,
  TruncatedStream,
  // bmp image
  NotBmp,
  UnsupportedDepth,
  UnsupportedCompression,
  CorruptFile,
  OutOfBounds,
  // pixel selection / embedding
  CapacityExceeded,
  PlanMismatch,
  // grammar
  LengthCapExceeded,
  EmptyInput,
  MalformedGrammar,
  UnknownGrammarSymbol,
  // lexicon
  MalformedLine,
  UnknownPosTag,
  DuplicateWordAcrossCategories,
  MissingCategory,
  UnknownWord,
  EmptySlot,
  // coordinate / text codec
  CoordinateOverflow,
  MalformedDigits,
  UnderivableLength,
  SentenceEncodingFailed,
  WrongSentenceLength,
  DuplicateCoordinate,
  EmptyText,
  // file I/O
  FileReadFailed,
  FileWriteFailed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gramsteg
