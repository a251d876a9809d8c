#include "gramsteg/error.hpp"

namespace gramsteg {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::PayloadTooLarge: return "PayloadTooLarge";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::TruncatedStream: return "TruncatedStream";
    case Errc::NotBmp: return "NotBmp";
    case Errc::UnsupportedDepth: return "UnsupportedDepth";
    case Errc::UnsupportedCompression: return "UnsupportedCompression";
    case Errc::CorruptFile: return "CorruptFile";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::PlanMismatch: return "PlanMismatch";
    case Errc::LengthCapExceeded: return "LengthCapExceeded";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::MalformedGrammar: return "MalformedGrammar";
    case Errc::UnknownGrammarSymbol: return "UnknownGrammarSymbol";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::UnknownPosTag: return "UnknownPosTag";
    case Errc::DuplicateWordAcrossCategories: return "DuplicateWordAcrossCategories";
    case Errc::MissingCategory: return "MissingCategory";
    case Errc::UnknownWord: return "UnknownWord";
    case Errc::EmptySlot: return "EmptySlot";
    case Errc::CoordinateOverflow: return "CoordinateOverflow";
    case Errc::MalformedDigits: return "MalformedDigits";
    case Errc::UnderivableLength: return "UnderivableLength";
    case Errc::SentenceEncodingFailed: return "SentenceEncodingFailed";
    case Errc::WrongSentenceLength: return "WrongSentenceLength";
    case Errc::DuplicateCoordinate: return "DuplicateCoordinate";
    case Errc::EmptyText: return "EmptyText";
    case Errc::FileReadFailed: return "FileReadFailed";
    case Errc::FileWriteFailed: return "FileWriteFailed";
  }
  return "UnknownError";
}

}  // namespace gramsteg
