#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::IdentityInConnectionSet: return "IdentityInConnectionSet";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::TranscriptionMismatch: return "TranscriptionMismatch";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace rainbow
