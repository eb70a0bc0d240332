#include "qbelief/error.hpp"

namespace qbelief {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::bands_gap: return "E_BANDS_GAP";
    case ErrorCode::bands_overlap: return "E_BANDS_OVERLAP";
    case ErrorCode::bands_order: return "E_BANDS_ORDER";
    case ErrorCode::arity: return "E_ARITY";
    case ErrorCode::unknown_quality: return "E_UNKNOWN_QUALITY";
    case ErrorCode::count_negative: return "E_COUNT_NEGATIVE";
    case ErrorCode::dup_key: return "E_DUP_KEY";
    case ErrorCode::missing_key: return "E_MISSING_KEY";
    case ErrorCode::not_possible: return "E_NOT_POSSIBLE";
    case ErrorCode::limits: return "E_LIMITS";
    case ErrorCode::invalid_argument: return "E_INVALID_ARGUMENT";
  }
  return "E_UNKNOWN";
}

}  // namespace qbelief
