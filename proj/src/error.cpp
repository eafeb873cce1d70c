#include "recourse/error.hpp"

namespace recourse {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::DuplicateFeature: return "DuplicateFeature";
        case ErrorCode::UnknownCategoryName: return "UnknownCategoryName";
        case ErrorCode::MissingPrologueSlot: return "MissingPrologueSlot";
        case ErrorCode::OverrideNotPermitted: return "OverrideNotPermitted";
        case ErrorCode::Unassigned: return "Unassigned";
        case ErrorCode::NoChanges: return "NoChanges";
        case ErrorCode::EmptyText: return "EmptyText";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
    }
    return "Unknown";
}

}  // namespace recourse
