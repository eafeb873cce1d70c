#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recourse {

enum class ErrorCode {
    MalformedInput,
    SchemaViolation,
    DuplicateFeature,
    UnknownCategoryName,
    MissingPrologueSlot,
    OverrideNotPermitted,
    Unassigned,
    NoChanges,
    EmptyText,
    LengthMismatch,
    DegenerateInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace recourse
