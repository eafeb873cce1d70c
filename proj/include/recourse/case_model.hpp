#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace recourse {

enum class ValueKind { Numeric, Categorical };

enum class Direction { Increase, Decrease, Modify, None };

std::string_view to_string(ValueKind kind);
std::string_view to_string(Direction direction);

/// A feature value carried as the exact text it had in the case file.
/// Numeric values are decimal literals; categorical values are labels.
struct Scalar {
    ValueKind kind = ValueKind::Numeric;
    std::string text;

    bool operator==(const Scalar&) const = default;
};

struct FeatureRecord {
    std::string name;
    std::optional<std::string> display_name;
    ValueKind kind = ValueKind::Numeric;
    std::optional<std::string> unit;
    Scalar query_value;
    Scalar cf_value;
    double attribution = 0.0;

    /// display_name, or name with underscores replaced by spaces.
    std::string label() const;
};

struct OutcomeLabels {
    std::string desired;
    std::string undesired;
    std::string desired_state_phrase;
    std::string undesired_state_phrase;
};

enum class PredictedOutcome { Desired, Undesired };

struct ExplanationCase {
    std::string dataset_id;
    std::vector<FeatureRecord> features;
    OutcomeLabels outcomes;
    PredictedOutcome predicted_outcome = PredictedOutcome::Undesired;

    /// Per-case actionability overrides: feature name -> category name as it
    /// appears in taxonomy files. Validated against the taxonomy at planning.
    std::map<std::string, std::string> category_overrides;
    bool force_overrides = false;

    /// Non-fatal data issues noticed while parsing.
    std::vector<std::string> warnings;

    const FeatureRecord* find(std::string_view name) const;
};

struct FeatureChange {
    const FeatureRecord* record = nullptr;
    std::size_t index = 0;
    Direction direction = Direction::None;
    bool changed = false;
};

/// Parses and validates a case document. Throws Error with MalformedInput,
/// SchemaViolation or DuplicateFeature.
ExplanationCase parse_case(std::string_view raw);

/// Serialises a case back to the case file format, preserving value text.
std::string write_case(const ExplanationCase& c);

Direction direction_of(const FeatureRecord& record);

/// One change per feature, in case order. The returned records point into
/// `c`, which must outlive the result.
std::vector<FeatureChange> extract_changes(const ExplanationCase& c);

std::size_t count_changed(const std::vector<FeatureChange>& changes);

}  // namespace recourse
