#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/case_model.hpp"

namespace recourse {

/// Feature actionability categories.
enum class Category {
    MutableDirectly,
    MutableIndirectly,
    ImmutableSensitive,
    ImmutableNonSensitive,
};

inline constexpr std::array<Category, 4> kAllCategories = {
    Category::MutableDirectly, Category::MutableIndirectly, Category::ImmutableSensitive,
    Category::ImmutableNonSensitive};

inline bool is_mutable(Category c) {
    return c == Category::MutableDirectly || c == Category::MutableIndirectly;
}

/// File spelling, e.g. "mutable_directly".
std::string_view to_string(Category c);
/// Short form used in reports: M.D., M.I., I.S., I.NS.
std::string_view abbreviation(Category c);
/// Throws Error(UnknownCategoryName).
Category parse_category(std::string_view name);

struct TaxonomyConfig {
    std::string dataset_id;
    std::map<std::string, Category> assignments;
    /// Contains "{COUNT}" exactly once; may contain "{GOAL}".
    std::string prologue_template;
    std::string epilogue;
    std::string goal_phrase;
};

struct CategoryCounts {
    std::size_t md = 0;
    std::size_t mi = 0;
    std::size_t is_ = 0;
    std::size_t ins = 0;

    std::size_t total() const { return md + mi + is_ + ins; }
    std::size_t& operator[](Category c);
    CategoryCounts& operator+=(const CategoryCounts& other);
    bool operator==(const CategoryCounts&) const = default;
};

/// Throws Error with MalformedInput, SchemaViolation, DuplicateFeature,
/// UnknownCategoryName or MissingPrologueSlot.
TaxonomyConfig load_taxonomy(std::string_view raw);

/// Throws Error(Unassigned) when the feature has no category.
Category categorize(const TaxonomyConfig& config, std::string_view feature_name);

CategoryCounts category_counts(const TaxonomyConfig& config);

struct AppliedOverride {
    std::string feature;
    std::optional<Category> from;
    Category to;
    bool forced = false;
};

/// Categories for every feature of a case after applying its overrides.
struct CategoryResolution {
    std::vector<Category> categories;  // parallel to case.features
    std::vector<AppliedOverride> overrides;
};

/// Resolves a category for every feature in the case. Overrides may only move
/// a feature within the mutable or within the immutable side unless forced
/// (by the case or by `force`). Throws Error with Unassigned,
/// UnknownCategoryName or OverrideNotPermitted.
CategoryResolution resolve_categories(const ExplanationCase& c, const TaxonomyConfig& config,
                                      bool force = false);

}  // namespace recourse
