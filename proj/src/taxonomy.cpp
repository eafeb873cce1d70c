#include "recourse/taxonomy.hpp"

#include <json.hpp>

#include "recourse/error.hpp"
#include "recourse/exact_json.hpp"

namespace recourse {

using json = nlohmann::json;

std::string_view to_string(Category c) {
    switch (c) {
        case Category::MutableDirectly: return "mutable_directly";
        case Category::MutableIndirectly: return "mutable_indirectly";
        case Category::ImmutableSensitive: return "immutable_sensitive";
        case Category::ImmutableNonSensitive: return "immutable_non_sensitive";
    }
    return "";
}

std::string_view abbreviation(Category c) {
    switch (c) {
        case Category::MutableDirectly: return "M.D.";
        case Category::MutableIndirectly: return "M.I.";
        case Category::ImmutableSensitive: return "I.S.";
        case Category::ImmutableNonSensitive: return "I.NS.";
    }
    return "";
}

Category parse_category(std::string_view name) {
    for (Category c : kAllCategories) {
        if (to_string(c) == name) return c;
    }
    throw Error(ErrorCode::UnknownCategoryName, "unknown actionability category '" +
                                                    std::string(name) + "'");
}

std::size_t& CategoryCounts::operator[](Category c) {
    switch (c) {
        case Category::MutableDirectly: return md;
        case Category::MutableIndirectly: return mi;
        case Category::ImmutableSensitive: return is_;
        case Category::ImmutableNonSensitive: return ins;
    }
    return md;
}

CategoryCounts& CategoryCounts::operator+=(const CategoryCounts& other) {
    md += other.md;
    mi += other.mi;
    is_ += other.is_;
    ins += other.ins;
    return *this;
}

namespace {

[[noreturn]] void schema(const std::string& message) {
    throw Error(ErrorCode::SchemaViolation, "taxonomy: " + message);
}

std::string string_field(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end()) schema(std::string("missing field '") + key + "'");
    if (!it->is_string()) schema(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

std::size_t occurrences(std::string_view haystack, std::string_view needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string_view::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

}  // namespace

TaxonomyConfig load_taxonomy(std::string_view raw) {
    ExactJson doc = parse_exact_json(raw);
    for (const auto& path : doc.duplicate_keys) {
        if (path.rfind("/assignments/", 0) == 0) {
            throw Error(ErrorCode::DuplicateFeature, "taxonomy: duplicate assignment at " + path);
        }
        throw Error(ErrorCode::MalformedInput, "taxonomy: duplicate key at " + path);
    }
    const json& root = doc.root;
    if (!root.is_object()) schema("document must be an object");

    TaxonomyConfig config;
    config.dataset_id = string_field(root, "dataset_id");
    config.goal_phrase = string_field(root, "goal_phrase");
    config.prologue_template = string_field(root, "prologue_template");
    config.epilogue = string_field(root, "epilogue");
    if (occurrences(config.prologue_template, "{COUNT}") != 1) {
        throw Error(ErrorCode::MissingPrologueSlot,
                    "taxonomy: prologue_template must contain {COUNT} exactly once");
    }

    auto it = root.find("assignments");
    if (it == root.end()) schema("missing field 'assignments'");
    if (!it->is_object()) schema("'assignments' must be an object");
    for (const auto& [name, value] : it->items()) {
        if (name.empty()) schema("assignment with empty feature name");
        if (!value.is_string()) schema("assignment for '" + name + "' must be a string");
        config.assignments.emplace(name, parse_category(value.get<std::string>()));
    }
    return config;
}

Category categorize(const TaxonomyConfig& config, std::string_view feature_name) {
    auto it = config.assignments.find(std::string(feature_name));
    if (it == config.assignments.end()) {
        throw Error(ErrorCode::Unassigned, "feature '" + std::string(feature_name) +
                                               "' has no actionability category in taxonomy '" +
                                               config.dataset_id + "'");
    }
    return it->second;
}

CategoryCounts category_counts(const TaxonomyConfig& config) {
    CategoryCounts counts;
    for (const auto& [name, category] : config.assignments) ++counts[category];
    return counts;
}

CategoryResolution resolve_categories(const ExplanationCase& c, const TaxonomyConfig& config,
                                      bool force) {
    const bool forced = force || c.force_overrides;
    CategoryResolution out;
    out.categories.reserve(c.features.size());
    for (const auto& feature : c.features) {
        std::optional<Category> assigned;
        if (auto a = config.assignments.find(feature.name); a != config.assignments.end()) {
            assigned = a->second;
        }
        auto o = c.category_overrides.find(feature.name);
        if (o == c.category_overrides.end()) {
            if (!assigned) categorize(config, feature.name);
            out.categories.push_back(*assigned);
            continue;
        }
        Category target = parse_category(o->second);
        const bool crosses = assigned && is_mutable(*assigned) != is_mutable(target);
        if (crosses && !forced) {
            throw Error(ErrorCode::OverrideNotPermitted,
                        "override of '" + feature.name + "' from " +
                            std::string(to_string(*assigned)) + " to " +
                            std::string(to_string(target)) +
                            " crosses the mutable/immutable boundary; set force_overrides to allow it");
        }
        out.categories.push_back(target);
        if (assigned != target) out.overrides.push_back({feature.name, assigned, target, crosses});
    }
    return out;
}

}  // namespace recourse
