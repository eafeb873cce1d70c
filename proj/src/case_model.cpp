#include "recourse/case_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "recourse/decimal.hpp"
#include "recourse/error.hpp"
#include "recourse/exact_json.hpp"

namespace recourse {

using json = nlohmann::json;

std::string_view to_string(ValueKind kind) {
    return kind == ValueKind::Numeric ? "numeric" : "categorical";
}

std::string_view to_string(Direction direction) {
    switch (direction) {
        case Direction::Increase: return "increase";
        case Direction::Decrease: return "decrease";
        case Direction::Modify: return "modify";
        case Direction::None: return "none";
    }
    return "none";
}

std::string FeatureRecord::label() const {
    if (display_name) return *display_name;
    std::string out = name;
    std::replace(out.begin(), out.end(), '_', ' ');
    return out;
}

const FeatureRecord* ExplanationCase::find(std::string_view name) const {
    for (const auto& f : features) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

namespace {

[[noreturn]] void schema(const std::string& message) {
    throw Error(ErrorCode::SchemaViolation, message);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) schema(where + ": missing field '" + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where,
                           bool allow_empty = false) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) schema(where + ": field '" + key + "' must be a string");
    std::string s = v.get<std::string>();
    if (!allow_empty && s.empty()) schema(where + ": field '" + key + "' must be non-empty");
    return s;
}

std::optional<std::string> optional_string(const json& obj, const char* key,
                                           const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) schema(where + ": field '" + key + "' must be a string");
    return it->get<std::string>();
}

Scalar read_scalar(const ExactJson& doc, const json& v, const std::string& pointer,
                   ValueKind kind, const std::string& where) {
    if (kind == ValueKind::Numeric) {
        if (v.is_number()) return {ValueKind::Numeric, *doc.literal_at(pointer)};
        if (v.is_string() && is_decimal_literal(v.get<std::string>())) {
            return {ValueKind::Numeric, v.get<std::string>()};
        }
        schema(where + ": numeric feature has a non-numeric value " + v.dump());
    }
    if (!v.is_string()) schema(where + ": categorical feature has a non-label value " + v.dump());
    std::string label = v.get<std::string>();
    if (label.empty()) schema(where + ": categorical value must be non-empty");
    return {ValueKind::Categorical, label};
}

bool iequal(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

ExplanationCase parse_case(std::string_view raw) {
    ExactJson doc = parse_exact_json(raw);
    if (!doc.duplicate_keys.empty()) {
        throw Error(ErrorCode::MalformedInput, "duplicate key at " + doc.duplicate_keys.front());
    }
    const json& root = doc.root;
    if (!root.is_object()) schema("case: document must be an object");

    ExplanationCase c;
    c.dataset_id = require_string(root, "dataset_id", "case");

    std::string predicted = require_string(root, "predicted_outcome", "case");
    if (predicted == "desired") {
        c.predicted_outcome = PredictedOutcome::Desired;
        c.warnings.push_back("query is already predicted as the desired outcome");
    } else if (predicted == "undesired") {
        c.predicted_outcome = PredictedOutcome::Undesired;
    } else {
        schema("case: predicted_outcome must be 'desired' or 'undesired', got '" + predicted + "'");
    }

    const json& outcomes = require(root, "outcomes", "case");
    if (!outcomes.is_object()) schema("case: 'outcomes' must be an object");
    c.outcomes.desired = require_string(outcomes, "desired", "outcomes");
    c.outcomes.undesired = require_string(outcomes, "undesired", "outcomes");
    c.outcomes.desired_state_phrase = require_string(outcomes, "desired_state_phrase", "outcomes");
    c.outcomes.undesired_state_phrase =
        require_string(outcomes, "undesired_state_phrase", "outcomes");

    const json& features = require(root, "features", "case");
    if (!features.is_array()) schema("case: 'features' must be an array");
    if (features.empty()) schema("case: at least one feature is required");

    std::set<std::string> seen;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const json& f = features[i];
        const std::string where = "features[" + std::to_string(i) + "]";
        const std::string base = "/features/" + std::to_string(i);
        if (!f.is_object()) schema(where + ": must be an object");

        FeatureRecord r;
        r.name = require_string(f, "name", where);
        if (!seen.insert(r.name).second) {
            throw Error(ErrorCode::DuplicateFeature, "duplicate feature name '" + r.name + "'");
        }
        r.display_name = optional_string(f, "display_name", where);
        if (r.display_name && r.display_name->empty()) schema(where + ": empty display_name");
        r.unit = optional_string(f, "unit", where);

        std::string kind = require_string(f, "kind", where);
        if (kind == "numeric") {
            r.kind = ValueKind::Numeric;
        } else if (kind == "categorical") {
            r.kind = ValueKind::Categorical;
        } else {
            schema(where + ": kind must be 'numeric' or 'categorical', got '" + kind + "'");
        }
        r.query_value = read_scalar(doc, require(f, "query_value", where), base + "/query_value",
                                    r.kind, where + " (" + r.name + ") query_value");
        r.cf_value = read_scalar(doc, require(f, "cf_value", where), base + "/cf_value", r.kind,
                                 where + " (" + r.name + ") cf_value");

        const json& w = require(f, "attribution", where);
        if (!w.is_number()) schema(where + ": attribution must be a number");
        r.attribution = w.get<double>();

        if (r.kind == ValueKind::Categorical && r.query_value.text != r.cf_value.text &&
            iequal(r.query_value.text, r.cf_value.text)) {
            c.warnings.push_back("feature '" + r.name + "': values '" + r.query_value.text +
                                 "' and '" + r.cf_value.text +
                                 "' differ only in letter case and are treated as different");
        }
        c.features.push_back(std::move(r));
    }

    if (auto it = root.find("category_overrides"); it != root.end()) {
        if (!it->is_object()) schema("case: 'category_overrides' must be an object");
        for (const auto& [name, category] : it->items()) {
            if (!category.is_string()) schema("category_overrides: '" + name + "' must map to a string");
            if (!seen.count(name)) schema("category_overrides: unknown feature '" + name + "'");
            c.category_overrides[name] = category.get<std::string>();
        }
    }
    if (auto it = root.find("force_overrides"); it != root.end()) {
        if (!it->is_boolean()) schema("case: 'force_overrides' must be a boolean");
        c.force_overrides = it->get<bool>();
    }
    return c;
}

namespace {

// Emits a numeric literal verbatim so the exact text survives serialisation.
void append_value(std::string& out, const Scalar& v) {
    if (v.kind == ValueKind::Numeric) {
        out += v.text;
    } else {
        out += json(v.text).dump();
    }
}

}  // namespace

std::string write_case(const ExplanationCase& c) {
    auto q = [](const std::string& s) { return json(s).dump(); };
    std::string out = "{\n";
    out += "  \"dataset_id\": " + q(c.dataset_id) + ",\n";
    out += "  \"predicted_outcome\": ";
    out += c.predicted_outcome == PredictedOutcome::Desired ? "\"desired\"" : "\"undesired\"";
    out += ",\n  \"outcomes\": {\n";
    out += "    \"desired\": " + q(c.outcomes.desired) + ",\n";
    out += "    \"undesired\": " + q(c.outcomes.undesired) + ",\n";
    out += "    \"desired_state_phrase\": " + q(c.outcomes.desired_state_phrase) + ",\n";
    out += "    \"undesired_state_phrase\": " + q(c.outcomes.undesired_state_phrase) + "\n";
    out += "  },\n  \"features\": [\n";
    for (std::size_t i = 0; i < c.features.size(); ++i) {
        const FeatureRecord& f = c.features[i];
        out += "    {\"name\": " + q(f.name);
        if (f.display_name) out += ", \"display_name\": " + q(*f.display_name);
        out += ", \"kind\": \"" + std::string(to_string(f.kind)) + "\"";
        if (f.unit) out += ", \"unit\": " + q(*f.unit);
        out += ", \"query_value\": ";
        append_value(out, f.query_value);
        out += ", \"cf_value\": ";
        append_value(out, f.cf_value);
        out += ", \"attribution\": " + json(f.attribution).dump() + "}";
        out += i + 1 < c.features.size() ? ",\n" : "\n";
    }
    out += "  ]";
    if (!c.category_overrides.empty()) {
        out += ",\n  \"category_overrides\": " + json(c.category_overrides).dump();
    }
    if (c.force_overrides) out += ",\n  \"force_overrides\": true";
    out += "\n}\n";
    return out;
}

Direction direction_of(const FeatureRecord& record) {
    if (record.kind == ValueKind::Categorical) {
        return record.query_value.text == record.cf_value.text ? Direction::None : Direction::Modify;
    }
    auto order = compare_decimal(record.cf_value.text, record.query_value.text);
    if (order > 0) return Direction::Increase;
    if (order < 0) return Direction::Decrease;
    return Direction::None;
}

std::vector<FeatureChange> extract_changes(const ExplanationCase& c) {
    std::vector<FeatureChange> out;
    out.reserve(c.features.size());
    for (std::size_t i = 0; i < c.features.size(); ++i) {
        Direction d = direction_of(c.features[i]);
        out.push_back({&c.features[i], i, d, d != Direction::None});
    }
    return out;
}

std::size_t count_changed(const std::vector<FeatureChange>& changes) {
    return static_cast<std::size_t>(
        std::count_if(changes.begin(), changes.end(), [](const FeatureChange& ch) { return ch.changed; }));
}

}  // namespace recourse
