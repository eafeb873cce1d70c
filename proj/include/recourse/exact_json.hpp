#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace recourse {

/// A parsed JSON document that remembers the literal text of every number.
/// Lookups use RFC 6901 pointers, e.g. "/features/3/cf_value".
struct ExactJson {
    nlohmann::json root;
    std::map<std::string, std::string> number_text;
    std::vector<std::string> duplicate_keys;

    std::optional<std::string> literal_at(const std::string& pointer) const;
};

/// Throws Error(MalformedInput) on syntax errors.
ExactJson parse_exact_json(std::string_view raw);

std::string pointer_escape(std::string_view key);

}  // namespace recourse
