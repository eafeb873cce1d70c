#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recourse::fixtures {

/// Names of the bundled fixture documents, sorted. Case files end in
/// "_case", taxonomies in "_taxonomy".
std::vector<std::string> names();

/// Raw document text. Throws std::out_of_range for unknown names.
std::string_view get(std::string_view name);

/// The three evaluation domains with full example cases.
inline constexpr std::string_view kEvaluationDomains[] = {"heart", "credit", "student"};

/// Taxonomy-only fixtures for the six datasets used to derive the taxonomy.
inline constexpr std::string_view kTrainingDomains[] = {
    "diabetes", "breast_cancer", "oulad", "student_uci", "loan_approval", "income"};

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded();
}

}  // namespace recourse::fixtures
