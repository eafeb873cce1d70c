#pragma once

#include <cstdint>

#include "recourse/case_model.hpp"
#include "recourse/discourse.hpp"
#include "recourse/lexicon.hpp"
#include "recourse/taxonomy.hpp"

namespace recourse {

/// Baselines ignore taxonomy assignments. When `framing` is set its prologue
/// and epilogue are used, with {COUNT} equal to the number of changed
/// features.
struct BaselineOptions {
    const TaxonomyConfig* framing = nullptr;
    /// Template variant for Base-XAI. B-XAI and GB-XAI are always concise.
    VariantPolicy::Mode variant = VariantPolicy::Mode::AlwaysConcise;
};

/// Flat list of actions, one per changed feature, by descending |attribution|.
Explanation generate_bxai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                          const BaselineOptions& options = {});

/// Actions grouped by direction; one conjoined sentence per group. Groups are
/// ordered by their strongest member.
Explanation generate_gbxai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                           const BaselineOptions& options = {});

/// T-XAI layout with every changed feature treated as directly actionable.
Explanation generate_basexai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                             const BaselineOptions& options = {});

/// "a", "a & b", "a, b & c".
std::string conjoin(const std::vector<std::string>& items);

}  // namespace recourse
