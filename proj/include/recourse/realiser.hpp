#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "recourse/case_model.hpp"
#include "recourse/lexicon.hpp"
#include "recourse/planner.hpp"
#include "recourse/taxonomy.hpp"

namespace recourse {

struct RealisedSentence {
    std::string text;
    std::string feature_name;
    /// Every feature the sentence covers; one entry except for grouped
    /// GB-XAI sentences.
    std::vector<std::string> feature_names;
    std::size_t input_index = 0;
    Category category = Category::MutableDirectly;
    TemplateId template_id = TemplateId::MdConcise;
    Direction direction = Direction::None;
    double rank_weight = 0.0;
    std::set<std::string> numeric_tokens;
};

enum class ValueSide { Query, Counterfactual };

/// Exact case text, followed by " <unit>" when the feature has a unit.
std::string format_value(const FeatureRecord& record, ValueSide which);

/// Comparatives usable before "chance": comparative_pos minus any entry that
/// is also an ACTION verb ("increase"). Falls back to the full set if the
/// filter would leave nothing.
LexemeSet grammatical_comparatives(const Lexicon& lexicon);

/// Fills the plan's template. Lexical slots are drawn with
/// choose_synonym(set, seed, slot_index); I.NS. comparatives always come from
/// comparative_pos.
RealisedSentence realise(const PlannedSentence& plan, const Lexicon& lexicon,
                         const OutcomeLabels& outcomes, std::uint64_t seed,
                         std::size_t slot_index = 0);

std::string realise_prologue(const TaxonomyConfig& taxonomy, std::size_t actionable_count);
std::string realise_epilogue(const TaxonomyConfig& taxonomy);

/// Replaces "{NAME}" placeholders using `lookup`; a placeholder that resolves
/// to an empty string is removed together with one adjoining space.
template <typename Lookup>
std::string fill_skeleton(std::string_view skeleton, Lookup&& lookup);

}  // namespace recourse

#include "recourse/detail/fill_skeleton.hpp"
