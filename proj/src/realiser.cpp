#include "recourse/realiser.hpp"

#include <algorithm>

#include "recourse/decimal.hpp"
#include "recourse/error.hpp"

namespace recourse {

std::string format_value(const FeatureRecord& record, ValueSide which) {
    std::string out = which == ValueSide::Query ? record.query_value.text : record.cf_value.text;
    if (record.unit && !record.unit->empty()) out += " " + *record.unit;
    return out;
}

LexemeSet grammatical_comparatives(const Lexicon& lexicon) {
    LexemeSet out;
    auto is_action = [&](const std::string& w) {
        for (const LexemeSet* s : {&lexicon.action_pos, &lexicon.action_neg, &lexicon.action_modify}) {
            if (std::find(s->begin(), s->end(), w) != s->end()) return true;
        }
        return false;
    };
    for (const auto& w : lexicon.comparative_pos) {
        if (!is_action(w)) out.push_back(w);
    }
    return out.empty() ? lexicon.comparative_pos : out;
}

RealisedSentence realise(const PlannedSentence& plan, const Lexicon& lexicon,
                         const OutcomeLabels& outcomes, std::uint64_t seed, std::size_t slot_index) {
    const LexemeSet comparatives = grammatical_comparatives(lexicon);

    auto lookup = [&](std::string_view name) -> std::string {
        for (const auto& [slot, bound] : plan.slots) {
            if (slot_name(slot) != name) continue;
            switch (slot) {
                case Slot::QueryValue: return format_value(plan.feature, ValueSide::Query);
                case Slot::CfValue: return format_value(plan.feature, ValueSide::Counterfactual);
                case Slot::Feature: return bound;
                case Slot::DesiredOutcome: return outcomes.desired_state_phrase;
                case Slot::Outcome: return outcomes.undesired_state_phrase;
                case Slot::Comparative: return choose_synonym(comparatives, seed, slot_index);
                case Slot::Verb:
                case Slot::Object:
                case Slot::Action:
                case Slot::Possessive: return choose_synonym(lexicon.set(bound), seed, slot_index);
            }
        }
        throw Error(ErrorCode::SchemaViolation,
                    "plan for '" + plan.feature.name + "' leaves slot {" + std::string(name) + "} unbound");
    };

    RealisedSentence out;
    out.text = fill_skeleton(template_text(plan.template_id), lookup);
    out.feature_name = plan.feature.name;
    out.feature_names = {plan.feature.name};
    out.input_index = plan.feature_index;
    out.category = plan.category;
    out.template_id = plan.template_id;
    out.direction = plan.direction;
    out.rank_weight = plan.rank_weight;
    for (auto& token : extract_number_tokens(out.text)) out.numeric_tokens.insert(std::move(token));
    return out;
}

std::string realise_prologue(const TaxonomyConfig& taxonomy, std::size_t actionable_count) {
    auto lookup = [&](std::string_view name) -> std::string {
        if (name == "COUNT") return std::to_string(actionable_count);
        if (name == "GOAL") return taxonomy.goal_phrase;
        return "{" + std::string(name) + "}";
    };
    return fill_skeleton(taxonomy.prologue_template, lookup);
}

std::string realise_epilogue(const TaxonomyConfig& taxonomy) { return taxonomy.epilogue; }

}  // namespace recourse
