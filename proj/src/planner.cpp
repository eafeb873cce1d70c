#include "recourse/planner.hpp"

#include <algorithm>
#include <cmath>

#include "recourse/error.hpp"
#include "recourse/prng.hpp"

namespace recourse {

std::string_view to_string(TemplateId id) {
    switch (id) {
        case TemplateId::MdFull: return "MD_Full";
        case TemplateId::MdConcise: return "MD_Concise";
        case TemplateId::MiFull: return "MI_Full";
        case TemplateId::MiConcise: return "MI_Concise";
        case TemplateId::InsComparative: return "INS_Comparative";
        case TemplateId::IsAttributive: return "IS_Attributive";
        case TemplateId::GroupedAction: return "Grouped_Action";
    }
    return "";
}

std::string_view slot_name(Slot slot) {
    switch (slot) {
        case Slot::Verb: return "VERB";
        case Slot::Object: return "OBJECT";
        case Slot::Action: return "ACTION";
        case Slot::Feature: return "FEATURE";
        case Slot::QueryValue: return "QUERY_VALUE";
        case Slot::CfValue: return "CF_VALUE";
        case Slot::Comparative: return "COMPARATIVE";
        case Slot::DesiredOutcome: return "DESIRED_OUTCOME";
        case Slot::Outcome: return "OUTCOME";
        case Slot::Possessive: return "POSSESSIVE";
    }
    return "";
}

std::string_view template_text(TemplateId id) {
    switch (id) {
        case TemplateId::MdFull: return "{ACTION} {FEATURE} from {QUERY_VALUE} to {CF_VALUE}";
        case TemplateId::MdConcise: return "{ACTION} {FEATURE} to {CF_VALUE}";
        case TemplateId::MiFull:
            return "{VERB} {OBJECT} to {ACTION} {FEATURE} from {QUERY_VALUE} to {CF_VALUE}";
        case TemplateId::MiConcise: return "{VERB} {OBJECT} to {ACTION} {FEATURE} to {CF_VALUE}";
        case TemplateId::InsComparative:
            return "Having a value of {CF_VALUE} for {FEATURE} would provide a {COMPARATIVE} chance "
                   "of {DESIRED_OUTCOME} compared to a value of {QUERY_VALUE}";
        case TemplateId::IsAttributive: return "{POSSESSIVE} {FEATURE} has contributed to {OUTCOME}";
        case TemplateId::GroupedAction: return "{ACTION} {FEATURE} to {CF_VALUE}";
    }
    return "";
}

std::vector<Slot> template_slots(TemplateId id) {
    static constexpr Slot all[] = {Slot::Verb,        Slot::Object,         Slot::Action,
                                   Slot::Feature,     Slot::QueryValue,     Slot::CfValue,
                                   Slot::Comparative, Slot::DesiredOutcome, Slot::Outcome,
                                   Slot::Possessive};
    std::string_view text = template_text(id);
    std::vector<std::pair<std::size_t, Slot>> found;
    for (Slot s : all) {
        std::string placeholder = "{" + std::string(slot_name(s)) + "}";
        if (auto pos = text.find(placeholder); pos != std::string_view::npos) found.emplace_back(pos, s);
    }
    std::sort(found.begin(), found.end());
    std::vector<Slot> out;
    for (const auto& [pos, s] : found) out.push_back(s);
    return out;
}

bool is_lexical(Slot slot) {
    return slot == Slot::Verb || slot == Slot::Object || slot == Slot::Action ||
           slot == Slot::Comparative || slot == Slot::Possessive;
}

std::string_view to_string(VariantPolicy::Mode mode) {
    switch (mode) {
        case VariantPolicy::Mode::AlwaysFull: return "always_full";
        case VariantPolicy::Mode::AlwaysConcise: return "always_concise";
        case VariantPolicy::Mode::SeededMix: return "seeded_mix";
    }
    return "";
}

VariantPolicy::Mode parse_variant_mode(std::string_view text) {
    if (text == "full" || text == "always_full") return VariantPolicy::Mode::AlwaysFull;
    if (text == "concise" || text == "always_concise") return VariantPolicy::Mode::AlwaysConcise;
    if (text == "mix" || text == "seeded_mix") return VariantPolicy::Mode::SeededMix;
    throw Error(ErrorCode::SchemaViolation, "unknown variant policy '" + std::string(text) + "'");
}

TemplateId select_template_variant(Category category, const VariantPolicy& policy,
                                   std::size_t feature_index, bool has_query_value) {
    if (category == Category::ImmutableSensitive) return TemplateId::IsAttributive;
    if (category == Category::ImmutableNonSensitive) return TemplateId::InsComparative;

    bool full = false;
    switch (policy.mode) {
        case VariantPolicy::Mode::AlwaysFull: full = true; break;
        case VariantPolicy::Mode::AlwaysConcise: full = false; break;
        case VariantPolicy::Mode::SeededMix:
            full = (prng::draw(policy.seed, prng::fnv1a("template-variant"), feature_index) >> 32) & 1U;
            break;
    }
    full = full && has_query_value;
    if (category == Category::MutableDirectly) return full ? TemplateId::MdFull : TemplateId::MdConcise;
    return full ? TemplateId::MiFull : TemplateId::MiConcise;
}

std::string_view action_set_for(Direction direction) {
    switch (direction) {
        case Direction::Increase: return "action_pos";
        case Direction::Decrease: return "action_neg";
        case Direction::Modify: return "action_modify";
        case Direction::None: break;
    }
    throw Error(ErrorCode::SchemaViolation, "no action for an unchanged feature");
}

PlannedSentence plan_feature(const FeatureChange& change, Category category,
                             const OutcomeLabels& outcomes, const VariantPolicy& policy) {
    const FeatureRecord& f = *change.record;
    PlannedSentence plan;
    plan.feature = f;
    plan.feature_index = change.index;
    plan.category = category;
    plan.direction = change.direction;
    plan.rank_weight = std::abs(f.attribution);

    VariantPolicy effective = policy;
    if (is_mutable(category) && f.kind == ValueKind::Categorical &&
        policy.mode != VariantPolicy::Mode::AlwaysFull) {
        effective = VariantPolicy::always_concise();
    }
    plan.template_id = select_template_variant(category, effective, change.index, true);

    for (Slot s : template_slots(plan.template_id)) {
        switch (s) {
            case Slot::Verb: plan.slots[s] = "verb"; break;
            case Slot::Object: plan.slots[s] = "object"; break;
            case Slot::Action: plan.slots[s] = std::string(action_set_for(change.direction)); break;
            case Slot::Comparative: plan.slots[s] = "comparative_pos"; break;
            case Slot::Possessive: plan.slots[s] = "possessive"; break;
            case Slot::Feature: plan.slots[s] = f.label(); break;
            case Slot::QueryValue: plan.slots[s] = f.query_value.text; break;
            case Slot::CfValue: plan.slots[s] = f.cf_value.text; break;
            case Slot::DesiredOutcome: plan.slots[s] = outcomes.desired_state_phrase; break;
            case Slot::Outcome: plan.slots[s] = outcomes.undesired_state_phrase; break;
        }
    }
    return plan;
}

std::vector<PlannedSentence> plan_sentences(const ExplanationCase& c,
                                            const std::vector<FeatureChange>& changes,
                                            const CategoryResolution& resolution,
                                            const VariantPolicy& policy) {
    if (count_changed(changes) == 0) {
        throw Error(ErrorCode::NoChanges, "counterfactual is identical to the query");
    }
    std::vector<PlannedSentence> plans;
    for (const FeatureChange& change : changes) {
        if (!change.changed) continue;
        plans.push_back(plan_feature(change, resolution.categories.at(change.index), c.outcomes, policy));
    }
    return plans;
}

std::vector<PlannedSentence> plan_sentences(const ExplanationCase& c,
                                            const std::vector<FeatureChange>& changes,
                                            const TaxonomyConfig& taxonomy,
                                            const VariantPolicy& policy) {
    return plan_sentences(c, changes, resolve_categories(c, taxonomy), policy);
}

}  // namespace recourse
