#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/case_model.hpp"
#include "recourse/taxonomy.hpp"

namespace recourse {

enum class TemplateId {
    MdFull,
    MdConcise,
    MiFull,
    MiConcise,
    InsComparative,
    IsAttributive,
    /// GB-XAI aggregate: one action over several features of one direction.
    GroupedAction,
};

enum class Slot {
    Verb,
    Object,
    Action,
    Feature,
    QueryValue,
    CfValue,
    Comparative,
    DesiredOutcome,
    Outcome,
    Possessive,
};

std::string_view to_string(TemplateId id);
std::string_view slot_name(Slot slot);

/// Template skeleton with "{SLOT}" placeholders, e.g.
/// "{ACTION} {FEATURE} to {CF_VALUE}".
std::string_view template_text(TemplateId id);

/// Slots the skeleton references, in order of appearance.
std::vector<Slot> template_slots(TemplateId id);

bool is_lexical(Slot slot);

struct VariantPolicy {
    enum class Mode { AlwaysFull, AlwaysConcise, SeededMix };
    Mode mode = Mode::SeededMix;
    std::uint64_t seed = 0;

    static VariantPolicy always_full() { return {Mode::AlwaysFull, 0}; }
    static VariantPolicy always_concise() { return {Mode::AlwaysConcise, 0}; }
    static VariantPolicy seeded_mix(std::uint64_t seed) { return {Mode::SeededMix, seed}; }
};

std::string_view to_string(VariantPolicy::Mode mode);
/// Accepts "full", "concise", "mix" (and the long forms "always_full",
/// "always_concise", "seeded_mix"). Throws Error(SchemaViolation).
VariantPolicy::Mode parse_variant_mode(std::string_view text);

/// A template instance with bound slots. Lexical slots hold the name of the
/// lexicon set they draw from ("action_pos", "verb", ...); value slots hold
/// the raw case text.
struct PlannedSentence {
    TemplateId template_id = TemplateId::MdConcise;
    FeatureRecord feature;
    std::size_t feature_index = 0;
    Category category = Category::MutableDirectly;
    Direction direction = Direction::None;
    std::map<Slot, std::string> slots;
    double rank_weight = 0.0;
};

TemplateId select_template_variant(Category category, const VariantPolicy& policy,
                                   std::size_t feature_index, bool has_query_value);

/// Lexicon set name carrying the ACTION polarity for a direction.
std::string_view action_set_for(Direction direction);

/// Builds the plan for one changed feature rendered under `category`.
/// Categorical mutable changes take the concise shape unless the policy is
/// AlwaysFull.
PlannedSentence plan_feature(const FeatureChange& change, Category category,
                             const OutcomeLabels& outcomes, const VariantPolicy& policy);

/// One plan per changed feature, in case order. Unchanged features produce
/// nothing. Throws Error(NoChanges) when nothing changed, and propagates
/// Unassigned / OverrideNotPermitted from category resolution.
std::vector<PlannedSentence> plan_sentences(const ExplanationCase& c,
                                            const std::vector<FeatureChange>& changes,
                                            const TaxonomyConfig& taxonomy,
                                            const VariantPolicy& policy);

/// Same, with categories already resolved.
std::vector<PlannedSentence> plan_sentences(const ExplanationCase& c,
                                            const std::vector<FeatureChange>& changes,
                                            const CategoryResolution& resolution,
                                            const VariantPolicy& policy);

}  // namespace recourse
