#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/case_model.hpp"
#include "recourse/lexicon.hpp"
#include "recourse/planner.hpp"
#include "recourse/realiser.hpp"
#include "recourse/taxonomy.hpp"

namespace recourse {

enum class Style { TXai, BXai, GbXai, BaseXai };

std::string_view to_string(Style style);
/// Accepts "t-xai", "b-xai", "gb-xai", "base-xai". Throws SchemaViolation.
Style parse_style(std::string_view text);

/// Order of the two factual groups that follow the numbered actions.
enum class ImmutableOrder { SensitiveFirst, NonSensitiveFirst };

/// How body items are joined when rendered.
enum class Layout {
    Numbered,  // "1), ... and," items followed by connective-led factual sentences
    Flat,      // B-XAI: one action per line joined with " and,"
    Grouped,   // GB-XAI: direction groups joined with ", thereafter"
};

struct BodyItem {
    RealisedSentence sentence;
    std::optional<std::size_t> ordinal;
    /// Discourse connective ("Furthermore", ...) or empty.
    std::string connective;
};

struct ExplanationMetadata {
    Style style = Style::TXai;
    std::string dataset_id;
    std::uint64_t seed = 0;
    VariantPolicy::Mode variant = VariantPolicy::Mode::SeededMix;
    ImmutableOrder immutable_order = ImmutableOrder::SensitiveFirst;
    /// Number of body sentences per category.
    CategoryCounts sentence_counts;
    std::vector<AppliedOverride> overrides;
    std::vector<std::string> warnings;
    /// Number of ordinal-labelled items.
    std::size_t actionable_count = 0;
    /// Value substituted for {COUNT} in the prologue, when there is one.
    std::optional<std::size_t> prologue_count;
};

struct Explanation {
    std::string prologue;
    std::vector<BodyItem> body;
    std::string epilogue;
    Layout layout = Layout::Numbered;
    ExplanationMetadata metadata;
};

struct StyleOptions {
    VariantPolicy::Mode variant = VariantPolicy::Mode::SeededMix;
    ImmutableOrder immutable_order = ImmutableOrder::SensitiveFirst;
    bool force_overrides = false;
};

/// 0 for mutable categories; 1 and 2 for the factual groups in the order
/// selected by `order`.
int category_group(Category category, ImmutableOrder order = ImmutableOrder::SensitiveFirst);

/// Stable sort by (category group, descending rank_weight, input_index).
std::vector<RealisedSentence> order_sentences(std::vector<RealisedSentence> sentences,
                                              ImmutableOrder order = ImmutableOrder::SensitiveFirst);

/// Full T-XAI pipeline: categories, sentence plans, realisation, ordering and
/// framing. Throws Error(Unassigned), Error(NoChanges) or
/// Error(OverrideNotPermitted).
Explanation assemble_explanation(const ExplanationCase& c, const TaxonomyConfig& taxonomy,
                                 const Lexicon& lexicon, const StyleOptions& options,
                                 std::uint64_t seed);

/// Lower-cases the first letter of a sentence that follows a connective,
/// leaving acronyms ("ID", "BMI") alone.
std::string decapitalise(std::string sentence);

// Serialisation.
std::string render_text(const Explanation& e);
std::string render_markdown(const Explanation& e);
std::string render_json(const Explanation& e);

enum class OutputFormat { Text, Markdown, Json };
OutputFormat parse_output_format(std::string_view text);
std::string render(const Explanation& e, OutputFormat format);

}  // namespace recourse
