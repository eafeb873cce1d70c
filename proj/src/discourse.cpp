#include "recourse/discourse.hpp"

#include <algorithm>
#include <cctype>

#include "recourse/error.hpp"

namespace recourse {

std::string_view to_string(Style style) {
    switch (style) {
        case Style::TXai: return "t-xai";
        case Style::BXai: return "b-xai";
        case Style::GbXai: return "gb-xai";
        case Style::BaseXai: return "base-xai";
    }
    return "";
}

Style parse_style(std::string_view text) {
    for (Style s : {Style::TXai, Style::BXai, Style::GbXai, Style::BaseXai}) {
        if (to_string(s) == text) return s;
    }
    throw Error(ErrorCode::SchemaViolation, "unknown style '" + std::string(text) + "'");
}

int category_group(Category category, ImmutableOrder order) {
    if (is_mutable(category)) return 0;
    const bool sensitive = category == Category::ImmutableSensitive;
    if (order == ImmutableOrder::SensitiveFirst) return sensitive ? 1 : 2;
    return sensitive ? 2 : 1;
}

namespace {

template <typename T>
bool discourse_less(const T& a, const T& b, ImmutableOrder order) {
    const int ga = category_group(a.category, order);
    const int gb = category_group(b.category, order);
    if (ga != gb) return ga < gb;
    if (a.rank_weight != b.rank_weight) return a.rank_weight > b.rank_weight;
    return a.input_index < b.input_index;
}

struct PlanKey {
    Category category;
    double rank_weight;
    std::size_t input_index;
};

}  // namespace

std::vector<RealisedSentence> order_sentences(std::vector<RealisedSentence> sentences,
                                              ImmutableOrder order) {
    std::stable_sort(sentences.begin(), sentences.end(),
                     [order](const RealisedSentence& a, const RealisedSentence& b) {
                         return discourse_less(a, b, order);
                     });
    return sentences;
}

std::string decapitalise(std::string sentence) {
    if (sentence.size() >= 2 && std::isupper(static_cast<unsigned char>(sentence[0])) &&
        std::islower(static_cast<unsigned char>(sentence[1]))) {
        sentence[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(sentence[0])));
    }
    return sentence;
}

Explanation assemble_explanation(const ExplanationCase& c, const TaxonomyConfig& taxonomy,
                                 const Lexicon& lexicon, const StyleOptions& options,
                                 std::uint64_t seed) {
    const auto changes = extract_changes(c);
    const auto resolution = resolve_categories(c, taxonomy, options.force_overrides);
    const VariantPolicy policy{options.variant, seed};
    auto plans = plan_sentences(c, changes, resolution, policy);

    // Realise in final order so slot indices follow the reading order and
    // adjacent sentences rotate through their synonym sets.
    std::stable_sort(plans.begin(), plans.end(), [&](const PlannedSentence& a, const PlannedSentence& b) {
        return discourse_less(PlanKey{a.category, a.rank_weight, a.feature_index},
                              PlanKey{b.category, b.rank_weight, b.feature_index},
                              options.immutable_order);
    });
    std::vector<RealisedSentence> sentences;
    sentences.reserve(plans.size());
    for (std::size_t i = 0; i < plans.size(); ++i) {
        sentences.push_back(realise(plans[i], lexicon, c.outcomes, seed, i));
    }
    sentences = order_sentences(std::move(sentences), options.immutable_order);

    Explanation e;
    e.layout = Layout::Numbered;
    std::size_t ordinal = 0;
    std::size_t factual = 0;
    for (auto& s : sentences) {
        BodyItem item;
        if (is_mutable(s.category)) {
            item.ordinal = ++ordinal;
        } else {
            if (ordinal > 0 || factual > 0) {
                item.connective = choose_synonym(lexicon.connectives, seed, factual);
            }
            ++factual;
        }
        ++e.metadata.sentence_counts[s.category];
        item.sentence = std::move(s);
        e.body.push_back(std::move(item));
    }

    if (ordinal > 0) {
        e.prologue = realise_prologue(taxonomy, ordinal);
        e.metadata.prologue_count = ordinal;
    }
    e.epilogue = realise_epilogue(taxonomy);

    e.metadata.style = Style::TXai;
    e.metadata.dataset_id = c.dataset_id;
    e.metadata.seed = seed;
    e.metadata.variant = options.variant;
    e.metadata.immutable_order = options.immutable_order;
    e.metadata.overrides = resolution.overrides;
    e.metadata.warnings = c.warnings;
    if (taxonomy.dataset_id != c.dataset_id) {
        e.metadata.warnings.push_back("case dataset '" + c.dataset_id + "' explained with taxonomy '" +
                                      taxonomy.dataset_id + "'");
    }
    e.metadata.actionable_count = ordinal;
    return e;
}

}  // namespace recourse
