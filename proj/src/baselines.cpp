#include "recourse/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "recourse/decimal.hpp"
#include "recourse/error.hpp"

namespace recourse {

namespace {

std::vector<FeatureChange> changed_by_weight(const ExplanationCase& c) {
    std::vector<FeatureChange> changed;
    for (const auto& ch : extract_changes(c)) {
        if (ch.changed) changed.push_back(ch);
    }
    if (changed.empty()) throw Error(ErrorCode::NoChanges, "counterfactual is identical to the query");
    std::stable_sort(changed.begin(), changed.end(), [](const FeatureChange& a, const FeatureChange& b) {
        const double wa = std::abs(a.record->attribution);
        const double wb = std::abs(b.record->attribution);
        if (wa != wb) return wa > wb;
        return a.index < b.index;
    });
    return changed;
}

Explanation framed(const ExplanationCase& c, Style style, Layout layout, std::uint64_t seed,
                   const BaselineOptions& options, std::size_t changed_count) {
    Explanation e;
    e.layout = layout;
    if (options.framing) {
        e.prologue = realise_prologue(*options.framing, changed_count);
        e.epilogue = realise_epilogue(*options.framing);
        e.metadata.prologue_count = changed_count;
    }
    e.metadata.style = style;
    e.metadata.dataset_id = c.dataset_id;
    e.metadata.seed = seed;
    e.metadata.warnings = c.warnings;
    return e;
}

Explanation actions_per_feature(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                                const BaselineOptions& options, Style style) {
    const auto changed = changed_by_weight(c);
    const bool numbered = style == Style::BaseXai;
    const VariantPolicy policy{numbered ? options.variant : VariantPolicy::Mode::AlwaysConcise, seed};

    Explanation e = framed(c, style, numbered ? Layout::Numbered : Layout::Flat, seed, options,
                           changed.size());
    e.metadata.variant = policy.mode;
    for (std::size_t i = 0; i < changed.size(); ++i) {
        PlannedSentence plan = plan_feature(changed[i], Category::MutableDirectly, c.outcomes, policy);
        BodyItem item;
        item.sentence = realise(plan, lexicon, c.outcomes, seed, i);
        if (numbered) item.ordinal = i + 1;
        ++e.metadata.sentence_counts[Category::MutableDirectly];
        e.body.push_back(std::move(item));
    }
    e.metadata.actionable_count = numbered ? changed.size() : 0;
    return e;
}

}  // namespace

std::string conjoin(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += i + 1 == items.size() ? " & " : ", ";
        out += items[i];
    }
    return out;
}

Explanation generate_bxai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                          const BaselineOptions& options) {
    return actions_per_feature(c, lexicon, seed, options, Style::BXai);
}

Explanation generate_basexai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                             const BaselineOptions& options) {
    return actions_per_feature(c, lexicon, seed, options, Style::BaseXai);
}

Explanation generate_gbxai(const ExplanationCase& c, const Lexicon& lexicon, std::uint64_t seed,
                           const BaselineOptions& options) {
    const auto changed = changed_by_weight(c);

    // Groups appear in the order their strongest member appears in the
    // weight-sorted list; members keep that order.
    std::vector<std::vector<FeatureChange>> groups;
    for (const FeatureChange& ch : changed) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
            return g.front().direction == ch.direction;
        });
        if (it == groups.end()) {
            groups.push_back({ch});
        } else {
            it->push_back(ch);
        }
    }

    Explanation e = framed(c, Style::GbXai, Layout::Grouped, seed, options, changed.size());
    e.metadata.variant = VariantPolicy::Mode::AlwaysConcise;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& members = groups[g];
        std::vector<std::string> labels;
        std::vector<std::string> values;
        RealisedSentence s;
        for (const FeatureChange& ch : members) {
            labels.push_back(ch.record->label());
            values.push_back(format_value(*ch.record, ValueSide::Counterfactual));
            s.feature_names.push_back(ch.record->name);
        }
        const Direction direction = members.front().direction;
        const std::string action =
            choose_synonym(lexicon.set(action_set_for(direction)), seed, g);
        s.text = fill_skeleton(template_text(TemplateId::GroupedAction), [&](std::string_view slot) {
            if (slot == "ACTION") return action;
            if (slot == "FEATURE") return conjoin(labels);
            return conjoin(values);
        });
        s.feature_name = members.front().record->name;
        s.input_index = members.front().index;
        s.category = Category::MutableDirectly;
        s.template_id = TemplateId::GroupedAction;
        s.direction = direction;
        s.rank_weight = std::abs(members.front().record->attribution);
        for (auto& token : extract_number_tokens(s.text)) s.numeric_tokens.insert(std::move(token));

        BodyItem item;
        item.sentence = std::move(s);
        ++e.metadata.sentence_counts[Category::MutableDirectly];
        e.body.push_back(std::move(item));
    }
    return e;
}

}  // namespace recourse
