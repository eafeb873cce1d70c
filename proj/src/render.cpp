#include <json.hpp>

#include "recourse/discourse.hpp"
#include "recourse/error.hpp"

namespace recourse {

using json = nlohmann::ordered_json;

namespace {

std::string factual_line(const BodyItem& item) {
    if (item.connective.empty()) return item.sentence.text + ".";
    return item.connective + ", " + decapitalise(item.sentence.text) + ".";
}

std::vector<std::string> body_lines(const Explanation& e) {
    std::vector<std::string> lines;
    const auto& body = e.body;
    switch (e.layout) {
        case Layout::Numbered: {
            std::size_t last_numbered = 0;
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (body[i].ordinal) last_numbered = i + 1;
            }
            for (std::size_t i = 0; i < body.size(); ++i) {
                const BodyItem& item = body[i];
                if (item.ordinal) {
                    lines.push_back(std::to_string(*item.ordinal) + "), " + item.sentence.text +
                                    (i + 1 == last_numbered ? "." : " and,"));
                } else {
                    lines.push_back(factual_line(item));
                }
            }
            break;
        }
        case Layout::Flat:
            for (std::size_t i = 0; i < body.size(); ++i) {
                lines.push_back(body[i].sentence.text + (i + 1 == body.size() ? "." : " and,"));
            }
            break;
        case Layout::Grouped:
            for (std::size_t i = 0; i < body.size(); ++i) {
                lines.push_back((i == 0 ? "" : "thereafter ") + body[i].sentence.text +
                                (i + 1 == body.size() ? "." : ","));
            }
            break;
    }
    return lines;
}

}  // namespace

std::string render_text(const Explanation& e) {
    std::string out;
    if (!e.prologue.empty()) out += e.prologue + "\n";
    for (const auto& line : body_lines(e)) out += line + "\n";
    if (!e.epilogue.empty()) out += e.epilogue + "\n";
    return out;
}

std::string render_markdown(const Explanation& e) {
    std::string out;
    if (!e.prologue.empty()) out += e.prologue + "\n\n";
    bool in_list = false;
    for (const BodyItem& item : e.body) {
        if (e.layout == Layout::Numbered && item.ordinal) {
            out += std::to_string(*item.ordinal) + ". " + item.sentence.text + "\n";
            in_list = true;
            continue;
        }
        if (e.layout != Layout::Numbered) {
            out += "- " + item.sentence.text + "\n";
            in_list = true;
            continue;
        }
        if (in_list) {
            out += "\n";
            in_list = false;
        }
        out += factual_line(item) + "\n\n";
    }
    if (in_list) out += "\n";
    if (!e.epilogue.empty()) out += e.epilogue + "\n";
    return out;
}

std::string render_json(const Explanation& e) {
    json doc;
    doc["style"] = std::string(to_string(e.metadata.style));
    doc["dataset_id"] = e.metadata.dataset_id;
    doc["prologue"] = e.prologue;
    json sentences = json::array();
    for (const BodyItem& item : e.body) {
        const RealisedSentence& s = item.sentence;
        json rec;
        rec["ordinal"] = item.ordinal ? json(*item.ordinal) : json(nullptr);
        rec["connective"] = item.connective;
        rec["feature"] = s.feature_name;
        rec["features"] = s.feature_names;
        rec["category"] = std::string(to_string(s.category));
        rec["template"] = std::string(to_string(s.template_id));
        rec["direction"] = std::string(to_string(s.direction));
        rec["rank_weight"] = s.rank_weight;
        rec["text"] = s.text;
        sentences.push_back(std::move(rec));
    }
    doc["sentences"] = std::move(sentences);
    doc["epilogue"] = e.epilogue;
    doc["text"] = render_text(e);

    const ExplanationMetadata& m = e.metadata;
    json meta;
    meta["seed"] = m.seed;
    meta["variant_policy"] = std::string(to_string(m.variant));
    meta["immutable_order"] =
        m.immutable_order == ImmutableOrder::SensitiveFirst ? "sensitive_first" : "non_sensitive_first";
    meta["actionable_count"] = m.actionable_count;
    meta["prologue_count"] = m.prologue_count ? json(*m.prologue_count) : json(nullptr);
    meta["sentence_counts"] = {{"mutable_directly", m.sentence_counts.md},
                               {"mutable_indirectly", m.sentence_counts.mi},
                               {"immutable_sensitive", m.sentence_counts.is_},
                               {"immutable_non_sensitive", m.sentence_counts.ins}};
    json overrides = json::array();
    for (const auto& o : m.overrides) {
        overrides.push_back({{"feature", o.feature},
                             {"from", o.from ? json(std::string(to_string(*o.from))) : json(nullptr)},
                             {"to", std::string(to_string(o.to))},
                             {"forced", o.forced}});
    }
    meta["overrides"] = std::move(overrides);
    meta["warnings"] = m.warnings;
    doc["metadata"] = std::move(meta);
    return doc.dump(2) + "\n";
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "text") return OutputFormat::Text;
    if (text == "markdown") return OutputFormat::Markdown;
    if (text == "json") return OutputFormat::Json;
    throw Error(ErrorCode::SchemaViolation, "unknown output format '" + std::string(text) + "'");
}

std::string render(const Explanation& e, OutputFormat format) {
    switch (format) {
        case OutputFormat::Text: return render_text(e);
        case OutputFormat::Markdown: return render_markdown(e);
        case OutputFormat::Json: return render_json(e);
    }
    return render_text(e);
}

}  // namespace recourse
