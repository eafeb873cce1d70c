#include "recourse/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "recourse/error.hpp"
#include "recourse/exact_json.hpp"
#include "recourse/prng.hpp"

namespace recourse {

Lexicon Lexicon::defaults() {
    Lexicon lx;
    lx.verb = {"take", "initiate", "undertake", "pursue", "negotiate"};
    lx.object = {"steps", "measures", "actions", ""};
    lx.action_pos = {"increase", "improve", "raise"};
    lx.action_neg = {"decrease", "reduce"};
    lx.action_modify = {"modify", "change"};
    lx.comparative_pos = {"increase", "higher", "better"};
    lx.comparative_neg = {"decrease", "lower", "worse"};
    lx.possessive = {"Your"};
    lx.connectives = {"Furthermore", "In addition", "Moreover"};
    return lx;
}

const std::vector<std::string_view>& Lexicon::keys() {
    static const std::vector<std::string_view> k = {
        "verb",           "object",          "action_pos", "action_neg",  "action_modify",
        "comparative_pos", "comparative_neg", "possessive", "connectives"};
    return k;
}

const LexemeSet& Lexicon::set(std::string_view key) const {
    return const_cast<Lexicon&>(*this).set(key);
}

LexemeSet& Lexicon::set(std::string_view key) {
    if (key == "verb") return verb;
    if (key == "object") return object;
    if (key == "action_pos") return action_pos;
    if (key == "action_neg") return action_neg;
    if (key == "action_modify") return action_modify;
    if (key == "comparative_pos") return comparative_pos;
    if (key == "comparative_neg") return comparative_neg;
    if (key == "possessive") return possessive;
    if (key == "connectives") return connectives;
    throw Error(ErrorCode::SchemaViolation, "lexicon: unknown set '" + std::string(key) + "'");
}

void Lexicon::validate() const {
    for (auto key : keys()) {
        const LexemeSet& s = set(key);
        if (s.empty()) {
            throw Error(ErrorCode::SchemaViolation, "lexicon: set '" + std::string(key) + "' is empty");
        }
        for (const auto& lexeme : s) {
            auto bad = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
            if (std::any_of(lexeme.begin(), lexeme.end(), bad)) {
                throw Error(ErrorCode::SchemaViolation,
                            "lexicon: lexeme '" + lexeme + "' in '" + std::string(key) + "' contains a digit");
            }
            if (!lexeme.empty() && (std::isspace(static_cast<unsigned char>(lexeme.front())) ||
                                    std::isspace(static_cast<unsigned char>(lexeme.back())))) {
                throw Error(ErrorCode::SchemaViolation,
                            "lexicon: lexeme '" + lexeme + "' has surrounding whitespace");
            }
        }
    }
    // Only OBJECT may contain the empty alternative; every other slot would
    // leave a hole in the sentence.
    for (auto key : keys()) {
        if (key == "object") continue;
        const LexemeSet& s = set(key);
        if (std::find(s.begin(), s.end(), std::string()) != s.end()) {
            throw Error(ErrorCode::SchemaViolation,
                        "lexicon: set '" + std::string(key) + "' contains an empty lexeme");
        }
    }
}

Lexicon load_lexicon(std::string_view raw, Lexicon base) {
    ExactJson doc = parse_exact_json(raw);
    if (!doc.duplicate_keys.empty()) {
        throw Error(ErrorCode::MalformedInput, "lexicon: duplicate key at " + doc.duplicate_keys.front());
    }
    if (!doc.root.is_object()) {
        throw Error(ErrorCode::SchemaViolation, "lexicon: document must be an object");
    }
    for (const auto& [key, value] : doc.root.items()) {
        LexemeSet& target = base.set(key);
        if (!value.is_array()) {
            throw Error(ErrorCode::SchemaViolation, "lexicon: '" + key + "' must be an array of strings");
        }
        LexemeSet replacement;
        for (const auto& item : value) {
            if (!item.is_string()) {
                throw Error(ErrorCode::SchemaViolation, "lexicon: '" + key + "' must be an array of strings");
            }
            replacement.push_back(item.get<std::string>());
        }
        target = std::move(replacement);
    }
    base.validate();
    return base;
}

const std::string& choose_synonym(const LexemeSet& set, std::uint64_t seed, std::size_t slot_index) {
    if (set.empty()) throw Error(ErrorCode::SchemaViolation, "choose_synonym: empty lexeme set");
    std::string joined;
    for (const auto& s : set) {
        joined += s;
        joined.push_back('\x1f');
    }
    const std::uint64_t offset = prng::draw(seed, prng::fnv1a(joined), 0) % set.size();
    return set[(offset + slot_index) % set.size()];
}

}  // namespace recourse
