#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace recourse {

using LexemeSet = std::vector<std::string>;

/// Synonym sets for the lexical template slots.
struct Lexicon {
    LexemeSet verb;
    LexemeSet object;
    LexemeSet action_pos;
    LexemeSet action_neg;
    LexemeSet action_modify;
    LexemeSet comparative_pos;
    LexemeSet comparative_neg;
    LexemeSet possessive;
    LexemeSet connectives;

    /// Built-in sets. OBJECT keeps its empty alternative, which realises as
    /// "take to reduce ..." with the gap collapsed.
    static Lexicon defaults();

    /// Throws Error(SchemaViolation) if a set is empty, a lexeme has
    /// surrounding whitespace, or a lexeme contains a digit (lexemes must never
    /// introduce numbers into the text).
    void validate() const;

    /// Lookup by file key ("verb", "action_pos", ...). Throws SchemaViolation
    /// for unknown keys.
    const LexemeSet& set(std::string_view key) const;
    LexemeSet& set(std::string_view key);

    static const std::vector<std::string_view>& keys();
};

/// Starts from `base` and replaces every set named in the override document.
Lexicon load_lexicon(std::string_view raw, Lexicon base = Lexicon::defaults());

/// Deterministic pick from a non-empty set. The set is rotated by an offset
/// derived from (seed, set contents), then indexed by slot_index, so
/// consecutive slot indices never repeat a lexeme when the set has more than
/// one entry.
const std::string& choose_synonym(const LexemeSet& set, std::uint64_t seed,
                                  std::size_t slot_index);

}  // namespace recourse
