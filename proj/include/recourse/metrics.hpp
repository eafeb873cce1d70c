#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/case_model.hpp"
#include "recourse/discourse.hpp"

namespace recourse::metrics {

struct TextStats {
    std::size_t words = 0;
    std::size_t sentences = 0;
    std::size_t syllables = 0;
};

/// Vowel-group heuristic over the letters of `word`: count maximal runs of
/// a/e/i/o/u/y, drop one for a trailing silent 'e' (an 'e' ending the word
/// after a consonant, when another group exists), minimum 1.
std::size_t count_syllables(std::string_view word);

/// Words are whitespace-separated tokens with at least one letter or digit.
/// A sentence ends at '.', '!' or '?' followed by whitespace or the end of
/// the text; trailing words without a terminator form one more sentence.
TextStats text_stats(std::string_view text);

/// Flesch reading ease, 206.835 - 1.015 (words/sentences) - 84.6
/// (syllables/words), unclamped. Throws Error(EmptyText).
double flesch_score(std::string_view text);

/// Lower-cased whitespace tokens with leading and trailing punctuation removed.
std::vector<std::string> normalised_tokens(std::string_view text);

/// Jaccard similarity of the two token multisets: sum of min counts over sum
/// of max counts. Throws Error(EmptyText) if either side has no tokens.
double token_similarity(std::string_view a, std::string_view b);

struct RankCorrelation {
    double rho = 0.0;
    std::size_t n = 0;
};

/// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Pearson correlation of average ranks. Throws Error(LengthMismatch) or
/// Error(DegenerateInput) for n < 2 or a constant sequence.
RankCorrelation spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

struct FidelityViolation {
    std::string token;
    std::string line;
};

struct FidelityReport {
    std::vector<FidelityViolation> violations;
    std::size_t tokens_checked = 0;

    bool ok() const { return violations.empty(); }
};

/// Checks every number token in `text` against the case: it must occur in a
/// query or counterfactual value (with unit), equal `prologue_count`, or be
/// an ordinal label 1..ordinal_count.
FidelityReport audit_text(std::string_view text, const ExplanationCase& c,
                          std::optional<std::size_t> prologue_count, std::size_t ordinal_count);

/// Audits the plain-text rendering of `e`.
FidelityReport numeric_fidelity_audit(const Explanation& e, const ExplanationCase& c);

}  // namespace recourse::metrics
