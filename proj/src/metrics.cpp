#include "recourse/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "recourse/decimal.hpp"
#include "recourse/error.hpp"
#include "recourse/realiser.hpp"

namespace recourse::metrics {

namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool has_alnum(std::string_view token) {
    return std::any_of(token.begin(), token.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

}  // namespace

std::size_t count_syllables(std::string_view word) {
    std::string letters;
    for (char c : word) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    std::size_t groups = 0;
    bool in_group = false;
    for (char c : letters) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    const std::size_t n = letters.size();
    if (groups > 1 && n >= 2 && letters[n - 1] == 'e' && !is_vowel(letters[n - 2])) --groups;
    return std::max<std::size_t>(groups, 1);
}

TextStats text_stats(std::string_view text) {
    TextStats stats;
    std::size_t words_in_sentence = 0;
    for (std::string_view token : split_whitespace(text)) {
        if (has_alnum(token)) {
            ++stats.words;
            ++words_in_sentence;
            stats.syllables += count_syllables(token);
        }
        // Whitespace-split tokens end either before whitespace or at the end of
        // the text, so a terminator in final position closes a sentence.
        if (is_terminator(token.back()) && words_in_sentence > 0) {
            ++stats.sentences;
            words_in_sentence = 0;
        }
    }
    if (words_in_sentence > 0) ++stats.sentences;
    return stats;
}

double flesch_score(std::string_view text) {
    TextStats s = text_stats(text);
    if (s.words == 0) throw Error(ErrorCode::EmptyText, "flesch_score: text has no words");
    const double w = static_cast<double>(s.words);
    return 206.835 - 1.015 * (w / static_cast<double>(s.sentences)) -
           84.6 * (static_cast<double>(s.syllables) / w);
}

std::vector<std::string> normalised_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (std::string_view token : split_whitespace(text)) {
        std::size_t b = 0;
        std::size_t e = token.size();
        while (b < e && std::ispunct(static_cast<unsigned char>(token[b]))) ++b;
        while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1]))) --e;
        if (b == e) continue;
        std::string t(token.substr(b, e - b));
        for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        out.push_back(std::move(t));
    }
    return out;
}

double token_similarity(std::string_view a, std::string_view b) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    auto ta = normalised_tokens(a);
    auto tb = normalised_tokens(b);
    if (ta.empty() || tb.empty()) throw Error(ErrorCode::EmptyText, "token_similarity: empty text");
    for (auto& t : ta) ++counts[t].first;
    for (auto& t : tb) ++counts[t].second;
    std::size_t inter = 0;
    std::size_t uni = 0;
    for (const auto& [token, c] : counts) {
        inter += std::min(c.first, c.second);
        uni += std::max(c.first, c.second);
    }
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double mean = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean;
        i = j + 1;
    }
    return ranks;
}

RankCorrelation spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch, "spearman_rho: sequences of length " +
                                                   std::to_string(x.size()) + " and " +
                                                   std::to_string(y.size()));
    }
    if (x.size() < 2) throw Error(ErrorCode::DegenerateInput, "spearman_rho: need at least 2 pairs");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mean = (n + 1.0) / 2.0;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mean;
        const double dy = ry[i] - mean;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorCode::DegenerateInput, "spearman_rho: constant sequence");
    }
    const double rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    return {rho, x.size()};
}

FidelityReport audit_text(std::string_view text, const ExplanationCase& c,
                          std::optional<std::size_t> prologue_count, std::size_t ordinal_count) {
    std::set<std::string> allowed;
    for (const auto& f : c.features) {
        for (ValueSide side : {ValueSide::Query, ValueSide::Counterfactual}) {
            for (auto& t : extract_number_tokens(format_value(f, side))) allowed.insert(std::move(t));
        }
    }
    if (prologue_count) allowed.insert(std::to_string(*prologue_count));
    for (std::size_t k = 1; k <= ordinal_count; ++k) allowed.insert(std::to_string(k));

    FidelityReport report;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        for (const auto& token : extract_number_tokens(line)) {
            ++report.tokens_checked;
            if (!allowed.count(token)) report.violations.push_back({token, line});
        }
    }
    return report;
}

FidelityReport numeric_fidelity_audit(const Explanation& e, const ExplanationCase& c) {
    std::size_t ordinals = 0;
    for (const auto& item : e.body) {
        if (item.ordinal) ordinals = std::max(ordinals, *item.ordinal);
    }
    return audit_text(render_text(e), c, e.metadata.prologue_count, ordinals);
}

}  // namespace recourse::metrics
