#include "recourse/decimal.hpp"

#include <cctype>
#include <cstdint>
#include <string>

#include "recourse/error.hpp"

namespace recourse {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Value = (negative ? -1 : 1) * 0.digits * 10^exponent, digits without
// leading or trailing zeros. Zero has empty digits.
struct Normalised {
    bool negative = false;
    std::string digits;
    std::int64_t exponent = 0;
};

Normalised normalise(std::string_view text) {
    Normalised n;
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') {
        n.negative = true;
        ++i;
    }
    std::string mantissa;
    std::int64_t point = 0;
    bool seen_point = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        if (text[i] == '.') {
            seen_point = true;
            continue;
        }
        mantissa.push_back(text[i]);
        if (!seen_point) ++point;
    }
    std::int64_t exp10 = 0;
    if (i < text.size()) {
        ++i;
        bool exp_negative = false;
        if (text[i] == '+' || text[i] == '-') {
            exp_negative = text[i] == '-';
            ++i;
        }
        for (; i < text.size(); ++i) {
            // Saturate: literals with absurd exponents still order correctly
            // against anything a case file plausibly contains.
            if (exp10 < 1'000'000'000) exp10 = exp10 * 10 + (text[i] - '0');
        }
        if (exp_negative) exp10 = -exp10;
    }
    std::size_t lead = mantissa.find_first_not_of('0');
    if (lead == std::string::npos) {
        n.negative = false;
        return n;
    }
    std::size_t trail = mantissa.find_last_not_of('0');
    n.digits = mantissa.substr(lead, trail - lead + 1);
    n.exponent = point - static_cast<std::int64_t>(lead) + exp10;
    return n;
}

std::strong_ordering compare_magnitude(const Normalised& a, const Normalised& b) {
    if (a.digits.empty() || b.digits.empty()) {
        return !a.digits.empty() <=> !b.digits.empty();
    }
    if (a.exponent != b.exponent) return a.exponent <=> b.exponent;
    int c = a.digits.compare(b.digits);
    return c <=> 0;
}

}  // namespace

bool is_decimal_literal(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (i < n && text[i] == '-') ++i;
    if (i >= n || !is_digit(text[i])) return false;
    if (text[i] == '0') {
        ++i;
    } else {
        while (i < n && is_digit(text[i])) ++i;
    }
    if (i < n && text[i] == '.') {
        ++i;
        if (i >= n || !is_digit(text[i])) return false;
        while (i < n && is_digit(text[i])) ++i;
    }
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
        if (i >= n || !is_digit(text[i])) return false;
        while (i < n && is_digit(text[i])) ++i;
    }
    return i == n;
}

std::strong_ordering compare_decimal(std::string_view a, std::string_view b) {
    if (!is_decimal_literal(a) || !is_decimal_literal(b)) {
        throw Error(ErrorCode::SchemaViolation,
                    "not a decimal literal: '" + std::string(is_decimal_literal(a) ? b : a) + "'");
    }
    Normalised na = normalise(a);
    Normalised nb = normalise(b);
    if (na.negative != nb.negative) {
        return na.negative ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    auto magnitude = compare_magnitude(na, nb);
    if (na.negative) return 0 <=> magnitude;
    return magnitude;
}

}  // namespace recourse

namespace recourse {

namespace {

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.';
}

// Length of the longest decimal literal prefix of `text` (0 if none).
std::size_t literal_prefix(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (i < n && text[i] == '-') ++i;
    if (i >= n || !is_digit(text[i])) return 0;
    while (i < n && is_digit(text[i])) ++i;
    if (i + 1 < n && text[i] == '.' && is_digit(text[i + 1])) {
        i += 2;
        while (i < n && is_digit(text[i])) ++i;
    }
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && is_digit(text[j])) {
            while (j < n && is_digit(text[j])) ++j;
            i = j;
        }
    }
    return i;
}

}  // namespace

std::vector<std::string> extract_number_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const bool starts = is_digit(text[i]) ||
                            (text[i] == '-' && i + 1 < text.size() && is_digit(text[i + 1]));
        if (!starts || (i > 0 && word_char(text[i - 1]))) {
            ++i;
            continue;
        }
        std::size_t len = literal_prefix(text.substr(i));
        out.emplace_back(text.substr(i, len));
        i += len;
    }
    return out;
}

}  // namespace recourse
