#pragma once

#include <compare>
#include <string_view>

namespace recourse {

/// True when `text` is a JSON number literal:
/// -?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?
bool is_decimal_literal(std::string_view text);

/// Exact ordering of two decimal literals by value. "94.0" and "94" compare
/// equal; no binary floating point is involved, so 0.1000000000000000001 and
/// 0.1 are distinct. Both arguments must satisfy is_decimal_literal.
std::strong_ordering compare_decimal(std::string_view a, std::string_view b);

}  // namespace recourse

#include <string>
#include <vector>

namespace recourse {

/// Every maximal number token in `text`, in order of appearance. A token
/// starts at a digit (or a '-' directly before a digit) that is not preceded
/// by a letter, digit, underscore or '.', and spans the longest decimal
/// literal prefix from there. "F1" and "x2" yield nothing; "94.0." yields
/// "94.0"; "-3e2" yields "-3e2"; "12K" yields "12".
std::vector<std::string> extract_number_tokens(std::string_view text);

}  // namespace recourse
