#include "recourse/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace recourse::fixtures {

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [name, body] : detail::embedded()) out.emplace_back(name);
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view get(std::string_view name) {
    for (const auto& [n, body] : detail::embedded()) {
        if (n == name) return body;
    }
    throw std::out_of_range("no bundled fixture named '" + std::string(name) + "'");
}

}  // namespace recourse::fixtures
