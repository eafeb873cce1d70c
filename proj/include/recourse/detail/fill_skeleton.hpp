#pragma once

#include <string>
#include <string_view>

namespace recourse {

template <typename Lookup>
std::string fill_skeleton(std::string_view skeleton, Lookup&& lookup) {
    std::string out;
    std::size_t i = 0;
    bool drop_space = false;
    while (i < skeleton.size()) {
        std::size_t close = skeleton[i] == '{' ? skeleton.find('}', i) : std::string_view::npos;
        if (close != std::string_view::npos) {
            std::string value = lookup(skeleton.substr(i + 1, close - i - 1));
            i = close + 1;
            if (value.empty()) {
                if (!out.empty() && out.back() == ' ') {
                    out.pop_back();
                } else {
                    drop_space = true;
                }
                continue;
            }
            out += value;
            continue;
        }
        if (drop_space && skeleton[i] == ' ') {
            drop_space = false;
            ++i;
            continue;
        }
        drop_space = false;
        out.push_back(skeleton[i++]);
    }
    return out;
}

}  // namespace recourse
