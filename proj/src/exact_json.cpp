#include "recourse/exact_json.hpp"

#include <cstdint>
#include <utility>

#include "recourse/error.hpp"

namespace recourse {

namespace {

using json = nlohmann::json;

class ExactDomBuilder : public nlohmann::json_sax<json> {
public:
    explicit ExactDomBuilder(ExactJson& out) : out_(out) {}

    bool null() override { return emit(nullptr); }
    bool boolean(bool v) override { return emit(v); }
    bool number_integer(number_integer_t v) override {
        out_.number_text[next_path()] = std::to_string(v);
        return emit(v);
    }
    bool number_unsigned(number_unsigned_t v) override {
        out_.number_text[next_path()] = std::to_string(v);
        return emit(v);
    }
    bool number_float(number_float_t v, const string_t& literal) override {
        out_.number_text[next_path()] = literal;
        return emit(v);
    }
    bool string(string_t& v) override { return emit(std::move(v)); }
    bool binary(binary_t&) override { return false; }

    bool start_object(std::size_t) override {
        std::string path = next_path();
        stack_.push_back(Frame{push(json::object()), {}, 0, std::move(path)});
        return true;
    }
    bool key(string_t& k) override {
        Frame& top = stack_.back();
        if (top.node->contains(k)) out_.duplicate_keys.push_back(top.path + "/" + pointer_escape(k));
        top.key = k;
        return true;
    }
    bool end_object() override {
        stack_.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        std::string path = next_path();
        stack_.push_back(Frame{push(json::array()), {}, 0, std::move(path)});
        return true;
    }
    bool end_array() override {
        stack_.pop_back();
        return true;
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw Error(ErrorCode::MalformedInput,
                    "JSON syntax error at byte " + std::to_string(position) + ": " + ex.what());
    }

private:
    struct Frame {
        json* node;
        std::string key;
        std::size_t index;
        std::string path;
    };

    std::string next_path() const {
        if (stack_.empty()) return "";
        const Frame& top = stack_.back();
        if (top.node->is_array()) return top.path + "/" + std::to_string(top.index);
        return top.path + "/" + pointer_escape(top.key);
    }

    json* push(json value) {
        if (stack_.empty()) {
            out_.root = std::move(value);
            return &out_.root;
        }
        Frame& top = stack_.back();
        if (top.node->is_array()) {
            top.node->push_back(std::move(value));
            ++top.index;
            return &top.node->back();
        }
        json& slot = (*top.node)[top.key];
        slot = std::move(value);
        return &slot;
    }

    template <typename T>
    bool emit(T&& value) {
        push(json(std::forward<T>(value)));
        return true;
    }

    ExactJson& out_;
    std::vector<Frame> stack_;
};

}  // namespace

std::optional<std::string> ExactJson::literal_at(const std::string& pointer) const {
    auto it = number_text.find(pointer);
    if (it == number_text.end()) return std::nullopt;
    return it->second;
}

std::string pointer_escape(std::string_view key) {
    std::string out;
    out.reserve(key.size());
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

ExactJson parse_exact_json(std::string_view raw) {
    ExactJson doc;
    ExactDomBuilder builder(doc);
    json::sax_parse(raw.begin(), raw.end(), &builder);
    return doc;
}

}  // namespace recourse
