#include "ljb/io/json_writer.hpp"

#include <cmath>
#include <cstdio>

#include "ljb/errors.hpp"

namespace ljb::io {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw ValidationError("format_double: non-finite value");
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x",
                                  static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void JsonWriter::before_item() {
    if (stack_.empty()) return;
    Frame& top = stack_.back();
    if (top.key_pending) {
        top.key_pending = false;
        return;
    }
    if (top.object) {
        throw ValidationError("JsonWriter: value in object without a key");
    }
    if (top.items > 0) out_ += ',';
    ++top.items;
}

JsonWriter& JsonWriter::begin_object() {
    before_item();
    out_ += '{';
    stack_.push_back({0, true, false});
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    if (stack_.empty() || !stack_.back().object) {
        throw ValidationError("JsonWriter: mismatched end_object");
    }
    stack_.pop_back();
    out_ += '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_item();
    out_ += '[';
    stack_.push_back({0, false, false});
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    if (stack_.empty() || stack_.back().object) {
        throw ValidationError("JsonWriter: mismatched end_array");
    }
    stack_.pop_back();
    out_ += ']';
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    if (stack_.empty() || !stack_.back().object) {
        throw ValidationError("JsonWriter: key outside an object");
    }
    Frame& top = stack_.back();
    if (top.key_pending) {
        throw ValidationError("JsonWriter: consecutive keys");
    }
    if (top.items > 0) out_ += ',';
    ++top.items;
    top.key_pending = true;
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    before_item();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::value(double v) {
    before_item();
    out_ += format_double(v);
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    before_item();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    before_item();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    before_item();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    before_item();
    out_ += v ? "true" : "false";
    return *this;
}

} // namespace ljb::io
