#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ljb::io {

// Formats a finite double with 17 significant digits, enough for the value
// to survive a parse round trip bit-exactly. Throws on NaN or infinity:
// emitted files must never carry non-finite numbers.
std::string format_double(double v);

std::string json_escape(const std::string& s);

// Minimal streaming JSON emitter with deterministic output: keys appear in
// the order they are written and numbers go through format_double. This is
// what keeps reports and scenario files byte-reproducible; a general
// serializer with its own float formatting would not guarantee that.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(bool v);

    const std::string& str() const { return out_; }

private:
    void before_item();

    std::string out_;
    // One frame per open container: item count so far, object/array flag,
    // and whether a key was just written (suppresses the comma).
    struct Frame {
        int items = 0;
        bool object = false;
        bool key_pending = false;
    };
    std::vector<Frame> stack_;
};

} // namespace ljb::io
