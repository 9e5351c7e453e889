#include "hatlas/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace hatlas {

std::string format_double(double x) {
    if (!std::isfinite(x)) return x > 0 ? "1e999" : (x < 0 ? "-1e999" : "null");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void JsonWriter::separator() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!first_in_scope_.back()) out_ += ',';
    first_in_scope_.back() = false;
}

void JsonWriter::escaped(std::string_view s) {
    out_ += '"';
    for (char c : s) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            case '\r': out_ += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out_ += buf;
                } else {
                    out_ += c;
                }
        }
    }
    out_ += '"';
}

void JsonWriter::begin_object() {
    separator();
    out_ += '{';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
    first_in_scope_.pop_back();
    out_ += '}';
}

void JsonWriter::begin_array() {
    separator();
    out_ += '[';
    first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
    first_in_scope_.pop_back();
    out_ += ']';
}

void JsonWriter::key(std::string_view name) {
    if (!first_in_scope_.back()) out_ += ',';
    first_in_scope_.back() = false;
    escaped(name);
    out_ += ':';
    after_key_ = true;
}

void JsonWriter::value(double x) {
    separator();
    out_ += format_double(x);
}

void JsonWriter::value(bool b) {
    separator();
    out_ += b ? "true" : "false";
}

void JsonWriter::value(std::int64_t n) {
    separator();
    out_ += std::to_string(n);
}

void JsonWriter::value(std::uint64_t n) {
    separator();
    out_ += std::to_string(n);
}

void JsonWriter::value(std::string_view s) {
    separator();
    escaped(s);
}

void JsonWriter::value(std::complex<double> z) {
    if (z.imag() == 0.0) {
        value(z.real());
        return;
    }
    begin_array();
    value(z.real());
    value(z.imag());
    end_array();
}

}  // namespace hatlas
