#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace cvxgap {

/// Minimal JSON emitter with fully deterministic output: keys stay in
/// insertion order and doubles are rendered with %.17g so identical inputs
/// produce byte-identical documents on every platform.
class JsonWriter {
public:
  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view name) {
    comma();
    quoted(name);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    comma();
    if (!std::isfinite(v)) {
      out_ += "null";
      return *this;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
    return *this;
  }

  JsonWriter& value(std::uint64_t v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(int v) {
    comma();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
  }

  JsonWriter& value(std::string_view v) {
    comma();
    quoted(v);
    return *this;
  }

  const std::string& str() const { return out_; }

private:
  JsonWriter& open(char ch) {
    comma();
    out_ += ch;
    fresh_ = true;
    return *this;
  }

  JsonWriter& close(char ch) {
    out_ += ch;
    fresh_ = false;
    return *this;
  }

  void comma() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!fresh_ && !out_.empty() && out_.back() != '{' && out_.back() != '[') out_ += ',';
    fresh_ = false;
  }

  void quoted(std::string_view s) {
    out_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default: out_ += ch;
      }
    }
    out_ += '"';
  }

  std::string out_;
  bool fresh_ = true;
  bool pending_value_ = false;
};

}  // namespace cvxgap
