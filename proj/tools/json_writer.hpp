#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace sgcli {

// Minimal JSON emitter with pinned formatting: insertion order is preserved
// and every double is printed with %.17g, so identical invocations produce
// byte-identical records.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    prefix();
    out_ += '{';
    stack_.push_back('}');
    fresh_ = true;
    return *this;
  }

  JsonWriter& end_object() { return close('}'); }

  JsonWriter& begin_array() {
    prefix();
    out_ += '[';
    stack_.push_back(']');
    fresh_ = true;
    return *this;
  }

  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(const char* name) {
    prefix();
    append_string(name);
    out_ += ':';
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    prefix();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
    return *this;
  }

  JsonWriter& value(std::uint64_t v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(int v) {
    prefix();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(bool v) {
    prefix();
    out_ += v ? "true" : "false";
    return *this;
  }

  JsonWriter& value(const char* v) {
    prefix();
    append_string(v);
    return *this;
  }

  JsonWriter& value(const std::string& v) { return value(v.c_str()); }

  JsonWriter& null() {
    prefix();
    out_ += "null";
    return *this;
  }

  JsonWriter& triple(const double v[3]) {
    begin_array();
    value(v[0]);
    value(v[1]);
    value(v[2]);
    return end_array();
  }

  const std::string& str() const { return out_; }

 private:
  void prefix() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!fresh_ && !stack_.empty()) out_ += ',';
    fresh_ = false;
  }

  JsonWriter& close(char c) {
    stack_.pop_back();
    out_ += c;
    fresh_ = false;
    return *this;
  }

  void append_string(const char* s) {
    out_ += '"';
    for (; *s; ++s) {
      switch (*s) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        default: out_ += *s;
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<char> stack_;
  bool fresh_ = true;
  bool pending_key_ = false;
};

}  // namespace sgcli
