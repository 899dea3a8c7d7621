#ifndef GYQS_HARNESS_FORMAT_HPP
#define GYQS_HARNESS_FORMAT_HPP

#include <gyqs/params.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gyqs::harness {

/// Decimal with 6 significant digits; "inf"/"nan" spelled out.
inline std::string fmt6(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

/// Splits "a,b,c" on commas; empty fields are rejected.
inline std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    std::string item(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (item.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    out.push_back(std::move(item));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline long long parse_integer(const std::string& s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

inline PivotParams::Triple parse_triple(std::string_view text) {
  const auto items = split_list(text);
  if (items.size() != 3) throw std::invalid_argument("--t expects three comma-separated integers");
  PivotParams::Triple t{};
  for (int i = 0; i < 3; ++i) {
    const long long v = parse_integer(items[i]);
    if (v < 0 || v > 1000) throw std::invalid_argument("--t components must be in [0, 1000]");
    t[i] = static_cast<int>(v);
  }
  return t;
}

inline std::vector<long long> parse_sizes(std::string_view text) {
  std::vector<long long> out;
  for (const auto& s : split_list(text)) {
    const long long v = parse_integer(s);
    if (v < 1 || v > (1LL << 31)) throw std::invalid_argument("sizes must be in [1, 2^31]");
    out.push_back(v);
  }
  return out;
}

/// Accumulates CSV text with LF line endings.
class CsvWriter {
 public:
  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((out_ << (first ? "" : ",") << fields, first = false), ...);
    out_ << '\n';
  }
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << fields[i];
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace gyqs::harness

#endif  // GYQS_HARNESS_FORMAT_HPP
