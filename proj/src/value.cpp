#include "fairdiv/value.hpp"

#include <cctype>

namespace fairdiv {

Value make_value(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Value v(num, den);
  v.canonicalize();
  return v;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Value> parse_value(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    Value v;
    if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
    v.canonicalize();
    return v;
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  Value v;
  if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  return v;
}

std::string value_to_string(const Value& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace fairdiv
