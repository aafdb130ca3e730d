#include "ordot/numeric.hpp"

#include <cctype>

namespace ordot {

Q make_q(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Q v(num, den);
  v.canonicalize();
  return v;
}

std::string q_str(const Q& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::optional<Q> q_parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  // shape check: [-]digits[/digits]
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool saw_digit = false, saw_slash = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      saw_digit = true;
    } else if (s[k] == '/' && !saw_slash && saw_digit && k + 1 < s.size()) {
      saw_slash = true;
      saw_digit = false;
    } else {
      return std::nullopt;
    }
  }
  if (!saw_digit) return std::nullopt;
  Q v;
  if (v.set_str(std::string(s), 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  return v;
}

Q q_abs(const Q& v) { return v < 0 ? Q(-v) : v; }
Q q_min(const Q& a, const Q& b) { return a < b ? a : b; }
Q q_max(const Q& a, const Q& b) { return a < b ? b : a; }

}  // namespace ordot
