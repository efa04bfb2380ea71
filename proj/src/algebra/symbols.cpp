#include "legendre/algebra/symbols.hpp"

#include <charconv>

namespace legendre::algebra::sym {

namespace {

// Splits "theta12" into ("theta", 12). Returns nullopt when there is no
// numeric suffix or the suffix has a leading zero.
std::optional<std::pair<std::string_view, int>> split_indexed(std::string_view name) {
  std::size_t pos = name.size();
  while (pos > 0 && name[pos - 1] >= '0' && name[pos - 1] <= '9') --pos;
  if (pos == name.size() || pos == 0) return std::nullopt;
  const std::string_view digits = name.substr(pos);
  if (digits.size() > 1 && digits.front() == '0') return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) return std::nullopt;
  return std::pair{name.substr(0, pos), value};
}

}  // namespace

std::string theta(int i) { return "theta" + std::to_string(i); }
std::string b(int i) { return "b" + std::to_string(i); }
std::string a() { return "a"; }
std::string t(int i) { return "t" + std::to_string(i); }
std::string x(int i) { return "x" + std::to_string(i); }

Kind kind_of(std::string_view name) {
  if (name == "a") return Kind::a;
  const auto split = split_indexed(name);
  if (!split) return Kind::other;
  if (split->first == "theta") return Kind::theta;
  if (split->first == "b") return Kind::b;
  if (split->first == "t") return Kind::t;
  return Kind::other;
}

std::optional<int> index_of(std::string_view name) {
  const auto split = split_indexed(name);
  if (!split) return std::nullopt;
  return split->second;
}

bool is_coordinate(std::string_view name) {
  const Kind k = kind_of(name);
  return k == Kind::theta || k == Kind::b;
}

bool less(std::string_view lhs, std::string_view rhs) {
  const Kind kl = kind_of(lhs);
  const Kind kr = kind_of(rhs);
  if (kl != kr) return static_cast<int>(kl) < static_cast<int>(kr);
  if (kl == Kind::a) return false;
  if (kl == Kind::other) {
    // Indexed names with the same stem sort numerically (x2 < x10).
    const auto sl = split_indexed(lhs);
    const auto sr = split_indexed(rhs);
    if (sl && sr && sl->first == sr->first) return sl->second < sr->second;
    return lhs < rhs;
  }
  return *index_of(lhs) < *index_of(rhs);
}

}  // namespace legendre::algebra::sym
