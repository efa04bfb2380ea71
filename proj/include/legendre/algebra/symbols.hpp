#pragma once

#include <optional>
#include <string>
#include <string_view>

// Naming scheme for the indeterminates of Q[theta_1..theta_n, b_1..b_n, a, t_1..t_n].
//
// theta<i> and b<i> are the coordinates that carry differentials; a is the
// support function (rewritten by the frontal rule); t<i> are parameters.
// Any other identifier is a plain parameter.
namespace legendre::algebra::sym {

enum class Kind { theta = 0, b = 1, a = 2, t = 3, other = 4 };

std::string theta(int i);
std::string b(int i);
std::string a();
std::string t(int i);
std::string x(int i);

Kind kind_of(std::string_view name);

/// Index for indexed symbols (theta3 -> 3), nullopt otherwise.
std::optional<int> index_of(std::string_view name);

/// True for theta<i> and b<i>.
bool is_coordinate(std::string_view name);

/// Canonical variable order: theta*, b*, a, t*, then everything else.
/// Indexed families sort numerically, the rest lexicographically.
bool less(std::string_view lhs, std::string_view rhs);

struct Less {
  bool operator()(std::string_view lhs, std::string_view rhs) const { return less(lhs, rhs); }
  using is_transparent = void;
};

}  // namespace legendre::algebra::sym
