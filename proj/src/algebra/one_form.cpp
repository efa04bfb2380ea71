#include "legendre/algebra/one_form.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace legendre::algebra {

OneForm::OneForm(Coefficients coefficients) : coeffs_(std::move(coefficients)) {
  for (const auto& [key, value] : coeffs_) {
    if (!sym::is_coordinate(key)) throw std::invalid_argument("OneForm: '" + key + "' is not a coordinate");
  }
  normalize();
}

OneForm OneForm::basis(const std::string& coordinate, const MultiPoly& coefficient) {
  Coefficients c;
  c.emplace(coordinate, coefficient);
  return OneForm(std::move(c));
}

MultiPoly OneForm::coefficient(const std::string& coordinate) const {
  const auto it = coeffs_.find(coordinate);
  return it == coeffs_.end() ? MultiPoly() : it->second;
}

void OneForm::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

std::string OneForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << value.to_string() << ")*d" << key;
  }
  return os.str();
}

OneForm& OneForm::operator+=(const OneForm& rhs) {
  for (const auto& [key, value] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(key, value);
    if (!inserted) it->second += value;
  }
  normalize();
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& rhs) {
  for (const auto& [key, value] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(key, -value);
    if (!inserted) it->second -= value;
  }
  normalize();
  return *this;
}

OneForm operator*(const MultiPoly& scale, const OneForm& form) {
  OneForm out = form;
  for (auto& [key, value] : out.coeffs_) value = scale * value;
  out.normalize();
  return out;
}

bool operator==(const OneForm& lhs, const OneForm& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
  auto it = rhs.coeffs_.begin();
  for (const auto& [key, value] : lhs.coeffs_) {
    if (key != it->first || !(value == it->second)) return false;
    ++it;
  }
  return true;
}

DifferentialRule DifferentialRule::frontal(int n) {
  if (n < 1) throw std::invalid_argument("DifferentialRule::frontal: n must be positive");
  return {Kind::frontal, n};
}

OneForm differential(const MultiPoly& p, const DifferentialRule& rule) {
  OneForm::Coefficients coeffs;
  for (const auto& name : p.variables()) {
    if (sym::is_coordinate(name)) {
      MultiPoly partial = p.derivative(name);
      if (!partial.is_zero()) coeffs.emplace(name, std::move(partial));
    }
  }
  OneForm out(std::move(coeffs));
  if (rule.kind == DifferentialRule::Kind::frontal && p.mentions(sym::a())) {
    const MultiPoly da_coeff = p.derivative(sym::a());
    for (int i = 1; i <= rule.n; ++i) {
      out += OneForm::basis(sym::theta(i), da_coeff * MultiPoly::variable(sym::b(i)));
    }
  }
  return out;
}

const MultiPoly& PotentialResult::value() const {
  if (!exact()) throw std::logic_error("PotentialResult: form is not exact");
  return std::get<MultiPoly>(state_);
}

const NotExact& PotentialResult::obstruction() const {
  if (exact()) throw std::logic_error("PotentialResult: form is exact");
  return std::get<NotExact>(state_);
}

PotentialResult potential(const OneForm& w) {
  std::set<std::string, sym::Less> coords;
  for (const auto& [key, value] : w.coefficients()) {
    coords.insert(key);
    for (const auto& v : value.used_variables()) {
      if (sym::is_coordinate(v)) coords.insert(v);
    }
  }
  const std::vector<std::string> order(coords.begin(), coords.end());

  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      MultiPoly lhs = w.coefficient(order[i]).derivative(order[j]);
      MultiPoly rhs = w.coefficient(order[j]).derivative(order[i]);
      if (!(lhs == rhs)) return NotExact{order[i], order[j], std::move(lhs), std::move(rhs)};
    }
  }

  // P(x) = sum_k int_0^{x_k} w_k(x_1..x_k, 0..0) dx_k
  MultiPoly result;
  for (std::size_t k = 0; k < order.size(); ++k) {
    MultiPoly wk = w.coefficient(order[k]);
    std::map<std::string, MultiPoly> zero_later;
    for (std::size_t m = k + 1; m < order.size(); ++m) {
      if (wk.mentions(order[m])) zero_later.emplace(order[m], MultiPoly(0));
    }
    if (!zero_later.empty()) wk = wk.substitute(zero_later);
    result += wk.antiderivative(order[k]);
  }
  return result.trimmed();
}

PotentialResult frontal_potential(const OneForm& w, int n) {
  if (n < 1) throw std::invalid_argument("frontal_potential: n must be positive");
  for (const auto& [key, value] : w.coefficients()) {
    if (value.mentions(sym::a())) {
      throw std::invalid_argument("frontal_potential: coefficients must not mention a");
    }
  }
  const std::string th1 = sym::theta(1);
  const std::string b1 = sym::b(1);
  MultiPoly lhs = w.coefficient(th1).derivative(b1);
  MultiPoly rhs = w.coefficient(b1).derivative(th1);
  const MultiPoly a_coeff = lhs - rhs;
  for (const auto& v : a_coeff.used_variables()) {
    if (sym::is_coordinate(v)) return NotExact{th1, b1, std::move(lhs), std::move(rhs)};
  }
  const OneForm da = differential(MultiPoly::variable(sym::a()), DifferentialRule::frontal(n));
  const PotentialResult rest = potential(w - a_coeff * da);
  if (!rest.exact()) return rest;
  return (rest.value() + a_coeff * MultiPoly::variable(sym::a())).trimmed();
}

}  // namespace legendre::algebra
