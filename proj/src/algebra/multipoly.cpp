#include "legendre/algebra/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "legendre/algebra/symbols.hpp"

namespace legendre::algebra {

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  const unsigned dl = std::accumulate(lhs.begin(), lhs.end(), 0U);
  const unsigned dr = std::accumulate(rhs.begin(), rhs.end(), 0U);
  if (dl != dr) return dl > dr;
  return std::lexicographical_compare(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

namespace {

std::vector<std::string> merge_variables(const std::vector<std::string>& lhs, const std::vector<std::string>& rhs) {
  std::vector<std::string> out;
  out.reserve(lhs.size() + rhs.size());
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out), sym::Less{});
  return out;
}

std::vector<std::string> canonical_variables(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), sym::Less{});
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::zero(std::vector<std::string> variables) {
  return MultiPoly(canonical_variables(std::move(variables)), {});
}

MultiPoly MultiPoly::variable(const std::string& name) {
  TermMap terms;
  terms.emplace(Exponents{1}, Rational(1));
  return MultiPoly({name}, std::move(terms));
}

MultiPoly MultiPoly::monomial(const Rational& coefficient, const std::map<std::string, unsigned>& powers) {
  std::vector<std::string> vars;
  for (const auto& [name, power] : powers) vars.push_back(name);
  vars = canonical_variables(std::move(vars));
  Exponents e(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) e[i] = powers.at(vars[i]);
  TermMap terms;
  if (!coefficient.is_zero()) terms.emplace(std::move(e), coefficient);
  return MultiPoly(std::move(vars), std::move(terms));
}

std::ptrdiff_t MultiPoly::index_of(std::string_view name) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), name, sym::Less{});
  if (it == vars_.end() || *it != name) return -1;
  return it - vars_.begin();
}

void MultiPoly::accumulate(TermMap& terms, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                              terms_.begin()->first.end(),
                                                              [](unsigned e) { return e == 0; }));
}

Rational MultiPoly::constant_term() const {
  const Exponents zero(vars_.size(), 0);
  const auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  // Grlex puts the highest total degree first.
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0U);
}

unsigned MultiPoly::degree_in(std::string_view name) const {
  const auto idx = index_of(name);
  if (idx < 0) return 0;
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<std::size_t>(idx)]);
  return best;
}

bool MultiPoly::mentions(std::string_view name) const { return degree_in(name) > 0; }

std::vector<std::string> MultiPoly::used_variables() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  std::vector<std::string> target = canonical_variables(variables);
  if (target == vars_) return *this;
  std::vector<std::ptrdiff_t> position(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::lower_bound(target.begin(), target.end(), vars_[i], sym::Less{});
    if (it != target.end() && *it == vars_[i]) position[i] = it - target.begin();
  }
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents out(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (position[i] < 0) throw std::invalid_argument("with_variables: drops used variable " + vars_[i]);
      out[static_cast<std::size_t>(position[i])] = e[i];
    }
    terms.emplace(std::move(out), c);
  }
  return MultiPoly(std::move(target), std::move(terms));
}

MultiPoly MultiPoly::trimmed() const { return with_variables(used_variables()); }

MultiPoly MultiPoly::derivative(std::string_view name) const {
  const auto idx = index_of(name);
  if (idx < 0) return MultiPoly::zero(vars_);
  const auto k = static_cast<std::size_t>(idx);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    accumulate(terms, d, c * Rational(static_cast<long>(e[k])));
  }
  return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::antiderivative(const std::string& name) const {
  MultiPoly base = with_variables(merge_variables(vars_, {name}));
  const auto k = static_cast<std::size_t>(base.index_of(name));
  TermMap terms;
  for (const auto& [e, c] : base.terms_) {
    Exponents d = e;
    d[k] += 1;
    accumulate(terms, d, c / Rational(static_cast<long>(d[k])));
  }
  return MultiPoly(base.vars_, std::move(terms));
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = MultiPoly(Rational(1)).with_variables(vars_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  std::vector<const MultiPoly*> bound(vars_.size(), nullptr);
  for (const auto& [name, value] : bindings) {
    const auto idx = index_of(name);
    if (idx < 0) throw UnknownVariable(name);
    bound[static_cast<std::size_t>(idx)] = &value;
  }
  std::vector<std::string> kept;
  std::vector<std::string> out_vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (bound[i] == nullptr) {
      kept.push_back(vars_[i]);
    } else {
      out_vars = merge_variables(out_vars, bound[i]->vars_);
    }
  }
  out_vars = merge_variables(out_vars, kept);

  // powers[i][k] = binding_i^k, built lazily.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly(Rational(1)).with_variables(out_vars));
    while (cache.size() <= k) cache.push_back(cache.back() * bound[i]->with_variables(out_vars));
    return cache[k];
  };

  MultiPoly result = MultiPoly::zero(out_vars);
  for (const auto& [e, c] : terms_) {
    std::map<std::string, unsigned> free_part;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (bound[i] == nullptr && e[i] > 0) free_part.emplace(vars_[i], e[i]);
    }
    MultiPoly term = MultiPoly::monomial(c, free_part).with_variables(out_vars);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (bound[i] != nullptr && e[i] > 0) term *= power_of(i, e[i]);
    }
    result += term;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<const Rational*> val(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it != values.end()) val[i] = &it->second;
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (val[i] == nullptr) throw UnknownVariable(vars_[i]);
      term *= val[i]->pow(e[i]);
    }
    total += term;
  }
  return total;
}

double MultiPoly::evaluate(const std::map<std::string, double>& values) const {
  std::vector<double> val(vars_.size(), std::nan(""));
  std::vector<bool> have(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = values.find(vars_[i]);
    if (it != values.end()) {
      val[i] = it->second;
      have[i] = true;
    }
  }
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!have[i]) throw UnknownVariable(vars_[i]);
      term *= std::pow(val[i], static_cast<int>(e[i]));
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::coefficient(const std::map<std::string, unsigned>& powers,
                                 const std::vector<std::string>& main_vars) const {
  for (const auto& [name, p] : powers) {
    if (std::find(main_vars.begin(), main_vars.end(), name) == main_vars.end()) {
      throw std::invalid_argument("coefficient: '" + name + "' is not a main variable");
    }
  }
  std::vector<std::string> rest;
  std::vector<bool> is_main(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    is_main[i] = std::find(main_vars.begin(), main_vars.end(), vars_[i]) != main_vars.end();
    if (!is_main[i]) rest.push_back(vars_[i]);
  }
  std::vector<unsigned> wanted(vars_.size(), 0);
  for (const auto& [name, p] : powers) {
    const auto idx = index_of(name);
    if (idx < 0) {
      if (p > 0) return MultiPoly::zero(rest);
      continue;
    }
    wanted[static_cast<std::size_t>(idx)] = p;
  }
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    bool match = true;
    Exponents out;
    out.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (is_main[i]) {
        if (e[i] != wanted[i]) {
          match = false;
          break;
        }
      } else {
        out.push_back(e[i]);
      }
    }
    if (match) accumulate(terms, out, c);
  }
  return MultiPoly(std::move(rest), std::move(terms));
}

MultiPoly MultiPoly::divide_by_variable(std::string_view name) const {
  const auto idx = index_of(name);
  if (idx < 0 && !is_zero()) throw std::domain_error("divide_by_variable: variable absent");
  if (idx < 0) return *this;
  const auto k = static_cast<std::size_t>(idx);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) throw std::domain_error("divide_by_variable: not divisible by " + std::string(name));
    Exponents d = e;
    d[k] -= 1;
    terms.emplace(std::move(d), c);
  }
  return MultiPoly(vars_, std::move(terms));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    const bool has_vars = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    bool need_star = false;
    if (!has_vars || !magnitude.is_one()) {
      os << magnitude.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << vars_[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (vars_ != rhs.vars_) {
    const auto vars = merge_variables(vars_, rhs.vars_);
    *this = with_variables(vars);
    const MultiPoly aligned = rhs.with_variables(vars);
    for (const auto& [e, c] : aligned.terms_) accumulate(terms_, e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  const auto vars = merge_variables(vars_, rhs.vars_);
  const MultiPoly lhs_aligned = with_variables(vars);
  const MultiPoly rhs_aligned = rhs.with_variables(vars);
  TermMap terms;
  Exponents e(vars.size(), 0);
  for (const auto& [el, cl] : lhs_aligned.terms_) {
    for (const auto& [er, cr] : rhs_aligned.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      accumulate(terms, e, cl * cr);
    }
  }
  vars_ = vars;
  terms_ = std::move(terms);
  return *this;
}

MultiPoly operator-(const MultiPoly& p) {
  MultiPoly out = p;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.vars_ == rhs.vars_) return lhs.terms_ == rhs.terms_;
  const MultiPoly l = lhs.trimmed();
  const MultiPoly r = rhs.trimmed();
  return l.vars_ == r.vars_ && l.terms_ == r.terms_;
}

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return lhs + rhs;
    case PolyOp::sub:
      return lhs - rhs;
    case PolyOp::mul:
      return lhs * rhs;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  MultiPoly term() {
    MultiPoly value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const MultiPoly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) throw ParseError("division by non-constant or zero", at);
        value *= MultiPoly(divisor.constant_term().inverse());
      } else {
        return value;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected integer exponent", pos_);
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MultiPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace legendre::algebra
