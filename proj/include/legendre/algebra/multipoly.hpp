#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "legendre/algebra/rational.hpp"

namespace legendre::algebra {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest monomial first.
struct GrlexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at offset " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Multivariate polynomial with exact rational coefficients.
///
/// The variable list is always sorted by sym::less and duplicate free;
/// binary operations align operands on the union of their variables.
/// No zero coefficient is ever stored, so equality is structural once
/// both sides are aligned (operator== does that alignment).
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly zero(std::vector<std::string> variables);
  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const Rational& coefficient, const std::map<std::string, unsigned>& powers);

  /// Reads the canonical text form, e.g. "3/2*t1^2*b1 - a". Also accepts
  /// parentheses and division by a nonzero constant. Throws ParseError.
  static MultiPoly parse(std::string_view text);

  [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree_in(std::string_view name) const;
  [[nodiscard]] bool mentions(std::string_view name) const;
  /// Variables that occur with a positive exponent in some term.
  [[nodiscard]] std::vector<std::string> used_variables() const;

  /// Same polynomial over a larger (or reordered) variable list. Throws if a
  /// used variable would be dropped.
  [[nodiscard]] MultiPoly with_variables(const std::vector<std::string>& variables) const;
  /// Drops variables that never occur.
  [[nodiscard]] MultiPoly trimmed() const;

  [[nodiscard]] MultiPoly derivative(std::string_view name) const;
  /// Antiderivative in `name` with zero constant of integration.
  [[nodiscard]] MultiPoly antiderivative(const std::string& name) const;
  [[nodiscard]] MultiPoly pow(unsigned exponent) const;

  /// Simultaneous substitution. Every key must name a variable of this
  /// polynomial, else UnknownVariable.
  [[nodiscard]] MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

  /// Exact evaluation; every used variable must be bound.
  [[nodiscard]] Rational evaluate(const std::map<std::string, Rational>& values) const;
  [[nodiscard]] double evaluate(const std::map<std::string, double>& values) const;

  /// Coefficient of prod(main_vars^powers) where main variables absent from
  /// `powers` have exponent zero. The result lives in the non-main variables.
  [[nodiscard]] MultiPoly coefficient(const std::map<std::string, unsigned>& powers,
                                      const std::vector<std::string>& main_vars) const;

  /// Exact division by a single variable. Throws std::domain_error when some
  /// term does not contain it.
  [[nodiscard]] MultiPoly divide_by_variable(std::string_view name) const;

  [[nodiscard]] std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const MultiPoly& rhs) { return lhs *= rhs; }
  friend MultiPoly operator-(const MultiPoly& p);

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

 private:
  MultiPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

  [[nodiscard]] std::ptrdiff_t index_of(std::string_view name) const;
  static void accumulate(TermMap& terms, const Exponents& e, const Rational& c);

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

/// Ring operation dispatch; total over the ring.
MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, PolyOp op);

}  // namespace legendre::algebra
