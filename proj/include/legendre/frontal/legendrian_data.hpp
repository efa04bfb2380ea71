#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "legendre/algebra/multipoly.hpp"
#include "legendre/frontal/grid.hpp"

namespace legendre::frontal {

/// Values of (theta, a, b) at one point.
struct Sample {
  Vec theta;
  double a = 0.0;
  Vec b;
};

/// Values plus first derivatives; row i of dtheta is the gradient of theta_i.
struct Jet {
  Vec x;
  Vec theta;
  double a = 0.0;
  Vec b;
  Mat dtheta;
  Vec da;
  Mat db;
};

struct ClosedForm {
  std::function<Vec(const Vec&)> theta;
  std::function<double(const Vec&)> a;
  std::function<Vec(const Vec&)> b;
  // Optional exact derivatives; central differences with the grid step otherwise.
  std::function<Mat(const Vec&)> dtheta;
  std::function<Vec(const Vec&)> da;
  std::function<Mat(const Vec&)> db;

  [[nodiscard]] bool has_derivatives() const { return dtheta && da && db; }
};

/// Values on the nodes of a grid, in flat order.
struct Sampled {
  GridSpec grid;
  std::vector<Vec> theta;
  std::vector<double> a;
  std::vector<Vec> b;
};

/// Polynomials in x1..xn.
struct Symbolic {
  std::vector<algebra::MultiPoly> theta;
  algebra::MultiPoly a;
  std::vector<algebra::MultiPoly> b;
};

enum class DataMode { closed_form, sampled_grid, symbolic };

std::string to_string(DataMode mode);

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Legendrian data Phi = (theta, a, b) on R^n.
class LegendrianData {
 public:
  LegendrianData(int n, ClosedForm f);
  LegendrianData(int n, Sampled s);
  LegendrianData(int n, Symbolic s);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] DataMode mode() const;
  [[nodiscard]] const ClosedForm* closed() const { return std::get_if<ClosedForm>(&repr_); }
  [[nodiscard]] const Sampled* sampled() const { return std::get_if<Sampled>(&repr_); }
  [[nodiscard]] const Symbolic* symbolic() const { return std::get_if<Symbolic>(&repr_); }

  /// Point evaluation. Sampled data only answers at its grid nodes.
  [[nodiscard]] Sample evaluate(const Vec& x) const;

  /// Values and derivatives at every node of `grid`. Sampled data requires
  /// `grid` to equal its own grid and differentiates with grid stencils.
  [[nodiscard]] std::vector<Jet> jets(const GridSpec& grid) const;

  /// Values at every node of `grid`.
  [[nodiscard]] Sampled sample(const GridSpec& grid) const;

  /// True when derivatives are exact (symbolic, or closed form with
  /// derivative callables).
  [[nodiscard]] bool exact_derivatives() const;

 private:
  int n_;
  std::variant<ClosedForm, Sampled, Symbolic> repr_;
};

/// Symbolic data from polynomial text in x1..xn; used by catalogs and tests.
LegendrianData symbolic_data(const std::vector<std::string>& theta, const std::string& a,
                             const std::vector<std::string>& b);

/// First derivatives of grid samples along each axis: fourth-order five-point
/// stencils (one-sided at the ends) when the axis has at least five nodes,
/// second-order three-point stencils otherwise. Returns gradients per node.
std::vector<Vec> grid_gradient(const GridSpec& grid, const std::vector<double>& values);

}  // namespace legendre::frontal
