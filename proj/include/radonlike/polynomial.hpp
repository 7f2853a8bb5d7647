#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "radonlike/rational.hpp"
#include "radonlike/scaling.hpp"

namespace radonlike {

/// Variable blocks in storage order: x' (n'), x'' (n''), y' (n'), and
/// optionally the n'' dual variables eta'' used by the mixed Hessian.
enum class Block { XPrime, XDprime, YPrime, Eta };

struct Variable {
  Block block;
  std::size_t index;
};

inline Variable x_prime(std::size_t i) { return {Block::XPrime, i}; }
inline Variable x_dprime(std::size_t i) { return {Block::XDprime, i}; }
inline Variable y_prime(std::size_t i) { return {Block::YPrime, i}; }
inline Variable eta(std::size_t i) { return {Block::Eta, i}; }

struct VariableLayout {
  std::size_t n_prime = 1;
  std::size_t n_dprime = 1;
  bool with_eta = false;

  std::size_t base_size() const noexcept { return 2 * n_prime + n_dprime; }
  std::size_t size() const noexcept { return base_size() + (with_eta ? n_dprime : 0); }
  std::size_t offset(Variable v) const;
  VariableLayout extended() const { return {n_prime, n_dprime, true}; }

  friend bool operator==(const VariableLayout&, const VariableLayout&) = default;
};

using Exponents = std::vector<int>;

/// Total degree ascending, then lexicographically descending exponents, so
/// x'^2 precedes x'y' precedes y'^2.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct Monomial {
  Rational coeff;
  Exponents exponents;

  std::span<const int> block(const VariableLayout& layout, Block b) const;
};

/// Quasidegree alpha'.a + alpha''.b + beta'.c of the (x', x'', y') part.
long quasidegree(const Exponents& e, const MultiIndex& variable_weights);

/// Exact multivariate polynomial over the rationals, canonical by construction
/// (unique exponent vectors, no zero coefficients).
class Polynomial {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  explicit Polynomial(VariableLayout layout = {});

  static Polynomial constant(VariableLayout layout, const Rational& c);
  static Polynomial variable(VariableLayout layout, Variable v);
  static Polynomial monomial(VariableLayout layout, Exponents e, const Rational& c);

  const VariableLayout& layout() const noexcept { return layout_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::vector<Monomial> monomials() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  int total_degree() const;
  Rational constant_term() const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(Variable v) const;

  /// Substitutes z_i -> 2^{j w_i} z_i; w covers the first w.size() variables.
  Polynomial dilate(const MultiIndex& w, long j) const;

  /// Same polynomial viewed in a layout with extra trailing variables.
  Polynomial embed(const VariableLayout& wider) const;

  template <typename T>
  T evaluate(std::span<const T> point) const;

  Rational evaluate(const RationalVector& point) const {
    return evaluate<Rational>(std::span<const Rational>(point.data(), point.size()));
  }
  double evaluate(const Eigen::VectorXd& point) const {
    return evaluate<double>(std::span<const double>(point.data(), point.size()));
  }

private:
  void check_point(std::size_t n) const;

  VariableLayout layout_;
  TermMap terms_;
};

std::string to_string(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, Variable v);

namespace detail {
template <typename T>
T from_rational(const Rational& q);
template <>
inline double from_rational<double>(const Rational& q) { return q.get_d(); }
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
}  // namespace detail

template <typename T>
T Polynomial::evaluate(std::span<const T> point) const {
  check_point(point.size());
  const std::size_t n = layout_.size();
  // Power tables per variable, built lazily up to the largest exponent used.
  std::vector<std::vector<T>> powers(n);
  for (std::size_t v = 0; v < n; ++v) powers[v].push_back(T(1));
  T total(0);
  for (const auto& [e, c] : terms_) {
    T term = detail::from_rational<T>(c);
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] == 0) continue;
      auto& table = powers[v];
      while (static_cast<int>(table.size()) <= e[v]) table.push_back(T(table.back() * point[v]));
      term *= table[static_cast<std::size_t>(e[v])];
    }
    total += term;
  }
  return total;
}

/// Buckets keyed by quasidegree; summing all buckets reproduces the input.
using GradedDecomposition = std::map<long, Polynomial>;

GradedDecomposition quasidegree_decompose(const Polynomial& p, const Weights& w);

struct PrincipalPart {
  long degree;
  Polynomial part;
};

PrincipalPart principal_part(const Polynomial& p, const Weights& w);

bool is_quasihomogeneous(const Polynomial& p, const Weights& w, long degree);

/// Unit-coefficient monomials in (x', x'', y') of exact quasidegree `target`.
std::vector<Monomial> lambda_basis(const Weights& w, long target);

/// Double-precision evaluator for hot loops in the grid discretization.
class CompiledPolynomial {
public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);

  double operator()(std::span<const double> point) const;
  std::size_t variable_count() const noexcept { return nvars_; }

private:
  std::size_t nvars_ = 0;
  std::vector<double> coeffs_;
  std::vector<std::uint8_t> exps_;
  std::vector<int> max_exp_;
};

}  // namespace radonlike
