#include "radonlike/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace radonlike {

std::size_t VariableLayout::offset(Variable v) const {
  switch (v.block) {
    case Block::XPrime:
      require(v.index < n_prime, ErrorKind::InvalidArgument, "x' index out of range");
      return v.index;
    case Block::XDprime:
      require(v.index < n_dprime, ErrorKind::InvalidArgument, "x'' index out of range");
      return n_prime + v.index;
    case Block::YPrime:
      require(v.index < n_prime, ErrorKind::InvalidArgument, "y' index out of range");
      return n_prime + n_dprime + v.index;
    case Block::Eta:
      require(with_eta && v.index < n_dprime, ErrorKind::InvalidArgument,
              "eta'' index out of range");
      return 2 * n_prime + n_dprime + v.index;
  }
  fail(ErrorKind::InvalidArgument, "unknown variable block");
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::span<const int> Monomial::block(const VariableLayout& layout, Block b) const {
  const std::size_t start = layout.offset(Variable{b, 0});
  const std::size_t len = (b == Block::XPrime || b == Block::YPrime) ? layout.n_prime
                                                                     : layout.n_dprime;
  return std::span<const int>(exponents).subspan(start, len);
}

long quasidegree(const Exponents& e, const MultiIndex& variable_weights) {
  long d = 0;
  for (std::size_t i = 0; i < variable_weights.size(); ++i) d += variable_weights[i] * e[i];
  return d;
}

Polynomial::Polynomial(VariableLayout layout) : layout_(layout) {}

Polynomial Polynomial::constant(VariableLayout layout, const Rational& c) {
  Polynomial p(layout);
  p.add_term(Exponents(layout.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VariableLayout layout, Variable v) {
  Exponents e(layout.size(), 0);
  e[layout.offset(v)] = 1;
  return monomial(layout, std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(VariableLayout layout, Exponents e, const Rational& c) {
  Polynomial p(layout);
  p.add_term(e, c);
  return p;
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({c, e});
  return out;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(layout_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  require(e.size() == layout_.size(), ErrorKind::InvalidArgument,
          "exponent vector does not match the variable layout");
  for (int k : e) require(k >= 0, ErrorKind::InvalidArgument, "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require(layout_ == other.layout_, ErrorKind::InvalidArgument, "layout mismatch in +");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require(layout_ == other.layout_, ErrorKind::InvalidArgument, "layout mismatch in -");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.layout_ == b.layout_, ErrorKind::InvalidArgument, "layout mismatch in *");
  Polynomial out(a.layout_);
  Exponents e(a.layout_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(Variable v) const {
  const std::size_t k = layout_.offset(v);
  Polynomial out(layout_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d(e);
    d[k] -= 1;
    out.add_term(d, c * e[k]);
  }
  return out;
}

Polynomial Polynomial::dilate(const MultiIndex& w, long j) const {
  require(w.size() <= layout_.size(), ErrorKind::InvalidArgument,
          "dilation weights longer than the variable list");
  Polynomial out(layout_);
  for (const auto& [e, c] : terms_) {
    long shift = 0;
    for (std::size_t i = 0; i < w.size(); ++i) shift += w[i] * e[i];
    out.terms_.emplace(e, c * pow2(j * shift));
  }
  return out;
}

Polynomial Polynomial::embed(const VariableLayout& wider) const {
  require(wider.n_prime == layout_.n_prime && wider.n_dprime == layout_.n_dprime &&
              wider.size() >= layout_.size(),
          ErrorKind::InvalidArgument, "embed: incompatible layout");
  Polynomial out(wider);
  for (const auto& [e, c] : terms_) {
    Exponents w(e);
    w.resize(wider.size(), 0);
    out.terms_.emplace(std::move(w), c);
  }
  return out;
}

void Polynomial::check_point(std::size_t n) const {
  require(n == layout_.size(), ErrorKind::InvalidArgument,
          "evaluation point has the wrong number of coordinates");
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& L = p.layout();
  auto name = [&](std::size_t k) {
    std::ostringstream os;
    if (k < L.n_prime) os << "xp" << k + 1;
    else if (k < L.n_prime + L.n_dprime) os << "xpp" << k - L.n_prime + 1;
    else if (k < L.base_size()) os << "yp" << k - L.n_prime - L.n_dprime + 1;
    else os << "eta" << k - L.base_size() + 1;
    return os.str();
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = (mag == 1);
    bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    if (!unit || !any_var) os << mag.get_str();
    bool need_star = !unit || !any_var;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      os << name(k);
      if (e[k] > 1) os << "^" << e[k];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial partial_derivative(const Polynomial& p, Variable v) { return p.derivative(v); }

namespace {
void check_weights(const Polynomial& p, const Weights& w) {
  require(p.layout().n_prime == w.n_prime() && p.layout().n_dprime == w.n_dprime(),
          ErrorKind::InvalidArgument, "polynomial dimensions do not match the weights");
}
}  // namespace

GradedDecomposition quasidegree_decompose(const Polynomial& p, const Weights& w) {
  check_weights(p, w);
  const MultiIndex vw = w.variable_weights();
  GradedDecomposition out;
  for (const auto& [e, c] : p.terms()) {
    long d = quasidegree(e, vw);
    auto it = out.try_emplace(d, Polynomial(p.layout())).first;
    it->second.add_term(e, c);
  }
  return out;
}

PrincipalPart principal_part(const Polynomial& p, const Weights& w) {
  require(!p.is_zero(), ErrorKind::NoPrincipalPart, "the zero polynomial has no principal part");
  auto graded = quasidegree_decompose(p, w);
  auto& [degree, part] = *graded.begin();
  return {degree, part};
}

bool is_quasihomogeneous(const Polynomial& p, const Weights& w, long degree) {
  check_weights(p, w);
  const MultiIndex vw = w.variable_weights();
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const auto& t) { return quasidegree(t.first, vw) == degree; });
}

std::vector<Monomial> lambda_basis(const Weights& w, long target) {
  require(target >= 0, ErrorKind::InvalidArgument, "target degree must be nonnegative");
  const VariableLayout layout{w.n_prime(), w.n_dprime(), false};
  const MultiIndex vw = w.variable_weights();
  Polynomial acc(layout);
  Exponents e(layout.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long remaining) {
    if (k == e.size()) {
      if (remaining == 0) acc.add_term(e, Rational(1));
      return;
    }
    for (long m = 0; m * vw[k] <= remaining; ++m) {
      e[k] = static_cast<int>(m);
      rec(k + 1, remaining - m * vw[k]);
    }
    e[k] = 0;
  };
  rec(0, target);
  return acc.monomials();
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : nvars_(p.layout().size()) {
  max_exp_.assign(nvars_, 0);
  for (const auto& [e, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    for (std::size_t v = 0; v < nvars_; ++v) {
      require(e[v] < 256, ErrorKind::InvalidArgument, "exponent too large to compile");
      exps_.push_back(static_cast<std::uint8_t>(e[v]));
      max_exp_[v] = std::max(max_exp_[v], e[v]);
    }
  }
}

double CompiledPolynomial::operator()(std::span<const double> point) const {
  double total = 0.0;
  const std::size_t nt = coeffs_.size();
  for (std::size_t t = 0; t < nt; ++t) {
    double term = coeffs_[t];
    const std::uint8_t* e = exps_.data() + t * nvars_;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

}  // namespace radonlike
