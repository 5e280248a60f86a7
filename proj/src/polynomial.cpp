#include "zonospline/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "zonospline/spline.hpp"

namespace zonospline {

int Polynomial::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : coeffs) {
    if (c == 0.0) continue;
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  }
  return deg;
}

double Polynomial::eval(const std::vector<double>& x) const {
  double v = 0.0;
  for (const auto& [e, c] : coeffs) {
    double t = c;
    for (int j = 0; j < dim; ++j)
      for (int p = 0; p < e[static_cast<size_t>(j)]; ++p)
        t *= x[static_cast<size_t>(j)];
    v += t;
  }
  return v;
}

double Polynomial::eval(const Point& x) const {
  std::vector<double> xd(x.size());
  for (size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
  return eval(xd);
}

Polynomial Polynomial::constant(int dim, double c) {
  Polynomial p;
  p.dim = dim;
  p.coeffs[std::vector<int>(static_cast<size_t>(dim), 0)] = c;
  return p;
}

Polynomial Polynomial::monomial(int dim, std::vector<int> exponents, double c) {
  if (static_cast<int>(exponents.size()) != dim)
    throw std::invalid_argument("exponent vector / dimension mismatch");
  Polynomial p;
  p.dim = dim;
  p.coeffs[std::move(exponents)] = c;
  return p;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int dim;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  double number() {
    skip();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (start == pos) fail("expected a number");
    return std::stod(s.substr(start, pos - start));
  }

  // factor := number | x<i>[^e] | x[^e] (d==1)
  void factor(double& coeff, std::vector<int>& expo) {
    skip();
    if (pos >= s.size()) fail("expected a factor");
    if (s[pos] == 'x') {
      ++pos;
      int var = 0;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        var = std::stoi(s.substr(start, pos - start));
      } else if (dim != 1) {
        fail("variable needs an index, e.g. x0");
      }
      if (var < 0 || var >= dim) fail("variable index out of range");
      int e = 1;
      if (eat('^')) {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an exponent");
        e = std::stoi(s.substr(start, pos - start));
      }
      expo[static_cast<size_t>(var)] += e;
    } else {
      coeff *= number();
    }
  }

  Polynomial parse() {
    Polynomial p;
    p.dim = dim;
    bool first = true;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      double sign = 1.0;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1.0;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      double coeff = sign;
      std::vector<int> expo(static_cast<size_t>(dim), 0);
      factor(coeff, expo);
      while (eat('*')) factor(coeff, expo);
      p.coeffs[expo] += coeff;
    }
    if (first) fail("empty polynomial");
    return p;
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int dim) {
  Parser parser{text, 0, dim};
  return parser.parse();
}

PolarForm blossom(const Polynomial& poly, int arity) {
  if (poly.total_degree() > arity)
    throw std::invalid_argument("polynomial degree exceeds the blossom arity");
  return PolarForm{poly, arity};
}

namespace {

// Polar form of a monomial: average the products over all injective
// assignments of the monomial's factors to argument slots.
double polar_monomial(const std::vector<int>& expo, double coeff,
                      const std::vector<std::vector<double>>& args) {
  std::vector<int> factors;  // coordinate of each linear factor
  for (size_t j = 0; j < expo.size(); ++j)
    for (int r = 0; r < expo[j]; ++r) factors.push_back(static_cast<int>(j));
  const int m = static_cast<int>(factors.size());
  const int k = static_cast<int>(args.size());
  if (m == 0) return coeff;

  double total = 0.0;
  long long count = 0;
  std::vector<bool> used(static_cast<size_t>(k), false);
  auto assign = [&](auto&& self, int depth, double prod) -> void {
    if (depth == m) {
      total += prod;
      ++count;
      return;
    }
    int coord = factors[static_cast<size_t>(depth)];
    for (int i = 0; i < k; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      used[static_cast<size_t>(i)] = true;
      self(self, depth + 1,
           prod * args[static_cast<size_t>(i)][static_cast<size_t>(coord)]);
      used[static_cast<size_t>(i)] = false;
    }
  };
  assign(assign, 0, 1.0);
  return coeff * total / static_cast<double>(count);
}

}  // namespace

double PolarForm::eval(const std::vector<std::vector<double>>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("polar form arity mismatch");
  double v = 0.0;
  for (const auto& [e, c] : poly.coeffs) v += polar_monomial(e, c, args);
  return v;
}

double PolarForm::eval_points(const PointConfig& config,
                              const std::vector<int>& idx) const {
  std::vector<std::vector<double>> args;
  args.reserve(idx.size());
  for (int i : idx) {
    std::vector<double> p;
    for (const Rational& c : config.point(i)) p.push_back(to_double(c));
    args.push_back(std::move(p));
  }
  return eval(args);
}

double reproduce(const ZonotopalTiling& tiling, int k, const Polynomial& poly,
                 const Point& x) {
  if (poly.total_degree() > k)
    throw std::invalid_argument("polynomial degree exceeds the requested order");
  if (k > tiling.max_order)
    throw std::invalid_argument("tiling was not built up to this order");
  PolarForm Q = blossom(poly, k);
  const int d = tiling.dim();
  double scale = 1.0;  // k!/(k+d)!
  for (int i = k + 1; i <= k + d; ++i) scale /= i;
  double acc = 0.0;
  for (const Tile* t : tiling.tiles_of_order(k)) {
    double m = eval_spline(tiling.config, t->knots(), x);
    if (m == 0.0) continue;
    acc += Q.eval_points(tiling.config, t->shift) * to_double(t->det) * m;
  }
  return acc * scale;
}

}  // namespace zonospline
