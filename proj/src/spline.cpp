#include "zonospline/spline.hpp"

#include <algorithm>
#include <stdexcept>

#include "zonospline/determinant.hpp"

namespace zonospline {

int SimplexSpline::degree() const {
  return static_cast<int>(knots.size()) - config->dim - 1;
}

bool simplex_indicator_limit(const PointConfig& config, const OrderedBasis& B,
                             const Point& x, EvalDiagnostics* diag) {
  const int d = config.dim;
  // For each barycentric sign, the perturbed determinant is
  //   det^s(B; b -> x) + sum_j eps^j det^s(B; b -> e_j row (e_j, 0)),
  // so the sign for eps -> 0+ is the first nonzero coefficient.
  for (int b : B.order) {
    Rational lead = det_sub(config, B, b, x);
    int s = sign_of(lead);
    if (s == 0) {
      if (diag) ++diag->non_generic_hits;
      int row = B.row_of(b);
      for (int j = 0; j < d && s == 0; ++j) {
        // row (e_j, 0) in place of the lifted row of b
        std::vector<std::vector<Rational>> m;
        m.reserve(B.order.size());
        for (int bb : B.order) {
          std::vector<Rational> r = config.point(bb);
          r.push_back(Rational(1));
          m.push_back(std::move(r));
        }
        std::vector<Rational> rep(static_cast<size_t>(d + 1), Rational(0));
        rep[static_cast<size_t>(j)] = 1;
        m[static_cast<size_t>(row)] = std::move(rep);
        s = sign_of(det_exact(std::move(m)));
      }
      // s cannot remain 0: the coordinate rows together with the basis rows
      // span R^{d+1}.
    }
    if (s < 0) return false;
  }
  return true;
}

namespace {

struct EvalContext {
  const PointConfig& config;
  const Point& x;
  EvalDiagnostics* diag;
  std::map<std::vector<int>, double> memo;  // per-call, keyed by sub-multiset

  double eval(const std::vector<int>& knots, const std::vector<int>* hint);
};

double EvalContext::eval(const std::vector<int>& knots,
                         const std::vector<int>* hint) {
  auto it = memo.find(knots);
  if (it != memo.end()) return it->second;

  const int d = config.dim;
  const int k = static_cast<int>(knots.size()) - d - 1;
  double value = 0.0;

  if (affine_rank(config, knots) < d) {
    // supported on a zero-measure set
    value = 0.0;
  } else if (k == 0) {
    auto ob = det_plus(config, knots);
    if (ob && simplex_indicator_limit(config, *ob, x, diag)) {
      double fact = 1.0;
      for (int i = 2; i <= d; ++i) fact *= i;
      value = fact / to_double(ob->det);
    }
  } else {
    // pick the recurrence basis: hinted at top level, else greedy pivoting
    // (largest exact pivot per elimination column limits cancellation)
    std::optional<OrderedBasis> basis;
    if (hint) {
      basis = det_plus(config, *hint);
      if (!basis)
        throw std::invalid_argument("basis_hint is affinely dependent");
    } else {
      std::vector<std::vector<Rational>> rows;
      rows.reserve(knots.size());
      for (int i : knots) {
        auto r = config.point(i);
        r.push_back(Rational(1));
        rows.push_back(std::move(r));
      }
      std::vector<char> chosen(knots.size(), 0);
      std::vector<int> B;
      for (int col = 0; col <= d; ++col) {
        int best = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
          if (chosen[r] || rows[r][static_cast<size_t>(col)] == 0) continue;
          if (best < 0 || abs(rows[r][static_cast<size_t>(col)]) >
                              abs(rows[static_cast<size_t>(best)][static_cast<size_t>(col)]))
            best = static_cast<int>(r);
        }
        if (best < 0) break;  // cannot happen at full affine rank
        chosen[static_cast<size_t>(best)] = 1;
        B.push_back(knots[static_cast<size_t>(best)]);
        for (size_t r = 0; r < rows.size(); ++r) {
          if (chosen[r] || rows[r][static_cast<size_t>(col)] == 0) continue;
          Rational f = rows[r][static_cast<size_t>(col)] /
                       rows[static_cast<size_t>(best)][static_cast<size_t>(col)];
          for (int c = col; c <= d; ++c)
            rows[r][static_cast<size_t>(c)] -=
                f * rows[static_cast<size_t>(best)][static_cast<size_t>(c)];
        }
      }
      if (static_cast<int>(B.size()) == d + 1) basis = det_plus(config, B);
    }
    if (basis) {
      double acc = 0.0;
      for (int b : basis->order) {
        std::vector<int> sub;
        sub.reserve(knots.size() - 1);
        bool dropped = false;
        for (int i : knots) {
          if (!dropped && i == b) {
            dropped = true;
            continue;
          }
          sub.push_back(i);
        }
        double m = eval(sub, nullptr);
        if (m != 0.0)
          acc += to_double(det_sub(config, *basis, b, x) / basis->det) * m;
      }
      value = acc * (double(k + d) / double(k));
    }
  }
  memo.emplace(knots, value);
  return value;
}

}  // namespace

double eval_spline(const PointConfig& config, const std::vector<int>& knots,
                   const Point& x, const SplineEvalOptions& opts) {
  const int d = config.dim;
  if (static_cast<int>(knots.size()) < d + 1)
    throw std::invalid_argument("need at least d+1 knots");
  std::vector<int> sorted = knots;
  std::sort(sorted.begin(), sorted.end());
  EvalContext ctx{config, x, opts.diag, {}};
  return ctx.eval(sorted, opts.basis_hint);
}

double eval_spline(const SimplexSpline& spline, const Point& x,
                   const SplineEvalOptions& opts) {
  return eval_spline(*spline.config, spline.knots, x, opts);
}

std::pair<double, double> knot_insertion_lhs_rhs(const PointConfig& config,
                                                 const std::vector<int>& X,
                                                 const std::vector<int>& B,
                                                 int c, const Point& x) {
  if (static_cast<int>(X.size()) < config.dim + 2)
    throw std::invalid_argument("knot insertion needs |X| >= d+2");
  if (std::find(B.begin(), B.end(), c) != B.end())
    throw std::invalid_argument("c must not belong to B");
  auto basis = det_plus(config, B);
  if (!basis) return {0.0, 0.0};  // degenerate basis: every side vanishes

  auto drop = [&](int v) {
    std::vector<int> out;
    bool dropped = false;
    for (int i : X) {
      if (!dropped && i == v) {
        dropped = true;
        continue;
      }
      out.push_back(i);
    }
    return out;
  };

  double lhs = to_double(basis->det) * eval_spline(config, drop(c), x);
  double rhs = 0.0;
  for (int b : basis->order)
    rhs += to_double(det_sub(config, *basis, b, c)) *
           eval_spline(config, drop(b), x);
  return {lhs, rhs};
}

}  // namespace zonospline
