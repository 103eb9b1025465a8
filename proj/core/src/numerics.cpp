#include "rkdisc/numerics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

namespace rkdisc {

namespace {

constexpr double pi = std::numbers::pi;

bool finite(double x) { return std::isfinite(x); }
bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm_of(double x) { return std::abs(x); }
double norm_of(Complex z) { return std::abs(z); }

}  // namespace

void QuadratureSpec::validate() const {
  if (panels < 1) throw DomainError("QuadratureSpec: panels must be >= 1");
  if (nodes_per_panel < 2) throw DomainError("QuadratureSpec: nodes_per_panel must be >= 2");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("QuadratureSpec: tolerances must be positive");
}

const GaussRule& gauss_rule(int n) {
  if (n < 1) throw DomainError("gauss_rule: order must be >= 1");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre three-term recurrence for P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Recompute derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  auto [pos, inserted] = cache.emplace(n, std::move(rule));
  return pos->second;
}

namespace {

template <class T>
T gauss_panel(const std::function<T(double)>& f, double lo, double hi,
              const GaussRule& rule) {
  const double c = 0.5 * (hi + lo);
  const double h = 0.5 * (hi - lo);
  CompensatedSum re, im;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = c + h * rule.nodes[i];
    T v = f(x);
    if (!finite(v)) throw NonFinite("integrate_interval: non-finite integrand value");
    if constexpr (std::is_same_v<T, double>) {
      re.add(rule.weights[i] * v);
    } else {
      re.add(rule.weights[i] * v.real());
      im.add(rule.weights[i] * v.imag());
    }
  }
  if constexpr (std::is_same_v<T, double>)
    return h * re.value();
  else
    return h * Complex{re.value(), im.value()};
}

template <class T>
T trapezoid_panel(const std::function<T(double)>& f, double lo, double hi, int nodes) {
  const double h = (hi - lo) / (nodes - 1);
  CompensatedSum re, im;
  for (int i = 0; i < nodes; ++i) {
    const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
    T v = f(lo + i * h);
    if (!finite(v)) throw NonFinite("integrate_interval: non-finite integrand value");
    if constexpr (std::is_same_v<T, double>) {
      re.add(w * v);
    } else {
      re.add(w * v.real());
      im.add(w * v.imag());
    }
  }
  if constexpr (std::is_same_v<T, double>)
    return h * re.value();
  else
    return h * Complex{re.value(), im.value()};
}

template <class T>
struct AdaptivePanel {
  double lo, hi;
  T value;     // sum of the two half-panel estimates
  double err;  // |fine - coarse|
};

template <class T>
AdaptivePanel<T> make_panel(const std::function<T(double)>& f, double lo, double hi,
                            const QuadratureSpec& spec, const GaussRule& rule) {
  const double mid = 0.5 * (lo + hi);
  T coarse, fine;
  if (spec.method == QuadratureSpec::Method::gauss_legendre) {
    coarse = gauss_panel(f, lo, hi, rule);
    fine = gauss_panel(f, lo, mid, rule) + gauss_panel(f, mid, hi, rule);
  } else {
    coarse = trapezoid_panel(f, lo, hi, spec.nodes_per_panel);
    fine = trapezoid_panel(f, lo, mid, spec.nodes_per_panel) +
           trapezoid_panel(f, mid, hi, spec.nodes_per_panel);
  }
  return {lo, hi, fine, norm_of(fine - coarse)};
}

template <class T>
IntegralResult<T> integrate_interval_impl(const std::function<T(double)>& f,
                                          double a, double b,
                                          const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw DomainError("integrate_interval: need a < b");
  const GaussRule& rule = gauss_rule(spec.nodes_per_panel);

  auto worse = [](const AdaptivePanel<T>& x, const AdaptivePanel<T>& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.lo > y.lo;  // deterministic tie break
  };
  std::priority_queue<AdaptivePanel<T>, std::vector<AdaptivePanel<T>>, decltype(worse)>
      queue(worse);

  int panels_used = 0;
  T total{};
  double err_total = 0.0;
  const double h = (b - a) / spec.panels;
  for (int i = 0; i < spec.panels; ++i) {
    double lo = a + i * h;
    double hi = (i + 1 == spec.panels) ? b : a + (i + 1) * h;
    auto p = make_panel(f, lo, hi, spec, rule);
    total += p.value;
    err_total += p.err;
    queue.push(std::move(p));
    ++panels_used;
  }

  while (err_total > std::max(spec.abs_tol, spec.rel_tol * norm_of(total))) {
    if (panels_used >= spec.max_panels)
      throw NonConvergence("integrate_interval: panel budget exhausted");
    AdaptivePanel<T> worst = queue.top();
    queue.pop();
    total -= worst.value;
    err_total -= worst.err;
    const double mid = 0.5 * (worst.lo + worst.hi);
    for (auto [lo, hi] : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
      auto p = make_panel(f, lo, hi, spec, rule);
      total += p.value;
      err_total += p.err;
      queue.push(std::move(p));
      ++panels_used;
    }
  }

  // Recompute the final value with a compensated pass over the settled
  // panels; the incremental total above has accumulated update noise.
  std::vector<AdaptivePanel<T>> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  CompensatedSumComplex acc;
  double err_final = 0.0;
  for (const auto& p : panels) {
    if constexpr (std::is_same_v<T, double>)
      acc.add(Complex{p.value, 0.0});
    else
      acc.add(p.value);
    err_final += p.err;
  }
  IntegralResult<T> result;
  if constexpr (std::is_same_v<T, double>)
    result.value = acc.value().real();
  else
    result.value = acc.value();
  result.error_estimate = err_final;
  result.panels_used = panels_used;
  return result;
}

}  // namespace

IntegralResult<double> integrate_interval(const std::function<double(double)>& f,
                                          double a, double b,
                                          const QuadratureSpec& spec) {
  return integrate_interval_impl(f, a, b, spec);
}

IntegralResult<Complex> integrate_interval_complex(const std::function<Complex(double)>& f,
                                                   double a, double b,
                                                   const QuadratureSpec& spec) {
  return integrate_interval_impl(f, a, b, spec);
}

double integrate_circle(const std::function<double(CirclePoint)>& F, int n_nodes) {
  if (n_nodes < 16) throw DomainError("integrate_circle: need n_nodes >= 16");
  CompensatedSum acc;
  for (int k = 0; k < n_nodes; ++k) {
    const double theta = two_pi * (k + 0.5) / n_nodes;
    acc.add(F(CirclePoint(theta)));
  }
  return acc.value() / n_nodes;
}

namespace {

/// Dyadic radial panel edges [0, 1/2, 3/4, ..., 1 - 2^-K, 1].
std::vector<double> radial_edges(int levels) {
  std::vector<double> edges{0.0};
  double gap = 0.5;
  for (int j = 0; j < levels; ++j) {
    edges.push_back(1.0 - gap);
    gap *= 0.5;
  }
  edges.push_back(1.0);
  return edges;
}

}  // namespace

double integrate_disc(const std::function<double(UnitDiscPoint)>& g,
                      int radial_nodes, int angular_nodes) {
  if (radial_nodes < 16 || angular_nodes < 16)
    throw DomainError("integrate_disc: need >= 16 nodes in each direction");

  const int m = 12;  // Gauss nodes per radial panel
  const int levels = std::clamp(radial_nodes / m - 1, 4, 44);
  const GaussRule& rule = gauss_rule(m);
  const auto edges = radial_edges(levels);

  CompensatedSum acc;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double c = 0.5 * (edges[p + 1] + edges[p]);
    const double h = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < m; ++i) {
      const double r = c + h * rule.nodes[i];
      CompensatedSum ring;
      for (int k = 0; k < angular_nodes; ++k) {
        const double theta = two_pi * (k + 0.5) / angular_nodes;
        const double v = g(UnitDiscPoint(r * std::cos(theta), r * std::sin(theta)));
        if (!std::isfinite(v)) throw NonFinite("integrate_disc: non-finite integrand value");
        ring.add(v);
      }
      // dA normalized: (1/pi) r dr dtheta, angular mean carries 2pi/angular_nodes.
      acc.add(h * rule.weights[i] * 2.0 * r * (ring.value() / angular_nodes));
    }
  }
  return acc.value();
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_e1: need x > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    constexpr double euler_mascheroni = 0.57721566490153286060651209;
    CompensatedSum acc;
    double term = 1.0;
    for (int k = 1; k <= 64; ++k) {
      term *= x / k;
      const double contribution = (k % 2 == 1 ? term : -term) / k;
      acc.add(contribution);
      if (std::abs(contribution) < 1e-18) break;
    }
    return -euler_mascheroni - std::log(x) + acc.value();
  }
  // Modified Lentz continued fraction:
  // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

namespace {

/// Gauss-Legendre over [lo, hi], split uniformly so no chunk exceeds
/// max_len. Keeps the coarse regions of a graded mesh resolved at the
/// caller's base resolution.
double gl_capped(const std::function<double(CirclePoint)>& F, double lo, double hi,
                 const GaussRule& rule, double max_len, int* panels_used) {
  const int chunks = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_len)));
  CompensatedSum acc;
  for (int q = 0; q < chunks; ++q) {
    const double qlo = lo + (hi - lo) * q / chunks;
    const double qhi = lo + (hi - lo) * (q + 1) / chunks;
    const double c = 0.5 * (qhi + qlo), h = 0.5 * (qhi - qlo);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = F(CirclePoint(c + h * rule.nodes[i]));
      if (!std::isfinite(v))
        throw NonFinite("integrate_circle_refined: non-finite integrand value");
      acc.add(h * rule.weights[i] * v);
    }
    ++*panels_used;
  }
  return acc.value();
}

struct SideTrend {
  std::vector<double> panel_sums;  // outermost first

  // Geometric classification of the innermost panel sums. Integrable
  // singularities (log, |.|^-alpha with alpha < 1) give decaying sums;
  // 1/|.|^2 and 1/|.| singularities give ratios >= 1.
  bool diverged(double scale) const {
    if (panel_sums.size() < 4) return false;
    const double last = std::abs(panel_sums.back());
    if (last < 1e-16 * (scale + 1.0)) return false;
    int growing = 0;
    for (std::size_t j = panel_sums.size() - 3; j < panel_sums.size(); ++j) {
      const double prev = std::abs(panel_sums[j - 1]);
      if (prev == 0.0) continue;
      if (std::abs(panel_sums[j]) / prev >= 0.9) ++growing;
    }
    return growing >= 3;
  }

  double tail() const {
    if (panel_sums.size() < 2) return 0.0;
    const double last = panel_sums.back();
    const double prev = std::abs(panel_sums[panel_sums.size() - 2]);
    if (prev == 0.0 || last == 0.0) return 0.0;
    double rho = std::abs(last) / prev;
    if (rho >= 0.9) rho = 0.9;
    return last * rho / (1.0 - rho);
  }
};

}  // namespace

RefinedResult integrate_circle_refined(const std::function<double(CirclePoint)>& F,
                                       std::vector<double> focus_angles,
                                       int base_nodes, int max_levels,
                                       int nodes_per_panel) {
  for (double& a : focus_angles) a = CirclePoint::reduce(a);
  std::sort(focus_angles.begin(), focus_angles.end());
  focus_angles.erase(std::unique(focus_angles.begin(), focus_angles.end(),
                                 [](double x, double y) { return std::abs(x - y) < 1e-15; }),
                     focus_angles.end());

  RefinedResult result;
  if (focus_angles.empty()) {
    result.value = integrate_circle(F, std::max(base_nodes, 16));
    result.panels_used = base_nodes;
    return result;
  }

  const GaussRule& rule = gauss_rule(nodes_per_panel);
  const double max_len = two_pi * nodes_per_panel / std::max(base_nodes, 16);
  CompensatedSum acc;
  std::vector<SideTrend> sides;

  const std::size_t n = focus_angles.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = focus_angles[k];
    const double next = (k + 1 < n) ? focus_angles[k + 1] : focus_angles[0] + two_pi;
    const double arc = next - phi;
    if (arc <= 0.0) continue;
    // Half-arcs graded toward phi (from above) and toward `next` (from below).
    for (int side = 0; side < 2; ++side) {
      const double half = 0.5 * arc;
      SideTrend trend;
      double outer = half;
      for (int j = 0; j < max_levels; ++j) {
        const double inner = half * std::ldexp(1.0, -(j + 1));
        double lo, hi;
        if (side == 0) {
          lo = phi + inner;
          hi = phi + outer;
        } else {
          lo = next - outer;
          hi = next - inner;
        }
        // stop once the offset rounds away against the base angle
        if (!(hi > lo) || (side == 0 && !(lo > phi)) || (side == 1 && !(hi < next))) break;
        const double s = gl_capped(F, lo, hi, rule, max_len, &result.panels_used);
        acc.add(s);
        trend.panel_sums.push_back(s);
        outer = inner;
      }
      sides.push_back(std::move(trend));
    }
  }

  const double scale = std::abs(acc.value());
  double tail_total = 0.0;
  for (const auto& side : sides) {
    if (side.diverged(scale)) {
      result.diverged = true;
      result.value = std::numeric_limits<double>::infinity();
      return result;
    }
    const double t = side.tail();
    acc.add(t);
    tail_total += std::abs(t);
  }
  result.value = acc.value() / two_pi;
  result.tail_estimate = tail_total / two_pi;
  return result;
}

double integrate_disc_refined(const std::function<double(UnitDiscPoint)>& g,
                              std::vector<double> focus_angles,
                              int radial_levels, int angular_levels,
                              int nodes_per_panel, int base_angular_nodes) {
  for (double& a : focus_angles) a = CirclePoint::reduce(a);
  std::sort(focus_angles.begin(), focus_angles.end());
  focus_angles.erase(std::unique(focus_angles.begin(), focus_angles.end(),
                                 [](double x, double y) { return std::abs(x - y) < 1e-15; }),
                     focus_angles.end());

  const GaussRule& rule = gauss_rule(nodes_per_panel);
  const double max_len = two_pi * nodes_per_panel / std::max(base_angular_nodes, 16);

  // Angular mesh: graded toward each focus angle, capped panel length away
  // from them; without focus angles a uniform mesh at the base resolution.
  std::vector<std::pair<double, double>> theta_panels;
  auto push_capped = [&](double lo, double hi) {
    if (hi - lo <= 0.0) return;
    const int chunks = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_len)));
    for (int q = 0; q < chunks; ++q)
      theta_panels.emplace_back(lo + (hi - lo) * q / chunks,
                                lo + (hi - lo) * (q + 1) / chunks);
  };
  if (focus_angles.empty()) {
    push_capped(0.0, two_pi);
  } else {
    const std::size_t n = focus_angles.size();
    for (std::size_t k = 0; k < n; ++k) {
      const double phi = focus_angles[k];
      const double next = (k + 1 < n) ? focus_angles[k + 1] : focus_angles[0] + two_pi;
      const double half = 0.5 * (next - phi);
      if (half <= 0.0) continue;
      for (int side = 0; side < 2; ++side) {
        double outer = half;
        for (int j = 0; j < angular_levels; ++j) {
          const double inner = half * std::ldexp(1.0, -(j + 1));
          const double lo = (side == 0) ? phi + inner : next - outer;
          const double hi = (side == 0) ? phi + outer : next - inner;
          if (!(hi > lo) || (side == 0 && !(lo > phi)) || (side == 1 && !(hi < next))) break;
          push_capped(lo, hi);
          outer = inner;
        }
        // innermost gap, collapsed to a single panel touching the vertex
        if (side == 0)
          push_capped(phi, phi + outer);
        else
          push_capped(next - outer, next);
      }
    }
  }

  const auto redges = radial_edges(radial_levels);
  CompensatedSum acc;
  for (std::size_t p = 0; p + 1 < redges.size(); ++p) {
    const double rc = 0.5 * (redges[p + 1] + redges[p]);
    const double rh = 0.5 * (redges[p + 1] - redges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double r = rc + rh * rule.nodes[i];
      const double wr = rh * rule.weights[i] * r / std::numbers::pi;
      CompensatedSum ring;
      for (const auto& [tlo, thi] : theta_panels) {
        const double tc = 0.5 * (thi + tlo), th = 0.5 * (thi - tlo);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
          const double theta = tc + th * rule.nodes[q];
          const double v = g(UnitDiscPoint(r * std::cos(theta), r * std::sin(theta)));
          if (!std::isfinite(v))
            throw NonFinite("integrate_disc_refined: non-finite integrand value");
          ring.add(th * rule.weights[q] * v);
        }
      }
      acc.add(wr * ring.value());
    }
  }
  return acc.value();
}

}  // namespace rkdisc
