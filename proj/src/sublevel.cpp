#include "remezlab/sublevel.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>

#include "remezlab/errors.hpp"

namespace remezlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kConstantTol = 1e-13;
constexpr double kRootCircleTol = 1e-8;
constexpr double kRootClusterTol = 1e-10;
constexpr double kTouchArcTol = 1e-12;

double abs2(const TrigPoly& q, double t) {
  Complex v = eval(q, t);
  return v.real() * v.real() + v.imag() * v.imag();
}

// Maximal runs of "inside" segments between consecutive roots become arcs;
// isolated roots interior to a run are tangential touch points and vanish.
CircleIntervalSet assemble_arcs(std::vector<double> roots, const std::function<double(double)>& g) {
  if (roots.empty()) {
    return g(0.5) <= 0.0 ? CircleIntervalSet::full() : CircleIntervalSet::empty();
  }
  std::sort(roots.begin(), roots.end());
  const std::size_t m = roots.size();
  std::vector<bool> inside(m);
  for (std::size_t i = 0; i < m; ++i) {
    double lo = roots[i];
    double hi = (i + 1 < m) ? roots[i + 1] : roots[0] + kTwoPi;
    inside[i] = g(0.5 * (lo + hi)) <= 0.0;
  }
  if (std::all_of(inside.begin(), inside.end(), [](bool b) { return b; }))
    return CircleIntervalSet::full();
  if (std::none_of(inside.begin(), inside.end(), [](bool b) { return b; }))
    return CircleIntervalSet::empty();

  // A run starts at an inside segment whose predecessor is outside; it ends
  // before the next outside segment.
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m; ++i) {
    if (!inside[i] || inside[(i + m - 1) % m]) continue;
    std::size_t len = 1;
    while (inside[(i + len) % m]) ++len;
    double lo = roots[i];
    double hi = roots[(i + len) % m];
    if (hi <= lo) hi += kTwoPi;
    if (hi - lo > kTouchArcTol) arcs.push_back({lo, hi});
  }
  return CircleIntervalSet::from_raw(std::move(arcs));
}

struct RealTrig {
  // Real trig polynomial g0 + 2 sum Re(g_k e^{ikt}) with g0 real.
  std::vector<Complex> g;  // g[k], k = 0..N
  double scale = 0.0;      // sum |g_k| over all indices

  double value(double t) const {
    double acc = g[0].real();
    for (std::size_t k = 1; k < g.size(); ++k) {
      Complex e = std::polar(1.0, static_cast<double>(k) * t);
      acc += 2.0 * (g[k] * e).real();
    }
    return acc;
  }
  double derivative(double t) const {
    double acc = 0.0;
    for (std::size_t k = 1; k < g.size(); ++k) {
      Complex e = std::polar(1.0, static_cast<double>(k) * t);
      acc += -2.0 * static_cast<double>(k) * (g[k] * e).imag();
    }
    return acc;
  }
};

RealTrig make_real_trig(const TrigPoly& g) {
  RealTrig rt;
  rt.g.resize(static_cast<std::size_t>(g.degree()) + 1);
  for (int k = 0; k <= g.degree(); ++k) rt.g[static_cast<std::size_t>(k)] = g.coeff(k);
  rt.g[0] = Complex{g.coeff(0).real(), 0.0};
  for (int k = -g.degree(); k <= g.degree(); ++k) rt.scale += std::abs(g.coeff(k));
  return rt;
}

std::vector<double> dedupe_circle(std::vector<double> ts) {
  if (ts.empty()) return ts;
  std::sort(ts.begin(), ts.end());
  std::vector<double> out;
  for (double t : ts) {
    if (out.empty() || t - out.back() > kRootClusterTol) out.push_back(t);
  }
  // Wraparound cluster: first and last may be the same root.
  if (out.size() > 1 && (out.front() + kTwoPi) - out.back() <= kRootClusterTol) out.pop_back();
  return out;
}

std::vector<double> companion_unit_roots(const RealTrig& rt) {
  const int n_deg = static_cast<int>(rt.g.size()) - 1;
  // Trim negligible leading coefficients.
  int eff = n_deg;
  double gmax = 0.0;
  for (const auto& c : rt.g) gmax = std::max(gmax, std::abs(c));
  while (eff > 0 && std::abs(rt.g[static_cast<std::size_t>(eff)]) <= 1e-14 * gmax) --eff;
  if (eff == 0) return {};

  // p(z) = sum_{k=-eff}^{eff} g_k z^{k+eff}, degree 2*eff, g_{-k} = conj(g_k).
  const int deg = 2 * eff;
  Eigen::VectorXcd mon(deg);
  Complex lead = rt.g[static_cast<std::size_t>(eff)];
  for (int j = 0; j < deg; ++j) {
    int k = j - eff;
    Complex coeff = (k >= 0) ? rt.g[static_cast<std::size_t>(k)]
                             : std::conj(rt.g[static_cast<std::size_t>(-k)]);
    mon[j] = coeff / lead;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = Complex{1.0, 0.0};
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -mon[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NoConvergenceError("companion eigenvalue solve failed");

  std::vector<double> roots;
  for (int i = 0; i < deg; ++i) {
    Complex z = solver.eigenvalues()[i];
    if (std::abs(std::abs(z) - 1.0) > kRootCircleTol) continue;
    double t = std::arg(z);
    if (t < 0.0) t += kTwoPi;
    roots.push_back(t);
  }
  return roots;
}

void newton_polish_circle(const RealTrig& rt, std::vector<double>& roots) {
  const double clamp = M_PI / (4.0 * std::max<std::size_t>(rt.g.size(), 2));
  for (double& t : roots) {
    double cur = t;
    for (int it = 0; it < 40; ++it) {
      double f = rt.value(cur);
      double df = rt.derivative(cur);
      if (std::abs(df) < 1e-14 * rt.scale) break;
      double step = f / df;
      step = std::clamp(step, -clamp, clamp);
      cur -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(rt.value(cur)) > 1e-7 * rt.scale && std::abs(rt.value(cur)) > std::abs(rt.value(t)))
      throw NoConvergenceError("Newton polish failed on a sublevel boundary root");
    if (std::abs(rt.value(cur)) <= std::abs(rt.value(t))) t = cur;
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
  }
}

}  // namespace

SublevelBackend backend_from_string(const std::string& name) {
  if (name == "eigen") return SublevelBackend::Eigen;
  if (name == "sample") return SublevelBackend::Sample;
  throw DomainError("unknown backend: " + name);
}

std::string to_string(SublevelBackend backend) {
  return backend == SublevelBackend::Eigen ? "eigen" : "sample";
}

CircleIntervalSet sublevel_set(const TrigPoly& q, double level, SublevelBackend backend) {
  if (q.is_zero()) throw DomainError("sublevel_set requires a nonzero polynomial");
  if (!(level > 0.0)) throw DomainError("level must be positive");
  if (backend == SublevelBackend::Sample) return LevelScanner(q).sublevel(level);

  TrigPoly g = abs_squared(q);
  g.set_coeff(0, g.coeff(0) - level * level);
  RealTrig rt = make_real_trig(g);
  if (rt.scale < kConstantTol)
    throw ConstantOnLevelError("|Q|^2 - level^2 vanishes identically");

  std::vector<double> roots = companion_unit_roots(rt);
  newton_polish_circle(rt, roots);
  roots = dedupe_circle(std::move(roots));
  return assemble_arcs(std::move(roots), [&rt](double t) { return rt.value(t); });
}

double deficiency(const TrigPoly& q, SublevelBackend backend) {
  return kTwoPi - lebesgue(sublevel_set(q, 1.0, backend));
}

LevelScanner::LevelScanner(const TrigPoly& q, int density) : q_(q) {
  if (q.is_zero()) throw DomainError("LevelScanner requires a nonzero polynomial");
  if (density < 1) density = 1;
  grid_ = std::max(1024, 64 * 2 * q.degree()) * density;
  values_.resize(static_cast<std::size_t>(grid_));
  const double h = kTwoPi / grid_;
  for (int i = 0; i < grid_; ++i) values_[static_cast<std::size_t>(i)] = abs2(q_, i * h);
}

double LevelScanner::grid_max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, v);
  return std::sqrt(m);
}

CircleIntervalSet LevelScanner::sublevel(double level) const {
  if (!(level > 0.0)) throw DomainError("level must be positive");
  const double lv2 = level * level;
  const double h = kTwoPi / grid_;

  double wmax = 0.0;
  for (double v : values_) wmax = std::max(wmax, std::abs(v - lv2));
  if (wmax < kConstantTol) throw ConstantOnLevelError("|Q|^2 - level^2 vanishes identically");

  std::vector<double> roots;
  for (int i = 0; i < grid_; ++i) {
    bool out_here = values_[static_cast<std::size_t>(i)] > lv2;
    bool out_next = values_[static_cast<std::size_t>((i + 1) % grid_)] > lv2;
    if (out_here == out_next) continue;
    double lo = i * h, hi = (i + 1) * h;
    double flo = values_[static_cast<std::size_t>(i)] - lv2;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
      double mid = 0.5 * (lo + hi);
      double fmid = abs2(q_, mid) - lv2;
      if ((fmid > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    double r = 0.5 * (lo + hi);
    if (r >= kTwoPi) r -= kTwoPi;
    roots.push_back(r);
  }
  roots = dedupe_circle(std::move(roots));
  return assemble_arcs(std::move(roots), [this, lv2](double t) { return abs2(q_, t) - lv2; });
}

double LevelScanner::deficiency_at(double level) const { return kTwoPi - lebesgue(sublevel(level)); }

namespace {

struct RealPoly {
  std::vector<double> c;  // power basis
  double scale = 0.0;

  double value(double x) const {
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
  }
  double derivative(double x) const {
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) acc = acc * x + static_cast<double>(j) * c[j];
    return acc;
  }
};

std::vector<double> real_companion_roots(const RealPoly& p, double lo, double hi) {
  int deg = static_cast<int>(p.c.size()) - 1;
  double cmax = 0.0;
  for (double v : p.c) cmax = std::max(cmax, std::abs(v));
  while (deg > 0 && std::abs(p.c[static_cast<std::size_t>(deg)]) <= 1e-14 * cmax) --deg;
  if (deg == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  double lead = p.c[static_cast<std::size_t>(deg)];
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p.c[static_cast<std::size_t>(i)] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NoConvergenceError("companion eigenvalue solve failed");

  const double slack = 1e-9 * (hi - lo);
  std::vector<double> roots;
  for (int i = 0; i < deg; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z.real()))) continue;
    double x = z.real();
    if (x < lo - slack || x > hi + slack) continue;
    // Newton polish.
    double cur = x;
    for (int it = 0; it < 40; ++it) {
      double f = p.value(cur);
      double df = p.derivative(cur);
      if (std::abs(df) < 1e-14 * std::max(p.scale, 1.0)) break;
      double step = f / df;
      cur -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(cur))) break;
    }
    if (std::abs(p.value(cur)) <= std::abs(p.value(x))) x = cur;
    roots.push_back(std::clamp(x, lo, hi));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || r - out.back() > kRootClusterTol) out.push_back(r);
  }
  return out;
}

}  // namespace

LineIntervalSet alg_sublevel(const AlgPoly& p, double level, double a, double b) {
  if (!(b > a)) throw DomainError("alg_sublevel requires a < b");
  if (!(level > 0.0)) throw DomainError("level must be positive");
  const int n = p.degree();
  std::vector<double> pr(static_cast<std::size_t>(n) + 1), pi(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    pr[static_cast<std::size_t>(j)] = p.coeff(j).real();
    pi[static_cast<std::size_t>(j)] = p.coeff(j).imag();
  }
  // H = Re(P)^2 + Im(P)^2 - level^2, real coefficients.
  RealPoly h;
  h.c.assign(static_cast<std::size_t>(2 * n) + 1, 0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      h.c[static_cast<std::size_t>(i + j)] +=
          pr[static_cast<std::size_t>(i)] * pr[static_cast<std::size_t>(j)] +
          pi[static_cast<std::size_t>(i)] * pi[static_cast<std::size_t>(j)];
    }
  h.c[0] -= level * level;
  for (double v : h.c) h.scale += std::abs(v);
  if (h.scale < kConstantTol) throw ConstantOnLevelError("|P|^2 - level^2 vanishes identically");

  std::vector<double> cuts = real_companion_roots(h, a, b);
  std::vector<double> points;
  points.push_back(a);
  for (double r : cuts) {
    if (r > a + kRootClusterTol && r < b - kRootClusterTol) points.push_back(r);
  }
  points.push_back(b);

  std::vector<Arc> parts;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double mid = 0.5 * (points[i] + points[i + 1]);
    if (h.value(mid) <= 0.0) parts.push_back({points[i], points[i + 1]});
  }
  return LineIntervalSet(a, b, std::move(parts));
}

std::pair<double, double> pushforward_check(const TrigPoly& q) {
  AlgPoly p = to_cos_poly(q);  // throws NotEvenError for non-even input
  LineIntervalSet below = alg_sublevel(p, 1.0, -1.0, 1.0);
  double mu = cheb_measure(-1.0, 1.0, below);
  double half_circle = 0.5 * lebesgue(sublevel_set(q, 1.0, SublevelBackend::Eigen));
  return {mu, half_circle};
}

}  // namespace remezlab
