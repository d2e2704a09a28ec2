#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kerlab/bandlimited.hpp"
#include "kerlab/catalog.hpp"
#include "kerlab/collocate.hpp"
#include "kerlab/errors.hpp"
#include "kerlab/norms.hpp"
#include "kerlab/sites.hpp"

namespace kerlab {

/// Interpolation route driven by the convergence harness.
enum class Route {
  gaussian,  ///< fixed-width gaussian translates at shrinking scaled sites
  sinc       ///< bandlimited (Paley-Wiener) interpolation, band pi/h
};

inline const char* to_string(Route r) {
  return r == Route::gaussian ? "gaussian" : "sinc";
}

inline Route route_from_string(const std::string& s) {
  if (s == "gaussian" || s == "gauss") return Route::gaussian;
  if (s == "sinc" || s == "bandlimited") return Route::sinc;
  throw UnknownName("unknown route: " + s);
}

/// Full specification of one convergence sweep.
struct SweepConfig {
  Route route = Route::sinc;
  std::string function = "bspline3";
  int k = 3;                      ///< seminorm order (ratio + fill-rate metrics)
  std::vector<int> w2j_orders;    ///< derivative seminorm error orders to record
  SiteRule rule = SiteRule::sinusoidal;
  double amplitude = 0.2;
  std::uint64_t seed = default_seed;
  std::vector<double> h_list = {1.0, 0.5, 0.25, 0.125, 0.0625};
  double T = 4.0;                 ///< error window half-width [-T, T]
  double P = 8.0;                 ///< padding: sites/grid extend to +-(T + P/2)
  double lambda = 1.0;            ///< gaussian route kernel width parameter
  int points_per_unit = 256;      ///< Simpson density for the L2 error
  int wide_grid = 8192;           ///< power-of-two residual grid size
  double leak_threshold = 0.05;   ///< boundary-leak flag level
  double trust_cond = 1e12;       ///< rows above are excluded from rate fits
  double flag_cond = 1e14;        ///< rows above are marked ill-conditioned
  int max_sites = 4096;
};

/// One h-row of a convergence sweep.
struct SweepRow {
  double h = 0.0;
  int n_sites = 0;
  double cond_est = 0.0;
  double err_l2 = 0.0;
  std::map<int, double> err_w2j;  ///< |F - g|_{W_2^j} per requested j
  double seminorm_ratio = 0.0;    ///< |F|_{W_2^k} / |g|_{W_2^k}
  double site_residual = 0.0;     ///< max interpolation defect at the sites
  double max_sample = 0.0;        ///< max |g| over the sites (residual scale)
  double leak = 0.0;              ///< outer-band residual fraction (wide grid)
  std::vector<std::string> flags;

  bool flagged() const { return !flags.empty(); }
};

/// Sweep outcome: per-h rows plus log-log fitted rates over the
/// unflagged rows.
struct ConvergenceReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  double rate_l2 = 0.0;
  std::map<int, double> rate_w2j;
  int fit_rows = 0;               ///< rows entering the rate fits
  double target_seminorm = 0.0;   ///< |g|_{W_2^k}
  double g_tail = 0.0;            ///< ||g||_{L2} mass outside [-T, T]
};

/// Least-squares slope of log(err) against log(h) over the rows where
/// include[i] is true.  Throws InsufficientData with fewer than three
/// usable rows and NonPositiveError when a used error is not positive.
inline double fit_rate(const std::vector<double>& h, const std::vector<double>& err,
                       const std::vector<bool>& include) {
  if (h.size() != err.size() || h.size() != include.size())
    throw BadParameter("fit_rate: length mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!include[i]) continue;
    if (!(err[i] > 0.0))
      throw NonPositiveError("fit_rate: error values must be positive");
    lx.push_back(std::log(h[i]));
    ly.push_back(std::log(err[i]));
  }
  if (lx.size() < 3)
    throw InsufficientData("fit_rate: need at least three usable rows, have " +
                           std::to_string(lx.size()));
  const double n = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace detail {

/// Index half-width m = ceil((T + P) / (h q)) with q the rule's
/// a-priori minimal gap, capped; the family j = -m..m then has scaled
/// half-span h q m >= T + P, covering the padded window.
inline int sweep_half_width(const SweepConfig& cfg, double h) {
  const double q = rule_min_gap(cfg.rule, cfg.amplitude);
  const double raw = std::ceil((cfg.T + cfg.P) / (h * q));
  const double cap = std::floor((static_cast<double>(cfg.max_sites) - 1.0) / 2.0);
  return static_cast<int>(std::min(raw, cap));
}

}  // namespace detail

/// Run one convergence sweep.  Every h produces a row; rows whose
/// conditioning or boundary leak disqualify them carry flags and are
/// excluded from the fitted rates.
inline ConvergenceReport run_convergence(const SweepConfig& cfg) {
  const TestFunction g = catalog(cfg.function);
  if (cfg.k < 0 || cfg.k > g.k_max())
    throw SmoothnessExceeded("sweep order k exceeds the target's smoothness");
  for (int j : cfg.w2j_orders)
    if (j < 0 || j > cfg.k)
      throw BadParameter("derivative error order must lie in [0, k]");
  if (cfg.h_list.empty()) throw BadSweep("sweep needs a non-empty h list");
  for (std::size_t i = 0; i < cfg.h_list.size(); ++i) {
    const double h = cfg.h_list[i];
    if (!std::isfinite(h) || !(h > 0.0) || h > 1.0)
      throw BadH("sweep h values must lie in (0, 1]");
    if (i > 0 && !(h < cfg.h_list[i - 1]))
      throw BadSweep("sweep h values must be strictly decreasing");
  }
  if (!(cfg.T > 0.0) || !(cfg.P >= 0.0))
    throw BadParameter("sweep window parameters must be positive");

  ConvergenceReport rep;
  rep.config = cfg;
  rep.target_seminorm = sobolev_seminorm(g, cfg.k);
  rep.g_tail = g.tail_l2(cfg.T);

  const double W = cfg.T + cfg.P / 2.0;  // wide diagnostic half-window
  SolveOptions solve_opt;
  solve_opt.flag_cond = cfg.flag_cond;
  solve_opt.dense_cap = cfg.max_sites;

  for (double h : cfg.h_list) {
    SweepRow row;
    row.h = h;
    const int m = detail::sweep_half_width(cfg, h);
    const int n = 2 * m + 1;
    row.n_sites = n;
    const SiteFamily fam = make_sites(cfg.rule, n, cfg.amplitude, cfg.seed);
    if (h * fam.x.front() > -(cfg.T + cfg.P) || h * fam.x.back() < cfg.T + cfg.P)
      throw CoverageError("scaled site family does not cover the padded window");

    std::vector<double> samples(fam.x.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i] = g.value(h * fam.x[i]);
      row.max_sample = std::max(row.max_sample, std::abs(samples[i]));
    }

    // Solve and build the interpolant for the chosen route.
    CollocationResult res;
    GaussianInterpolant Fg;
    SincInterpolant Fs;
    if (cfg.route == Route::gaussian) {
      res = collocate_gaussian(fam, h, samples, cfg.lambda, solve_opt);
      Fg = gaussian_interpolant(fam, h, res, cfg.lambda);
    } else {
      res = sinc_collocate(fam, samples, solve_opt);
      Fs = sinc_interpolant(fam, h, res);
    }
    auto F = [&](double t) {
      return cfg.route == Route::gaussian ? Fg(t) : Fs(t);
    };
    row.cond_est = res.cond_est;
    row.site_residual = res.residual_inf;

    // Residual diagnostics on the wide power-of-two grid.
    const int N = cfg.wide_grid;
    std::vector<double> resid(static_cast<std::size_t>(N));
    std::vector<double> fvals(static_cast<std::size_t>(N));
    const double dx = 2.0 * W / static_cast<double>(N);
    for (int i = 0; i < N; ++i) {
      const double x = -W + dx * static_cast<double>(i);
      const double fv = F(x);
      fvals[static_cast<std::size_t>(i)] = fv;
      resid[static_cast<std::size_t>(i)] = fv - g.value(x);
    }

    row.err_l2 = l2_error(F, g, cfg.T, cfg.points_per_unit);
    for (int j : cfg.w2j_orders) {
      const auto gs = grid_seminorm(resid, W, j, cfg.leak_threshold, 1.0 / 16.0, false);
      row.err_w2j[j] = gs.value;
      row.leak = gs.leak;
    }
    if (cfg.w2j_orders.empty()) {
      const auto gs = grid_seminorm(resid, W, 0, cfg.leak_threshold, 1.0 / 16.0, false);
      row.leak = gs.leak;
    }

    // Stability ratio |F| / |g| in W_2^k: the sinc route has an exact
    // band-limited transform, the gaussian route uses the grid estimate.
    double f_semi = 0.0;
    if (cfg.route == Route::sinc) {
      f_semi = pw_seminorm(Fs, cfg.k);
    } else {
      f_semi = grid_seminorm(fvals, W, cfg.k, 1.0, 1.0 / 16.0, false).value;
    }
    row.seminorm_ratio = f_semi / rep.target_seminorm;

    if (row.cond_est > cfg.flag_cond) {
      row.flags.push_back("ill-conditioned");
    } else if (row.cond_est > cfg.trust_cond) {
      row.flags.push_back("untrusted");
    }
    // The leak gate protects the truncated-window metrics against sinc
    // ringing.  On the gaussian route the trust policy is conditioning:
    // near the flat limit the residual sits at the rounding floor, where
    // the outer-band fraction measures noise, not window truncation.
    if (cfg.route == Route::sinc && row.leak > cfg.leak_threshold)
      row.flags.push_back("boundary-leak");
    rep.rows.push_back(std::move(row));
  }

  // Fitted rates over the unflagged rows.
  std::vector<double> hs, el2;
  std::vector<bool> inc;
  for (const auto& r : rep.rows) {
    hs.push_back(r.h);
    el2.push_back(r.err_l2);
    inc.push_back(!r.flagged());
  }
  rep.fit_rows = static_cast<int>(std::count(inc.begin(), inc.end(), true));
  rep.rate_l2 = fit_rate(hs, el2, inc);
  for (int j : cfg.w2j_orders) {
    std::vector<double> ej;
    for (const auto& r : rep.rows) ej.push_back(r.err_w2j.at(j));
    rep.rate_w2j[j] = fit_rate(hs, ej, inc);
  }
  return rep;
}

/// Interpolate catalog member `function` at one mesh width h on the
/// bandlimited route and report the Bernstein / Jackson inequality pair
/// for the result.
inline BernsteinJacksonReport bernstein_jackson_check(const SweepConfig& cfg, double h) {
  if (!std::isfinite(h) || !(h > 0.0) || h > 1.0)
    throw BadH("bernstein_jackson_check: h must lie in (0, 1]");
  const TestFunction g = catalog(cfg.function);
  if (cfg.k < 0 || cfg.k > g.k_max())
    throw SmoothnessExceeded("check order k exceeds the target's smoothness");
  SweepConfig one = cfg;
  one.route = Route::sinc;
  one.h_list = {h};
  const int m = detail::sweep_half_width(one, h);
  const SiteFamily fam = make_sites(one.rule, 2 * m + 1, one.amplitude, one.seed);
  if (h * fam.x.front() > -(one.T + one.P) || h * fam.x.back() < one.T + one.P)
    throw CoverageError("scaled site family does not cover the padded window");
  std::vector<double> samples(fam.x.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = g.value(h * fam.x[i]);
  SolveOptions solve_opt;
  solve_opt.flag_cond = one.flag_cond;
  solve_opt.dense_cap = one.max_sites;
  const auto res = sinc_collocate(fam, samples, solve_opt);
  const auto F = sinc_interpolant(fam, h, res);

  BernsteinJacksonReport rep;
  rep.h = h;
  rep.bernstein_lhs = bernstein_quotient(F);
  rep.seminorm_g = sobolev_seminorm(g, one.k);
  rep.jackson_lhs = l2_error(F, g, one.T, one.points_per_unit);
  rep.ratio_jackson = jackson_ratio(rep.jackson_lhs, F.bandwidth(), one.k, rep.seminorm_g);
  rep.condition = res.cond_est;
  return rep;
}

/// One row of a fill-distance inequality check.
struct FillRow {
  double h = 0.0;
  int n_sites = 0;
  double fill = 0.0;          ///< half the largest scaled gap
  double cond_est = 0.0;
  double lhs = 0.0;           ///< ||F - g||_{L2[-T,T]}
  double res_seminorm = 0.0;  ///< |F - g|_{W_2^k} (wide-grid estimate)
  double ratio = 0.0;         ///< lhs / (fill^k res_seminorm)
  bool trusted = true;        ///< cond_est within the trust threshold
};

/// Check that the L2 norm of the interpolation residual (which vanishes
/// at every site) is controlled by fill^k times its W_2^k seminorm,
/// uniformly over the h sweep: the ratio must stay within a fixed
/// multiplicative band across the trusted (well-conditioned) rows.
struct FillReport {
  std::vector<FillRow> rows;
  int trusted_rows = 0;
  double ratio_spread = 0.0;  ///< max ratio / min ratio over trusted rows
};

inline FillReport fill_distance_check(const SweepConfig& cfg) {
  const TestFunction g = catalog(cfg.function);
  if (cfg.k < 0 || cfg.k > g.k_max())
    throw SmoothnessExceeded("fill check order k exceeds the target's smoothness");
  FillReport rep;
  const double W = cfg.T + cfg.P / 2.0;
  SolveOptions solve_opt;
  solve_opt.flag_cond = cfg.flag_cond;
  solve_opt.dense_cap = cfg.max_sites;
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
  for (double h : cfg.h_list) {
    const int n = 2 * detail::sweep_half_width(cfg, h) + 1;
    const SiteFamily fam = make_sites(cfg.rule, n, cfg.amplitude, cfg.seed);
    if (h * fam.x.front() > -(cfg.T + cfg.P) || h * fam.x.back() < cfg.T + cfg.P)
      throw CoverageError("scaled site family does not cover the padded window");
    std::vector<double> samples(fam.x.size());
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = g.value(h * fam.x[i]);

    CollocationResult res;
    GaussianInterpolant Fg;
    SincInterpolant Fs;
    if (cfg.route == Route::gaussian) {
      res = collocate_gaussian(fam, h, samples, cfg.lambda, solve_opt);
      Fg = gaussian_interpolant(fam, h, res, cfg.lambda);
    } else {
      res = sinc_collocate(fam, samples, solve_opt);
      Fs = sinc_interpolant(fam, h, res);
    }
    auto F = [&](double t) { return cfg.route == Route::gaussian ? Fg(t) : Fs(t); };

    FillRow row;
    row.h = h;
    row.n_sites = n;
    row.fill = scale_sites(fam, h).fill_distance;
    row.cond_est = res.cond_est;
    row.trusted = res.cond_est <= cfg.trust_cond;
    row.lhs = l2_error(F, g, cfg.T, cfg.points_per_unit);
    const int N = cfg.wide_grid;
    std::vector<double> resid(static_cast<std::size_t>(N));
    const double dx = 2.0 * W / static_cast<double>(N);
    for (int i = 0; i < N; ++i) {
      const double x = -W + dx * static_cast<double>(i);
      resid[static_cast<std::size_t>(i)] = F(x) - g.value(x);
    }
    row.res_seminorm = grid_seminorm(resid, W, cfg.k, 1.0, 1.0 / 16.0, false).value;
    row.ratio = row.lhs / (std::pow(row.fill, cfg.k) * row.res_seminorm);
    if (row.trusted) {
      rmin = std::min(rmin, row.ratio);
      rmax = std::max(rmax, row.ratio);
      ++rep.trusted_rows;
    }
    rep.rows.push_back(row);
  }
  if (rep.trusted_rows < 2)
    throw InsufficientData("fill_distance_check: need at least two trusted rows");
  rep.ratio_spread = rmax / rmin;
  return rep;
}

}  // namespace kerlab
