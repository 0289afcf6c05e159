#include "dircyc/decay.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dircyc {

namespace {

struct Window {
  std::vector<double> n;
  std::vector<double> y;
};

// Relative least squares for y ~ sum_j p_j phi_j(n), one or two basis functions.
// Returns the RMS relative residual and writes the coefficients.
double linearFit(const Window& w, const std::function<void(double, double*)>& basis, int count, double* params) {
  double a[2][2] = {{0, 0}, {0, 0}}, b[2] = {0, 0};
  const std::size_t len = w.y.size();
  for (std::size_t i = 0; i < len; ++i) {
    double phi[2] = {0, 0};
    basis(w.n[i], phi);
    const double inv = 1.0 / w.y[i];
    for (int r = 0; r < count; ++r) {
      b[r] += phi[r] * inv * inv * w.y[i];
      for (int c = 0; c < count; ++c) a[r][c] += phi[r] * phi[c] * inv * inv;
    }
  }
  if (count == 1) {
    params[0] = a[0][0] > 0 ? b[0] / a[0][0] : 0.0;
  } else {
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (std::abs(det) <= 1e-300) {
      params[0] = a[0][0] > 0 ? b[0] / a[0][0] : 0.0;
      params[1] = 0;
    } else {
      params[0] = (b[0] * a[1][1] - b[1] * a[0][1]) / det;
      params[1] = (a[0][0] * b[1] - a[1][0] * b[0]) / det;
    }
  }
  double ss = 0;
  for (std::size_t i = 0; i < len; ++i) {
    double phi[2] = {0, 0};
    basis(w.n[i], phi);
    double model = 0;
    for (int r = 0; r < count; ++r) model += params[r] * phi[r];
    const double rel = (model - w.y[i]) / w.y[i];
    ss += rel * rel;
  }
  return std::sqrt(ss / static_cast<double>(len));
}

// Minimizes residual(theta) over [lo, hi]: coarse scan, then Brent around the best cell.
double minimizeScalar(const std::function<double(double)>& residual, double lo, double hi) {
  constexpr int kCells = 64;
  double bestT = lo, bestR = INFINITY;
  for (int i = 0; i <= kCells; ++i) {
    const double t = lo + (hi - lo) * i / kCells;
    const double r = residual(t);
    if (r < bestR) {
      bestR = r;
      bestT = t;
    }
  }
  const double step = (hi - lo) / kCells;
  const auto [t, r] = boost::math::tools::brent_find_minima(
      residual, std::max(lo, bestT - step), std::min(hi, bestT + step), 40);
  return r < bestR ? t : bestT;
}

constexpr double kBetaMin = 0.1;
constexpr double kBetaMax = 6.0;

ModelFit fitLog(const Window& w) {
  // c0 = 1 + e^u keeps log(n + c0) > 0 at n = 0.
  double p[2];
  auto basisFor = [](double u) {
    return [c0 = 1.0 + std::exp(u)](double n, double* phi) { phi[0] = 1.0 / std::log(n + c0); };
  };
  auto residual = [&](double u) { return linearFit(w, basisFor(u), 1, p); };
  const double u = minimizeScalar(residual, -10.0, 20.0);
  const double r = residual(u);
  return {"log", {p[0], 1.0 + std::exp(u)}, r};
}

ModelFit fitPower(const Window& w) {
  double p[2];
  auto residual = [&](double beta) {
    return linearFit(w, [beta](double n, double* phi) { phi[0] = std::pow(n + 1.0, -beta); }, 1, p);
  };
  const double beta = minimizeScalar(residual, kBetaMin, kBetaMax);
  const double r = residual(beta);
  return {"power", {p[0], beta}, r};
}

ModelFit fitPlateau(const Window& w) {
  double p[2];
  auto residual = [&](double beta) {
    return linearFit(w, [beta](double n, double* phi) {
      phi[0] = 1.0;
      phi[1] = std::pow(n + 1.0, -beta);
    }, 2, p);
  };
  const double beta = minimizeScalar(residual, kBetaMin, kBetaMax);
  const double r = residual(beta);
  return {"plateau", {p[0], p[1], beta}, r};
}

}  // namespace

const char* toString(DecayLabel label) {
  switch (label) {
    case DecayLabel::Decaying: return "decaying";
    case DecayLabel::Plateau: return "plateau";
    case DecayLabel::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DecayVerdict decayDiagnostic(std::span<const double> ds, const DecayConfig& config) {
  if (static_cast<int>(ds.size()) < config.minLength)
    throw std::invalid_argument("decayDiagnostic: need at least " + std::to_string(config.minLength) + " values");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!std::isfinite(ds[i])) throw std::invalid_argument("decayDiagnostic: non-finite value");
    if (i > 0 && ds[i] > ds[i - 1] + config.monotoneSlack)
      throw std::invalid_argument("decayDiagnostic: sequence increases at n = " + std::to_string(i));
  }

  const double first = ds.front();
  const double last = ds.back();
  DecayVerdict v;

  // A non-increasing sequence already below the floor cannot plateau above it.
  if (last < config.plateauFloor) {
    v.label = last < first * config.dropRatio ? DecayLabel::Decaying : DecayLabel::Inconclusive;
    v.fitModel = "below_floor";
    v.fitParams = {last};
    return v;
  }

  Window w;
  const std::size_t skip = std::min(static_cast<std::size_t>(config.burnInFraction * static_cast<double>(ds.size())),
                                    ds.size() - std::min<std::size_t>(ds.size(), 6));
  for (std::size_t i = skip; i < ds.size(); ++i) {
    w.n.push_back(static_cast<double>(i));
    w.y.push_back(ds[i]);
  }

  const ModelFit logFit = fitLog(w);
  const ModelFit powerFit = fitPower(w);
  const ModelFit plateauFit = fitPlateau(w);
  v.fits = {logFit, powerFit, plateauFit};

  const double limit = plateauFit.params[0];
  if (limit > config.plateauFloor && plateauFit.relResidual < config.fitTol && plateauFit.params[1] >= 0 &&
      limit >= config.plateauShare * last) {
    v.label = DecayLabel::Plateau;
    v.limitEstimate = limit;
    v.fitModel = plateauFit.model;
    v.fitParams = plateauFit.params;
    return v;
  }

  const ModelFit& zeroFit = logFit.relResidual <= powerFit.relResidual ? logFit : powerFit;
  v.fitModel = zeroFit.model;
  v.fitParams = zeroFit.params;
  if (zeroFit.relResidual < config.fitTol && last < first * config.dropRatio) v.label = DecayLabel::Decaying;
  return v;
}

}  // namespace dircyc
