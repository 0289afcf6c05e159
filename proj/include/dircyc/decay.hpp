#pragma once

#include <span>
#include <string>
#include <vector>

namespace dircyc {

struct DecayConfig {
  double plateauFloor = 1e-3;  ///< a plateau limit must exceed this
  double fitTol = 5e-2;        ///< max RMS relative residual of an accepted fit
  double dropRatio = 0.5;      ///< Decaying needs last < first * dropRatio
  /// A plateau limit must be at least this share of the last value. Slowly
  /// decaying sequences extrapolate to limits well below their tail.
  double plateauShare = 0.75;
  /// Leading fraction of the sequence ignored by the fits (pre-asymptotic terms).
  double burnInFraction = 0.25;
  double monotoneSlack = 1e-10;
  int minLength = 8;
};

enum class DecayLabel { Decaying, Plateau, Inconclusive };

struct ModelFit {
  std::string model;           ///< "log": c/log(n+c0), "power": c n^-beta, "plateau": dinf + c n^-beta
  std::vector<double> params;  ///< log: {c, c0}; power: {c, beta}; plateau: {dinf, c, beta}
  double relResidual = 0;      ///< RMS of (fit - y)/y over the fitted window
};

struct DecayVerdict {
  DecayLabel label = DecayLabel::Inconclusive;
  double limitEstimate = 0;  ///< positive for Plateau, else 0
  std::string fitModel;      ///< the model the verdict rests on
  std::vector<double> fitParams;
  std::vector<ModelFit> fits;  ///< all candidate fits, for reporting
};

/// Classifies a non-increasing sequence of squared distances d_n^2, n = 0, 1, ...
/// Models are evaluated at x = n + 1. Throws std::invalid_argument when the
/// input is shorter than minLength, non-finite, or increases by more than monotoneSlack.
DecayVerdict decayDiagnostic(std::span<const double> distanceSquared, const DecayConfig& config = {});

const char* toString(DecayLabel label);

}  // namespace dircyc
