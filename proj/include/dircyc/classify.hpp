#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dircyc/approximant.hpp"
#include "dircyc/decay.hpp"
#include "dircyc/zeroset.hpp"

namespace dircyc {

enum class Cyclicity { Cyclic, NotCyclic, NotApplicable };

struct Prediction {
  Cyclicity verdict = Cyclicity::NotApplicable;
  std::string reason;
};

/// Decision rule for an irreducible polynomial in the isotropic space D_alpha:
/// a zero in the bidisk rules out cyclicity; otherwise alpha <= 1 is always
/// cyclic, 1 < alpha <= 2 needs a finite (or empty) torus zero set and
/// alpha > 2 an empty one. An inconclusive bidisk search gives NotApplicable.
Prediction predict(double alpha, const TorusZeroClass& torus, const BidiskZeroReport& bidisk);

/// A product is cyclic iff every factor is. Any NotApplicable factor (and no
/// NotCyclic one) makes the product NotApplicable. Throws std::invalid_argument on an empty list.
Cyclicity productRule(std::span<const Cyclicity> factors);

struct CorroborateOptions {
  int nMax = 40;
  BasisShape basis = BasisShape::TotalDegree;
  DecayConfig decay;
  ZeroTolerances tol;
  BidiskGridConfig grid;
  SolverOptions solver;
};

struct FactorPrediction {
  Poly2 factor;
  std::optional<TorusZeroClass> torusClass;  ///< absent when the torus step was inconclusive
  BidiskZeroReport bidiskCheck;
  Prediction predicted;
};

struct ClassificationReport {
  Poly2 polynomial;
  double alpha = 0;
  int nMax = 0;
  BasisShape basis = BasisShape::TotalDegree;
  BidiskZeroReport bidiskCheck;
  std::optional<TorusZeroClass> torusClass;
  Prediction predicted;
  std::vector<FactorPrediction> factors;  ///< filled when the input came as a factor list
  std::optional<DecayVerdict> empirical;
  std::vector<DistancePoint> distances;
  std::optional<double> certificate;
  std::optional<bool> consistent;
};

/// Full pipeline for an (asserted irreducible) p in D_alpha: bidisk search,
/// torus classification, prediction, distance scan with decay diagnostic, and
/// the evaluation-bound certificate when alpha > 2 and the torus zero set is nonempty.
ClassificationReport corroborate(const Poly2& p, double alpha, const CorroborateOptions& options = {});

/// Same, for p given as a product of asserted irreducible factors. Each factor
/// is predicted on its own and the verdicts are combined by productRule; the
/// distance scan runs on the product.
ClassificationReport corroborate(std::span<const Poly2> factors, double alpha,
                                 const CorroborateOptions& options = {});

/// Weak consistency: a Cyclic prediction must not show a Plateau, a NotCyclic
/// one must not show Decaying. nullopt when either side is undecided.
std::optional<bool> consistency(Cyclicity predicted, DecayLabel empirical);

/// Throws NumericalFailure if a report breaks its invariants (NotCyclic after
/// a bidisk zero; every distance at least certificate - 1e-6).
void checkReport(const ClassificationReport& report);

const char* toString(Cyclicity verdict);

}  // namespace dircyc
