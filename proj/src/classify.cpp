#include "dircyc/classify.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "dircyc/errors.hpp"

namespace dircyc {

const char* toString(Cyclicity verdict) {
  switch (verdict) {
    case Cyclicity::Cyclic: return "cyclic";
    case Cyclicity::NotCyclic: return "not_cyclic";
    case Cyclicity::NotApplicable: return "not_applicable";
  }
  return "?";
}

Prediction predict(double alpha, const TorusZeroClass& torus, const BidiskZeroReport& bidisk) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  if (bidisk.zeroFound) return {Cyclicity::NotCyclic, "zero inside the bidisk"};
  if (bidisk.inconclusive)
    return {Cyclicity::NotApplicable, "bidisk search inconclusive at the configured resolution"};
  if (alpha <= 1.0) return {Cyclicity::Cyclic, "alpha <= 1 and no zeros in the bidisk"};
  if (alpha <= 2.0) {
    if (torus.tag == TorusTag::Infinite)
      return {Cyclicity::NotCyclic, "1 < alpha <= 2 and infinitely many torus zeros"};
    return {Cyclicity::Cyclic, "1 < alpha <= 2 and finitely many torus zeros"};
  }
  if (torus.tag == TorusTag::Empty) return {Cyclicity::Cyclic, "alpha > 2 and no torus zeros"};
  return {Cyclicity::NotCyclic, "alpha > 2 and the torus zero set is nonempty"};
}

Cyclicity productRule(std::span<const Cyclicity> factors) {
  if (factors.empty()) throw std::invalid_argument("productRule needs at least one factor");
  bool unknown = false;
  for (Cyclicity c : factors) {
    if (c == Cyclicity::NotCyclic) return Cyclicity::NotCyclic;
    if (c == Cyclicity::NotApplicable) unknown = true;
  }
  return unknown ? Cyclicity::NotApplicable : Cyclicity::Cyclic;
}

std::optional<bool> consistency(Cyclicity predicted, DecayLabel empirical) {
  if (predicted == Cyclicity::NotApplicable) return std::nullopt;
  if (predicted == Cyclicity::Cyclic) return empirical != DecayLabel::Plateau;
  return empirical != DecayLabel::Decaying;
}

void checkReport(const ClassificationReport& r) {
  if (r.bidiskCheck.zeroFound && r.predicted.verdict != Cyclicity::NotCyclic)
    throw NumericalFailure("report invariant: bidisk zero without a NotCyclic prediction");
  if (r.certificate)
    for (const DistancePoint& d : r.distances)
      if (d.distance < *r.certificate - 1e-6)
        throw NumericalFailure(fmt::format("report invariant: d_{} = {:.12g} below certificate {:.12g}", d.n,
                                           d.distance, *r.certificate));
}

namespace {

FactorPrediction analyse(const Poly2& p, double alpha, const CorroborateOptions& options) {
  if (p.isZero()) throw DomainError("the zero polynomial is never cyclic");
  FactorPrediction out{p, std::nullopt, bidiskZeroSearch(p, options.grid), {}};
  if (p.isConstant()) {
    out.torusClass = TorusZeroClass{};
  } else {
    try {
      out.torusClass = torusZeros(p, options.tol);
    } catch (const InconclusiveError& e) {
      out.predicted = {Cyclicity::NotApplicable, std::string("torus classification inconclusive: ") + e.what()};
      if (out.bidiskCheck.zeroFound) out.predicted = predict(alpha, TorusZeroClass{}, out.bidiskCheck);
      return out;
    }
  }
  out.predicted = predict(alpha, *out.torusClass, out.bidiskCheck);
  return out;
}

void addEmpirical(ClassificationReport& report, const CorroborateOptions& options) {
  report.distances =
      distanceSequence(report.polynomial, SpaceSpec::iso(report.alpha), options.nMax, options.basis, options.solver);
  std::vector<double> d2;
  d2.reserve(report.distances.size());
  for (const DistancePoint& d : report.distances) d2.push_back(d.distanceSquared);
  if (static_cast<int>(d2.size()) >= options.decay.minLength) {
    report.empirical = decayDiagnostic(d2, options.decay);
    report.consistent = consistency(report.predicted.verdict, report.empirical->label);
  }
  if (report.alpha > 2.0 && report.torusClass && report.torusClass->tag != TorusTag::Empty)
    report.certificate = evaluationBoundCertificate(report.alpha);
}

}  // namespace

ClassificationReport corroborate(const Poly2& p, double alpha, const CorroborateOptions& options) {
  FactorPrediction f = analyse(p, alpha, options);
  ClassificationReport report;
  report.polynomial = p;
  report.alpha = alpha;
  report.nMax = options.nMax;
  report.basis = options.basis;
  report.bidiskCheck = f.bidiskCheck;
  report.torusClass = f.torusClass;
  report.predicted = f.predicted;
  addEmpirical(report, options);
  checkReport(report);
  return report;
}

ClassificationReport corroborate(std::span<const Poly2> factors, double alpha, const CorroborateOptions& options) {
  if (factors.empty()) throw std::invalid_argument("empty factor list");
  ClassificationReport report;
  report.alpha = alpha;
  report.nMax = options.nMax;
  report.basis = options.basis;
  report.polynomial = Poly2::constant(1.0);
  std::vector<Cyclicity> verdicts;
  for (const Poly2& q : factors) {
    report.polynomial = report.polynomial * q;
    report.factors.push_back(analyse(q, alpha, options));
    verdicts.push_back(report.factors.back().predicted.verdict);
  }
  report.bidiskCheck = bidiskZeroSearch(report.polynomial, options.grid);
  if (!report.polynomial.isConstant()) {
    try {
      report.torusClass = torusZeros(report.polynomial, options.tol);
    } catch (const InconclusiveError&) {
      // Repeated factors can push the product's resultant into the band; the
      // per-factor classes carry the decision.
    }
  } else {
    report.torusClass = TorusZeroClass{};
  }
  const Cyclicity combined = productRule(verdicts);
  std::string reason = "product rule over factors:";
  for (std::size_t i = 0; i < verdicts.size(); ++i) reason += fmt::format(" {}", toString(verdicts[i]));
  report.predicted = {combined, reason};
  if (report.bidiskCheck.zeroFound && combined != Cyclicity::NotCyclic)
    report.predicted = {Cyclicity::NotCyclic, "zero inside the bidisk"};
  addEmpirical(report, options);
  checkReport(report);
  return report;
}

}  // namespace dircyc
