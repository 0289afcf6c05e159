#include "dircyc/serialize.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace dircyc {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  return std::strtod(fmt::format("{:.12g}", x).c_str(), nullptr);
}

namespace {

Json pair(Complex c) { return Json::array({round12(c.real()), round12(c.imag())}); }
Complex unpair(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json point(const Point2& p) {
  return Json::array({round12(p.z1.real()), round12(p.z1.imag()), round12(p.z2.real()), round12(p.z2.imag())});
}
Point2 unpoint(const Json& j) {
  return {{j.at(0).get<double>(), j.at(1).get<double>()}, {j.at(2).get<double>(), j.at(3).get<double>()}};
}

template <class T>
Json optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}
template <class T>
std::optional<T> unoptional(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::vector<double> rounded(const std::vector<double>& v) {
  std::vector<double> r;
  r.reserve(v.size());
  for (double x : v) r.push_back(round12(x));
  return r;
}

Cyclicity cyclicityFromString(const std::string& s) {
  if (s == "cyclic") return Cyclicity::Cyclic;
  if (s == "not_cyclic") return Cyclicity::NotCyclic;
  if (s == "not_applicable") return Cyclicity::NotApplicable;
  throw std::invalid_argument("unknown verdict: " + s);
}

DecayLabel labelFromString(const std::string& s) {
  if (s == "decaying") return DecayLabel::Decaying;
  if (s == "plateau") return DecayLabel::Plateau;
  if (s == "inconclusive") return DecayLabel::Inconclusive;
  throw std::invalid_argument("unknown decay label: " + s);
}

Json predictionJson(const Prediction& p) { return {{"verdict", toString(p.verdict)}, {"reason", p.reason}}; }
Prediction predictionFrom(const Json& j) {
  return {cyclicityFromString(j.at("verdict").get<std::string>()), j.at("reason").get<std::string>()};
}

}  // namespace

const char* toString(BasisShape shape) {
  switch (shape) {
    case BasisShape::TotalDegree: return "total_degree";
    case BasisShape::BiDegree: return "bidegree";
    case BasisShape::DiagonalOnly: return "diagonal";
  }
  return "?";
}

BasisShape basisShapeFromString(const std::string& s) {
  if (s == "total_degree" || s == "total") return BasisShape::TotalDegree;
  if (s == "bidegree") return BasisShape::BiDegree;
  if (s == "diagonal") return BasisShape::DiagonalOnly;
  throw std::invalid_argument("unknown basis shape: " + s);
}

// ---------------------------------------------------------------- polynomial

void to_json(Json& j, const Poly2& p) {
  Json coeffs = Json::array();
  p.forEachNonzero([&](int k, int l, Complex c) {
    coeffs.push_back({{"k", k}, {"l", l}, {"re", round12(c.real())}, {"im", round12(c.imag())}});
  });
  j = {{"bidegree", {p.degZ1(), p.degZ2()}}, {"coeffs", coeffs}};
}

void from_json(const Json& j, Poly2& p) {
  const int m = j.at("bidegree").at(0).get<int>();
  const int n = j.at("bidegree").at(1).get<int>();
  if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
  std::vector<Complex> grid(static_cast<std::size_t>(m + 1) * (n + 1));
  for (const Json& c : j.at("coeffs")) {
    const int k = c.at("k").get<int>(), l = c.at("l").get<int>();
    if (k < 0 || k > m || l < 0 || l > n) throw std::invalid_argument("coefficient outside the bidegree");
    grid[static_cast<std::size_t>(k) * (n + 1) + l] += Complex{c.at("re").get<double>(), c.value("im", 0.0)};
  }
  p = Poly2(m, n, std::move(grid));
}

// ---------------------------------------------------------------- zero sets

void to_json(Json& j, const TorusZeroClass& t) {
  j = {{"torus", toString(t.tag)}};
  if (t.tag == TorusTag::Finite) {
    Json pts = Json::array();
    for (const Point2& p : t.points) pts.push_back(point(p));
    j["points"] = pts;
  }
  if (t.tag == TorusTag::Infinite && t.witness) {
    if (const auto* w = std::get_if<ProportionalReflection>(&*t.witness)) {
      j["witness"] = "proportional_reflection";
      j["lambda"] = pair(w->lambda);
    } else if (const auto* w = std::get_if<VanishingResultant>(&*t.witness)) {
      j["witness"] = "vanishing_resultant";
      j["max_coefficient"] = round12(w->maxCoefficient);
      j["threshold"] = round12(w->threshold);
    } else if (const auto* w = std::get_if<UnivariateCircleRoots>(&*t.witness)) {
      j["witness"] = "univariate_circle_root";
      j["variable"] = w->variable;
      Json roots = Json::array();
      for (Complex r : w->roots) roots.push_back(pair(r));
      j["roots"] = roots;
    }
  }
}

void from_json(const Json& j, TorusZeroClass& t) {
  t = {};
  const std::string tag = j.at("torus").get<std::string>();
  if (tag == "empty") return;
  if (tag == "finite") {
    t.tag = TorusTag::Finite;
    for (const Json& p : j.at("points")) t.points.push_back(unpoint(p));
    return;
  }
  if (tag != "infinite") throw std::invalid_argument("unknown torus tag: " + tag);
  t.tag = TorusTag::Infinite;
  const std::string w = j.at("witness").get<std::string>();
  if (w == "proportional_reflection") {
    t.witness = ProportionalReflection{unpair(j.at("lambda"))};
  } else if (w == "vanishing_resultant") {
    t.witness = VanishingResultant{j.at("max_coefficient").get<double>(), j.at("threshold").get<double>()};
  } else if (w == "univariate_circle_root") {
    UnivariateCircleRoots u{j.at("variable").get<int>(), {}};
    for (const Json& r : j.at("roots")) u.roots.push_back(unpair(r));
    t.witness = std::move(u);
  } else {
    throw std::invalid_argument("unknown witness: " + w);
  }
}

void to_json(Json& j, const BidiskZeroReport& r) {
  j = {{"tag", r.zeroFound ? "zero_found" : "none_found_heuristic"},
       {"point", point(r.point)},
       {r.zeroFound ? "modulus" : "min_modulus", round12(r.modulus)},
       {"inconclusive", r.inconclusive},
       {"grid",
        {{"delta", round12(r.grid.delta)},
         {"radii", r.grid.radii},
         {"angles", r.grid.angles},
         {"coarse_factor", r.grid.coarseFactor},
         {"candidates", r.grid.candidates},
         {"newton_iterations", r.grid.newtonIterations},
         {"resid_tol", round12(r.grid.residTol)}}}};
}

void from_json(const Json& j, BidiskZeroReport& r) {
  r = {};
  const std::string tag = j.at("tag").get<std::string>();
  if (tag != "zero_found" && tag != "none_found_heuristic") throw std::invalid_argument("unknown bidisk tag: " + tag);
  r.zeroFound = tag == "zero_found";
  r.point = unpoint(j.at("point"));
  r.modulus = j.at(r.zeroFound ? "modulus" : "min_modulus").get<double>();
  r.inconclusive = j.at("inconclusive").get<bool>();
  const Json& g = j.at("grid");
  r.grid.delta = g.at("delta").get<double>();
  r.grid.radii = g.at("radii").get<int>();
  r.grid.angles = g.at("angles").get<int>();
  r.grid.coarseFactor = g.at("coarse_factor").get<int>();
  r.grid.candidates = g.at("candidates").get<int>();
  r.grid.newtonIterations = g.at("newton_iterations").get<int>();
  r.grid.residTol = g.at("resid_tol").get<double>();
}

// ---------------------------------------------------------------- approximants

void to_json(Json& j, const DecayVerdict& v) {
  Json fits = Json::array();
  for (const ModelFit& f : v.fits)
    fits.push_back({{"model", f.model}, {"params", rounded(f.params)}, {"rel_residual", round12(f.relResidual)}});
  j = {{"label", toString(v.label)},
       {"limit", round12(v.limitEstimate)},
       {"model", v.fitModel},
       {"params", rounded(v.fitParams)},
       {"fits", fits}};
}

void from_json(const Json& j, DecayVerdict& v) {
  v = {};
  v.label = labelFromString(j.at("label").get<std::string>());
  v.limitEstimate = j.at("limit").get<double>();
  v.fitModel = j.at("model").get<std::string>();
  v.fitParams = j.at("params").get<std::vector<double>>();
  for (const Json& f : j.at("fits"))
    v.fits.push_back({f.at("model").get<std::string>(), f.at("params").get<std::vector<double>>(),
                      f.at("rel_residual").get<double>()});
}

void to_json(Json& j, const BasisSpec& b) { j = {{"shape", toString(b.shape)}, {"n1", b.n1}, {"n2", b.n2}}; }

void from_json(const Json& j, BasisSpec& b) {
  b = {basisShapeFromString(j.at("shape").get<std::string>()), j.at("n1").get<int>(), j.at("n2").get<int>()};
}

void to_json(Json& j, const ApproximantResult& r) {
  j = {{"basis", r.basis},
       {"p", r.p},
       {"distance_sq", round12(r.distanceSquared)},
       {"distance", round12(std::sqrt(round12(r.distanceSquared)))},
       {"residual", r.residual},
       {"normal_equation_distance_sq", round12(r.normalEquationDistanceSquared)},
       {"pivot_ratio", round12(r.pivotRatio)},
       {"used_qr", r.usedQr}};
}

void from_json(const Json& j, ApproximantResult& r) {
  r.basis = j.at("basis").get<BasisSpec>();
  r.p = j.at("p").get<Poly2>();
  r.distanceSquared = j.at("distance_sq").get<double>();
  r.residual = j.at("residual").get<Poly2>();
  r.normalEquationDistanceSquared = j.at("normal_equation_distance_sq").get<double>();
  r.pivotRatio = j.at("pivot_ratio").get<double>();
  r.usedQr = j.at("used_qr").get<bool>();
}

void to_json(Json& j, const DistancePoint& d) {
  j = {{"n", d.n},
       {"basis_size", d.basisSize},
       {"distance_sq", round12(d.distanceSquared)},
       {"distance", round12(d.distance)}};
}

void from_json(const Json& j, DistancePoint& d) {
  d = {j.at("n").get<int>(), j.at("basis_size").get<int>(), j.at("distance_sq").get<double>(),
       j.at("distance").get<double>()};
}

// ---------------------------------------------------------------- reports

void to_json(Json& j, const ClassificationReport& r) {
  Json factors = Json::array();
  for (const FactorPrediction& f : r.factors)
    factors.push_back({{"factor", f.factor},
                       {"torus", optional(f.torusClass)},
                       {"bidisk", f.bidiskCheck},
                       {"predicted", predictionJson(f.predicted)}});
  j = {{"polynomial", r.polynomial},
       {"alpha", round12(r.alpha)},
       {"nmax", r.nMax},
       {"basis", toString(r.basis)},
       {"bidisk", r.bidiskCheck},
       {"torus", optional(r.torusClass)},
       {"predicted", predictionJson(r.predicted)},
       {"factors", factors},
       {"empirical", optional(r.empirical)},
       {"distances", r.distances},
       {"certificate", r.certificate ? Json(round12(*r.certificate)) : Json(nullptr)},
       {"consistent", optional(r.consistent)}};
}

void from_json(const Json& j, ClassificationReport& r) {
  r = {};
  r.polynomial = j.at("polynomial").get<Poly2>();
  r.alpha = j.at("alpha").get<double>();
  r.nMax = j.at("nmax").get<int>();
  r.basis = basisShapeFromString(j.at("basis").get<std::string>());
  r.bidiskCheck = j.at("bidisk").get<BidiskZeroReport>();
  r.torusClass = unoptional<TorusZeroClass>(j, "torus");
  r.predicted = predictionFrom(j.at("predicted"));
  for (const Json& f : j.at("factors"))
    r.factors.push_back({f.at("factor").get<Poly2>(), unoptional<TorusZeroClass>(f, "torus"),
                         f.at("bidisk").get<BidiskZeroReport>(), predictionFrom(f.at("predicted"))});
  r.empirical = unoptional<DecayVerdict>(j, "empirical");
  r.distances = j.at("distances").get<std::vector<DistancePoint>>();
  r.certificate = unoptional<double>(j, "certificate");
  r.consistent = unoptional<bool>(j, "consistent");
}

void to_json(Json& j, const QExperimentReport& r) {
  Json zeros = Json::array();
  for (const Point2& p : r.torusZeros) zeros.push_back(point(p));
  j = {{"p", r.p},
       {"torus_zeros", zeros},
       {"N", r.N},
       {"grid_size", r.gridSize},
       {"tail_index", r.tailIndex},
       {"neg_freq_energy_fraction", round12(r.negFreqEnergyFraction)},
       {"weighted_tail_ratio", round12(r.weightedTailRatio)},
       {"reconstruction_error", round12(r.reconstructionError)},
       {"geometric_rate", round12(r.geometricRate)}};
}

void from_json(const Json& j, QExperimentReport& r) {
  r = {};
  r.p = j.at("p").get<Poly2>();
  for (const Json& p : j.at("torus_zeros")) r.torusZeros.push_back(unpoint(p));
  r.N = j.at("N").get<int>();
  r.gridSize = j.at("grid_size").get<int>();
  r.tailIndex = j.at("tail_index").get<int>();
  r.negFreqEnergyFraction = j.at("neg_freq_energy_fraction").get<double>();
  r.weightedTailRatio = j.at("weighted_tail_ratio").get<double>();
  r.reconstructionError = j.at("reconstruction_error").get<double>();
  r.geometricRate = j.at("geometric_rate").get<double>();
}

// ---------------------------------------------------------------- CSV

void writeScanCsv(std::ostream& out, std::span<const ScanRow> rows) {
  out << "alpha,n,basis_size,distance_sq,distance\n";
  for (const ScanRow& r : rows)
    out << fmt::format("{:.12g},{},{},{:.12g},{:.12g}\n", r.alpha, r.point.n, r.point.basisSize,
                       r.point.distanceSquared, r.point.distance);
}

void writeRecurrenceCsv(std::ostream& out, const RecurrenceResidualGrid& grid) {
  out << "k,l,re,im\n";
  for (int k = 0; k <= grid.K; ++k)
    for (int l = 0; l <= grid.L; ++l) {
      const Complex r = grid(k, l);
      out << fmt::format("{},{},{:.12g},{:.12g}\n", k, l, r.real(), r.imag());
    }
}

void writeSpectrumCsv(std::ostream& out, const QExperimentReport& report) {
  const int half = report.gridSize / 2;
  out << "k,l,magnitude\n";
  for (int k = 0; k < half; ++k)
    for (int l = 0; l < half; ++l)
      out << fmt::format("{},{},{:.12g}\n", k, l, report.spectrum[static_cast<std::size_t>(k) * half + l]);
}

}  // namespace dircyc
