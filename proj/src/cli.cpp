#include "dircyc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "dircyc/errors.hpp"
#include "dircyc/expression.hpp"
#include "dircyc/serialize.hpp"

namespace dircyc {

namespace {

struct Settings {
  int maxDegree = kDefaultMaxDegree;
  ZeroTolerances tol;
  BidiskGridConfig grid;
  DecayConfig decay;
  SolverOptions solver;
  QExperimentConfig q;
};

// key=value lines; '#' starts a comment.
void applyConfig(Settings& s, std::istream& in) {
  const std::map<std::string, std::function<void(double)>> keys = {
      {"max_degree", [&](double v) { s.maxDegree = static_cast<int>(v); }},
      {"circle_tol", [&](double v) { s.tol.circleTol = v; }},
      {"resid_tol", [&](double v) { s.tol.residTol = v; }},
      {"proportional_tol", [&](double v) { s.tol.proportionalTol = v; }},
      {"resultant_rel_tol", [&](double v) { s.tol.resultantRelTol = v; }},
      {"inconclusive_band", [&](double v) { s.tol.inconclusiveBand = v; }},
      {"bidisk_delta", [&](double v) { s.grid.delta = v; }},
      {"bidisk_radii", [&](double v) { s.grid.radii = static_cast<int>(v); }},
      {"bidisk_angles", [&](double v) { s.grid.angles = static_cast<int>(v); }},
      {"bidisk_candidates", [&](double v) { s.grid.candidates = static_cast<int>(v); }},
      {"bidisk_resid_tol", [&](double v) { s.grid.residTol = v; }},
      {"plateau_floor", [&](double v) { s.decay.plateauFloor = v; }},
      {"fit_tol", [&](double v) { s.decay.fitTol = v; }},
      {"drop_ratio", [&](double v) { s.decay.dropRatio = v; }},
      {"plateau_share", [&](double v) { s.decay.plateauShare = v; }},
      {"burn_in", [&](double v) { s.decay.burnInFraction = v; }},
      {"pivot_tol", [&](double v) { s.solver.pivotTol = v; }},
      {"condition_limit", [&](double v) { s.solver.conditionLimit = v; }},
      {"self_check_tol", [&](double v) { s.solver.selfCheckTol = v; }},
      {"q_grid", [&](double v) { s.q.gridSize = static_cast<int>(v); }},
      {"q_resid_tol", [&](double v) { s.q.residTol = v; }},
      {"q_tail_index", [&](double v) { s.q.tailIndex = static_cast<int>(v); }},
  };
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(fmt::format("config line {}: expected key=value", lineNo));
    auto trim = [](std::string t) {
      const auto a = t.find_first_not_of(" \t\r"), b = t.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    const auto it = keys.find(key);
    if (it == keys.end()) throw std::invalid_argument(fmt::format("config line {}: unknown key '{}'", lineNo, key));
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(fmt::format("config line {}: bad number", lineNo));
    it->second(v);
  }
}

std::vector<double> parseAlphaList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double a = std::stod(item, &used);
    if (used != item.size() || !std::isfinite(a)) throw std::invalid_argument("bad alpha value: " + item);
    out.push_back(a);
  }
  if (out.empty()) throw std::invalid_argument("alpha list is empty");
  return out;
}

// "re,im,re,im;re,im,re,im"
std::vector<Point2> parsePointList(const std::string& text) {
  std::vector<Point2> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<double> v;
    std::stringstream is(item);
    std::string num;
    while (std::getline(is, num, ',')) v.push_back(std::stod(num));
    if (v.size() != 4) throw std::invalid_argument("a torus point needs four numbers re,im,re,im");
    out.push_back({{v[0], v[1]}, {v[2], v[3]}});
  }
  return out;
}

struct Options {
  std::string expr;
  std::string polyJson;
  std::vector<std::string> factors;
  std::string alpha = "2";
  int nMax = 40;
  int n = 5, n1 = -1, n2 = -1;
  std::string basis = "total_degree";
  std::string space = "iso";
  std::string config;
  std::string outPath;
  int K = 10, L = 10;
  int N = 6;
  std::string zeros = "auto";
  std::string spectrumPath;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (!o.config.empty()) {
      std::ifstream in(o.config);
      if (!in) throw std::invalid_argument("cannot open config file " + o.config);
      applyConfig(s_, in);
    }
  }

  Poly2 polynomial() const {
    if (!o_.expr.empty() && !o_.polyJson.empty()) throw std::invalid_argument("give either -p or --poly-json");
    if (!o_.expr.empty()) return parseExpression(o_.expr, s_.maxDegree);
    if (!o_.polyJson.empty()) {
      std::ifstream in(o_.polyJson);
      if (!in) throw std::invalid_argument("cannot open " + o_.polyJson);
      Json j;
      try {
        j = Json::parse(in);
        return j.get<Poly2>();
      } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid polynomial JSON: ") + e.what(), 0);
      }
    }
    throw std::invalid_argument("no polynomial given (use -p or --poly-json)");
  }

  SpaceSpec space(double alpha) const {
    if (o_.space == "iso") return SpaceSpec::iso(alpha);
    if (o_.space == "aniso") return SpaceSpec::aniso(alpha);
    if (o_.space == "uni") return SpaceSpec::uni(alpha);
    throw std::invalid_argument("unknown space: " + o_.space);
  }

  int norm() {
    const Poly2 p = polynomial();
    std::ostringstream text;
    for (double a : parseAlphaList(o_.alpha)) {
      text << fmt::format("alpha {:.12g}\n", a);
      text << fmt::format("iso {:.12g}\n", normSquared(p, SpaceSpec::iso(a)));
      text << fmt::format("aniso {:.12g}\n", normSquared(p, SpaceSpec::aniso(a)));
      if (p.degZ2() == 0)
        text << fmt::format("uni {:.12g}\n", normSquared(p, SpaceSpec::uni(a)));
      else
        text << "uni n/a\n";
    }
    emit(text.str());
    return exit_code::ok;
  }

  int opa() {
    const Poly2 p = polynomial();
    const BasisShape shape = basisShapeFromString(o_.basis);
    BasisSpec spec = BasisSpec::family(shape, o_.n);
    if (shape == BasisShape::BiDegree) spec = BasisSpec::biDegree(o_.n1 >= 0 ? o_.n1 : o_.n, o_.n2 >= 0 ? o_.n2 : o_.n);
    const auto alphas = parseAlphaList(o_.alpha);
    Json doc = Json::array();
    for (double a : alphas) {
      Json j = optimalApproximant(p, spec, space(a), s_.solver);
      j["alpha"] = round12(a);
      j["space"] = o_.space;
      doc.push_back(std::move(j));
    }
    emit((alphas.size() == 1 ? doc[0] : doc).dump(2) + "\n");
    return exit_code::ok;
  }

  int scan() {
    const Poly2 p = polynomial();
    if (o_.nMax < 0) throw std::invalid_argument("nmax must be nonnegative");
    const BasisShape shape = basisShapeFromString(o_.basis);
    auto alphas = parseAlphaList(o_.alpha);
    std::ranges::sort(alphas);
    std::vector<ScanRow> rows;
    for (double a : alphas)
      for (const DistancePoint& d : distanceSequence(p, space(a), o_.nMax, shape, s_.solver)) rows.push_back({a, d});
    std::ostringstream text;
    writeScanCsv(text, rows);
    emit(text.str());
    return exit_code::ok;
  }

  int zeros() {
    const Poly2 p = polynomial();
    Json doc;
    int code = exit_code::ok;
    try {
      doc = torusZeros(p, s_.tol);
    } catch (const InconclusiveError& e) {
      doc = {{"torus", "inconclusive"}, {"reason", e.what()}};
      code = exit_code::inconclusive;
    }
    doc["bidisk"] = bidiskZeroSearch(p, s_.grid);
    emit(doc.dump(2) + "\n");
    return code;
  }

  int classify() {
    CorroborateOptions opt;
    opt.nMax = o_.nMax;
    opt.basis = basisShapeFromString(o_.basis);
    opt.decay = s_.decay;
    opt.tol = s_.tol;
    opt.grid = s_.grid;
    opt.solver = s_.solver;
    if (o_.nMax < 0) throw std::invalid_argument("nmax must be nonnegative");
    std::vector<Poly2> factors;
    for (const std::string& f : o_.factors) factors.push_back(parseExpression(f, s_.maxDegree));
    const bool useFactors = !factors.empty();
    if (useFactors && (!o_.expr.empty() || !o_.polyJson.empty()))
      throw std::invalid_argument("--factors replaces -p / --poly-json");
    const Poly2 p = useFactors ? Poly2() : polynomial();

    const auto alphas = parseAlphaList(o_.alpha);
    Json doc = Json::array();
    int code = exit_code::ok;
    for (double a : alphas) {
      ClassificationReport r = useFactors ? corroborate(factors, a, opt) : corroborate(p, a, opt);
      if (r.predicted.verdict == Cyclicity::NotApplicable) code = exit_code::inconclusive;
      doc.push_back(r);
    }
    emit((alphas.size() == 1 ? doc[0] : doc).dump(2) + "\n");
    return code;
  }

  int recurrence() {
    const Poly2 g = polynomial();
    std::ostringstream text;
    writeRecurrenceCsv(text, recurrenceResiduals(g, o_.K, o_.L));
    emit(text.str());
    return exit_code::ok;
  }

  int qsmooth() {
    const Poly2 p = polynomial();
    std::vector<Point2> pts;
    if (o_.zeros == "auto") {
      const TorusZeroClass t = torusZeros(p, s_.tol);
      if (t.tag == TorusTag::Infinite) throw DomainError("Q experiment needs a finite torus zero set");
      pts = t.points;
    } else if (o_.zeros != "none") {
      pts = parsePointList(o_.zeros);
    }
    const QExperimentReport rep = qSmoothness(p, pts, o_.N, s_.q);
    if (!o_.spectrumPath.empty()) {
      std::ofstream f(o_.spectrumPath);
      if (!f) throw std::invalid_argument("cannot write " + o_.spectrumPath);
      writeSpectrumCsv(f, rep);
    }
    emit(Json(rep).dump(2) + "\n");
    return exit_code::ok;
  }

 private:
  void emit(const std::string& text) {
    if (o_.outPath.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.outPath);
    if (!f) throw std::invalid_argument("cannot write " + o_.outPath);
    f << text;
  }

  const Options& o_;
  std::ostream& out_;
  Settings s_;
};

}  // namespace

int runCli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclicity experiments for polynomials in Dirichlet-type spaces on the bidisk", "dircyc"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool alpha) {
    sub->add_option("-p,--poly", o.expr, "polynomial expression in z1, z2");
    sub->add_option("--poly-json", o.polyJson, "polynomial JSON file");
    if (alpha) sub->add_option("--alpha", o.alpha, "alpha value or comma-separated list");
    sub->add_option("--config", o.config, "key=value file overriding tolerances");
    sub->add_option("--out", o.outPath, "write the result here instead of stdout");
  };

  std::map<CLI::App*, int (Runner::*)()> handlers;
  auto* norm = app.add_subcommand("norm", "squared norms in the Iso, Aniso and Uni spaces");
  common(norm, true);
  handlers[norm] = &Runner::norm;

  auto* opa = app.add_subcommand("opa", "optimal polynomial approximant as JSON");
  common(opa, true);
  opa->add_option("--n", o.n, "basis degree")->check(CLI::NonNegativeNumber);
  opa->add_option("--n1", o.n1, "z1 degree for the bidegree basis");
  opa->add_option("--n2", o.n2, "z2 degree for the bidegree basis");
  opa->add_option("--basis", o.basis, "total_degree | bidegree | diagonal");
  opa->add_option("--space", o.space, "iso | aniso | uni");
  handlers[opa] = &Runner::opa;

  auto* scan = app.add_subcommand("scan", "distance table over alpha x n as CSV");
  common(scan, true);
  scan->add_option("--nmax", o.nMax, "largest basis degree");
  scan->add_option("--basis", o.basis, "total_degree | bidegree | diagonal");
  scan->add_option("--space", o.space, "iso | aniso | uni");
  handlers[scan] = &Runner::scan;

  auto* zeros = app.add_subcommand("zeros", "torus zero class and bidisk search as JSON");
  common(zeros, false);
  handlers[zeros] = &Runner::zeros;

  auto* classify = app.add_subcommand("classify", "prediction with empirical corroboration as JSON");
  common(classify, true);
  classify->add_option("--nmax", o.nMax, "largest basis degree of the scan");
  classify->add_option("--basis", o.basis, "total_degree | bidegree | diagonal");
  classify->add_option("--factors", o.factors, "irreducible factors, one expression each");
  handlers[classify] = &Runner::classify;

  auto* rec = app.add_subcommand("recurrence", "recurrence residual grid as CSV");
  common(rec, false);
  rec->add_option("--K", o.K, "largest k")->check(CLI::NonNegativeNumber);
  rec->add_option("--L", o.L, "largest l")->check(CLI::NonNegativeNumber);
  handlers[rec] = &Runner::recurrence;

  auto* qs = app.add_subcommand("qsmooth", "smoothness of Q = g / p as JSON");
  common(qs, false);
  qs->add_option("--N", o.N, "numerator exponent")->check(CLI::NonNegativeNumber);
  qs->add_option("--zeros", o.zeros, "auto | none | re,im,re,im;...");
  qs->add_option("--spectrum", o.spectrumPath, "write |Qhat| over the positive quadrant as CSV");
  handlers[qs] = &Runner::qsmooth;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    Runner runner(o, out);
    for (const auto& [sub, fn] : handlers)
      if (sub->parsed()) return (runner.*fn)();
    return exit_code::usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_code::numerical;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return exit_code::inconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

}  // namespace dircyc
