#pragma once

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "dircyc/approximant.hpp"
#include "dircyc/classify.hpp"
#include "dircyc/decay.hpp"
#include "dircyc/prooflab.hpp"
#include "dircyc/zeroset.hpp"

namespace dircyc {

using Json = nlohmann::json;

/// Rounds to 12 significant digits; every floating value written by this
/// module passes through here so that output is stable across platforms.
double round12(double x);

// nlohmann adapters. Parsing a document written by the matching to_json
// reproduces the value up to the 12-digit rounding.
void to_json(Json& j, const Poly2& p);
void from_json(const Json& j, Poly2& p);
void to_json(Json& j, const TorusZeroClass& t);
void from_json(const Json& j, TorusZeroClass& t);
void to_json(Json& j, const BidiskZeroReport& r);
void from_json(const Json& j, BidiskZeroReport& r);
void to_json(Json& j, const DecayVerdict& v);
void from_json(const Json& j, DecayVerdict& v);
void to_json(Json& j, const BasisSpec& b);
void from_json(const Json& j, BasisSpec& b);
void to_json(Json& j, const ApproximantResult& r);
void from_json(const Json& j, ApproximantResult& r);
void to_json(Json& j, const DistancePoint& d);
void from_json(const Json& j, DistancePoint& d);
void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);
void to_json(Json& j, const QExperimentReport& r);
void from_json(const Json& j, QExperimentReport& r);

const char* toString(BasisShape shape);
BasisShape basisShapeFromString(const std::string& s);  ///< throws std::invalid_argument

struct ScanRow {
  double alpha;
  DistancePoint point;
};

/// alpha,n,basis_size,distance_sq,distance
void writeScanCsv(std::ostream& out, std::span<const ScanRow> rows);
/// k,l,re,im
void writeRecurrenceCsv(std::ostream& out, const RecurrenceResidualGrid& grid);
/// k,l,magnitude over the positive-frequency quadrant.
void writeSpectrumCsv(std::ostream& out, const QExperimentReport& report);

}  // namespace dircyc
