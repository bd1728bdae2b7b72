// Copyright 2026 The selfsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELFSIM_PAIRS_HPP_
#define SELFSIM_PAIRS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "selfsim/error.hpp"
#include "selfsim/geometry.hpp"

namespace selfsim {

// Largest exponent tried when fitting ratios to powers of a common base.
inline constexpr int kMaxExponent = 24;

// A polygon p with maps f_1..f_N such that p is the non-overlapping union
// of f_n(p), and ratio(f_n) = scale^exponents[n].
struct GeneratingPair {
  std::string name;
  Polygon polygon;
  std::vector<Similitude> maps;
  std::vector<int> exponents;
  double scale = 0.0;

  int N() const { return static_cast<int>(maps.size()); }
  // Largest exponent, i.e. the number of tile sizes.
  int M() const;
};

struct ValidationReport {
  double area_defect = 0.0;     // |sum area(f_n p) - area p| / area p
  double max_overlap = 0.0;     // largest pairwise overlap / area p
  bool contained = true;        // every f_n(p) inside p
  double exponent_fit_error = 0.0;
  bool passed = false;
};

class SubdivisionFailure : public Error {
 public:
  SubdivisionFailure(const ValidationReport& report, const std::string& msg)
      : Error(ErrorCode::kSubdivisionFailure, msg), report_(report) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Root s in (0, 1) of sum s^(2 a_n) = 1.
double SolveScale(const std::vector<int>& exponents);

struct ExponentFit {
  std::vector<int> exponents;
  double scale = 0.0;
  double fit_error = 0.0;  // max |r_n - scale^a_n|
};

// Integers a_n with gcd 1 and max <= kMaxExponent such that r_n = s^a_n for
// a single s.  Throws kNoCommonBase.
ExponentFit InferExponents(const std::vector<double>& ratios,
                           double fit_tol = 1e-8);

// Divides out the gcd g of the exponents and replaces s by s^g.
ExponentFit NormalizeExponents(const std::vector<int>& exponents, double s);

// Checks the subdivision and fills in exponents and scale.  Throws
// kExponentFailure (cause kNoCommonBase) or SubdivisionFailure.
GeneratingPair ValidatePair(const std::string& name, const Polygon& polygon,
                            const std::vector<Similitude>& maps,
                            const Tolerance& tol = {},
                            ValidationReport* report = nullptr);

// Computes the report without throwing on geometric failure.
ValidationReport Inspect(const Polygon& polygon,
                         const std::vector<Similitude>& maps,
                         const Tolerance& tol = {});

// Union of polygons glued along shared edges, or nullopt when the union is
// not a single simple polygon.
std::optional<Polygon> GluePolygons(const std::vector<Polygon>& parts,
                                    double eps);

struct Reduction {
  std::vector<int> subset;  // 1-based map indices
  Similitude motion;        // takes p onto the union of the subset's tiles
};

// Index sets S with 2 <= |S| < N whose tiles assemble into a polygon
// similar to p, by size and then lexicographically.
std::vector<Reduction> AllReductions(const GeneratingPair& pair,
                                     const Tolerance& tol = {});
// First reduction, or nullopt for an irreducible pair.
std::optional<Reduction> CheckReducible(const GeneratingPair& pair,
                                        const Tolerance& tol = {});

// Replaces f_i by f_i o f_n for every n.
GeneratingPair Expand(const GeneratingPair& pair, int i);

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
  std::string name;      // e.g. "trapezoid(a,b)"
  std::string params;    // parameter constraints, empty when fixed
  std::string example;   // instantiable name
  bool reconstructed = false;
  std::string note;
};

std::vector<CatalogEntry> CatalogEntries();

// Accepts "golden-bee", "right-triangle(3,1)", "trapezoid(3,1)",
// "sporadic-A", ..., "square-4", "rect-reducible".  Throws kUnknownName or
// kBadParams.
GeneratingPair Catalog(const std::string& name);
GeneratingPair Catalog(const std::string& family, const std::vector<int>& params);

// Six-triangle dissection of an equilateral triangle whose ratios 2/3 and
// 1/3 share no common base.
struct PairCandidate {
  std::string name;
  Polygon polygon;
  std::vector<Similitude> maps;
};
PairCandidate EquilateralNonExample();

// ---------------------------------------------------------------------------
// JSON

nlohmann::json PairToJson(const GeneratingPair& pair);
// Reads every field verbatim; no validation.
GeneratingPair PairFromJson(const nlohmann::json& j);
// Reads name, vertices and maps only.
PairCandidate CandidateFromJson(const nlohmann::json& j);
nlohmann::json CandidateToJson(const PairCandidate& c);

}  // namespace selfsim

#endif  // SELFSIM_PAIRS_HPP_
