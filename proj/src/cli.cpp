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

#include "selfsim/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfsim/addresses.hpp"
#include "selfsim/density.hpp"
#include "selfsim/pairs.hpp"
#include "selfsim/render.hpp"
#include "selfsim/tiling.hpp"

namespace selfsim {

namespace {

using nlohmann::json;

struct Settings {
  double eps_len = 1e-9;
  double eps_area = 1e-9;
  int max_depth = 20;
  std::size_t max_tiles = 1'000'000;
  std::vector<std::string> palette;
  double stroke_width = -1.0;
  std::string background;
  bool json_out = false;

  Tolerance tol() const { return {eps_len, eps_area}; }
  Limits limits() const {
    Limits l;
    l.max_depth = max_depth;
    l.max_tiles = max_tiles;
    return l;
  }
  RenderStyle style() const {
    RenderStyle s = DefaultStyle();
    if (!palette.empty()) s.palette = palette;
    if (stroke_width >= 0.0) s.stroke_width = stroke_width;
    if (!background.empty()) s.background = background;
    return s;
  }
};

// Thrown for usage problems detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

PairCandidate LoadCandidate(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(arg)) {
    std::ifstream in(arg, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
      j = json::parse(ss.str());
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, arg + ": " + e.what());
    }
    return CandidateFromJson(j);
  }
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
    throw Error(ErrorCode::kParse, "cannot read " + arg);
  }
  GeneratingPair p = Catalog(arg);
  return {p.name, p.polygon, p.maps};
}

GeneratingPair LoadPair(const std::string& arg, const Settings& st) {
  PairCandidate c = LoadCandidate(arg);
  return ValidatePair(c.name, c.polygon, c.maps, st.tol());
}

Window ParseWindow(const std::string& s) {
  std::stringstream ss(s);
  std::string item;
  std::vector<double> v;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad window '" + s + "', expected cx,cy,R");
    }
  }
  if (v.size() != 3 || !(v[2] > 0.0)) {
    throw UsageError("bad window '" + s + "', expected cx,cy,R with R > 0");
  }
  return {{v[0], v[1]}, v[2]};
}

// Deepest level k <= 8 whose patch has at most `budget` tiles.
int DefaultLevel(const GeneratingPair& pair, const ThetaStream& theta,
                 std::size_t budget = 20000) {
  int best = 1;
  for (int k = 1; k <= 8; ++k) {
    if (FrontierSize(pair, PrefixWeight(theta, k, pair)) > budget) break;
    best = k;
  }
  return best;
}

void WriteFile(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << data;
}

// ---------------------------------------------------------------------------

int CmdCatalog(const Settings& st, std::ostream& out) {
  json listing = json::array();
  for (const auto& e : CatalogEntries()) {
    GeneratingPair p = Catalog(e.example);
    json row = {{"name", e.name},
                {"params", e.params},
                {"example", e.example},
                {"N", p.N()},
                {"exponents", p.exponents},
                {"scale", p.scale},
                {"reconstructed", e.reconstructed},
                {"note", e.note}};
    listing.push_back(row);
    if (st.json_out) continue;
    out << e.name;
    if (!e.params.empty()) out << "  [" << e.params << "; e.g. " << e.example << "]";
    out << "\n  N=" << p.N() << "  exponents=";
    for (std::size_t i = 0; i < p.exponents.size(); ++i) {
      out << (i ? "," : "") << p.exponents[i];
    }
    out << "  s=" << Fmt("%.10f", p.scale)
        << "  reconstructed=" << (e.reconstructed ? "yes" : "no") << "\n  "
        << e.note << "\n";
  }
  if (st.json_out) out << listing.dump(2) << "\n";
  return 0;
}

int CmdValidate(const std::string& arg, const Settings& st, std::ostream& out) {
  PairCandidate c = LoadCandidate(arg);
  nlohmann::ordered_json rep;
  rep["pair"] = c.name;
  rep["N"] = c.maps.size();
  int code = 0;
  try {
    ValidationReport r;
    GeneratingPair p = ValidatePair(c.name, c.polygon, c.maps, st.tol(), &r);
    rep["exponents"] = p.exponents;
    rep["scale"] = p.scale;
    rep["area_defect"] = r.area_defect;
    rep["max_overlap"] = r.max_overlap;
    rep["contained"] = r.contained;
    rep["exponent_fit_error"] = r.exponent_fit_error;
    if (p.N() <= 12) {
      auto red = CheckReducible(p, st.tol());
      rep["reducible"] = red ? json(red->subset) : json(false);
    }
    rep["passed"] = true;
  } catch (const SubdivisionFailure& e) {
    const auto& r = e.report();
    rep["area_defect"] = r.area_defect;
    rep["max_overlap"] = r.max_overlap;
    rep["contained"] = r.contained;
    rep["exponent_fit_error"] = r.exponent_fit_error;
    rep["passed"] = false;
    rep["reason"] = "SubdivisionFailure";
    code = 1;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExponentFailure) throw;
    rep["passed"] = false;
    rep["reason"] = ErrorCodeName(e.cause());
    code = 1;
  }
  if (st.json_out) {
    out << rep.dump(2) << "\n";
    return code;
  }
  for (auto it = rep.begin(); it != rep.end(); ++it) {
    if (it.key() == "passed") continue;
    out << it.key() << ": ";
    if (it->is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) out << (i ? " " : "") << (*it)[i];
    } else if (it->is_boolean()) {
      out << (it->get<bool>() ? "yes" : "no");
    } else if (it->is_string()) {
      out << it->get<std::string>();
    } else if (it->is_number_float()) {
      out << Fmt("%.6g", it->get<double>());
    } else {
      out << *it;
    }
    out << "\n";
  }
  out << "result: " << (code == 0 ? "PASS" : "FAIL") << "\n";
  return code;
}

int CmdTile(const std::string& pair_arg, const std::string& theta_spec,
            int level, const std::string& window_spec,
            const std::vector<std::string>& outputs, bool require_covered,
            const Settings& st, std::ostream& out, std::ostream& err) {
  GeneratingPair pair = LoadPair(pair_arg, st);
  ThetaStream theta = ThetaStream::Parse(theta_spec, pair.N());
  if ((level > 0) == !window_spec.empty()) {
    throw UsageError("give exactly one of --level and --window");
  }
  std::vector<Tile> tiles;
  int used_level = level;
  if (level > 0) {
    tiles = MakePatch(pair, theta, level).tiles;
  } else {
    WindowTiling wt = GenerateWindow(pair, theta, ParseWindow(window_spec), st.limits());
    used_level = wt.level;
    if (!wt.covered) {
      err << "warning: window not covered up to level " << wt.level << "\n";
      if (require_covered) {
        throw Error(ErrorCode::kWindowNotCovered, "window not covered");
      }
    }
    tiles = std::move(wt.tiles);
  }
  for (const auto& path : outputs) {
    std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".svg") {
      WriteFile(path, RenderSvg(tiles, pair.M(), st.style()));
    } else if (ext == ".json") {
      WriteFile(path, TilingToJson(pair, theta, used_level, tiles).dump() + "\n");
    } else {
      throw UsageError("output must end in .svg or .json: " + path);
    }
  }
  out << "tiles: " << tiles.size() << "\nlevel: " << used_level << "\n";
  return 0;
}

int CmdVerify(const std::string& pair_arg, const std::string& theta_spec,
              const std::string& suite, int level, double radius,
              const Settings& st, std::ostream& out) {
  GeneratingPair pair = LoadPair(pair_arg, st);
  ThetaStream theta = ThetaStream::Parse(theta_spec, pair.N());
  bool pass = true;
  auto report = [&](const std::string& what, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
    pass = pass && ok;
  };
  if (suite == "partition") {
    const int k = level > 0 ? level : DefaultLevel(pair, theta);
    Patch patch = MakePatch(pair, theta, k);
    const double support = PatchSupport(pair, theta, k).Area();
    PartitionReport r = CheckPartition(patch.tiles);
    const double defect = std::abs(r.area_sum - support) / support;
    out << "level " << k << ", " << patch.tiles.size() << " tiles\n";
    report("area sum (relative defect " + Fmt("%.3g", defect) + ")", defect <= 1e-8);
    report("pairwise overlap (max " + Fmt("%.3g", r.max_overlap) + ")",
           r.max_overlap <= st.eps_area * pair.polygon.Area());
  } else if (suite == "nesting") {
    const int k = level > 0 ? level : DefaultLevel(pair, theta);
    for (int j = 1; j < k; ++j) {
      report("patch " + std::to_string(j) + " inside patch " + std::to_string(j + 1),
             CheckNested(pair, theta, j));
    }
  } else if (suite == "selfsim") {
    Limits lim = st.limits();
    if (theta.kind() == ThetaStream::Kind::kPeriodic) {
      const Address& alpha = theta.word();
      const int depth = level > 0 ? level : static_cast<int>(alpha.size()) + 4;
      lim.max_depth = std::max(lim.max_depth, depth + 2 * static_cast<int>(alpha.size()));
      report("f_-" + AddressToString(alpha, pair.N()) + " at depth " +
                 std::to_string(depth),
             CheckSelfSimilar(pair, alpha, depth, lim));
    } else if (theta.kind() == ThetaStream::Kind::kEventuallyPeriodic) {
      const Address& beta = theta.prefix_word();
      const Address& alpha = theta.word();
      const int K = static_cast<int>(beta.size());
      const int eb = WeightOf(beta, pair).e, ea = WeightOf(alpha, pair).e;
      // Compare against enough copies of alpha to match e(beta).
      const int L = static_cast<int>(alpha.size()) * (eb % ea == 0 ? eb / ea : 1);
      ThetaStream psi = ThetaStream::Periodic(alpha);
      // Throws kWeightMismatch unless e(beta) is a multiple of e(alpha).
      CongruenceMotion g = FindCongruenceMotion(pair, theta, K, psi, L, 4);
      report("congruence to the periodic tiling", g.tiles_match);
      Similitude phi = g.motion.Inverse()
                           .Compose(InversePrefix(psi, L, pair))
                           .Compose(g.motion);
      const int depth = level > 0 ? level : K + 4;
      lim.max_depth = std::max(lim.max_depth, depth + 2 * L);
      report("conjugated blow-up at depth " + std::to_string(depth),
             CheckSelfSimilarityMap(pair, theta, phi, depth, lim));
    } else {
      throw UsageError("selfsim needs a periodic or eventually periodic stream");
    }
  } else if (suite == "order") {
    const int k = level > 0 ? level : DefaultLevel(pair, theta);
    Patch patch = MakePatch(pair, theta, k);
    auto protos = Prototiles(patch.tiles, st.tol());
    out << "level " << k << ", " << patch.tiles.size() << " tiles\n";
    out << "classes: " << protos.size() << "\n";
    report("prototile count equals M = " + std::to_string(pair.M()),
           static_cast<int>(protos.size()) == pair.M());
  } else if (suite == "quasi") {
    const int k = level > 0 ? level : 2;
    auto motions = QuasiperiodicityProbe(pair, theta, k, radius, st.limits());
    out << "motions: " << motions.size() << "\n";
    report("patch " + std::to_string(k) + " recurs within radius " + Fmt("%g", radius),
           motions.size() >= 2);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return pass ? 0 : 1;
}

int CmdDensity(const std::string& pair_arg, const std::string& theta_spec,
               const std::string& window_spec, const Settings& st,
               std::ostream& out) {
  GeneratingPair pair = LoadPair(pair_arg, st);
  DensityResult lim = LimitDensities(BuildMatrix(pair));
  std::vector<double> emp;
  if (theta_spec.empty() != window_spec.empty()) {
    throw UsageError("--theta and --window go together");
  }
  WindowTiling wt;
  if (!theta_spec.empty()) {
    ThetaStream theta = ThetaStream::Parse(theta_spec, pair.N());
    wt = GenerateWindow(pair, theta, ParseWindow(window_spec), st.limits());
    emp = EmpiricalDensities(wt, pair.M());
  }
  double gap = 0.0;
  for (std::size_t i = 0; i < emp.size(); ++i) {
    gap = std::max(gap, std::abs(emp[i] - lim.d[i]));
  }
  if (st.json_out) {
    json j = {{"pair", pair.name}, {"limit", lim.d}};
    if (!emp.empty()) {
      j["empirical"] = emp;
      j["gap"] = gap;
      j["covered"] = wt.covered;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "class  limit" << (emp.empty() ? "" : "     empirical") << "\n";
  for (std::size_t i = 0; i < lim.d.size(); ++i) {
    out << i << "      " << Fmt("%.6f", lim.d[i]);
    if (!emp.empty()) out << "  " << Fmt("%.6f", emp[i]);
    out << "\n";
  }
  if (!emp.empty()) {
    out << "gap: " << Fmt("%.6f", gap) << (wt.covered ? "" : " (window not covered)")
        << "\n";
  }
  return 0;
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParse:
    case ErrorCode::kUnknownName:
    case ErrorCode::kBadParams:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Self-similar polygonal tilings from generating pairs", "selfsim"};
  app.set_config("--config", "", "key=value file for the global options");
  app.require_subcommand(1);
  app.fallthrough();
  Settings st;
  app.add_option("--eps_len", st.eps_len, "length tolerance");
  app.add_option("--eps_area", st.eps_area, "area tolerance");
  app.add_option("--max_depth", st.max_depth, "deepest level searched")
      ->check(CLI::PositiveNumber);
  app.add_option("--max_tiles", st.max_tiles, "tile cap per window")
      ->check(CLI::PositiveNumber);
  app.add_option("--palette", st.palette, "fill colors by class")->delimiter(',');
  app.add_option("--stroke_width", st.stroke_width,
                 "stroke width as a fraction of the view size");
  app.add_option("--background", st.background, "SVG background color");
  app.add_flag("--json", st.json_out, "JSON output");

  auto* catalog = app.add_subcommand("catalog", "list the catalog");

  std::string pair_arg, theta_spec, window_spec, suite;
  int level = 0;
  double radius = 4.0;
  std::vector<std::string> outputs;
  bool require_covered = false;

  auto* validate = app.add_subcommand("validate", "check a generating pair");
  validate->add_option("pair", pair_arg, "catalog name or pair JSON file")->required();

  auto* tile = app.add_subcommand("tile", "render a patch or a window");
  tile->add_option("pair", pair_arg, "catalog name or pair JSON file")->required();
  tile->add_option("theta", theta_spec, "index stream, e.g. periodic:12")->required();
  tile->add_option("--level", level, "patch level k")->check(CLI::PositiveNumber);
  tile->add_option("--window", window_spec, "disk cx,cy,R");
  tile->add_option("--out", outputs, "output .svg or .json (repeatable)")->required();
  tile->add_flag("--require-covered", require_covered,
                 "fail when no level covers the window");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("pair", pair_arg, "catalog name or pair JSON file")->required();
  verify->add_option("theta", theta_spec, "index stream")->required();
  verify->add_option("--suite", suite, "partition, nesting, selfsim, order or quasi")
      ->required()
      ->check(CLI::IsMember({"partition", "nesting", "selfsim", "order", "quasi"}));
  verify->add_option("--level", level, "patch level")->check(CLI::PositiveNumber);
  verify->add_option("--radius", radius, "search radius for quasi")
      ->check(CLI::PositiveNumber);

  auto* density = app.add_subcommand("density", "limit and empirical densities");
  density->add_option("pair", pair_arg, "catalog name or pair JSON file")->required();
  density->add_option("--theta", theta_spec, "index stream for the empirical count");
  density->add_option("--window", window_spec, "disk cx,cy,R");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (catalog->parsed()) return CmdCatalog(st, out);
    if (validate->parsed()) return CmdValidate(pair_arg, st, out);
    if (tile->parsed()) {
      return CmdTile(pair_arg, theta_spec, level, window_spec, outputs,
                     require_covered, st, out, err);
    }
    if (verify->parsed()) {
      return CmdVerify(pair_arg, theta_spec, suite, level, radius, st, out);
    }
    if (density->parsed()) {
      return CmdDensity(pair_arg, theta_spec, window_spec, st, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace selfsim
