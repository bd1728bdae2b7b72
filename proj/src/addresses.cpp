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

#include "selfsim/addresses.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "selfsim/parallel.hpp"

namespace selfsim {

std::string AddressToString(const Address& a, int n_symbols) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (n_symbols > 9 && i > 0) s += '.';
    s += std::to_string(static_cast<int>(a[i]));
  }
  return s;
}

Address AddressFromString(const std::string& s, int n_symbols) {
  Address a;
  auto push = [&](long v) {
    if (v < 1 || v > n_symbols) {
      throw Error(ErrorCode::kParse, "symbol out of range in '" + s + "'");
    }
    a.push_back(static_cast<std::uint8_t>(v));
  };
  if (s.find('.') != std::string::npos || n_symbols > 9) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '.')) {
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::kParse, "bad symbol in '" + s + "'");
      }
      push(std::stol(item));
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::kParse, "bad symbol in '" + s + "'");
      }
      push(c - '0');
    }
  }
  return a;
}

Weight WeightOf(const Address& sigma, const GeneratingPair& pair) {
  Weight w;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 1 || sigma[i] > pair.exponents.size()) {
      throw Error(ErrorCode::kInvalidArgument, "symbol out of range");
    }
    int a = pair.exponents[sigma[i] - 1];
    w.e += a;
    if (i + 1 < sigma.size()) w.e_minus += a;
  }
  return w;
}

std::size_t FrontierSize(const GeneratingPair& pair, int n) {
  if (n <= 0) return 1;
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> c(n + 1, 1);  // c[m] for m = 0..n
  for (int m = 1; m <= n; ++m) {
    std::size_t total = 0;
    for (int a : pair.exponents) {
      std::size_t term = m - a <= 0 ? 1 : c[m - a];
      total = (total > kMax - term) ? kMax : total + term;
    }
    c[m] = total;
  }
  return c[n];
}

namespace {

struct Walker {
  const GeneratingPair& pair;
  int n;
  const FrontierVisitor& visitor;
  std::size_t cap;
  std::size_t emitted = 0;
  // When set, emits are buffered here instead of forwarded.
  std::vector<std::pair<Address, Similitude>>* buffer = nullptr;

  void Emit(const Address& a, const Similitude& m) {
    if (++emitted > cap) {
      throw Error(ErrorCode::kLevelTooLarge,
                  "frontier exceeds " + std::to_string(cap) + " addresses");
    }
    if (buffer) {
      buffer->emplace_back(a, m);
    } else {
      visitor.emit(a, m);
    }
  }

  void Visit(Address& sigma, const Similitude& map, int e) {
    for (int k = 1; k <= pair.N(); ++k) {
      sigma.push_back(static_cast<std::uint8_t>(k));
      Similitude next = map.Compose(pair.maps[k - 1]);
      int e2 = e + pair.exponents[k - 1];
      if (!visitor.keep || visitor.keep(sigma, next)) {
        if (e2 >= n) {
          Emit(sigma, next);
        } else {
          Visit(sigma, next, e2);
        }
      }
      sigma.pop_back();
    }
  }
};

constexpr std::size_t kParallelThreshold = 1 << 14;

}  // namespace

void WalkFrontier(const GeneratingPair& pair, int n, const Similitude& base,
                  const FrontierVisitor& visitor, std::size_t cap) {
  if (n <= 0) {
    Address empty;
    if (!visitor.keep || visitor.keep(empty, base)) visitor.emit(empty, base);
    return;
  }
  const std::size_t size = FrontierSize(pair, n);
  if (!visitor.keep && size > cap) {
    throw Error(ErrorCode::kLevelTooLarge,
                "|S_" + std::to_string(n) + "| = " + std::to_string(size) +
                    " exceeds " + std::to_string(cap));
  }
  if (WorkerCount() <= 1 || size < kParallelThreshold) {
    Walker w{pair, n, visitor, cap};
    Address sigma;
    w.Visit(sigma, base, 0);
    return;
  }
  // One task per first symbol; results are replayed in order.
  const int branches = pair.N();
  std::vector<std::vector<std::pair<Address, Similitude>>> out(branches);
  ParallelFor(branches, [&](std::size_t b) {
    Walker w{pair, n, visitor, cap};
    w.buffer = &out[b];
    Address sigma{static_cast<std::uint8_t>(b + 1)};
    Similitude m = base.Compose(pair.maps[b]);
    if (visitor.keep && !visitor.keep(sigma, m)) return;
    int e = pair.exponents[b];
    if (e >= n) {
      w.Emit(sigma, m);
    } else {
      w.Visit(sigma, m, e);
    }
  });
  std::size_t total = 0;
  for (const auto& branch : out) total += branch.size();
  if (total > cap) {
    throw Error(ErrorCode::kLevelTooLarge,
                "frontier exceeds " + std::to_string(cap) + " addresses");
  }
  for (const auto& branch : out) {
    for (const auto& [a, m] : branch) visitor.emit(a, m);
  }
}

std::vector<Address> Frontier(const GeneratingPair& pair, int n,
                              std::size_t cap) {
  std::vector<Address> out;
  if (n <= 0) return {Address{}};
  const std::size_t size = FrontierSize(pair, n);
  if (size > cap) {
    throw Error(ErrorCode::kLevelTooLarge,
                "|S_" + std::to_string(n) + "| = " + std::to_string(size) +
                    " exceeds " + std::to_string(cap));
  }
  out.reserve(size);
  // Pure symbol recursion; no maps needed.
  Address sigma;
  std::function<void(int)> visit = [&](int e) {
    for (int k = 1; k <= pair.N(); ++k) {
      sigma.push_back(static_cast<std::uint8_t>(k));
      int e2 = e + pair.exponents[k - 1];
      if (e2 >= n) {
        out.push_back(sigma);
      } else {
        visit(e2);
      }
      sigma.pop_back();
    }
  };
  visit(0);
  return out;
}

Similitude MapOf(const Address& sigma, const GeneratingPair& pair) {
  Similitude m;
  for (auto k : sigma) m = m.Compose(pair.maps.at(k - 1));
  return m;
}

// ---------------------------------------------------------------------------
// ThetaStream

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void CheckWord(const Address& w, int n, bool allow_empty) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "alphabet is empty");
  if (!allow_empty && w.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "word must not be empty");
  }
}

int MaxSymbol(const Address& w) {
  int m = 0;
  for (auto c : w) m = std::max(m, static_cast<int>(c));
  return m;
}

}  // namespace

ThetaStream ThetaStream::Periodic(Address word) {
  CheckWord(word, 1, false);
  ThetaStream t;
  t.kind_ = Kind::kPeriodic;
  t.n_ = MaxSymbol(word);
  t.word_ = std::move(word);
  return t;
}

ThetaStream ThetaStream::EventuallyPeriodic(Address prefix, Address word) {
  CheckWord(word, 1, false);
  ThetaStream t;
  t.kind_ = Kind::kEventuallyPeriodic;
  t.n_ = std::max(MaxSymbol(prefix), MaxSymbol(word));
  t.prefix_ = std::move(prefix);
  t.word_ = std::move(word);
  return t;
}

ThetaStream ThetaStream::Champernowne(int n_symbols) {
  if (n_symbols < 1) throw Error(ErrorCode::kInvalidArgument, "alphabet is empty");
  ThetaStream t;
  t.kind_ = Kind::kChampernowne;
  t.n_ = n_symbols;
  return t;
}

ThetaStream ThetaStream::Random(int n_symbols, std::uint64_t seed,
                                std::vector<double> weights, double p_min) {
  if (n_symbols < 1) throw Error(ErrorCode::kInvalidArgument, "alphabet is empty");
  if (weights.empty()) weights.assign(n_symbols, 1.0 / n_symbols);
  if (static_cast<int>(weights.size()) != n_symbols) {
    throw Error(ErrorCode::kInvalidArgument, "one weight per symbol expected");
  }
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "weights must sum to 1");
  }
  if (p_min <= 0.0) p_min = *std::min_element(weights.begin(), weights.end());
  for (double w : weights) {
    if (!(w >= p_min - 1e-15) || !(p_min > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "every weight must be at least p > 0");
    }
  }
  ThetaStream t;
  t.kind_ = Kind::kRandom;
  t.n_ = n_symbols;
  t.seed_ = seed;
  t.weights_ = std::move(weights);
  t.p_min_ = p_min;
  return t;
}

ThetaStream ThetaStream::Explicit(Address prefix) {
  ThetaStream t;
  t.kind_ = Kind::kExplicit;
  t.n_ = MaxSymbol(prefix);
  t.prefix_ = std::move(prefix);
  return t;
}

std::uint8_t ThetaStream::Symbol(std::size_t i) const {
  switch (kind_) {
    case Kind::kPeriodic:
      return word_[i % word_.size()];
    case Kind::kEventuallyPeriodic:
      if (i < prefix_.size()) return prefix_[i];
      return word_[(i - prefix_.size()) % word_.size()];
    case Kind::kExplicit:
      if (i >= prefix_.size()) {
        throw Error(ErrorCode::kPrefixExhausted,
                    "explicit stream has only " + std::to_string(prefix_.size()) +
                        " symbols");
      }
      return prefix_[i];
    case Kind::kChampernowne: {
      // Words of length L in lexicographic order, L = 1, 2, ...
      unsigned __int128 idx = i, count = n_;
      unsigned L = 1;
      while (idx >= count * L) {
        idx -= count * L;
        ++L;
        count *= n_;
      }
      unsigned __int128 word = idx / L;
      unsigned pos = static_cast<unsigned>(idx % L);
      for (unsigned k = 0; k + 1 + pos < L; ++k) word /= n_;
      return static_cast<std::uint8_t>(word % n_ + 1);
    }
    case Kind::kRandom: {
      std::uint64_t r = SplitMix64(seed_ ^ SplitMix64(i));
      double u = static_cast<double>(r >> 11) * 0x1.0p-53;
      double acc = 0.0;
      for (int k = 0; k < n_; ++k) {
        acc += weights_[k];
        if (u < acc) return static_cast<std::uint8_t>(k + 1);
      }
      return static_cast<std::uint8_t>(n_);
    }
  }
  return 1;
}

Address ThetaStream::Prefix(std::size_t k) const {
  Address a(k);
  for (std::size_t i = 0; i < k; ++i) a[i] = Symbol(i);
  return a;
}

namespace {

double ParseDouble(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(ErrorCode::kParse, "bad number '" + s + "' in '" + spec + "'");
}

}  // namespace

ThetaStream ThetaStream::Parse(const std::string& spec, int n_symbols) {
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  ThetaStream t;
  try {
    if (kind == "periodic") {
      t = Periodic(AddressFromString(body, n_symbols));
    } else if (kind == "evp") {
      auto bar = body.find('|');
      if (bar == std::string::npos) {
        throw Error(ErrorCode::kParse, "evp needs prefix|word");
      }
      t = EventuallyPeriodic(AddressFromString(body.substr(0, bar), n_symbols),
                             AddressFromString(body.substr(bar + 1), n_symbols));
    } else if (kind == "champernowne") {
      if (!body.empty()) throw Error(ErrorCode::kParse, "champernowne takes no argument");
      t = Champernowne(n_symbols);
    } else if (kind == "random") {
      std::uint64_t seed = 0;
      double p = 0.0;
      std::vector<double> weights;
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw Error(ErrorCode::kParse, "expected key=value in '" + spec + "'");
        }
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "seed") {
          try {
            std::size_t used = 0;
            seed = std::stoull(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
          } catch (const std::logic_error&) {
            throw Error(ErrorCode::kParse, "bad seed '" + val + "'");
          }
        } else if (key == "p") {
          p = ParseDouble(val, spec);
        } else if (key == "w") {
          std::stringstream ws(val);
          std::string x;
          while (std::getline(ws, x, '/')) weights.push_back(ParseDouble(x, spec));
        } else {
          throw Error(ErrorCode::kParse, "unknown key '" + key + "'");
        }
      }
      t = Random(n_symbols, seed, weights, p);
    } else if (kind == "explicit") {
      if (body.empty()) throw Error(ErrorCode::kParse, "empty explicit stream");
      t = Explicit(AddressFromString(body, n_symbols));
    } else {
      throw Error(ErrorCode::kParse, "unknown stream kind '" + kind + "'");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, e.what());
  }
  t.n_ = n_symbols;
  return t;
}

std::string ThetaStream::Spec() const {
  switch (kind_) {
    case Kind::kPeriodic:
      return "periodic:" + AddressToString(word_, n_);
    case Kind::kEventuallyPeriodic:
      return "evp:" + AddressToString(prefix_, n_) + "|" + AddressToString(word_, n_);
    case Kind::kChampernowne:
      return "champernowne";
    case Kind::kExplicit:
      return "explicit:" + AddressToString(prefix_, n_);
    case Kind::kRandom: {
      std::string s = "random:seed=" + std::to_string(seed_) + ",w=";
      char buf[32];
      for (std::size_t k = 0; k < weights_.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", weights_[k]);
        s += (k ? "/" : "") + std::string(buf);
      }
      std::snprintf(buf, sizeof(buf), "%.17g", p_min_);
      return s + ",p=" + buf;
    }
  }
  return "";
}

int PrefixWeight(const ThetaStream& theta, int k, const GeneratingPair& pair) {
  int e = 0;
  for (int i = 0; i < k; ++i) e += pair.exponents.at(theta.Symbol(i) - 1);
  return e;
}

Similitude InversePrefix(const ThetaStream& theta, int k,
                         const GeneratingPair& pair) {
  Similitude m;
  for (int i = 0; i < k; ++i) {
    m = m.Compose(pair.maps.at(theta.Symbol(i) - 1).Inverse());
  }
  return m;
}

}  // namespace selfsim
