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

#ifndef SELFSIM_ADDRESSES_HPP_
#define SELFSIM_ADDRESSES_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "selfsim/geometry.hpp"
#include "selfsim/pairs.hpp"

namespace selfsim {

// Finite word over {1..N}; symbol k stands for map f_k.
using Address = std::vector<std::uint8_t>;

// "121" for N <= 9, dot separated ("1.10.2") otherwise.
std::string AddressToString(const Address& a, int n_symbols);
Address AddressFromString(const std::string& s, int n_symbols);

struct Weight {
  int e = 0;        // sum of exponents over the word
  int e_minus = 0;  // same without the last symbol
};

Weight WeightOf(const Address& sigma, const GeneratingPair& pair);

inline constexpr std::size_t kDefaultFrontierCap = 10'000'000;

// |S_n| by the recursion c(m) = sum_k c(m - a_k), c(m <= 0) = 1.
// Saturates at SIZE_MAX.
std::size_t FrontierSize(const GeneratingPair& pair, int n);

// S_n = {sigma : e(sigma) >= n > e_minus(sigma)} in lexicographic order.
// Throws kLevelTooLarge when |S_n| exceeds cap.
std::vector<Address> Frontier(const GeneratingPair& pair, int n,
                              std::size_t cap = kDefaultFrontierCap);

// Depth first walk over S_n carrying base o f_sigma.  `keep` may prune a
// subtree given its prefix map; pruned prefixes are not emitted.  Visits in
// lexicographic order.  Top level branches run on worker threads when the
// frontier is large; `emit` calls are serialized in address order.
struct FrontierVisitor {
  std::function<bool(const Address&, const Similitude&)> keep;
  std::function<void(const Address&, const Similitude&)> emit;
};
void WalkFrontier(const GeneratingPair& pair, int n, const Similitude& base,
                  const FrontierVisitor& visitor,
                  std::size_t cap = kDefaultFrontierCap);

// f_sigma = f_{sigma_1} o ... o f_{sigma_k}.
Similitude MapOf(const Address& sigma, const GeneratingPair& pair);

// ---------------------------------------------------------------------------
// Infinite index streams

class ThetaStream {
 public:
  enum class Kind { kPeriodic, kEventuallyPeriodic, kChampernowne, kRandom,
                    kExplicit };

  static ThetaStream Periodic(Address word);
  static ThetaStream EventuallyPeriodic(Address prefix, Address word);
  static ThetaStream Champernowne(int n_symbols);
  // Independent draws with the given probabilities, each >= p_min > 0.
  static ThetaStream Random(int n_symbols, std::uint64_t seed,
                            std::vector<double> weights, double p_min);
  // Finite; reading past the end throws kPrefixExhausted.
  static ThetaStream Explicit(Address prefix);

  // Mini-language: "periodic:12", "evp:2|11", "champernowne",
  // "random:seed=7,p=0.5", "random:seed=7,w=0.3/0.7", "explicit:1211".
  // Throws kParse.
  static ThetaStream Parse(const std::string& spec, int n_symbols);
  std::string Spec() const;

  Kind kind() const { return kind_; }
  int n_symbols() const { return n_; }
  // Periodic part for (eventually) periodic streams.
  const Address& word() const { return word_; }
  const Address& prefix_word() const { return prefix_; }

  // 1-based symbol at position i (0-based).
  std::uint8_t Symbol(std::size_t i) const;
  Address Prefix(std::size_t k) const;

 private:
  Kind kind_ = Kind::kPeriodic;
  int n_ = 0;
  Address prefix_;
  Address word_;
  std::uint64_t seed_ = 0;
  std::vector<double> weights_;
  double p_min_ = 0.0;
};

// Sum of exponents over theta|k.
int PrefixWeight(const ThetaStream& theta, int k, const GeneratingPair& pair);

// f_{-(theta|k)} = f_{theta_1}^{-1} o ... o f_{theta_k}^{-1}.
Similitude InversePrefix(const ThetaStream& theta, int k,
                         const GeneratingPair& pair);

}  // namespace selfsim

#endif  // SELFSIM_ADDRESSES_HPP_
