// Copyright 2026 The barne-kit Authors
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
#ifndef BARNE_GAME_MIXED_HPP_
#define BARNE_GAME_MIXED_HPP_

#include <string>
#include <vector>

#include "barne/game/equilibrium.hpp"

namespace barne {

struct MixedStrategy {
  std::vector<double> weights;  // indexed by StrategyId

  static MixedStrategy pure(int num_strategies, StrategyId s);
  static MixedStrategy uniform(int num_strategies, std::span<const StrategyId> support);

  // Throws InvalidArgument unless weights are non-negative and sum to 1.
  void validate(int num_strategies) const;
  StrategyId dominant() const;
};

struct MixedSearchOptions {
  // Strategies the mix may put weight on; empty means all of T. Deviations are
  // always checked against all of T.
  std::vector<StrategyId> support;
  double step = 0.5;
  int max_iterations = 10000;
  int grid_resolution = 200;
  int refinement_levels = 24;
  SearchOptions search;
};

struct MixedSearchResult {
  MixedStrategy strategy;
  double regret = 0.0;
  int iterations = 0;
  std::string method;
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(MixedSearchResult best);
  const MixedSearchResult& best() const { return best_; }

 private:
  MixedSearchResult best_;
};

// max_t minF u(t, sigma^{g-1}) - minF u(sigma, sigma^{g-1}), payoffs extended
// multilinearly, Byzantine worst case over pure joint profiles.
double max_min_regret(const GenericGame& game, int f, int g, const MixedStrategy& sigma,
                      const SearchOptions& options = {});

// Searches for a symmetric mixed BARNE at (f, g): damped best response from
// the uniform mix, then a grid over the support with local refinement.
// Throws NoConvergence when no point with regret <= tolerance was found.
MixedSearchResult find_symmetric_mixed_barne(const GenericGame& game, int f, int g,
                                             double tolerance,
                                             const MixedSearchOptions& options = {});

}  // namespace barne

#endif  // BARNE_GAME_MIXED_HPP_
