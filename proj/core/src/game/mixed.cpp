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
#include "barne/game/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "enumerate.hpp"

namespace barne {
namespace {

constexpr double kWeightTolerance = 1e-12;
// Best-response phase gives up after this many iterations without a new best.
constexpr int kStagnationLimit = 500;

std::vector<StrategyId> resolve_support(const GenericGame& game,
                                        const std::vector<StrategyId>& support) {
  std::vector<StrategyId> out = support;
  if (out.empty()) {
    out.resize(game.num_strategies());
    std::iota(out.begin(), out.end(), 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (StrategyId s : out) {
    if (s < 0 || s >= game.num_strategies()) throw InvalidArgument("support strategy out of range");
  }
  return out;
}

double log_factorial(int x) { return std::lgamma(x + 1.0); }

// rows[b][t]: expected payoff of the focal rational playing t when the
// Byzantines play multiset b and the other g-1 rationals draw iid from sigma.
struct ValueTable {
  std::vector<std::vector<double>> rows;
};

void check_preconditions(const GenericGame& game, int f, int g) {
  if (!game.symmetric()) throw SymmetryRequired("mixed BARNE search needs a symmetric game");
  if (f < 0 || g < 1 || f + g > game.players()) {
    throw InvalidArgument("mixed BARNE search needs g >= 1 and f + g <= n");
  }
}

ValueTable value_table(const GenericGame& game, int f, int g, const MixedStrategy& sigma,
                       const SearchOptions& options) {
  const int n = game.players();
  const int k = game.num_strategies();
  std::vector<StrategyId> active;
  for (StrategyId s = 0; s < k; ++s) {
    if (sigma.weights[s] > 0.0) active.push_back(s);
  }
  const int m = g - 1;
  const int a = static_cast<int>(active.size());

  const double required = internal::multiset_count(k, f) * k * internal::multiset_count(a, m);
  if (required > options.evaluation_budget) {
    throw BudgetExceeded(required, options.evaluation_budget);
  }

  // Distribution of the other rationals as (sorted strategies, probability).
  struct Draw {
    std::vector<StrategyId> strategies;
    double prob;
  };
  std::vector<Draw> draws;
  std::vector<int> digits(m, 0);
  do {
    std::vector<int> counts(a, 0);
    for (int d : digits) ++counts[d];
    double log_p = log_factorial(m);
    for (int j = 0; j < a; ++j) {
      log_p += counts[j] * std::log(sigma.weights[active[j]]) - log_factorial(counts[j]);
    }
    Draw draw;
    draw.prob = std::exp(log_p);
    for (int d : digits) draw.strategies.push_back(active[d]);
    draws.push_back(std::move(draw));
  } while (internal::next_multiset(digits, a));

  ValueTable table;
  Profile profile(n, game.prescribed());
  const int focal = f;
  std::vector<int> byz(f, 0);
  do {
    for (int j = 0; j < f; ++j) profile[j] = byz[j];
    std::vector<double> row(k, 0.0);
    for (StrategyId t = 0; t < k; ++t) {
      profile[focal] = t;
      double expected = 0.0;
      for (const Draw& d : draws) {
        for (int j = 0; j < m; ++j) profile[focal + 1 + j] = d.strategies[j];
        expected += d.prob * game.payoff(focal, profile);
      }
      row[t] = expected;
    }
    table.rows.push_back(std::move(row));
  } while (internal::next_multiset(byz, k));
  return table;
}

struct Evaluation {
  double regret = 0.0;
  std::vector<double> deviation_values;  // min over Byzantines, per pure t
};

Evaluation evaluate(const GenericGame& game, int f, int g, const MixedStrategy& sigma,
                    const SearchOptions& options) {
  ValueTable table = value_table(game, f, g, sigma, options);
  const int k = game.num_strategies();
  Evaluation e;
  e.deviation_values.assign(k, std::numeric_limits<double>::infinity());
  double own = std::numeric_limits<double>::infinity();
  for (const auto& row : table.rows) {
    double mix = 0.0;
    for (StrategyId t = 0; t < k; ++t) {
      e.deviation_values[t] = std::min(e.deviation_values[t], row[t]);
      mix += sigma.weights[t] * row[t];
    }
    own = std::min(own, mix);
  }
  double best = *std::max_element(e.deviation_values.begin(), e.deviation_values.end());
  e.regret = std::max(0.0, best - own);
  return e;
}

// Weights on the support from a point of the reduced simplex; nullopt when
// the point falls outside.
std::optional<MixedStrategy> embed(int k, const std::vector<StrategyId>& support,
                                   const std::vector<double>& free_weights) {
  MixedStrategy s;
  s.weights.assign(k, 0.0);
  double sum = 0.0;
  for (size_t j = 0; j < free_weights.size(); ++j) {
    double w = free_weights[j];
    if (w < -kWeightTolerance) return std::nullopt;
    w = std::max(0.0, w);
    s.weights[support[j]] = w;
    sum += w;
  }
  double last = 1.0 - sum;
  if (last < -kWeightTolerance) return std::nullopt;
  s.weights[support.back()] = std::max(0.0, last);
  return s;
}

class Search {
 public:
  Search(const GenericGame& game, int f, int g, double tolerance, const MixedSearchOptions& options)
      : game_(game), f_(f), g_(g), tolerance_(tolerance), options_(options) {
    best_.regret = std::numeric_limits<double>::infinity();
  }

  double consider(const MixedStrategy& s, const char* method) {
    double r = evaluate(game_, f_, g_, s, options_.search).regret;
    if (r < best_.regret) {
      best_.strategy = s;
      best_.regret = r;
      best_.method = method;
    }
    return r;
  }

  bool done() const { return best_.regret <= tolerance_; }
  MixedSearchResult& best() { return best_; }

 private:
  const GenericGame& game_;
  int f_, g_;
  double tolerance_;
  const MixedSearchOptions& options_;
  MixedSearchResult best_;
};

void enumerate_grid(int parts, int total, std::vector<int>& current,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == parts - 1) {
    visit(current);
    return;
  }
  int used = std::accumulate(current.begin(), current.end(), 0);
  for (int x = 0; x <= total - used; ++x) {
    current.push_back(x);
    enumerate_grid(parts, total, current, visit);
    current.pop_back();
  }
}

}  // namespace

MixedStrategy MixedStrategy::pure(int num_strategies, StrategyId s) {
  MixedStrategy m;
  m.weights.assign(num_strategies, 0.0);
  m.weights.at(s) = 1.0;
  return m;
}

MixedStrategy MixedStrategy::uniform(int num_strategies, std::span<const StrategyId> support) {
  MixedStrategy m;
  m.weights.assign(num_strategies, 0.0);
  for (StrategyId s : support) m.weights.at(s) = 1.0 / static_cast<double>(support.size());
  return m;
}

void MixedStrategy::validate(int num_strategies) const {
  if (static_cast<int>(weights.size()) != num_strategies) {
    throw InvalidArgument("mixed strategy has the wrong number of weights");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidArgument("mixed strategy weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw InvalidArgument("mixed strategy weights must sum to 1");
}

StrategyId MixedStrategy::dominant() const {
  return static_cast<StrategyId>(std::max_element(weights.begin(), weights.end()) -
                                 weights.begin());
}

NoConvergence::NoConvergence(MixedSearchResult best)
    : Error([&] {
        std::ostringstream os;
        os << "mixed BARNE search did not reach the tolerance; best regret " << best.regret;
        return os.str();
      }()),
      best_(std::move(best)) {}

double max_min_regret(const GenericGame& game, int f, int g, const MixedStrategy& sigma,
                      const SearchOptions& options) {
  check_preconditions(game, f, g);
  sigma.validate(game.num_strategies());
  return evaluate(game, f, g, sigma, options).regret;
}

MixedSearchResult find_symmetric_mixed_barne(const GenericGame& game, int f, int g,
                                             double tolerance, const MixedSearchOptions& options) {
  check_preconditions(game, f, g);
  const int k = game.num_strategies();
  const auto support = resolve_support(game, options.support);
  const int parts = static_cast<int>(support.size());
  Search search(game, f, g, tolerance, options);

  // Damped best response from the uniform mix.
  MixedStrategy sigma = MixedStrategy::uniform(k, support);
  int iterations = 0;
  int since_improvement = 0;
  double best_seen = std::numeric_limits<double>::infinity();
  for (; iterations < options.max_iterations; ++iterations) {
    Evaluation e = evaluate(game, f, g, sigma, options.search);
    if (e.regret < search.best().regret) {
      search.best().strategy = sigma;
      search.best().regret = e.regret;
      search.best().method = "best-response";
    }
    if (e.regret <= tolerance) break;
    if (e.regret < best_seen - 1e-15) {
      best_seen = e.regret;
      since_improvement = 0;
    } else if (++since_improvement >= kStagnationLimit) {
      break;
    }
    StrategyId reply = support.front();
    for (StrategyId t : support) {
      if (e.deviation_values[t] > e.deviation_values[reply]) reply = t;
    }
    for (auto& w : sigma.weights) w *= 1.0 - options.step;
    sigma.weights[reply] += options.step;
  }
  search.best().iterations = iterations;

  // Grid fallback over the support, then successive local refinement.
  if (!search.done() && parts > 1) {
    const int resolution = std::max(1, options.grid_resolution);
    const double grid_points = internal::binomial(resolution + parts - 1, parts - 1);
    const double per_point = internal::multiset_count(k, f) * k *
                             internal::multiset_count(parts, std::max(0, g - 1));
    if (grid_points * per_point <= options.search.evaluation_budget) {
      std::vector<int> current;
      enumerate_grid(parts, resolution, current, [&](const std::vector<int>& cells) {
        std::vector<double> w(cells.size());
        for (size_t j = 0; j < cells.size(); ++j) w[j] = static_cast<double>(cells[j]) / resolution;
        if (auto s = embed(k, support, w)) search.consider(*s, "grid");
      });
    }
    for (int level = 1; level <= options.refinement_levels && !search.done(); ++level) {
      const double h = 1.0 / (resolution * std::pow(2.0, level));
      const MixedStrategy center = search.best().strategy;
      std::vector<int> offset(parts - 1, 0);
      do {
        std::vector<double> w(parts - 1);
        for (int j = 0; j < parts - 1; ++j) {
          w[j] = center.weights[support[j]] + (offset[j] - 2) * h;
        }
        if (auto s = embed(k, support, w)) search.consider(*s, "grid-refined");
      } while (internal::next_tuple(offset, 5));
    }
  }

  // Prefer the pure strategy the result concentrates on when it qualifies.
  MixedSearchResult result = search.best();
  if (result.regret <= tolerance) {
    MixedStrategy vertex = MixedStrategy::pure(k, result.strategy.dominant());
    double r = evaluate(game, f, g, vertex, options.search).regret;
    if (r <= tolerance) {
      result.strategy = vertex;
      result.regret = r;
      result.method += "+pure";
    }
    return result;
  }
  throw NoConvergence(result);
}

}  // namespace barne
