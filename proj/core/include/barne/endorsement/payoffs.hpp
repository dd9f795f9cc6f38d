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
#ifndef BARNE_ENDORSEMENT_PAYOFFS_HPP_
#define BARNE_ENDORSEMENT_PAYOFFS_HPP_

#include <array>

#include "barne/endorsement/params.hpp"
#include "barne/endorsement/strategy.hpp"
#include "barne/game/simplex.hpp"

namespace barne::endorsement {

struct BlockOutcomeClass {
  Acceptance acceptance = Acceptance::kRejected;
  Validity validity = Validity::kValid;
};

// Utility of one agent for one block: acceptance reward and chain loss,
// checking cost, and the fine for endorsing an invalid block when fines are on.
double round_payoff(const ProtocolParams& params, bool accepted, Validity validity,
                    bool endorsed, bool checked);

// Payoff cell of the block-state table. In a pivotal cell the agent's own
// endorsement decides acceptance.
double stage_payoff(const ProtocolParams& params, BlockOutcomeClass outcome, Strategy strategy);

// Classification of a block by the endorsements of everyone else.
Acceptance classify_endorsements(int others, int quorum);

// Acceptance of a block from the point of view of one rational agent when
// Byzantines play sigma_f, honest agents sigma_h and the other g-1 rationals
// sigma. Requires g >= 1.
Acceptance acceptance_class(const ProtocolParams& params, const SimplexPoint& point,
                            Strategy sigma, Validity validity);

// Whether a rational proposer playing own (others rationals on sigma) weakly
// prefers proposing a valid block.
bool proposer_prefers_valid(const ProtocolParams& params, const SimplexPoint& point,
                            Strategy sigma, Strategy own);

// Joint belief over {Accepted, Rejected, Pivotal} x {Valid, Invalid}.
class BeliefMatrix {
 public:
  BeliefMatrix() = default;
  double operator()(Acceptance a, Validity v) const {
    return p_[static_cast<int>(a)][static_cast<int>(v)];
  }
  double& operator()(Acceptance a, Validity v) {
    return p_[static_cast<int>(a)][static_cast<int>(v)];
  }

  double av() const { return (*this)(Acceptance::kAccepted, Validity::kValid); }
  double ai() const { return (*this)(Acceptance::kAccepted, Validity::kInvalid); }
  double rv() const { return (*this)(Acceptance::kRejected, Validity::kValid); }
  double ri() const { return (*this)(Acceptance::kRejected, Validity::kInvalid); }
  double pv() const { return (*this)(Acceptance::kPivotal, Validity::kValid); }
  double pi() const { return (*this)(Acceptance::kPivotal, Validity::kInvalid); }

  double valid() const { return av() + rv() + pv(); }
  double invalid() const { return ai() + ri() + pi(); }
  double accepted() const { return av() + ai(); }
  double rejected() const { return rv() + ri(); }
  double pivotal() const { return pv() + pi(); }
  double total() const { return valid() + invalid(); }

 private:
  std::array<std::array<double, 2>, 3> p_{};
};

// Requires g >= 1.
BeliefMatrix belief_matrix(const ProtocolParams& params, const SimplexPoint& point,
                           Strategy sigma);

// Closed-form expected payoffs of the three undominated strategies.
struct ExpectedPayoffs {
  double honest = 0.0;  // sigma_h
  double blind = 0.0;   // sigma_e
  double idle = 0.0;    // sigma_0
  double at(Strategy s) const;
};

ExpectedPayoffs expected_payoffs(const ProtocolParams& params, const BeliefMatrix& beliefs);
ExpectedPayoffs expected_payoffs(const ProtocolParams& params, const SimplexPoint& point,
                                 Strategy sigma);

// Sum over block states of belief times stage payoff; defined for all six.
double expected_payoff(const ProtocolParams& params, const BeliefMatrix& beliefs,
                       Strategy strategy);

enum class Sign { kLess, kEqual, kGreater };
std::string_view name(Sign s);

struct Inequality {
  double lhs = 0.0;
  double rhs = 0.0;
  Sign sign = Sign::kEqual;  // sign of lhs - rhs
};

// participation: (p_AV+p_PV) r_e vs c_c            (sign of u_h - u_0)
// no_lazy:       p_PI L [+ p_I L_e] vs (p_AI+p_PI) r_e + c_c   (sign of u_h - u_e)
// idle_vs_blind: p_PI L [+ p_I L_e] vs (p_A+p_P) r_e           (sign of u_0 - u_e)
// The bracketed fine term appears when fines are active.
struct InequalityReport {
  bool amended = false;
  Inequality participation;
  Inequality no_lazy;
  Inequality idle_vs_blind;
};

InequalityReport inequality_report(const ProtocolParams& params, const BeliefMatrix& beliefs,
                                   double tolerance = 1e-9);
InequalityReport inequality_report(const ProtocolParams& params, const SimplexPoint& point,
                                   Strategy sigma, double tolerance = 1e-9);

}  // namespace barne::endorsement

#endif  // BARNE_ENDORSEMENT_PAYOFFS_HPP_
