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
#ifndef BARNE_ENDORSEMENT_ADAPTER_HPP_
#define BARNE_ENDORSEMENT_ADAPTER_HPP_

#include "barne/endorsement/params.hpp"
#include "barne/game/generic_game.hpp"

namespace barne::endorsement {

inline constexpr int kMaxAdapterPlayers = 8;

// The endorsement stage game as a symmetric GenericGame over the six
// strategies (ids as in Strategy). Payoffs are exact expectations over the
// proposer and the trap draw. Proposals follow the proposer's strategy:
// sigma_f proposes invalid blocks, every other strategy uses the rational
// proposer policy and is subject to trap draws. Types are not baked in, so
// one game serves every (f, g); the prescribed strategy is sigma_h.
// Throws BudgetExceeded above kMaxAdapterPlayers.
GenericGame as_generic_game(const ProtocolParams& params);

}  // namespace barne::endorsement

#endif  // BARNE_ENDORSEMENT_ADAPTER_HPP_
