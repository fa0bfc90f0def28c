// Copyright 2026 The grapheq Authors
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

// Exact analysis of deterministic classical strategies.
//
// Every player maps its type bit to an answer bit through one of four local
// functions, so a game with n players has 4^n pure profiles. Profiles are
// encoded base 4 with player 0 as the most significant digit, which makes
// ascending codes the lexicographic order of the digit strings.

#ifndef GRAPHEQ_CLASSICAL_H_
#define GRAPHEQ_CLASSICAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grapheq/game.h"
#include "grapheq/rational.h"

namespace grapheq {

enum class LocalFn : std::uint8_t { kZero = 0, kOne = 1, kIdentity = 2, kNot = 3 };

inline int apply(LocalFn fn, int type_bit) {
  switch (fn) {
    case LocalFn::kZero: return 0;
    case LocalFn::kOne: return 1;
    case LocalFn::kIdentity: return type_bit;
    case LocalFn::kNot: return 1 - type_bit;
  }
  return 0;
}

using Profile = std::vector<LocalFn>;
using ProfileCode = std::uint64_t;

ProfileCode encode(const Profile& profile);
Profile decode(ProfileCode code, int players);
// "21111" <-> {kIdentity, kOne, kOne, kOne, kOne}.
std::string profile_string(const Profile& profile);
Profile parse_profile(std::string_view digits);
std::uint64_t profile_count(int players);

// Expected utility as a linear form in (v0, v1):
//   u = win_v0*v0 + win_v1*v1 - ng*(lose_v0*v0 + lose_v1*v1).
struct LinearPayoff {
  Rational win_v0;
  Rational win_v1;
  Rational lose_v0;
  Rational lose_v1;

  Rational at(const PayoffParams& params) const;
  LinearPayoff& operator+=(const LinearPayoff& other);
  // "2*v0+1*v1" after multiplying by `scale`; the penalty part is appended
  // as "-ng*(...)" when non-zero.
  std::string expression(const Rational& scale = 1) const;

  friend bool operator==(const LinearPayoff&, const LinearPayoff&) = default;
};

struct Evaluation {
  std::vector<LinearPayoff> payoffs;  // one per player
  std::vector<bool> wins;             // one per question
  Rational p_win;

  LinearPayoff total() const;
};

Evaluation evaluate(const CompiledGame& game, const Profile& profile);
Evaluation evaluate(const GameSpec& game, const Profile& profile);

// Utilities of every profile at fixed parameters, held as integers sharing a
// common scale. This is the enumeration workhorse; values are exact.
class PayoffTable {
 public:
  // Parameters are not validated so that basis tables (v0=1, v1=0) can be
  // built for symbolic analysis. `threads` <= 0 uses the default.
  PayoffTable(const CompiledGame& game, const PayoffParams& params, int threads = 0);

  int players() const { return players_; }
  std::uint64_t profiles() const { return profiles_; }
  // utility = scaled / scale().
  const Integer& scale() const { return scale_; }
  std::span<const std::int64_t> scaled_utilities(ProfileCode code) const {
    return {utilities_.data() + code * static_cast<std::uint64_t>(players_),
            static_cast<std::size_t>(players_)};
  }
  std::int64_t scaled_utility(ProfileCode code, int player) const {
    return utilities_[code * static_cast<std::uint64_t>(players_) + static_cast<std::uint64_t>(player)];
  }
  Rational utility(ProfileCode code, int player) const;
  Rational social_welfare(ProfileCode code) const;
  // Probability that the profile wins, exact.
  Rational p_win(ProfileCode code) const;
  bool never_wins(ProfileCode code) const { return win_weight_[code] == 0; }

 private:
  int players_;
  std::uint64_t profiles_;
  Integer scale_;
  Integer weight_scale_;
  std::vector<std::int64_t> utilities_;
  std::vector<std::int64_t> win_weight_;
};

enum class Criterion {
  kNash,
  // No unilateral deviation helps the deviator without strictly hurting
  // some other player.
  kPareto,
  // Not Pareto-dominated by any other profile (joint deviations).
  kParetoJoint,
};

std::string_view criterion_name(Criterion criterion);

struct EnumerationOptions {
  Criterion criterion = Criterion::kNash;
  // Strict mode treats an equal-utility deviation as breaking a Nash
  // equilibrium. The default (weak) keeps such profiles.
  bool strict = false;
  int threads = 0;
};

// Sorted codes of every profile satisfying the criterion.
std::vector<ProfileCode> equilibrium_codes(const PayoffTable& table,
                                           const EnumerationOptions& options = {});

bool is_nash(const PayoffTable& table, ProfileCode code, bool strict = false);

// Player permutations; perm[j] is the image of player j. A profile p maps to
// q with q[perm[j]] = p[j].
struct SymmetryGroup {
  std::vector<std::vector<int>> perms;

  std::size_t order() const { return perms.size(); }
  ProfileCode act(std::size_t element, ProfileCode code, int players) const;
  // Smallest code in the orbit.
  ProfileCode canonical(ProfileCode code, int players) const;
};

SymmetryGroup trivial_group(int players);
// Permutations mapping the weighted question multiset onto itself (n <= 8).
SymmetryGroup game_automorphisms(const CompiledGame& game);
SymmetryGroup game_automorphisms(const GameSpec& game);
// Permutations preserving the edge set (n <= 8).
SymmetryGroup graph_automorphisms(const Graph& graph);

struct Orbit {
  ProfileCode representative = 0;
  std::vector<ProfileCode> members;
};

// Groups `codes` by canonical form, ordered by representative. When `codes`
// is closed under the group this is the orbit partition.
std::vector<Orbit> orbit_partition(std::span<const ProfileCode> codes,
                                   const SymmetryGroup& group, int players);

struct RatioInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& r) const;
  std::string to_string() const;
};

struct EquilibriumEntry {
  ProfileCode code = 0;
  Profile profile;
  std::vector<LinearPayoff> payoffs;
  LinearPayoff total;
  Rational p_win;
  Rational social_welfare;  // at the report parameters
  std::size_t orbit = 0;
};

struct EquilibriumReport {
  Criterion criterion = Criterion::kNash;
  PayoffParams params;
  RatioInterval regime;
  std::vector<EquilibriumEntry> profiles;
  std::vector<Orbit> orbits;  // under the game automorphism group
  std::size_t group_order = 1;
  // Classes under the automorphisms of the underlying graph. The reference
  // "distinct" counts use this equivalence.
  std::size_t graph_classes = 0;
};

EquilibriumReport make_report(const CompiledGame& game, const PayoffParams& params,
                              std::span<const ProfileCode> codes, Criterion criterion);

EquilibriumReport enumerate_nash(const CompiledGame& game, const PayoffParams& params,
                                 EnumerationOptions options = {});
EquilibriumReport enumerate_nash(const GameSpec& game, const PayoffParams& params,
                                 EnumerationOptions options = {});
EquilibriumReport enumerate_pareto(const CompiledGame& game, const PayoffParams& params,
                                   EnumerationOptions options = {});
EquilibriumReport enumerate_pareto(const GameSpec& game, const PayoffParams& params,
                                   EnumerationOptions options = {});

struct CswResult {
  Rational social_welfare;
  std::vector<ProfileCode> argmax;
};

// Best social welfare over the profiles meeting `criterion`; throws
// Error(kEmptyEquilibriumSet) when there are none.
CswResult best_csw(const CompiledGame& game, const PayoffParams& params,
                   Criterion criterion = Criterion::kNash, int threads = 0);
CswResult best_csw(const GameSpec& game, const PayoffParams& params,
                   Criterion criterion = Criterion::kNash, int threads = 0);

// Largest social welfare of any profile, equilibrium or not.
Rational max_social_welfare(const PayoffTable& table);

// Closed interval of ratios r = v0/v1 in [0, 1] (v1 = 1, fixed ng) on which
// the profile is a weak Nash equilibrium; empty when there is none.
std::optional<RatioInterval> nash_ratio_interval(const CompiledGame& game, ProfileCode code,
                                                 const Rational& ng = 0);

struct RegimeEntry {
  RatioInterval interval;
  std::vector<ProfileCode> codes;
  // For breakpoints: the set equals the union of the two neighbouring
  // open intervals.
  bool union_of_neighbours = false;
};

struct RegimeAnalysis {
  std::vector<Rational> breakpoints;  // interior points of (0, 1)
  std::vector<RegimeEntry> intervals;  // maximal open intervals
  std::vector<RegimeEntry> points;     // r = 0, every breakpoint, r = 1
};

RegimeAnalysis ratio_regimes(const CompiledGame& game, const Rational& ng = 0, int threads = 0);
RegimeAnalysis ratio_regimes(const GameSpec& game, const Rational& ng = 0, int threads = 0);

// Best social welfare over correlated equilibria whose device recommends a
// local-function profile independently of the types (n <= 6). Exact LP.
Rational best_correlated_sw(const CompiledGame& game, const PayoffParams& params);
Rational best_correlated_sw(const GameSpec& game, const PayoffParams& params);

}  // namespace grapheq

#endif  // GRAPHEQ_CLASSICAL_H_
