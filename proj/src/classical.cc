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

#include "grapheq/classical.h"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "grapheq/error.h"
#include "grapheq/parallel.h"
#include "grapheq/simplex.h"

namespace grapheq {
namespace {

constexpr int kMaxTablePlayers = 10;
constexpr int kMaxSymmetryPlayers = 8;

std::uint64_t stride_of(int players, int player) {
  return std::uint64_t{1} << (2 * (players - 1 - player));
}

int digit(ProfileCode code, int players, int player) {
  return static_cast<int>((code >> (2 * (players - 1 - player))) & 3u);
}

void require_profile(const CompiledGame& game, const Profile& profile) {
  if (static_cast<int>(profile.size()) != game.players()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " entries for a game with " + std::to_string(game.players()) +
                                " players");
  }
}

bool question_wins(const CompiledQuestion& q, const std::vector<int>& answers) {
  for (const ParityCheck& check : q.checks) {
    int parity = 0;
    for (int j : check.players.indices()) parity ^= answers[static_cast<std::size_t>(j)];
    if ((parity != 0) != check.parity) return false;
  }
  return true;
}

}  // namespace

ProfileCode encode(const Profile& profile) {
  ProfileCode code = 0;
  for (LocalFn f : profile) code = (code << 2) | static_cast<ProfileCode>(f);
  return code;
}

Profile decode(ProfileCode code, int players) {
  Profile out(static_cast<std::size_t>(players));
  for (int j = 0; j < players; ++j) out[static_cast<std::size_t>(j)] = static_cast<LocalFn>(digit(code, players, j));
  return out;
}

std::string profile_string(const Profile& profile) {
  std::string out;
  for (LocalFn f : profile) out += static_cast<char>('0' + static_cast<int>(f));
  return out;
}

Profile parse_profile(std::string_view digits) {
  Profile out;
  for (char c : digits) {
    if (c < '0' || c > '3') throw Error(ErrorCode::kMalformedDocument, "profile digits must be 0..3");
    out.push_back(static_cast<LocalFn>(c - '0'));
  }
  return out;
}

std::uint64_t profile_count(int players) { return std::uint64_t{1} << (2 * players); }

Rational LinearPayoff::at(const PayoffParams& params) const {
  return win_v0 * params.v0 + win_v1 * params.v1 -
         params.ng * (lose_v0 * params.v0 + lose_v1 * params.v1);
}

LinearPayoff& LinearPayoff::operator+=(const LinearPayoff& other) {
  win_v0 += other.win_v0;
  win_v1 += other.win_v1;
  lose_v0 += other.lose_v0;
  lose_v1 += other.lose_v1;
  return *this;
}

std::string LinearPayoff::expression(const Rational& scale) const {
  auto form = [&](const Rational& a, const Rational& b) {
    const Rational second = b * scale;
    return to_string(Rational(a * scale)) + "*v0" + (second < 0 ? "-" : "+") +
           to_string(Rational(abs(second))) + "*v1";
  };
  std::string out = form(win_v0, win_v1);
  if (lose_v0 != 0 || lose_v1 != 0) out += "-ng*(" + form(lose_v0, lose_v1) + ")";
  return out;
}

LinearPayoff Evaluation::total() const {
  LinearPayoff sum;
  for (const LinearPayoff& p : payoffs) sum += p;
  return sum;
}

Evaluation evaluate(const CompiledGame& game, const Profile& profile) {
  require_profile(game, profile);
  const auto n = static_cast<std::size_t>(game.players());
  Evaluation out;
  out.payoffs.assign(n, LinearPayoff{});
  std::vector<int> answers(n);
  for (const CompiledQuestion& q : game.questions) {
    for (std::size_t j = 0; j < n; ++j) answers[j] = apply(profile[j], q.type.get(j) ? 1 : 0);
    const bool win = question_wins(q, answers);
    out.wins.push_back(win);
    if (win) out.p_win += q.weight;
    for (std::size_t j = 0; j < n; ++j) {
      LinearPayoff& p = out.payoffs[j];
      if (win) {
        (answers[j] ? p.win_v1 : p.win_v0) += q.weight;
      } else {
        (answers[j] ? p.lose_v1 : p.lose_v0) += q.weight;
      }
    }
  }
  return out;
}

Evaluation evaluate(const GameSpec& game, const Profile& profile) {
  return evaluate(compile(game), profile);
}

PayoffTable::PayoffTable(const CompiledGame& game, const PayoffParams& params, int threads)
    : players_(game.players()) {
  if (players_ > kMaxTablePlayers) {
    throw Error(ErrorCode::kSizeLimit, "payoff tables are limited to " +
                                           std::to_string(kMaxTablePlayers) + " players");
  }
  profiles_ = profile_count(players_);
  const auto n = static_cast<std::size_t>(players_);
  const std::size_t question_count = game.questions.size();

  Integer weight_den = 1;
  for (const auto& q : game.questions) weight_den = lcm(weight_den, q.weight.get_den());
  const Integer value_den = lcm(params.v0.get_den(), params.v1.get_den());
  const Integer penalty_den = params.ng.get_den();
  weight_scale_ = weight_den;
  scale_ = weight_den * value_den * penalty_den;

  const Integer a0 = params.v0.get_num() * (value_den / params.v0.get_den());
  const Integer a1 = params.v1.get_num() * (value_den / params.v1.get_den());
  const Integer& g = params.ng.get_num();

  // Per question: utility contribution for (win/lose, answer).
  std::vector<std::array<std::int64_t, 4>> contribution(question_count);
  std::vector<std::int64_t> weights(question_count);
  Integer bound = 0;
  for (std::size_t qi = 0; qi < question_count; ++qi) {
    const Integer w = Rational(game.questions[qi].weight * weight_den).get_num();
    weights[qi] = to_int64(w);
    const Integer entries[4] = {w * penalty_den * a0, w * penalty_den * a1, -w * g * a0,
                                -w * g * a1};
    for (int e = 0; e < 4; ++e) {
      contribution[qi][static_cast<std::size_t>(e)] = to_int64(entries[e]);
      bound += abs(entries[e]);
    }
  }
  Integer limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 2, 62);
  if (bound >= limit) throw Error(ErrorCode::kSizeLimit, "payoff scale exceeds 62 bits");

  // answer_bits[j][f] bit q: answer of player j with function f on question q.
  const std::size_t words = (question_count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> answer_bits(n * 4, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (int f = 0; f < 4; ++f) {
      for (std::size_t qi = 0; qi < question_count; ++qi) {
        if (apply(static_cast<LocalFn>(f), game.questions[qi].type.get(j) ? 1 : 0)) {
          answer_bits[j * 4 + static_cast<std::size_t>(f)][qi >> 6] |= std::uint64_t{1} << (qi & 63);
        }
      }
    }
  }
  // Flattened checks, grouped by question.
  struct Check {
    std::size_t question;
    std::vector<int> players;
    bool parity;
  };
  std::vector<Check> checks;
  for (std::size_t qi = 0; qi < question_count; ++qi) {
    for (const ParityCheck& c : game.questions[qi].checks) {
      checks.push_back({qi, c.players.indices(), c.parity});
    }
  }

  utilities_.assign(profiles_ * n, 0);
  win_weight_.assign(profiles_, 0);
  parallel_chunks(profiles_, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
    std::vector<int> fns(n);
    std::vector<bool> win(question_count);
    for (ProfileCode code = begin; code < end; ++code) {
      for (std::size_t j = 0; j < n; ++j) fns[j] = digit(code, players_, static_cast<int>(j));
      std::fill(win.begin(), win.end(), true);
      for (const Check& c : checks) {
        if (!win[c.question]) continue;
        bool parity = false;
        for (int j : c.players) {
          const auto& bits = answer_bits[static_cast<std::size_t>(j) * 4 + static_cast<std::size_t>(fns[static_cast<std::size_t>(j)])];
          parity ^= ((bits[c.question >> 6] >> (c.question & 63)) & 1u) != 0;
        }
        if (parity != c.parity) win[c.question] = false;
      }
      std::int64_t* row = utilities_.data() + code * n;
      std::int64_t won = 0;
      for (std::size_t qi = 0; qi < question_count; ++qi) {
        const std::size_t base = win[qi] ? 0 : 2;
        if (win[qi]) won += weights[qi];
        for (std::size_t j = 0; j < n; ++j) {
          const auto& bits = answer_bits[j * 4 + static_cast<std::size_t>(fns[j])];
          const std::size_t answer = (bits[qi >> 6] >> (qi & 63)) & 1u;
          row[j] += contribution[qi][base + answer];
        }
      }
      win_weight_[code] = won;
    }
  });
}

Rational PayoffTable::utility(ProfileCode code, int player) const {
  Rational out(Integer(static_cast<long>(scaled_utility(code, player))), scale_);
  out.canonicalize();
  return out;
}

Rational PayoffTable::social_welfare(ProfileCode code) const {
  Integer sum = 0;
  for (std::int64_t u : scaled_utilities(code)) sum += static_cast<long>(u);
  Rational out(sum, scale_ * players_);
  out.canonicalize();
  return out;
}

Rational PayoffTable::p_win(ProfileCode code) const {
  Rational out(Integer(static_cast<long>(win_weight_[code])), weight_scale_);
  out.canonicalize();
  return out;
}

std::string_view criterion_name(Criterion criterion) {
  switch (criterion) {
    case Criterion::kNash: return "nash";
    case Criterion::kPareto: return "pareto";
    case Criterion::kParetoJoint: return "pareto-joint";
  }
  return "unknown";
}

bool is_nash(const PayoffTable& table, ProfileCode code, bool strict) {
  const int n = table.players();
  const auto own = table.scaled_utilities(code);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t stride = stride_of(n, j);
    const int f = digit(code, n, j);
    for (int g = 0; g < 4; ++g) {
      if (g == f) continue;
      const ProfileCode alt = code - static_cast<std::uint64_t>(f) * stride + static_cast<std::uint64_t>(g) * stride;
      const std::int64_t deviated = table.scaled_utility(alt, j);
      if (deviated > own[static_cast<std::size_t>(j)] || (strict && deviated == own[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool is_unilateral_pareto(const PayoffTable& table, ProfileCode code) {
  const int n = table.players();
  const auto own = table.scaled_utilities(code);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t stride = stride_of(n, j);
    const int f = digit(code, n, j);
    for (int g = 0; g < 4; ++g) {
      if (g == f) continue;
      const ProfileCode alt = code - static_cast<std::uint64_t>(f) * stride + static_cast<std::uint64_t>(g) * stride;
      const auto other = table.scaled_utilities(alt);
      if (other[static_cast<std::size_t>(j)] <= own[static_cast<std::size_t>(j)]) continue;
      bool hurts_someone = false;
      for (int k = 0; k < n && !hurts_someone; ++k) {
        hurts_someone = k != j && other[static_cast<std::size_t>(k)] < own[static_cast<std::size_t>(k)];
      }
      if (!hurts_someone) return false;
    }
  }
  return true;
}

bool is_joint_pareto(const PayoffTable& table, ProfileCode code) {
  const int n = table.players();
  const auto own = table.scaled_utilities(code);
  for (ProfileCode other = 0; other < table.profiles(); ++other) {
    const auto u = table.scaled_utilities(other);
    bool weakly_better = true;
    bool strictly_better = false;
    for (int k = 0; k < n && weakly_better; ++k) {
      weakly_better = u[static_cast<std::size_t>(k)] >= own[static_cast<std::size_t>(k)];
      strictly_better = strictly_better || u[static_cast<std::size_t>(k)] > own[static_cast<std::size_t>(k)];
    }
    if (weakly_better && strictly_better) return false;
  }
  return true;
}

}  // namespace

std::vector<ProfileCode> equilibrium_codes(const PayoffTable& table,
                                           const EnumerationOptions& options) {
  if (options.criterion == Criterion::kParetoJoint && table.players() > 6) {
    throw Error(ErrorCode::kSizeLimit, "joint Pareto check is quadratic; limited to 6 players");
  }
  const int chunks = chunk_count(table.profiles(), options.threads);
  std::vector<std::vector<ProfileCode>> found(static_cast<std::size_t>(chunks));
  parallel_chunks(table.profiles(), options.threads,
                  [&](std::uint64_t begin, std::uint64_t end, int chunk) {
                    auto& out = found[static_cast<std::size_t>(chunk)];
                    for (ProfileCode code = begin; code < end; ++code) {
                      bool keep = false;
                      switch (options.criterion) {
                        case Criterion::kNash: keep = is_nash(table, code, options.strict); break;
                        case Criterion::kPareto: keep = is_unilateral_pareto(table, code); break;
                        case Criterion::kParetoJoint: keep = is_joint_pareto(table, code); break;
                      }
                      if (keep) out.push_back(code);
                    }
                  });
  std::vector<ProfileCode> codes;
  for (auto& part : found) codes.insert(codes.end(), part.begin(), part.end());
  return codes;
}

ProfileCode SymmetryGroup::act(std::size_t element, ProfileCode code, int players) const {
  const auto& perm = perms[element];
  ProfileCode out = 0;
  for (int j = 0; j < players; ++j) {
    const int image = perm[static_cast<std::size_t>(j)];
    out |= static_cast<ProfileCode>(digit(code, players, j)) << (2 * (players - 1 - image));
  }
  return out;
}

ProfileCode SymmetryGroup::canonical(ProfileCode code, int players) const {
  ProfileCode best = code;
  for (std::size_t e = 0; e < perms.size(); ++e) best = std::min(best, act(e, code, players));
  return best;
}

SymmetryGroup trivial_group(int players) {
  std::vector<int> identity(static_cast<std::size_t>(players));
  std::iota(identity.begin(), identity.end(), 0);
  return SymmetryGroup{{identity}};
}

namespace {

using QuestionKey = std::tuple<std::string, std::vector<std::pair<std::string, bool>>, Rational>;

BitVector permute(const BitVector& bits, const std::vector<int>& perm) {
  BitVector out(bits.size());
  for (int j : bits.indices()) out.set(static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]));
  return out;
}

std::vector<QuestionKey> question_keys(const CompiledGame& game, const std::vector<int>& perm) {
  std::vector<QuestionKey> keys;
  for (const CompiledQuestion& q : game.questions) {
    std::vector<std::pair<std::string, bool>> checks;
    for (const ParityCheck& c : q.checks) checks.emplace_back(permute(c.players, perm).to_string(), c.parity);
    std::sort(checks.begin(), checks.end());
    keys.emplace_back(permute(q.type, perm).to_string(), std::move(checks), q.weight);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

template <typename Accept>
SymmetryGroup permutation_search(int players, Accept&& accept) {
  if (players > kMaxSymmetryPlayers) {
    throw Error(ErrorCode::kSizeLimit, "symmetry search is limited to " +
                                           std::to_string(kMaxSymmetryPlayers) + " players");
  }
  std::vector<int> perm(static_cast<std::size_t>(players));
  std::iota(perm.begin(), perm.end(), 0);
  SymmetryGroup group;
  do {
    if (accept(perm)) group.perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

}  // namespace

SymmetryGroup game_automorphisms(const CompiledGame& game) {
  std::vector<int> identity(static_cast<std::size_t>(game.players()));
  std::iota(identity.begin(), identity.end(), 0);
  const auto reference = question_keys(game, identity);
  return permutation_search(game.players(), [&](const std::vector<int>& perm) {
    return question_keys(game, perm) == reference;
  });
}

SymmetryGroup game_automorphisms(const GameSpec& game) { return game_automorphisms(compile(game)); }

SymmetryGroup graph_automorphisms(const Graph& graph) {
  return permutation_search(graph.size(), [&](const std::vector<int>& perm) {
    for (auto [u, v] : graph.edges()) {
      if (!graph.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) return false;
    }
    return true;
  });
}

std::vector<Orbit> orbit_partition(std::span<const ProfileCode> codes, const SymmetryGroup& group,
                                   int players) {
  std::map<ProfileCode, std::vector<ProfileCode>> by_rep;
  for (ProfileCode code : codes) by_rep[group.canonical(code, players)].push_back(code);
  std::vector<Orbit> out;
  for (auto& [rep, members] : by_rep) {
    std::sort(members.begin(), members.end());
    out.push_back({rep, std::move(members)});
  }
  return out;
}

bool RatioInterval::contains(const Rational& r) const {
  const bool above = lo_closed ? r >= lo : r > lo;
  const bool below = hi_closed ? r <= hi : r < hi;
  return above && below;
}

std::string RatioInterval::to_string() const {
  if (lo == hi && lo_closed && hi_closed) return "{" + grapheq::to_string(lo) + "}";
  return std::string(lo_closed ? "[" : "(") + grapheq::to_string(lo) + ", " +
         grapheq::to_string(hi) + (hi_closed ? "]" : ")");
}

EquilibriumReport make_report(const CompiledGame& game, const PayoffParams& params,
                              std::span<const ProfileCode> codes, Criterion criterion) {
  const int n = game.players();
  EquilibriumReport report;
  report.criterion = criterion;
  report.params = params;
  const Rational r = params.v0 / params.v1;
  report.regime = {r, r, true, true};
  const SymmetryGroup group = n <= kMaxSymmetryPlayers ? game_automorphisms(game) : trivial_group(n);
  report.group_order = group.order();
  report.orbits = orbit_partition(codes, group, n);
  if (n <= kMaxSymmetryPlayers) {
    report.graph_classes = orbit_partition(codes, graph_automorphisms(game.graph), n).size();
  } else {
    report.graph_classes = report.orbits.size();
  }
  std::map<ProfileCode, std::size_t> orbit_of;
  for (std::size_t o = 0; o < report.orbits.size(); ++o) {
    for (ProfileCode m : report.orbits[o].members) orbit_of[m] = o;
  }
  for (ProfileCode code : codes) {
    EquilibriumEntry e;
    e.code = code;
    e.profile = decode(code, n);
    Evaluation ev = evaluate(game, e.profile);
    e.payoffs = std::move(ev.payoffs);
    for (const auto& p : e.payoffs) e.total += p;
    e.p_win = ev.p_win;
    e.social_welfare = e.total.at(params) / n;
    e.orbit = orbit_of[code];
    report.profiles.push_back(std::move(e));
  }
  return report;
}

namespace {

EquilibriumReport enumerate(const CompiledGame& game, const PayoffParams& params,
                            EnumerationOptions options, Criterion criterion) {
  params.validate();
  options.criterion = criterion;
  const PayoffTable table(game, params, options.threads);
  const auto codes = equilibrium_codes(table, options);
  return make_report(game, params, codes, criterion);
}

}  // namespace

EquilibriumReport enumerate_nash(const CompiledGame& game, const PayoffParams& params,
                                 EnumerationOptions options) {
  return enumerate(game, params, options, Criterion::kNash);
}

EquilibriumReport enumerate_nash(const GameSpec& game, const PayoffParams& params,
                                 EnumerationOptions options) {
  return enumerate_nash(compile(game), params, options);
}

EquilibriumReport enumerate_pareto(const CompiledGame& game, const PayoffParams& params,
                                   EnumerationOptions options) {
  return enumerate(game, params, options,
                   options.criterion == Criterion::kParetoJoint ? Criterion::kParetoJoint
                                                                : Criterion::kPareto);
}

EquilibriumReport enumerate_pareto(const GameSpec& game, const PayoffParams& params,
                                   EnumerationOptions options) {
  return enumerate_pareto(compile(game), params, options);
}

namespace {

Integer scaled_total(const PayoffTable& table, ProfileCode code) {
  Integer sum = 0;
  for (std::int64_t u : table.scaled_utilities(code)) sum += static_cast<long>(u);
  return sum;
}

}  // namespace

CswResult best_csw(const CompiledGame& game, const PayoffParams& params, Criterion criterion,
                   int threads) {
  params.validate();
  const PayoffTable table(game, params, threads);
  EnumerationOptions options;
  options.criterion = criterion;
  options.threads = threads;
  const auto codes = equilibrium_codes(table, options);
  if (codes.empty()) {
    throw Error(ErrorCode::kEmptyEquilibriumSet,
                "no " + std::string(criterion_name(criterion)) + " profile at v0=" +
                    to_string(params.v0) + ", v1=" + to_string(params.v1));
  }
  CswResult out;
  Integer best;
  for (ProfileCode code : codes) {
    const Integer total = scaled_total(table, code);
    if (out.argmax.empty() || total > best) {
      best = total;
      out.argmax = {code};
    } else if (total == best) {
      out.argmax.push_back(code);
    }
  }
  out.social_welfare = table.social_welfare(out.argmax.front());
  return out;
}

CswResult best_csw(const GameSpec& game, const PayoffParams& params, Criterion criterion,
                   int threads) {
  return best_csw(compile(game), params, criterion, threads);
}

Rational max_social_welfare(const PayoffTable& table) {
  ProfileCode best_code = 0;
  Integer best = scaled_total(table, 0);
  for (ProfileCode code = 1; code < table.profiles(); ++code) {
    Integer total = scaled_total(table, code);
    if (total > best) {
      best = std::move(total);
      best_code = code;
    }
  }
  return table.social_welfare(best_code);
}

namespace {

// Utility of `player` at ratio r is r*a + b with (a, b) read from two basis
// tables sharing one scale.
struct BasisTables {
  PayoffTable v0_part;
  PayoffTable v1_part;

  BasisTables(const CompiledGame& game, const Rational& ng, int threads)
      : v0_part(game, PayoffParams{1, 0, ng}, threads),
        v1_part(game, PayoffParams{0, 1, ng}, threads) {}
};

class IntervalBuilder {
 public:
  // Intersects with {r in [0,1] : r*a + b >= 0}.
  void require(std::int64_t a, std::int64_t b) {
    if (empty_) return;
    if (a == 0) {
      if (b < 0) empty_ = true;
      return;
    }
    Rational root(Integer(static_cast<long>(-b)), Integer(static_cast<long>(a)));
    root.canonicalize();
    if (a > 0) {
      lo_ = std::max(lo_, root);
    } else {
      hi_ = std::min(hi_, root);
    }
    if (lo_ > hi_) empty_ = true;
  }

  std::optional<RatioInterval> result() const {
    if (empty_) return std::nullopt;
    return RatioInterval{lo_, hi_, true, true};
  }

 private:
  Rational lo_{0};
  Rational hi_{1};
  bool empty_ = false;
};

std::optional<RatioInterval> table_interval(const BasisTables& t, ProfileCode code) {
  const int n = t.v0_part.players();
  IntervalBuilder builder;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t stride = stride_of(n, j);
    const int f = digit(code, n, j);
    for (int g = 0; g < 4; ++g) {
      if (g == f) continue;
      const ProfileCode alt = code - static_cast<std::uint64_t>(f) * stride + static_cast<std::uint64_t>(g) * stride;
      builder.require(t.v0_part.scaled_utility(code, j) - t.v0_part.scaled_utility(alt, j),
                      t.v1_part.scaled_utility(code, j) - t.v1_part.scaled_utility(alt, j));
    }
  }
  return builder.result();
}

std::vector<ProfileCode> members_at(const std::vector<std::optional<RatioInterval>>& intervals,
                                    const Rational& r) {
  std::vector<ProfileCode> out;
  for (ProfileCode code = 0; code < intervals.size(); ++code) {
    if (intervals[code] && intervals[code]->contains(r)) out.push_back(code);
  }
  return out;
}

std::vector<ProfileCode> set_union(const std::vector<ProfileCode>& a,
                                   const std::vector<ProfileCode>& b) {
  std::vector<ProfileCode> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<RatioInterval> nash_ratio_interval(const CompiledGame& game, ProfileCode code,
                                                 const Rational& ng) {
  const int n = game.players();
  const Profile base = decode(code, n);
  const Evaluation own = evaluate(game, base);
  IntervalBuilder builder;
  // Utilities are rational here; scale each comparison by a common positive
  // denominator before handing it to the integer builder.
  for (int j = 0; j < n; ++j) {
    for (int g = 0; g < 4; ++g) {
      if (g == static_cast<int>(base[static_cast<std::size_t>(j)])) continue;
      Profile alt = base;
      alt[static_cast<std::size_t>(j)] = static_cast<LocalFn>(g);
      const Evaluation other = evaluate(game, alt);
      const LinearPayoff& a = own.payoffs[static_cast<std::size_t>(j)];
      const LinearPayoff& b = other.payoffs[static_cast<std::size_t>(j)];
      const Rational slope = (a.win_v0 - ng * a.lose_v0) - (b.win_v0 - ng * b.lose_v0);
      const Rational offset = (a.win_v1 - ng * a.lose_v1) - (b.win_v1 - ng * b.lose_v1);
      const Integer den = lcm(slope.get_den(), offset.get_den());
      builder.require(to_int64(Rational(slope * den).get_num()), to_int64(Rational(offset * den).get_num()));
    }
  }
  return builder.result();
}

RegimeAnalysis ratio_regimes(const CompiledGame& game, const Rational& ng, int threads) {
  if (ng < 0) throw Error(ErrorCode::kInvalidParams, "penalty ng must be non-negative");
  const BasisTables tables(game, ng, threads);
  const std::uint64_t count = tables.v0_part.profiles();
  std::vector<std::optional<RatioInterval>> intervals(count);
  parallel_chunks(count, threads, [&](std::uint64_t begin, std::uint64_t end, int) {
    for (ProfileCode code = begin; code < end; ++code) intervals[code] = table_interval(tables, code);
  });

  std::set<Rational> candidates;
  for (const auto& interval : intervals) {
    if (!interval) continue;
    for (const Rational& r : {interval->lo, interval->hi}) {
      if (r > 0 && r < 1) candidates.insert(r);
    }
  }
  std::vector<Rational> cuts(candidates.begin(), candidates.end());
  // Membership is constant on each open gap between consecutive candidates.
  std::vector<Rational> edges;
  edges.push_back(0);
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(1);
  std::vector<std::vector<ProfileCode>> gap_sets;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    gap_sets.push_back(members_at(intervals, (edges[i] + edges[i + 1]) / 2));
  }

  RegimeAnalysis out;
  std::vector<std::vector<ProfileCode>> cut_sets;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    auto at_cut = members_at(intervals, cuts[i]);
    if (at_cut != gap_sets[i] || at_cut != gap_sets[i + 1]) out.breakpoints.push_back(cuts[i]);
    cut_sets.push_back(std::move(at_cut));
  }

  std::vector<Rational> bounds;
  bounds.push_back(0);
  bounds.insert(bounds.end(), out.breakpoints.begin(), out.breakpoints.end());
  bounds.push_back(1);
  std::vector<std::vector<ProfileCode>> interval_sets;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    auto codes = members_at(intervals, (bounds[i] + bounds[i + 1]) / 2);
    interval_sets.push_back(codes);
    out.intervals.push_back({RatioInterval{bounds[i], bounds[i + 1], false, false}, std::move(codes), false});
  }
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    RegimeEntry point;
    point.interval = RatioInterval{bounds[i], bounds[i], true, true};
    point.codes = members_at(intervals, bounds[i]);
    if (i == 0) {
      point.union_of_neighbours = point.codes == interval_sets.front();
    } else if (i + 1 == bounds.size()) {
      point.union_of_neighbours = point.codes == interval_sets.back();
    } else {
      point.union_of_neighbours = point.codes == set_union(interval_sets[i - 1], interval_sets[i]);
    }
    out.points.push_back(std::move(point));
  }
  return out;
}

RegimeAnalysis ratio_regimes(const GameSpec& game, const Rational& ng, int threads) {
  return ratio_regimes(compile(game), ng, threads);
}

Rational best_correlated_sw(const CompiledGame& game, const PayoffParams& params) {
  params.validate();
  const int n = game.players();
  if (n > 6) throw Error(ErrorCode::kSizeLimit, "correlated LP is limited to 6 players");
  const PayoffTable table(game, params);
  const std::uint64_t count = table.profiles();

  // Averaging an optimal device over the game automorphisms keeps it
  // feasible and optimal, so one mass per orbit is enough.
  const SymmetryGroup group = game_automorphisms(game);
  std::vector<ProfileCode> all(count);
  std::iota(all.begin(), all.end(), ProfileCode{0});
  const std::vector<Orbit> orbits = orbit_partition(all, group, n);
  const std::size_t variables = orbits.size();
  std::vector<std::size_t> orbit_of(count);
  for (std::size_t o = 0; o < variables; ++o) {
    for (ProfileCode m : orbits[o].members) orbit_of[m] = o;
  }

  LinearProgram lp;
  lp.variables = variables;
  lp.objective.assign(variables, Rational(0));
  for (ProfileCode code = 0; code < count; ++code) lp.objective[orbit_of[code]] += scaled_total(table, code);
  // Obedience: recommended f for player j must not be beaten by g.
  for (int j = 0; j < n; ++j) {
    const std::uint64_t stride = stride_of(n, j);
    for (int f = 0; f < 4; ++f) {
      for (int g = 0; g < 4; ++g) {
        if (g == f) continue;
        LinearConstraint row;
        row.coefficients.assign(variables, Rational(0));
        row.relation = Relation::kLessEqual;
        row.rhs = 0;
        for (ProfileCode code = 0; code < count; ++code) {
          if (digit(code, n, j) != f) continue;
          const ProfileCode alt = code - static_cast<std::uint64_t>(f) * stride + static_cast<std::uint64_t>(g) * stride;
          row.coefficients[orbit_of[code]] +=
              static_cast<long>(table.scaled_utility(alt, j) - table.scaled_utility(code, j));
        }
        if (std::all_of(row.coefficients.begin(), row.coefficients.end(),
                        [](const Rational& a) { return a <= 0; })) {
          continue;
        }
        lp.constraints.push_back(std::move(row));
      }
    }
  }
  LinearConstraint normalisation;
  normalisation.relation = Relation::kEqual;
  normalisation.rhs = 1;
  for (const Orbit& orbit : orbits) normalisation.coefficients.emplace_back(static_cast<long>(orbit.members.size()));
  lp.constraints.push_back(std::move(normalisation));

  const LpSolution solution = solve(lp);
  // Any pure Nash point mass is feasible and the objective is bounded by the
  // largest profile welfare.
  assert(solution.status == LpStatus::kOptimal);
  if (solution.status != LpStatus::kOptimal) {
    throw std::logic_error("correlated-equilibrium LP did not reach an optimum");
  }
  Rational value = solution.value / (table.scale() * n);
  value.canonicalize();
  return value;
}

Rational best_correlated_sw(const GameSpec& game, const PayoffParams& params) {
  return best_correlated_sw(compile(game), params);
}

}  // namespace grapheq
