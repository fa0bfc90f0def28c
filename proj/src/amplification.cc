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

#include "grapheq/amplification.h"

#include <algorithm>
#include <cmath>

#include "grapheq/error.h"
#include "grapheq/parallel.h"

namespace grapheq {
namespace {

constexpr int kMaxBruteForcePlayers = 10;
constexpr int kMaxGroups = 10000;

void require_base_params(const PayoffParams& params) {
  params.validate();
  if (params.ng != 0) {
    throw Error(ErrorCode::kUnsupported,
                "the group factorisation holds for base payoffs only (ng = 0)");
  }
}

// Frontier entry of the group-by-group search: after some groups,
// A = sum_g S_g prod_{h != g} P_h and P = prod_h P_h.
struct Partial {
  Rational a;
  Rational p;
  std::vector<ProfileCode> groups;
};

bool better(const Partial& x, const Partial& y) {
  if (x.a != y.a) return x.a > y.a;
  if (x.p != y.p) return x.p > y.p;
  return x.groups < y.groups;
}

// Keeps the entries not weakly dominated in (a, p); ties keep the first in
// `better` order.
std::vector<Partial> pareto_frontier(std::vector<Partial> entries) {
  std::sort(entries.begin(), entries.end(), better);
  std::vector<Partial> out;
  for (Partial& e : entries) {
    // Sorted by a descending, so e is dominated iff some kept p >= e.p.
    if (!out.empty() && out.back().p >= e.p) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

PenaltyReport penalty_report(const GameSpec& game, const PayoffParams& params, int threads) {
  params.validate();
  if (params.ng <= 0) throw Error(ErrorCode::kInvalidParams, "penalty analysis needs ng > 0");
  EnumerationOptions options;
  options.threads = threads;
  return {enumerate_nash(compile(game), params, options), qsw(params)};
}

ProductGameSpec kfold(const GameSpec& base, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "k must be at least 1");
  base.validate();
  const CompiledGame single = compile(base);
  const int n = base.players();
  const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
  const std::size_t q = single.questions.size();
  std::size_t joint = 1;
  for (int g = 0; g < k; ++g) {
    if (joint > (std::size_t{1} << 22) / q) {
      throw Error(ErrorCode::kSizeLimit, "too many joint questions for k = " + std::to_string(k));
    }
    joint *= q;
  }

  ProductGameSpec out;
  out.base = base;
  out.k = k;
  out.game.name = base.name + "^" + std::to_string(k);
  out.game.graph = base.graph.disjoint_union(k);
  out.game.questions.reserve(joint);
  std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
  for (std::size_t index = 0; index < joint; ++index) {
    // Group 0 varies slowest.
    std::size_t rest = index;
    for (int g = k - 1; g >= 0; --g) {
      pick[static_cast<std::size_t>(g)] = rest % q;
      rest /= q;
    }
    CompiledQuestion question;
    question.type = BitVector(total);
    question.weight = 1;
    bool with_generators = true;
    BitVector generators(total);
    std::string id = "(";
    for (int g = 0; g < k; ++g) {
      const CompiledQuestion& part = single.questions[pick[static_cast<std::size_t>(g)]];
      const std::size_t offset = static_cast<std::size_t>(g) * static_cast<std::size_t>(n);
      if (g > 0) id += ",";
      id += part.id;
      question.type |= part.type.embed(total, offset);
      question.weight *= part.weight;
      for (const ParityCheck& c : part.checks) {
        question.checks.push_back({c.players.embed(total, offset), c.parity});
      }
      if (part.generators) {
        generators |= part.generators->embed(total, offset);
      } else {
        with_generators = false;
      }
    }
    question.id = id + ")";
    if (with_generators) question.generators = generators;
    out.game.questions.push_back(std::move(question));
  }
  return out;
}

GroupTable group_table(const GameSpec& base, const PayoffParams& params, int threads) {
  require_base_params(params);
  const CompiledGame game = compile(base);
  const PayoffTable table(game, params, threads);
  GroupTable out;
  out.players = base.players();
  out.params = params;
  out.rows.resize(table.profiles());
  parallel_chunks(table.profiles(), threads, [&](std::uint64_t begin, std::uint64_t end, int) {
    for (ProfileCode code = begin; code < end; ++code) {
      GroupRow& row = out.rows[code];
      row.code = code;
      row.welfare_sum = table.social_welfare(code) * out.players;
      row.p_win = table.p_win(code);
      row.nash = is_nash(table, code);
    }
  });
  return out;
}

KfoldCsw kfold_best_csw(const GroupTable& table, int k, KfoldCswOptions options) {
  if (k < 1 || k > kMaxGroups) throw Error(ErrorCode::kInvalidParams, "k out of range");
  const Rational players = Rational(table.players) * k;

  // Groups whose own factor is positive must play base Nash profiles.
  std::vector<Partial> items;
  Rational max_p_win = 0;
  Rational zero_row_welfare = -1;  // best S among never-winning rows, -1 if none
  bool zero_nash = false;
  for (const GroupRow& row : table.rows) {
    max_p_win = std::max(max_p_win, row.p_win);
    if (row.p_win == 0) {
      zero_row_welfare = std::max(zero_row_welfare, row.welfare_sum);
      zero_nash = zero_nash || row.nash;
      continue;
    }
    if (row.nash) items.push_back({row.welfare_sum, row.p_win, {row.code}});
  }
  items = pareto_frontier(std::move(items));

  KfoldCsw out;
  out.k = k;
  bool found = false;
  if (!items.empty()) {
    std::vector<Partial> frontier{{Rational(0), Rational(1), {}}};
    for (int g = 0; g < k; ++g) {
      std::vector<Partial> next;
      next.reserve(frontier.size() * items.size());
      for (const Partial& f : frontier) {
        for (const Partial& item : items) {
          Partial e{f.a * item.p + item.a * f.p, f.p * item.p, f.groups};
          e.groups.push_back(item.groups.front());
          next.push_back(std::move(e));
        }
      }
      frontier = pareto_frontier(std::move(next));
    }
    out.csw = frontier.front().a / players;
    out.groups = frontier.front().groups;
    found = true;
  }

  // With one never-winning group z every other group has a zero factor and
  // earns nothing; z earns S_z * prod_{h != z} P_h. Two or more such groups
  // earn nothing at all.
  const bool zero_possible = zero_row_welfare >= 0 && (k >= 2 || zero_nash);
  if (zero_possible) {
    out.zero_factor_bound =
        Rational(zero_row_welfare * pow(max_p_win, static_cast<unsigned>(k - 1))) /
        players;
    if (out.zero_factor_bound < 0) out.zero_factor_bound = 0;
  }
  if (!options.prune_zero_factor) out.zero_factor_evaluated = true;
  if (zero_possible) {
    if (!options.prune_zero_factor || !found || out.zero_factor_bound > out.csw) {
      out.zero_factor_evaluated = true;
      Rational best = -1;
      std::vector<ProfileCode> groups;
      ProfileCode best_free = 0;
      for (const GroupRow& row : table.rows) {
        if (row.p_win == max_p_win) {
          best_free = row.code;
          break;
        }
      }
      ProfileCode never = 0;
      for (const GroupRow& row : table.rows) {
        if (row.p_win == 0) {
          never = row.code;
          break;
        }
      }
      if (k >= 2) {
        best = 0;
        groups.assign(static_cast<std::size_t>(k), never);
      }
      for (const GroupRow& row : table.rows) {
        if (row.p_win != 0) continue;
        // With max_p_win > 0 the lone zero group is constrained.
        const bool constrained = k == 1 || max_p_win > 0;
        if (constrained && !row.nash) continue;
        const Rational value =
            row.welfare_sum * pow(max_p_win, static_cast<unsigned>(k - 1)) / players;
        if (value > best) {
          best = value;
          groups.assign(static_cast<std::size_t>(k), best_free);
          groups[0] = row.code;
        }
      }
      if (best >= 0 && (!found || best > out.csw)) {
        out.csw = best;
        out.groups = groups;
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kEmptyEquilibriumSet,
                "no Nash product profile for k = " + std::to_string(k));
  }
  return out;
}

KfoldCsw kfold_best_csw(const GameSpec& base, int k, const PayoffParams& params,
                        KfoldCswOptions options) {
  return kfold_best_csw(group_table(base, params), k, options);
}

std::vector<ProfileCode> kfold_nash_decomposition(const GroupTable& table, int k) {
  if (k < 1 || table.players * k > kMaxBruteForcePlayers) {
    throw Error(ErrorCode::kSizeLimit, "product profile codes are limited to 10 players");
  }
  const int shift = 2 * table.players;
  const ProfileCode mask = (ProfileCode{1} << shift) - 1;
  const std::uint64_t count = profile_count(table.players * k);
  std::vector<ProfileCode> out;
  for (ProfileCode code = 0; code < count; ++code) {
    int zeros = 0;
    for (int g = 0; g < k; ++g) {
      const ProfileCode part = (code >> (shift * (k - 1 - g))) & mask;
      if (table.rows[part].p_win == 0) ++zeros;
    }
    bool nash = true;
    for (int g = 0; g < k && nash; ++g) {
      const GroupRow& row = table.rows[(code >> (shift * (k - 1 - g))) & mask];
      const int other_zeros = zeros - (row.p_win == 0 ? 1 : 0);
      nash = other_zeros > 0 || row.nash;
    }
    if (nash) out.push_back(code);
  }
  return out;
}

BruteForceResult kfold_bruteforce(const GameSpec& base, int k, const PayoffParams& params,
                                  int threads) {
  params.validate();
  if (k < 1 || base.players() * k > kMaxBruteForcePlayers) {
    throw Error(ErrorCode::kSizeLimit, "brute force is limited to 10 players");
  }
  const ProductGameSpec product = kfold(base, k);
  const PayoffTable table(product.game, params, threads);
  EnumerationOptions options;
  options.threads = threads;
  BruteForceResult out;
  out.nash = equilibrium_codes(table, options);
  if (out.nash.empty()) {
    throw Error(ErrorCode::kEmptyEquilibriumSet, "no Nash profile in the product game");
  }
  Rational best;
  for (ProfileCode code : out.nash) {
    const Rational sw = table.social_welfare(code);
    if (out.csw.argmax.empty() || sw > best) {
      best = sw;
      out.csw.argmax = {code};
    } else if (sw == best) {
      out.csw.argmax.push_back(code);
    }
  }
  out.csw.social_welfare = best;
  return out;
}

PlayersNeeded players_needed(const GameSpec& base, const PayoffParams& params, const Rational& eps) {
  if (eps <= 0 || eps > 1) throw Error(ErrorCode::kInvalidParams, "eps must lie in (0, 1]");
  const GroupTable table = group_table(base, params);
  const Rational quantum = qsw(params);
  constexpr int kVerify = 4;
  std::vector<Rational> csw;
  for (int k = 1; k <= kVerify; ++k) csw.push_back(kfold_best_csw(table, k).csw);
  if (csw[0] <= 0) throw Error(ErrorCode::kInvalidParams, "base CSW must be positive");

  PlayersNeeded out;
  out.base_ratio = csw[0] / quantum;
  out.decay_factor = csw[1] / csw[0];
  out.decay_verified = true;
  for (int k = 2; k < kVerify; ++k) {
    if (csw[static_cast<std::size_t>(k)] != csw[static_cast<std::size_t>(k - 1)] * out.decay_factor) {
      out.decay_verified = false;
    }
  }
  if (out.decay_verified && out.decay_factor >= 1 && out.base_ratio > eps) {
    throw Error(ErrorCode::kUnsupported, "CSW does not decay with k; no k reaches eps");
  }

  Rational ratio = out.base_ratio;
  int k = 1;
  while (ratio > eps) {
    if (++k > kMaxGroups) throw Error(ErrorCode::kSizeLimit, "no k up to 10000 reaches eps");
    ratio = out.decay_verified ? Rational(ratio * out.decay_factor)
                               : Rational(kfold_best_csw(table, k).csw / quantum);
  }
  out.k = k;
  out.player_count = k * base.players();
  out.achieved_ratio = ratio;
  if (out.decay_factor > 0 && out.decay_factor < 1) {
    out.log_constant = 1.0 / std::log(1.0 / to_double(out.decay_factor));
    const double bound = 2.0 + out.log_constant * std::log(1.0 / to_double(eps));
    out.within_bound = static_cast<double>(k) <= bound + 1e-9;
  }
  return out;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear fit needs two or more points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  const double mean = sy / n;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace grapheq
