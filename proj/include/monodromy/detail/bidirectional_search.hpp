#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "monodromy/moves.hpp"

namespace monodromy::detail {

template <class State>
struct Edge {
  State state;
  Move move;
};

// Meet-in-the-middle search. Successors are produced in a fixed order, so the
// returned certificate is deterministic; with jobs > 1 successor generation is
// spread over threads and merged back in order.
template <class State>
struct SearchSpace {
  std::function<std::string(const State&)> key;
  /// Appends successors; returns false if some successor was rejected by a
  /// limit (which makes exhaustion inconclusive).
  std::function<bool(const State&, std::vector<Edge<State>>&)> expand;
  /// Moves that take `child` back to `parent`, where child was obtained from
  /// parent by `move`.
  std::function<std::vector<Move>(const State& parent, const Move& move)> reverse;
  /// With one-way moves an exhausted side proves nothing; the other side
  /// keeps expanding until both are exhausted.
  bool symmetric = true;
};

template <class State>
struct HurwitzSearchSpace {
  std::function<std::string(const State&)> key;
  std::function<int(const State&)> length;
  /// Returns nullopt when the successor is rejected (e.g. too long).
  std::function<std::optional<State>(const State&, int, Direction)> apply;
};

inline std::vector<Move> reverse_hurwitz(const Move& m) {
  if (auto* r = std::get_if<HurwitzR>(&m)) return {HurwitzL{r->i}};
  if (auto* l = std::get_if<HurwitzL>(&m)) return {HurwitzR{l->i}};
  return {};
}

template <class State>
SearchSpace<State> general_space(const HurwitzSearchSpace<State>& h) {
  SearchSpace<State> s;
  s.key = h.key;
  s.expand = [h](const State& st, std::vector<Edge<State>>& out) {
    bool complete = true;
    const int n = h.length(st);
    for (int i = 1; i < n; ++i) {
      for (Direction d : {Direction::R, Direction::L}) {
        auto next = h.apply(st, i, d);
        if (!next) {
          complete = false;
          continue;
        }
        out.push_back(Edge<State>{std::move(*next), hurwitz(i, d)});
      }
    }
    return complete;
  };
  s.reverse = [](const State&, const Move& m) { return reverse_hurwitz(m); };
  return s;
}

template <class State>
SearchResult bidirectional_search(const SearchSpace<State>& space, const State& source,
                                  const State& target, const SearchLimits& limits) {
  struct Node {
    std::string parent;
    std::vector<Move> moves;  // source side: parent -> node; target side: node -> parent
    bool root = false;
  };
  struct Child {
    std::string key;
    Edge<State> edge;
  };

  SearchResult result;
  std::unordered_map<std::string, Node> seen[2];
  std::vector<std::pair<std::string, State>> frontier[2];
  int depth[2] = {0, 0};

  const std::string source_key = space.key(source);
  const std::string target_key = space.key(target);
  if (source_key == target_key) {
    result.verdict = Verdict::Equivalent;
    result.states_visited = 1;
    return result;
  }
  seen[0].emplace(source_key, Node{{}, {}, true});
  seen[1].emplace(target_key, Node{{}, {}, true});
  frontier[0].emplace_back(source_key, source);
  frontier[1].emplace_back(target_key, target);

  auto build_path = [&](const std::string& meet) {
    std::vector<std::vector<Move>> forward;
    for (std::string k = meet;;) {
      const Node& n = seen[0].at(k);
      if (n.root) break;
      forward.push_back(n.moves);
      k = n.parent;
    }
    std::reverse(forward.begin(), forward.end());
    for (std::string k = meet;;) {
      const Node& n = seen[1].at(k);
      if (n.root) break;
      forward.push_back(n.moves);
      k = n.parent;
    }
    for (auto& seg : forward) {
      result.certificate.moves.insert(result.certificate.moves.end(), seg.begin(), seg.end());
    }
  };

  std::atomic<bool> pruned{false};
  auto expand_one = [&](const State& s, std::vector<Child>& out) {
    std::vector<Edge<State>> edges;
    if (!space.expand(s, edges)) pruned.store(true, std::memory_order_relaxed);
    out.reserve(edges.size());
    for (auto& e : edges) {
      std::string k = space.key(e.state);
      out.push_back(Child{std::move(k), std::move(e)});
    }
  };

  const std::size_t jobs = static_cast<std::size_t>(std::max(1, limits.jobs));
  for (;;) {
    const bool exhausted = space.symmetric ? frontier[0].empty() || frontier[1].empty()
                                           : frontier[0].empty() && frontier[1].empty();
    if (exhausted) {
      if (pruned.load()) {
        result.reason = "orbit exhausted only up to the word-length limit";
      } else {
        result.verdict = Verdict::Inequivalent;
        result.reason = "orbit exhausted without reaching the target";
      }
      break;
    }
    if (depth[0] + depth[1] >= limits.max_depth) {
      result.reason = "depth limit reached";
      break;
    }
    const int side = frontier[1].empty() ? 0
                     : frontier[0].empty() || frontier[1].size() < frontier[0].size() ? 1
                                                                                      : 0;
    const int other = 1 - side;
    std::vector<std::pair<std::string, State>> next_frontier;
    std::string meet;

    auto absorb = [&](Child& c, const std::string& parent_key, const State& parent) -> bool {
      if (seen[side].count(c.key)) return false;
      std::vector<Move> moves;
      if (side == 0) {
        moves.push_back(c.edge.move);
      } else {
        moves = space.reverse(parent, c.edge.move);
      }
      seen[side].emplace(c.key, Node{parent_key, std::move(moves), false});
      if (seen[other].count(c.key)) {
        meet = c.key;
        return true;
      }
      next_frontier.emplace_back(c.key, std::move(c.edge.state));
      return false;
    };

    bool met = false;
    bool overflow = false;
    const auto& fr = frontier[side];
    const std::size_t chunk = jobs == 1 ? 1 : 256 * jobs;
    for (std::size_t base = 0; base < fr.size() && !met && !overflow; base += chunk) {
      const std::size_t end = std::min(fr.size(), base + chunk);
      std::vector<std::vector<Child>> children(end - base);
      if (jobs == 1) {
        expand_one(fr[base].second, children[0]);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) {
          pool.emplace_back([&, t] {
            for (std::size_t j = base + t; j < end; j += jobs) {
              expand_one(fr[j].second, children[j - base]);
            }
          });
        }
        for (auto& th : pool) th.join();
      }
      for (std::size_t j = base; j < end && !met; ++j) {
        for (auto& c : children[j - base]) {
          if (absorb(c, fr[j].first, fr[j].second)) {
            met = true;
            break;
          }
        }
      }
      if (seen[0].size() + seen[1].size() > limits.max_states) overflow = true;
    }
    result.states_visited = seen[0].size() + seen[1].size();
    if (met) {
      build_path(meet);
      result.verdict = Verdict::Equivalent;
      return result;
    }
    if (overflow) {
      result.reason = "state limit reached";
      break;
    }
    frontier[side] = std::move(next_frontier);
    ++depth[side];
  }
  result.states_visited = seen[0].size() + seen[1].size();
  return result;
}

template <class State>
SearchResult bidirectional_hurwitz_search(const HurwitzSearchSpace<State>& space,
                                          const State& source, const State& target,
                                          const SearchLimits& limits) {
  return bidirectional_search(general_space(space), source, target, limits);
}

}  // namespace monodromy::detail
