#include "gammapath/paths.hpp"

#include "gammapath/error.hpp"

namespace gammapath {
namespace {

class TerminalPathSearch {
 public:
  TerminalPathSearch(const LabelledGraph& g, const std::vector<char>& terminal,
                     const std::vector<char>* blocked, const Limits& limits,
                     const std::function<Visit(const Walk&, const Elem&)>& visit,
                     std::optional<int> only_end)
      : g_(g),
        terminal_(terminal),
        blocked_(blocked),
        limits_(limits),
        visit_(visit),
        only_end_(only_end),
        on_path_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  SearchOutcome run(std::optional<int> only_start) {
    for (int s = 0; s < g_.num_vertices() && !outcome_.stopped; ++s) {
      if (!terminal_[static_cast<std::size_t>(s)] || is_blocked(s)) continue;
      if (only_start && s != *only_start) continue;
      start_ = s;
      walk_.vertices.assign(1, s);
      walk_.edges.clear();
      weights_.assign(1, g_.group().zero());
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    return outcome_;
  }

 private:
  bool is_blocked(int v) const { return blocked_ && (*blocked_)[static_cast<std::size_t>(v)]; }

  void extend(int x) {
    if ((++steps_ & 0xFFFU) == 0) limits_.check_deadline();
    for (const Incidence& inc : g_.incident(x)) {
      if (outcome_.stopped) return;
      const int y = inc.neighbor;
      if (on_path_[static_cast<std::size_t>(y)] || is_blocked(y)) continue;
      const bool is_end = terminal_[static_cast<std::size_t>(y)] != 0;
      if (is_end) {
        if (only_end_ ? y != *only_end_ : y < start_) continue;
      }
      if (walk_.edges.size() + 1 > limits_.max_path_length) {
        outcome_.truncated = true;
        continue;
      }
      walk_.vertices.push_back(y);
      walk_.edges.push_back(inc.edge);
      weights_.push_back(g_.group().add(weights_.back(), traversal_label(g_, inc.edge, x)));
      if (is_end) {
        if (visit_(walk_, weights_.back()) == Visit::kStop) outcome_.stopped = true;
      } else {
        on_path_[static_cast<std::size_t>(y)] = 1;
        extend(y);
        on_path_[static_cast<std::size_t>(y)] = 0;
      }
      walk_.vertices.pop_back();
      walk_.edges.pop_back();
      weights_.pop_back();
    }
  }

  const LabelledGraph& g_;
  const std::vector<char>& terminal_;
  const std::vector<char>* blocked_;
  const Limits& limits_;
  const std::function<Visit(const Walk&, const Elem&)>& visit_;
  std::optional<int> only_end_;
  std::vector<char> on_path_;
  Walk walk_;
  std::vector<Elem> weights_;
  int start_ = 0;
  std::uint64_t steps_ = 0;
  SearchOutcome outcome_;
};

}  // namespace

bool apply_filter(const LabelledGraph& g, const PathFilter& filter, PathWitness& candidate) {
  switch (filter.kind) {
    case FilterKind::kAll:
      return true;
    case FilterKind::kNonzero:
      // Reversal inverts the weight, so nonzero-ness is orientation free.
      return !g.group().is_zero(candidate.weight);
    case FilterKind::kWeight:
      if (candidate.weight == filter.weight) return true;
      if (g.directed()) {
        Walk back = reversed(candidate.walk);
        Elem w = walk_weight(g, back);
        if (w == filter.weight) {
          candidate = PathWitness{std::move(back), std::move(w)};
          return true;
        }
      }
      return false;
  }
  return false;
}

SearchOutcome for_each_terminal_path(
    const LabelledGraph& g, const std::vector<char>& terminal, const std::vector<char>* blocked,
    const Limits& limits, const std::function<Visit(const Walk&, const Elem&)>& visit,
    std::optional<int> only_start, std::optional<int> only_end) {
  TerminalPathSearch search(g, terminal, blocked, limits, visit, only_end);
  return search.run(only_start);
}

PathEnumeration enumerate_a_paths(const LabelledGraph& g, const PathFilter& filter,
                                  const Limits& limits, bool require_exhaustive,
                                  const std::vector<char>* blocked) {
  limits.validate();
  if (filter.kind == FilterKind::kWeight) g.group().require(filter.weight);
  PathEnumeration result;
  bool overflow = false;
  auto outcome = for_each_terminal_path(
      g, g.terminal_mask(), blocked, limits, [&](const Walk& walk, const Elem& weight) {
        PathWitness candidate{walk, weight};
        if (!apply_filter(g, filter, candidate)) return Visit::kContinue;
        if (result.paths.size() == limits.max_paths) {
          overflow = true;
          return Visit::kStop;
        }
        result.paths.push_back(std::move(candidate));
        return Visit::kContinue;
      });
  result.exhaustive = !outcome.truncated && !overflow;
  if (require_exhaustive && !result.exhaustive) {
    throw LimitExceeded(overflow ? "A-path enumeration exceeded max_paths"
                                 : "A-path enumeration exceeded max_path_length");
  }
  return result;
}

std::optional<PathWitness> find_a_path(const LabelledGraph& g, const PathFilter& filter,
                                       const Limits& limits, const std::vector<char>* blocked) {
  limits.validate();
  std::optional<PathWitness> found;
  auto outcome = for_each_terminal_path(
      g, g.terminal_mask(), blocked, limits, [&](const Walk& walk, const Elem& weight) {
        PathWitness candidate{walk, weight};
        if (!apply_filter(g, filter, candidate)) return Visit::kContinue;
        found = std::move(candidate);
        return Visit::kStop;
      });
  if (!found && outcome.truncated) {
    throw LimitExceeded("A-path search exceeded max_path_length");
  }
  return found;
}

}  // namespace gammapath
