#include "icsolve/propagation.hpp"

#include <charconv>
#include <deque>
#include <random>

#include "icsolve/contractor.hpp"
#include "icsolve/error.hpp"

namespace icsolve {
namespace {

void require_scope(const Csp& csp, const Box& p) {
  if (!p.same_scope(csp.initial_box())) {
    throw ContractViolation("propagation: box scope differs from the CSP variables");
  }
}

// Shared bookkeeping of one propagation run.
class Run {
 public:
  Run(const Csp& csp, const Box& p, bool record_trace)
      : csp_(csp), record_trace_(record_trace) {
    out_.fixpoint = p;
  }

  Box& box() { return out_.fixpoint; }

  // Applies constraint i; returns the changed-position mask.
  std::uint8_t apply(std::size_t i) {
    const auto& c = csp_.constraints()[i];
    const auto& idx = csp_.arg_indices(i);
    TraceRecord rec;
    if (record_trace_) {
      rec.constraint_id = c.id;
      rec.kind = c.kind;
      rec.args = c.args;
      rec.value = c.value;
      for (std::size_t k = 0; k < c.args.size(); ++k) rec.before.push_back(box()[idx[k]]);
    }
    const std::uint8_t mask = apply_in_place(c, idx, box());
    ++out_.steps;
    if (mask != 0) ++out_.effective_steps;
    if (record_trace_) {
      for (std::size_t k = 0; k < c.args.size(); ++k) rec.after.push_back(box()[idx[k]]);
      rec.changed = mask != 0;
      out_.trace.push_back(std::move(rec));
    }
    return mask;
  }

  PropagationOutcome finish() {
    out_.status = box().is_empty() ? PropagationStatus::kProvedEmpty
                                   : PropagationStatus::kFeasibleUnknown;
    return std::move(out_);
  }

 private:
  const Csp& csp_;
  bool record_trace_;
  PropagationOutcome out_;
};

}  // namespace

std::string_view status_name(PropagationStatus s) {
  return s == PropagationStatus::kProvedEmpty ? "proved-empty" : "feasible-unknown";
}

PropagationOutcome propagate_roundrobin(const Csp& csp, const Box& p, std::size_t max_rounds,
                                        bool record_trace) {
  require_scope(csp, p);
  if (max_rounds < 1) throw ContractViolation("max_rounds must be at least 1");
  Run run(csp, p, record_trace);
  if (run.box().is_empty()) return run.finish();
  for (std::size_t round = 0;; ++round) {
    if (round == max_rounds) {
      throw PropagationDiverged("round-robin propagation exceeded " + std::to_string(max_rounds) +
                                " rounds");
    }
    bool changed = false;
    for (std::size_t i = 0; i < csp.size(); ++i) {
      changed |= run.apply(i) != 0;
      if (run.box().is_empty()) return run.finish();
    }
    if (!changed) break;
  }
  return run.finish();
}

PropagationOutcome propagate_worklist(const Csp& csp, const Box& p, bool record_trace) {
  require_scope(csp, p);
  Run run(csp, p, record_trace);
  if (run.box().is_empty()) return run.finish();

  std::deque<int> queue;
  std::vector<char> queued(csp.size(), 1);
  for (std::size_t i = 0; i < csp.size(); ++i) queue.push_back(static_cast<int>(i));

  const std::size_t max_steps = kDefaultMaxRounds * std::max<std::size_t>(csp.size(), 1);
  std::size_t steps = 0;
  while (!queue.empty()) {
    if (++steps > max_steps) {
      throw PropagationDiverged("worklist propagation exceeded " + std::to_string(max_steps) +
                                " steps");
    }
    const int i = queue.front();
    queue.pop_front();
    queued[i] = 0;
    const std::uint8_t mask = run.apply(static_cast<std::size_t>(i));
    if (run.box().is_empty()) break;
    if (mask == 0) continue;
    const auto& idx = csp.arg_indices(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < csp.constraints()[i].args.size(); ++k) {
      if ((mask & (1u << k)) == 0) continue;
      // The contractor just applied is idempotent, so it is not re-queued.
      for (int w : csp.watchers()[idx[k]]) {
        if (w != i && !queued[w]) {
          queued[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return run.finish();
}

PropagationOutcome propagate_random(const Csp& csp, const Box& p, std::uint64_t seed,
                                    bool record_trace) {
  require_scope(csp, p);
  Run run(csp, p, record_trace);
  if (run.box().is_empty() || csp.size() == 0) return run.finish();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, csp.size() - 1);
  std::vector<char> stable(csp.size(), 0);
  std::size_t unstable = csp.size();
  const std::size_t max_steps = kDefaultMaxRounds * csp.size() * 64;
  for (std::size_t steps = 0; unstable > 0; ++steps) {
    if (steps > max_steps) {
      throw PropagationDiverged("random-order propagation exceeded " + std::to_string(max_steps) +
                                " steps");
    }
    const std::size_t i = pick(rng);
    const std::uint8_t mask = run.apply(i);
    if (run.box().is_empty()) break;
    if (!stable[i]) {
      stable[i] = 1;
      --unstable;
    }
    if (mask == 0) continue;
    const auto& idx = csp.arg_indices(i);
    for (std::size_t k = 0; k < csp.constraints()[i].args.size(); ++k) {
      if ((mask & (1u << k)) == 0) continue;
      for (int w : csp.watchers()[idx[k]]) {
        if (static_cast<std::size_t>(w) != i && stable[w]) {
          stable[w] = 0;
          ++unstable;
        }
      }
    }
  }
  return run.finish();
}

std::optional<PropagationOrder> PropagationOrder::parse(std::string_view text) {
  if (text == "roundrobin") return PropagationOrder{Kind::kRoundRobin, 0};
  if (text == "worklist") return PropagationOrder{Kind::kWorklist, 0};
  constexpr std::string_view kPrefix = "random:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    const auto digits = text.substr(kPrefix.size());
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    return PropagationOrder{Kind::kRandom, seed};
  }
  return std::nullopt;
}

std::string PropagationOrder::to_string() const {
  switch (kind) {
    case Kind::kRoundRobin:
      return "roundrobin";
    case Kind::kWorklist:
      return "worklist";
    case Kind::kRandom:
      return "random:" + std::to_string(seed);
  }
  return "?";
}

PropagationOutcome propagate(const Csp& csp, const Box& p, const PropagationOrder& order,
                             bool record_trace) {
  switch (order.kind) {
    case PropagationOrder::Kind::kRoundRobin:
      return propagate_roundrobin(csp, p, kDefaultMaxRounds, record_trace);
    case PropagationOrder::Kind::kWorklist:
      return propagate_worklist(csp, p, record_trace);
    case PropagationOrder::Kind::kRandom:
      return propagate_random(csp, p, order.seed, record_trace);
  }
  return propagate_worklist(csp, p, record_trace);
}

Box gamma_power(const Csp& csp, const Box& p, std::size_t n) {
  Box out = p;
  for (std::size_t i = 0; i < n; ++i) {
    Box next = big_gamma(csp, out);
    if (next == out) break;
    out = std::move(next);
  }
  return out;
}

}  // namespace icsolve
