// Fixpoint engines: fair iteration of the lifted contractors of a CSP.
//
// All engines converge to the same box, the greatest common fixpoint of the
// contractors below the input box. They differ only in the order in which
// contractors are tried.

#ifndef ICSOLVE_PROPAGATION_HPP_
#define ICSOLVE_PROPAGATION_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/csp.hpp"
#include "icsolve/trace.hpp"

namespace icsolve {

enum class PropagationStatus { kFeasibleUnknown, kProvedEmpty };

std::string_view status_name(PropagationStatus s);

struct PropagationOutcome {
  Box fixpoint;
  PropagationStatus status = PropagationStatus::kFeasibleUnknown;
  std::size_t steps = 0;            // contractor applications
  std::size_t effective_steps = 0;  // applications that changed the box
  std::vector<TraceRecord> trace;   // filled only when requested
};

/// Raised when an engine exceeds its round cap. Unreachable for monotone
/// contractors on the float lattice; it signals a contractor defect.
class PropagationDiverged : public std::runtime_error {
 public:
  explicit PropagationDiverged(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultMaxRounds = 1'000'000;

/// Rigid order: constraints in id order, round after round, until a full
/// round changes nothing or the box empties.
PropagationOutcome propagate_roundrobin(const Csp& csp, const Box& p,
                                        std::size_t max_rounds = kDefaultMaxRounds,
                                        bool record_trace = false);

/// FIFO worklist seeded with every constraint; a change to variable v
/// re-enqueues the other constraints on v.
PropagationOutcome propagate_worklist(const Csp& csp, const Box& p, bool record_trace = false);

/// Uniformly random choice of the next constraint from a seeded PRNG,
/// stopping once every constraint is known to be stable.
PropagationOutcome propagate_random(const Csp& csp, const Box& p, std::uint64_t seed,
                                    bool record_trace = false);

/// Engine selector: "roundrobin", "worklist" or "random:<seed>".
struct PropagationOrder {
  enum class Kind { kRoundRobin, kWorklist, kRandom };
  Kind kind = Kind::kWorklist;
  std::uint64_t seed = 0;

  static std::optional<PropagationOrder> parse(std::string_view text);
  std::string to_string() const;
};

PropagationOutcome propagate(const Csp& csp, const Box& p, const PropagationOrder& order,
                             bool record_trace = false);

/// n-fold application of big_gamma; gamma_power(csp, p, 0) == p.
Box gamma_power(const Csp& csp, const Box& p, std::size_t n);

}  // namespace icsolve

#endif  // ICSOLVE_PROPAGATION_HPP_
