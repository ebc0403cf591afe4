#ifndef ICSOLVE_ERROR_HPP_
#define ICSOLVE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace icsolve {

// Thrown when a caller breaks an operation's precondition (a programming
// error, not a property of the input problem).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace icsolve

#endif  // ICSOLVE_ERROR_HPP_
