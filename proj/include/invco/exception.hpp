// invco - cosets of closed inverse subsemigroups
//
// Error types shared by every module. Usage errors are caller mistakes (bad
// ids, unknown letters), resource errors are size guards, and construction
// errors carry the reasons an input table or map was rejected.

#ifndef INVCO_EXCEPTION_HPP_
#define INVCO_EXCEPTION_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invco {

  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ConstructionError : public std::runtime_error {
   public:
    explicit ConstructionError(std::string const&      what,
                               std::vector<std::string> reasons = {})
        : std::runtime_error(what), _reasons(std::move(reasons)) {}

    std::vector<std::string> const& reasons() const noexcept {
      return _reasons;
    }

   private:
    std::vector<std::string> _reasons;
  };

  // Thrown when an internal cross-check fails; signals a bug, not bad input.
  class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace invco

#endif  // INVCO_EXCEPTION_HPP_
