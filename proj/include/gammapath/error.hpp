#ifndef GAMMAPATH_ERROR_HPP_
#define GAMMAPATH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gammapath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input, violated precondition on caller-supplied data, mixed groups.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A caller-asserted structural precondition (3-connectivity, Γ-bipartiteness) does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// An exhaustive search could not complete within the configured limits.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// A proven guarantee was violated; always an implementation bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Shift propagation along a spanning tree was inconsistent at an edge.
class NormalizationFailed : public InternalError {
 public:
  NormalizationFailed(const std::string& what, long long edge_id)
      : InternalError(what), edge_id_(edge_id) {}
  long long edge_id() const noexcept { return edge_id_; }

 private:
  long long edge_id_;
};

}  // namespace gammapath

#endif  // GAMMAPATH_ERROR_HPP_
