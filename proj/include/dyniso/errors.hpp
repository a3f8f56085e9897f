#ifndef DYNISO_ERRORS_HPP
#define DYNISO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyniso {

// A query named a symbol outside the maintained universe.
struct UnknownElementError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its state contract (e.g. embedding
// queries while the graph is not 3-connected planar).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A maintained invariant failed after an update. Never repaired silently.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A brute-force reference routine was entered while an incremental update
// was in flight.
struct OracleForbidden : std::logic_error {
    using std::logic_error::logic_error;
};

// An update request that must be refused (duplicate insert, missing delete,
// self loop). The store is untouched when this is thrown.
struct RequestRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dyniso

#endif
