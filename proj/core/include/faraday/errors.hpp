#pragma once

#include <stdexcept>
#include <string>

namespace faraday {

// Base class for all library errors.
struct SimError : std::runtime_error {
    explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

// A subsystem label appears twice in a register.
struct DuplicateSubsystem : SimError {
    using SimError::SimError;
};

// An operation addressed a label that is not in the state's register.
struct UnknownSubsystem : SimError {
    using SimError::SimError;
};

// Two states do not share the same register (after canonical ordering).
struct RegisterMismatch : SimError {
    using SimError::SimError;
};

// A state with zero norm was asked to produce probabilities or a direction.
struct DegenerateState : SimError {
    using SimError::SimError;
};

// The reflection-coefficient denominator vanished (gamma = 0 conspiracies).
struct SingularDenominator : SimError {
    using SimError::SimError;
};

// Cavity parameters violate their invariants (kappa > 0, gamma >= 0, ...).
struct InvalidParams : SimError {
    using SimError::SimError;
};

// A measurement-outcome pattern that no correction table row covers.
struct UnknownOutcome : SimError {
    using SimError::SimError;
};

// A sweep specification with nothing to evaluate.
struct EmptySweep : SimError {
    using SimError::SimError;
};

// A sweep axis or other run-description field is out of range.
struct InvalidSpec : SimError {
    using SimError::SimError;
};

}  // namespace faraday
