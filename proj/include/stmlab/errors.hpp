#pragma once

#include <stdexcept>
#include <string>

namespace stm {

// A computation contradicted one of the structural claims the workbench
// verifies (e.g. a straightening target outside the straight-basis span,
// or a leading-monomial collision).  These are findings, not crashes:
// callers that assemble reports catch them and record the message.
struct TheoremViolation : std::runtime_error {
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

// A randomized rank probe did not stabilize when the sample count was
// doubled; rerun with a different seed.
struct UnstableSample : std::runtime_error {
    explicit UnstableSample(const std::string& what) : std::runtime_error(what) {}
};

// The fiber product over an empty intersection (v is not Bruhat-below w).
struct EmptyFiber : std::runtime_error {
    explicit EmptyFiber(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stm
