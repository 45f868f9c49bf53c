#pragma once

#include <stdexcept>
#include <string>

namespace tautdrg {

// Malformed input text, bad parameters, unknown generator families.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The input graph does not satisfy the hypotheses (connected, distance-regular,
// bipartite, D >= 4, k >= 3).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proven identity failed numerically. Always an implementation bug or a
// tolerance problem, never a property of the input.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tautdrg
