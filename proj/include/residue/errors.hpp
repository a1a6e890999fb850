#pragma once

#include <stdexcept>
#include <string>

namespace parshin {

// Exit-code mapping used by the CLI:
//   2 parse error, 3 unsupported extension, 4 precision exhaustion,
//   5 residue-theorem identity violated.

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

// A point or branch would need a nested field extension (tower depth > 1).
struct UnsupportedExtension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series window was too small to decide something. Callers that own a
// PrecisionBudget catch this and escalate; it is not a math error.
struct PrecisionLoss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Budget escalated maxEscalations times and the computation still failed.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace parshin
