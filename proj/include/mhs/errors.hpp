#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mhs {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LoadError : public Error {
public:
    enum class Kind { empty_input, malformed_line, self_loop, duplicate_edge, disconnected };

    LoadError(Kind kind, int line, const std::string& msg) : Error(msg), kind(kind), line(line) {}

    Kind kind;
    int line;  // 1-based offending line; 0 when not line-specific
};

// Raised when labels cannot come from any halfspace (active/online/PAC paths);
// carries the witnessing vertex when one exists.
class NotRealizableError : public Error {
public:
    explicit NotRealizableError(const std::string& msg, std::optional<int> witness = std::nullopt)
        : Error(msg), witness(witness) {}

    std::optional<int> witness;
};

}  // namespace mhs
