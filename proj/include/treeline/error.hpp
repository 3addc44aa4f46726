#pragma once

#include <stdexcept>
#include <string>

namespace treeline {

// Every precondition violation in the library throws Error with a kind that
// tests can match on; the message is for humans and not part of the contract.
enum class ErrorKind {
    id_out_of_range,
    wrong_edge_count,
    cycle,
    disconnected,
    root_out_of_range,
    size_mismatch,
    not_a_root_child,
    not_an_edge,
    undefined_value,
    enumeration_limit,
    parse_error,
    io_error,
    invalid_argument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace treeline
