#include "treeline/error.hpp"

namespace treeline {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::id_out_of_range: return "id_out_of_range";
        case ErrorKind::wrong_edge_count: return "wrong_edge_count";
        case ErrorKind::cycle: return "cycle";
        case ErrorKind::disconnected: return "disconnected";
        case ErrorKind::root_out_of_range: return "root_out_of_range";
        case ErrorKind::size_mismatch: return "size_mismatch";
        case ErrorKind::not_a_root_child: return "not_a_root_child";
        case ErrorKind::not_an_edge: return "not_an_edge";
        case ErrorKind::undefined_value: return "undefined_value";
        case ErrorKind::enumeration_limit: return "enumeration_limit";
        case ErrorKind::parse_error: return "parse_error";
        case ErrorKind::io_error: return "io_error";
        case ErrorKind::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

}  // namespace treeline
