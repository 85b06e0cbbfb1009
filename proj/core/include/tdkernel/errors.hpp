#pragma once

#include <stdexcept>
#include <string>

namespace tdk {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant of a type was violated (bad edge, hyperedge outside the
// modulator, treedepth certificate too tall, ...). The message names the invariant.
struct invariant_error : error {
    explicit invariant_error(const std::string& msg) : error(msg) {}
};

// An operation was called on inputs it does not accept (rules still applicable
// before lift, R nonempty before the gadget reduction, isolated vertex, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// An exact search exceeded its node budget or a hard structural size limit.
struct resource_limit_error : error {
    explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// Malformed instance text; line is 1-based.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& msg)
        : error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace tdk
