#pragma once

#include <stdexcept>
#include <string>

namespace modeq {

// Bad or inconsistent input data (file grammar, cross-checks, curve shape).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure inside the modular-equation pipeline; carries the step label (a)-(h).
struct PipelineError : std::runtime_error {
    std::string step;
    PipelineError(std::string step_label, const std::string& msg)
        : std::runtime_error("step (" + step_label + "): " + msg), step(std::move(step_label)) {}
};

// More than one resultant factor passes the CM-splitting test.
struct AmbiguityError : PipelineError {
    AmbiguityError(std::string step_label, const std::string& msg)
        : PipelineError(std::move(step_label), msg) {}
};

}  // namespace modeq
