#pragma once

#include <stdexcept>
#include <string>

namespace divcor {

// Exit-code taxonomy used by the CLI: usage errors -> 2, resource/precision -> 3.

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured budget (memory, estimated ops).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified tail/rounding bound could not be met at the configured truncation.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Series inversion/division hit a non-invertible leading coefficient.
struct singularity_error : std::runtime_error {
    explicit singularity_error(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient outside the tracked validity window was requested.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

struct oracle_failure : std::runtime_error {
    explicit oracle_failure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace divcor
