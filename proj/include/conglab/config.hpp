#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conglab {

// Truncation ran out: an operation would produce a series with no valid
// coefficients, or a congruence check needs coefficients past the precision.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A table or sieve would exceed the configured entry cap.
class MemoryCapError : public std::runtime_error {
public:
    explicit MemoryCapError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed QS1 text (bad header, coefficient out of range, bad exponents).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Maximum number of 64-bit table entries a single allocation may use.
// Default 10^7; the CONGRUENCE_LAB_MEM_CAP environment variable overrides it.
std::uint64_t memory_cap_entries();

// Throws MemoryCapError if `entries` exceeds the cap.
void check_memory_cap(std::uint64_t entries, const char* what);

} // namespace conglab
