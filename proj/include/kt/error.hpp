#pragma once

#include <stdexcept>
#include <string>

namespace kt {

/// Malformed input: non-homogeneous data, a non-complex, a map whose squares
/// do not commute, an ambient mismatch. Carries a location string for the CLI.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what, std::string where = {})
        : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A bounded search (n, u, e, stabilization, resolution length) ran out of room.
class SearchCapExhausted : public std::runtime_error {
public:
    SearchCapExhausted(std::string stage, const std::string& detail)
        : std::runtime_error(stage + ": " + detail), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

} // namespace kt
