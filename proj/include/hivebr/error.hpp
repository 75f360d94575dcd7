#pragma once

#include <stdexcept>
#include <string>

namespace hivebr {

// Failure conditions surfaced by the library. Each value corresponds to a
// violated precondition or invariant of one of the combinatorial maps.
enum class errc {
    not_weakly_decreasing,
    negative_part,
    length_exceeded,
    shape_mismatch,
    row_not_weakly_increasing,
    column_not_strictly_increasing,
    not_littlewood_richardson,
    not_dominant,
    invalid_content,
    alphabet_exceeded,
    shape_too_long,
    shape_not_contained,
    invalid_gt,
    instance_invalid,
    not_in_domain,
    unknown_kind,
    invalid_argument,
    internal,
};

const char* to_string(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace hivebr
