#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace loopwitt {

/// Domain error with a stable machine-readable code. The CLI maps `code()`
/// straight into its JSON error objects, so codes are part of the public
/// surface and must not change casually.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* invalid_field = "invalid_field";
inline constexpr const char* zero_element = "zero_element";
inline constexpr const char* field_mismatch = "field_mismatch";
inline constexpr const char* arity_mismatch = "arity_mismatch";
inline constexpr const char* zero_polynomial = "zero_polynomial";
inline constexpr const char* zero_denominator = "zero_denominator";
inline constexpr const char* non_unit_inverse = "non_unit_inverse";
inline constexpr const char* search_space_too_large = "search_space_too_large";
inline constexpr const char* degenerate_form = "degenerate_form";
inline constexpr const char* level_out_of_range = "level_out_of_range";
inline constexpr const char* ambient_mismatch = "ambient_mismatch";
inline constexpr const char* ambient_too_large = "ambient_too_large";
inline constexpr const char* bad_exponent = "bad_exponent";
inline constexpr const char* non_split_data = "non_split_data";
inline constexpr const char* not_a_cocycle = "not_a_cocycle";
inline constexpr const char* syntax_error = "syntax_error";
inline constexpr const char* out_of_range_literal = "out_of_range_literal";
inline constexpr const char* unknown_variable = "unknown_variable";
inline constexpr const char* duplicate_subset = "duplicate_subset";
inline constexpr const char* bad_input = "bad_input";
} // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

} // namespace loopwitt
