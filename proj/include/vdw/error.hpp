#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vdw
{
    enum class ErrorCode
    {
        not_prime,
        inconsistent_trace,
        scale_exceeded,
        column_overflow,
        initial_expectation_too_high,
        budget_exceeded,
        not_resolved,
        parse_error
    };

    [[nodiscard]] constexpr auto to_string(ErrorCode code) -> std::string_view
    {
        switch (code) {
            case ErrorCode::not_prime: return "not_prime";
            case ErrorCode::inconsistent_trace: return "inconsistent_trace";
            case ErrorCode::scale_exceeded: return "scale_exceeded";
            case ErrorCode::column_overflow: return "column_overflow";
            case ErrorCode::initial_expectation_too_high: return "initial_expectation_too_high";
            case ErrorCode::budget_exceeded: return "budget_exceeded";
            case ErrorCode::not_resolved: return "not_resolved";
            case ErrorCode::parse_error: return "parse_error";
        }
        return "unknown";
    }

    /// Domain failure with a stable machine-readable code. Precondition
    /// violations are reported as std::invalid_argument instead.
    class Error : public std::runtime_error
    {
        public:
            Error(ErrorCode code, const std::string & what) :
                std::runtime_error(what),
                _code(code)
            {
            }

            [[nodiscard]] auto code() const noexcept -> ErrorCode { return _code; }

        private:
            ErrorCode _code;
    };
}
