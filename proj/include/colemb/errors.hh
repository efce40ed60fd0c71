#pragma once

#include <stdexcept>
#include <string>

namespace colemb
{
    enum class ErrorCode
    {
        invalid_shape,
        invalid_argument,
        not_latin,
        part_overflow,
        too_large,
        degenerate_dims,
        not_prime,
        unsupported_parameters,
        divisibility,
        parse_error
    };

    auto error_code_name(ErrorCode code) -> const char *;

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string & message) :
            std::runtime_error(std::string(error_code_name(code)) + ": " + message),
            _code(code)
        {
        }

        auto code() const -> ErrorCode { return _code; }

    private:
        ErrorCode _code;
    };
}
