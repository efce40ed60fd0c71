#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace colemb
{
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// "p/q" in lowest terms, or "p" when the denominator is one.
    auto to_string(const Rational & value) -> std::string;

    auto floor_to_integer(const Rational & value) -> Integer;

    /// n (n-1) ... (n-count+1)
    auto falling_factorial(std::int64_t n, std::int64_t count) -> Integer;

    auto factorial(std::int64_t n) -> Integer;
}
