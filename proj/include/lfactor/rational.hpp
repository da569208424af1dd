// Copyright 2026 The lfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LFACTOR_RATIONAL_HPP
#define LFACTOR_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace lfactor
{

/// Exact rational shift. Always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1)
{
    return Rational(num, den);
}

inline Rational half(std::int64_t num)
{
    return Rational(num, 2);
}

inline Rational quarter(std::int64_t num)
{
    return Rational(num, 4);
}

inline bool is_integer(const Rational &r)
{
    return r.denominator() == 1;
}

/// Serialises as "p/q", the form used in every machine-readable report.
inline std::string to_pq(const Rational &r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Compact human form: "3", "-1/2".
inline std::string to_short(const Rational &r)
{
    if (is_integer(r)) {
        return std::to_string(r.numerator());
    }
    return to_pq(r);
}

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text)
{
    auto parse_int = [](std::string_view s) -> std::int64_t {
        if (s.empty()) {
            throw std::invalid_argument("empty integer");
        }
        std::size_t pos = 0;
        const std::string owned(s);
        const long long v = std::stoll(owned, &pos);
        if (pos != owned.size()) {
            throw std::invalid_argument("trailing characters in integer '" + owned + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace lfactor

#endif // LFACTOR_RATIONAL_HPP
