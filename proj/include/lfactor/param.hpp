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

#ifndef LFACTOR_PARAM_HPP
#define LFACTOR_PARAM_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lfactor
{

/// Langlands parameter of a generic discrete series supported on tau and sigma,
/// encoded by r_1 > r_2 > ... > r_t >= -1 (same parity, t even).
struct DiscreteSeriesParam {
    std::vector<int> r;
    // False encodes the rank-zero base group (n0 = 0); the tau x sigma factor then carries
    // the group-dependent degenerate meaning and r must be empty.
    bool sigma_present = true;

    friend bool operator==(const DiscreteSeriesParam &, const DiscreteSeriesParam &) = default;
};

enum class ParamClause { strictly_decreasing, same_parity, lower_bound, even_length, sigma_absent };

inline const char *clause_name(ParamClause c) noexcept
{
    switch (c) {
        case ParamClause::strictly_decreasing:
            return "strict-decrease";
        case ParamClause::same_parity:
            return "parity";
        case ParamClause::lower_bound:
            return "lower-bound";
        case ParamClause::even_length:
            return "t-odd";
        case ParamClause::sigma_absent:
            return "sigma-absent";
    }
    return "unknown";
}

struct ParamViolation {
    ParamClause clause;
    std::string message;
};

/// Returns the first violated clause, or nothing when the parameter is valid.
inline std::optional<ParamViolation> validate_param(const DiscreteSeriesParam &p)
{
    const auto &r = p.r;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (!(r[i - 1] > r[i])) {
            return ParamViolation{ParamClause::strictly_decreasing,
                                  "r must be strictly decreasing (r_" + std::to_string(i) + " = "
                                      + std::to_string(r[i - 1]) + ", r_" + std::to_string(i + 1) + " = "
                                      + std::to_string(r[i]) + ")"};
        }
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
        if ((r[i] - r[0]) % 2 != 0) {
            return ParamViolation{ParamClause::same_parity, "all r_i must share the same parity ("
                                                                + std::to_string(r[0]) + " vs "
                                                                + std::to_string(r[i]) + ")"};
        }
    }
    if (!r.empty() && r.back() < -1) {
        return ParamViolation{ParamClause::lower_bound, "r_t must be >= -1 (got " + std::to_string(r.back()) + ")"};
    }
    if (r.size() % 2 != 0) {
        return ParamViolation{ParamClause::even_length,
                              "the number of segments t must be even (t = " + std::to_string(r.size()) + ")"};
    }
    if (!p.sigma_present && !r.empty()) {
        return ParamViolation{ParamClause::sigma_absent, "a parameter without sigma must have no segments"};
    }
    return std::nullopt;
}

inline void require_valid(const DiscreteSeriesParam &p)
{
    if (auto v = validate_param(p)) {
        throw std::invalid_argument("invalid discrete series parameter: " + v->message);
    }
}

/// Parses "5,1" or "" (the empty parameter). Whitespace is ignored.
inline DiscreteSeriesParam parse_param(std::string_view text)
{
    DiscreteSeriesParam p;
    std::string cleaned;
    for (char ch : text) {
        if (ch != ' ' && ch != '(' && ch != ')') {
            cleaned += ch;
        }
    }
    if (cleaned.empty()) {
        return p;
    }
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("malformed parameter entry '" + item + "'");
        }
        p.r.push_back(v);
    }
    return p;
}

inline std::string param_text(const DiscreteSeriesParam &p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.r.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(p.r[i]);
    }
    return out + ")";
}

} // namespace lfactor

#endif // LFACTOR_PARAM_HPP
