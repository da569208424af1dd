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

#ifndef LFACTOR_GROUP_HPP
#define LFACTOR_GROUP_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lfactor
{

/// Quasi-split classical families G_n.
enum class GroupType { u_even, u_odd, so_odd, sp, so_even };

inline constexpr std::array<GroupType, 5> all_groups = {GroupType::u_even, GroupType::u_odd, GroupType::so_odd,
                                                        GroupType::sp, GroupType::so_even};

inline const char *group_name(GroupType g) noexcept
{
    switch (g) {
        case GroupType::u_even:
            return "u-even";
        case GroupType::u_odd:
            return "u-odd";
        case GroupType::so_odd:
            return "so-odd";
        case GroupType::sp:
            return "sp";
        case GroupType::so_even:
            return "so-even";
    }
    return "unknown";
}

inline GroupType parse_group(std::string_view name)
{
    for (GroupType g : all_groups) {
        if (name == group_name(g)) {
            return g;
        }
    }
    throw std::invalid_argument("unknown group '" + std::string(name)
                                + "' (expected u-even, u-odd, so-odd, sp or so-even)");
}

/// Concrete representation behind rho.
inline const char *rho_label(GroupType g) noexcept
{
    switch (g) {
        case GroupType::u_even:
            return "Asai";
        case GroupType::u_odd:
            return "Asai x chi";
        case GroupType::so_odd:
            return "Sym^2";
        case GroupType::sp:
        case GroupType::so_even:
            return "Wedge^2";
    }
    return "unknown";
}

/// Concrete representation behind rho^-.
inline const char *rho_minus_label(GroupType g) noexcept
{
    switch (g) {
        case GroupType::u_even:
            return "Asai x chi";
        case GroupType::u_odd:
            return "Asai";
        case GroupType::so_odd:
            return "Wedge^2";
        case GroupType::sp:
        case GroupType::so_even:
            return "Sym^2";
    }
    return "unknown";
}

/// Whether L(s, tau_a x sigma) reads as the standard L(s, tau_a) on the rank-zero base group.
/// Otherwise it reads as 1.
inline bool n0_standard_convention(GroupType g) noexcept
{
    return g == GroupType::sp || g == GroupType::u_odd;
}

inline const char *n0_meaning(GroupType g) noexcept
{
    return n0_standard_convention(g) ? "standard L(s, tau_a)" : "1";
}

} // namespace lfactor

#endif // LFACTOR_GROUP_HPP
