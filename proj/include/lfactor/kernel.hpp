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

#ifndef LFACTOR_KERNEL_HPP
#define LFACTOR_KERNEL_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lfactor
{

enum class Sign { plus, minus };

constexpr Sign opposite(Sign s) noexcept
{
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

inline const char *sign_name(Sign s) noexcept
{
    return s == Sign::plus ? "plus" : "minus";
}

namespace kernels
{

// Atomic kernels: the rank-one factors L(z, tau, rho), L(z, tau, rho^-), L(z, tau x sigma).
struct Rho {
    auto operator<=>(const Rho &) const = default;
};
struct RhoMinus {
    auto operator<=>(const RhoMinus &) const = default;
};
struct TauSigma {
    auto operator<=>(const TauSigma &) const = default;
};

// L(z, tau_a x tau_b). (1,1) is the plain tau x tau factor.
struct SteinbergTensor {
    int a = 1;
    int b = 1;
    auto operator<=>(const SteinbergTensor &) const = default;
};

// L(z, tau_a, rho) for plus, L(z, tau_a, rho^-) for minus.
struct TwistedExt {
    int a = 1;
    Sign sign = Sign::plus;
    auto operator<=>(const TwistedExt &) const = default;
};

// L(z, tau_a x tau_r) under the conventions r = 0 (empty) and r = -1 (inverse of r = 1).
// Canonical values only carry r in {0, -1}; r >= 1 becomes a SteinbergTensor.
struct TensorSegment {
    int a = 1;
    int r = 0;
    auto operator<=>(const TensorSegment &) const = default;
};

// L(z, tau_a x sigma_r) for the discrete series parameter r.
struct TensorDiscrete {
    int a = 1;
    std::vector<int> r;
    auto operator<=>(const TensorDiscrete &) const = default;
};

} // namespace kernels

using Kernel = std::variant<kernels::Rho, kernels::RhoMinus, kernels::TauSigma, kernels::SteinbergTensor,
                            kernels::TwistedExt, kernels::TensorSegment, kernels::TensorDiscrete>;

inline bool is_atomic(const Kernel &k) noexcept
{
    return std::holds_alternative<kernels::Rho>(k) || std::holds_alternative<kernels::RhoMinus>(k)
           || std::holds_alternative<kernels::TauSigma>(k);
}

inline Kernel twisted_atom(Sign s)
{
    if (s == Sign::plus) {
        return kernels::Rho{};
    }
    return kernels::RhoMinus{};
}

namespace detail
{

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace detail

/// Collapses the aliases tau x tau = (1,1), (1, +) = rho, (1, -) = rho^-, segment r >= 1,
/// and tau x sigma with an empty parameter. Rejects out-of-range indices.
inline Kernel canonical(const Kernel &k)
{
    using namespace kernels;
    return std::visit(detail::overloaded{
                          [](const TwistedExt &t) -> Kernel {
                              if (t.a < 1) {
                                  throw std::invalid_argument("twisted kernel needs a >= 1");
                              }
                              if (t.a == 1) {
                                  return twisted_atom(t.sign);
                              }
                              return t;
                          },
                          [](const SteinbergTensor &t) -> Kernel {
                              if (t.a < 1 || t.b < 1) {
                                  throw std::invalid_argument("tau_a x tau_b needs a, b >= 1");
                              }
                              return t;
                          },
                          [](const TensorSegment &t) -> Kernel {
                              if (t.a < 1 || t.r < -1) {
                                  throw std::invalid_argument("tau_a x tau_r needs a >= 1 and r >= -1");
                              }
                              if (t.r >= 1) {
                                  return SteinbergTensor{t.a, t.r};
                              }
                              return t;
                          },
                          [](const TensorDiscrete &t) -> Kernel {
                              if (t.a < 1) {
                                  throw std::invalid_argument("tau_a x sigma needs a >= 1");
                              }
                              if (t.a == 1 && t.r.empty()) {
                                  return TauSigma{};
                              }
                              return t;
                          },
                          [](const auto &atom) -> Kernel { return atom; },
                      },
                      k);
}

namespace detail
{

inline std::string tau_name(int a)
{
    return a == 1 ? std::string("tau") : "tau_" + std::to_string(a);
}

inline std::string join_ints(const std::vector<int> &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace detail

/// The representation part of a factor as it is written inside L(z, ...).
inline std::string kernel_text(const Kernel &k)
{
    using namespace kernels;
    return std::visit(detail::overloaded{
                          [](const Rho &) { return std::string("tau, rho"); },
                          [](const RhoMinus &) { return std::string("tau, rho-"); },
                          [](const TauSigma &) { return std::string("tau x sigma"); },
                          [](const SteinbergTensor &t) { return detail::tau_name(t.a) + " x " + detail::tau_name(t.b); },
                          [](const TwistedExt &t) {
                              return detail::tau_name(t.a) + (t.sign == Sign::plus ? ", rho" : ", rho-");
                          },
                          [](const TensorSegment &t) {
                              return detail::tau_name(t.a) + " x tau_" + std::to_string(t.r);
                          },
                          [](const TensorDiscrete &t) {
                              if (t.r.empty()) {
                                  return detail::tau_name(t.a) + " x sigma";
                              }
                              return detail::tau_name(t.a) + " x sigma(" + detail::join_ints(t.r) + ")";
                          },
                      },
                      k);
}

/// Stable identifier used in JSON reports.
inline std::string kernel_id(const Kernel &k)
{
    using namespace kernels;
    return std::visit(detail::overloaded{
                          [](const Rho &) { return std::string("rho"); },
                          [](const RhoMinus &) { return std::string("rho_minus"); },
                          [](const TauSigma &) { return std::string("tau_sigma"); },
                          [](const SteinbergTensor &t) {
                              if (t.a == 1 && t.b == 1) {
                                  return std::string("tau_tau");
                              }
                              return "steinberg_tensor(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
                          },
                          [](const TwistedExt &t) {
                              return "twisted(" + std::to_string(t.a) + "," + sign_name(t.sign) + ")";
                          },
                          [](const TensorSegment &t) {
                              return "segment(" + std::to_string(t.a) + "," + std::to_string(t.r) + ")";
                          },
                          [](const TensorDiscrete &t) {
                              return "discrete(" + std::to_string(t.a) + ";" + detail::join_ints(t.r) + ")";
                          },
                      },
                      k);
}

} // namespace lfactor

#endif // LFACTOR_KERNEL_HPP
