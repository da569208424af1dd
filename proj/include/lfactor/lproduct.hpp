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

#ifndef LFACTOR_LPRODUCT_HPP
#define LFACTOR_LPRODUCT_HPP

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "kernel.hpp"
#include "rational.hpp"

namespace lfactor
{

/// One formal symbol L(s_coeff * s + shift, kernel).
///
/// Identity is structural: L(2s, K) and L(s, K) are different symbols even where their
/// loci meet. A negative s_coeff only arises from reflecting s to -s.
class LFactor
{
public:
    LFactor(int s_coeff, Rational shift, Kernel kernel)
        : m_s_coeff(s_coeff), m_shift(shift), m_kernel(canonical(std::move(kernel)))
    {
        if (s_coeff == 0) {
            throw std::invalid_argument("an L-factor needs a nonzero coefficient of s");
        }
    }

    int s_coeff() const noexcept
    {
        return m_s_coeff;
    }
    const Rational &shift() const noexcept
    {
        return m_shift;
    }
    const Kernel &kernel() const noexcept
    {
        return m_kernel;
    }
    bool atomic() const noexcept
    {
        return is_atomic(m_kernel);
    }

    /// Real part of s on the line Re(s_coeff * s + shift) = 0.
    Rational locus() const
    {
        return -m_shift / Rational(m_s_coeff);
    }

    LFactor with_shift(Rational shift) const
    {
        return LFactor(m_s_coeff, shift, m_kernel);
    }
    LFactor reflected() const
    {
        return LFactor(-m_s_coeff, m_shift, m_kernel);
    }

    friend bool operator==(const LFactor &x, const LFactor &y)
    {
        return x.m_s_coeff == y.m_s_coeff && x.m_shift == y.m_shift && x.m_kernel == y.m_kernel;
    }
    friend bool operator<(const LFactor &x, const LFactor &y)
    {
        if (x.m_kernel != y.m_kernel) {
            return x.m_kernel < y.m_kernel;
        }
        if (x.m_s_coeff != y.m_s_coeff) {
            return x.m_s_coeff > y.m_s_coeff;
        }
        return x.m_shift > y.m_shift;
    }

private:
    int m_s_coeff;
    Rational m_shift;
    Kernel m_kernel;
};

/// "2s-1", "s+1/2", "-2s+3".
inline std::string argument_text(int s_coeff, const Rational &shift)
{
    std::string out;
    if (s_coeff == 1) {
        out = "s";
    } else if (s_coeff == -1) {
        out = "-s";
    } else {
        out = std::to_string(s_coeff) + "s";
    }
    if (shift > 0) {
        out += "+" + to_short(shift);
    } else if (shift < 0) {
        out += "-" + to_short(-shift);
    }
    return out;
}

inline std::string factor_text(const LFactor &f)
{
    return "L(" + argument_text(f.s_coeff(), f.shift()) + ", " + kernel_text(f.kernel()) + ")";
}

/// Exponent-weighted multiset of L-factors: a formal rational function in the factors.
/// Zero exponents are never stored.
class LProduct
{
public:
    using map_type = std::map<LFactor, int>;
    using const_iterator = map_type::const_iterator;

    LProduct() = default;
    explicit LProduct(const LFactor &f, int exponent = 1)
    {
        add(f, exponent);
    }

    void add(const LFactor &f, int exponent = 1)
    {
        if (exponent == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(f, exponent);
        if (!inserted) {
            it->second += exponent;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    int exponent(const LFactor &f) const
    {
        const auto it = m_terms.find(f);
        return it == m_terms.end() ? 0 : it->second;
    }

    bool empty() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    const_iterator begin() const noexcept
    {
        return m_terms.begin();
    }
    const_iterator end() const noexcept
    {
        return m_terms.end();
    }
    const map_type &terms() const noexcept
    {
        return m_terms;
    }

    /// Sum of absolute exponents.
    int degree() const noexcept
    {
        int d = 0;
        for (const auto &[f, e] : m_terms) {
            d += std::abs(e);
        }
        return d;
    }

    bool is_atomic() const noexcept
    {
        for (const auto &[f, e] : m_terms) {
            if (!f.atomic()) {
                return false;
            }
        }
        return true;
    }

    LProduct &operator*=(const LProduct &other)
    {
        for (const auto &[f, e] : other.m_terms) {
            add(f, e);
        }
        return *this;
    }
    LProduct &operator/=(const LProduct &other)
    {
        for (const auto &[f, e] : other.m_terms) {
            add(f, -e);
        }
        return *this;
    }

    friend LProduct operator*(LProduct x, const LProduct &y)
    {
        x *= y;
        return x;
    }
    friend LProduct operator/(LProduct x, const LProduct &y)
    {
        x /= y;
        return x;
    }
    friend bool operator==(const LProduct &x, const LProduct &y)
    {
        return x.m_terms == y.m_terms;
    }

private:
    map_type m_terms;
};

inline LProduct single(int s_coeff, Rational shift, Kernel kernel, int exponent = 1)
{
    return LProduct(LFactor(s_coeff, shift, std::move(kernel)), exponent);
}

inline LProduct product_mul(const LProduct &x, const LProduct &y)
{
    return x * y;
}

inline LProduct inverse(const LProduct &p)
{
    return LProduct() / p;
}

inline LProduct power(const LProduct &p, int n)
{
    LProduct out;
    for (const auto &[f, e] : p) {
        out.add(f, e * n);
    }
    return out;
}

/// Adds delta to every shift: L(As + B) -> L(As + B + delta).
inline LProduct translate(const LProduct &p, const Rational &delta)
{
    LProduct out;
    for (const auto &[f, e] : p) {
        out.add(f.with_shift(f.shift() + delta), e);
    }
    return out;
}

/// Evaluates at s + delta: L(As + B) -> L(As + B + A * delta).
inline LProduct substitute(const LProduct &p, const Rational &delta)
{
    LProduct out;
    for (const auto &[f, e] : p) {
        out.add(f.with_shift(f.shift() + Rational(f.s_coeff()) * delta), e);
    }
    return out;
}

/// p(s) -> p(-s).
inline LProduct reflect(const LProduct &p)
{
    LProduct out;
    for (const auto &[f, e] : p) {
        out.add(f.reflected(), e);
    }
    return out;
}

/// "L(2s-1, tau, rho) * L(s, tau x sigma)^-1"; the empty product renders as "1".
inline std::string product_text(const LProduct &p)
{
    if (p.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &[f, e] : p) {
        if (!out.empty()) {
            out += " * ";
        }
        out += factor_text(f);
        if (e != 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace lfactor

#endif // LFACTOR_LPRODUCT_HPP
