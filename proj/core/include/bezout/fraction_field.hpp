#pragma once

#include <string>

#include <gmpxx.h>

#include "bezout/polynomial.hpp"

namespace bezout {

/// Element of Q(x) as a reduced quotient num/den with den monic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_polynomial() const noexcept { return den_ == Poly(1); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Division by zero raises division_by_zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const { return RationalFunction(-num_, den_, reduced{}); }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string to_text() const;

private:
    struct reduced {};
    RationalFunction(Poly num, Poly den, reduced) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

} // namespace bezout
