#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "bezout/ring.hpp"

namespace bezout {

/// Univariate polynomial with rational coefficients, stored in ascending
/// order. The leading coefficient is never zero; the zero polynomial has no
/// coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const mpq_class& c);
    Poly(std::initializer_list<mpq_class> ascending);
    explicit Poly(std::vector<mpq_class> ascending);

    /// The monomial c * x^k.
    static Poly monomial(const mpq_class& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const mpq_class& lead() const { return coeffs_.back(); }
    mpq_class coeff(std::size_t k) const;
    std::span<const mpq_class> coeffs() const noexcept { return coeffs_; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly scaled(const mpq_class& c) const;

    /// Long division by a nonzero divisor: *this = q * divisor + r, deg r < deg divisor.
    DivMod<Poly> divmod(const Poly& divisor) const;

    std::string to_text() const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Q[x] as a Euclidean (hence Bezout) domain. Canonical associates are monic.
struct PolyRing {
    using value_type = Poly;
    static constexpr RingKind kind = RingKind::polynomials;

    static value_type zero() { return Poly(); }
    static value_type one() { return Poly(1); }
    static bool is_zero(const value_type& a) { return a.is_zero(); }
    static bool is_unit(const value_type& a) { return a.degree() == 0; }
    static value_type unit_inverse(const value_type& u) { return Poly(mpq_class(1) / u.lead()); }

    static Associate<value_type> canonicalize(const value_type& a) {
        if (a.is_zero())
            return {one(), zero()};
        return {Poly(a.lead()), a.scaled(mpq_class(1) / a.lead())};
    }

    static DivMod<value_type> divmod(const value_type& a, const value_type& b) {
        return a.divmod(b);
    }

    static std::optional<value_type> try_div(const value_type& a, const value_type& b);

    static bool size_less(const value_type& a, const value_type& b) {
        return a.degree() < b.degree();
    }

    static std::string to_text(const value_type& a) { return a.to_text(); }
};

} // namespace bezout
