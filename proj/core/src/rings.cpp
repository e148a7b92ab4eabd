#include <algorithm>

#include "bezout/integer_ring.hpp"
#include "bezout/polynomial.hpp"
#include "bezout/rational_ring.hpp"

namespace bezout {

std::optional<RingKind> parse_ring_tag(std::string_view tag) noexcept {
    if (tag == "int")
        return RingKind::integers;
    if (tag == "rat")
        return RingKind::rationals;
    if (tag == "polyrat")
        return RingKind::polynomials;
    return std::nullopt;
}

// ---------------------------------------------------------------- integers

DivMod<mpz_class> IntegerRing::divmod(const mpz_class& a, const mpz_class& b) {
    if (sgn(b) == 0)
        raise(Errc::division_by_zero, "division by zero");
    mpz_class q, r;
    mpz_class mag = abs(b);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), mag.get_mpz_t());
    if (sgn(b) < 0)
        q = -q;
    return {std::move(q), std::move(r)};
}

std::optional<mpz_class> IntegerRing::try_div(const mpz_class& a, const mpz_class& b) {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

namespace {

bool is_decimal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

mpz_class IntegerRing::from_text(std::string_view text) {
    if (!is_decimal(text))
        raise(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s.front() == '+')
        s.erase(0, 1);
    return mpz_class(s, 10);
}

mpq_class RationalRing::from_text(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return mpq_class(IntegerRing::from_text(text));
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den) || den.front() == '-' || den.front() == '+')
        raise(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
    mpz_class d = IntegerRing::from_text(den);
    if (sgn(d) == 0)
        raise(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
    mpq_class q(IntegerRing::from_text(num), d);
    q.canonicalize();
    return q;
}

// ------------------------------------------------------------- polynomials

Poly::Poly(long c) {
    if (c != 0)
        coeffs_.emplace_back(c);
}

Poly::Poly(const mpq_class& c) {
    if (sgn(c) != 0)
        coeffs_.push_back(c);
}

Poly::Poly(std::initializer_list<mpq_class> ascending) : coeffs_(ascending) { trim(); }

Poly::Poly(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::monomial(const mpq_class& c, std::size_t k) {
    if (sgn(c) == 0)
        return Poly();
    std::vector<mpq_class> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

mpq_class Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const mpq_class& c) const {
    if (sgn(c) == 0)
        return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

DivMod<Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero())
        raise(Errc::division_by_zero, "polynomial division by zero");
    if (degree() < divisor.degree())
        return {Poly(), *this};
    std::vector<mpq_class> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<mpq_class> quot(rem.size() - dd);
    const mpq_class lead_inv = mpq_class(1) / divisor.lead();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (sgn(rem[k]) == 0)
            continue;
        mpq_class c = rem[k] * lead_inv;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] -= c * divisor.coeffs_[j];
        quot[k - dd] = std::move(c);
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_text() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpq_class& c = coeffs_[k];
        if (sgn(c) == 0)
            continue;
        mpq_class mag = abs(c);
        if (!out.empty())
            out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0)
            out += "-";
        bool unit_mag = (mag == 1);
        if (k == 0 || !unit_mag)
            out += mag.get_str();
        if (k > 0) {
            if (!unit_mag)
                out += "*";
            out += "x";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::optional<Poly> PolyRing::try_div(const Poly& a, const Poly& b) {
    if (b.is_zero())
        return std::nullopt;
    auto [q, r] = a.divmod(b);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

static_assert(BezoutRing<IntegerRing>);
static_assert(BezoutRing<RationalRing>);
static_assert(BezoutRing<PolyRing>);

} // namespace bezout
