#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace pbwlab {

/// Univariate polynomial in q with exact integer coefficients.
/// Stored densely by power of q, with no trailing zeros; the zero polynomial
/// has an empty coefficient list.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(BigInt constant);
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial monomial(BigInt coeff, std::size_t power);

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    BigInt coeff(std::size_t power) const { return power < c_.size() ? c_[power] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
    friend QPolynomial operator*(QPolynomial lhs, const QPolynomial& rhs) { return lhs *= rhs; }

    /// Multiply by q^power.
    QPolynomial& shift(std::size_t power);

    BigInt eval(const BigInt& q) const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Human-readable form such as "1 + 2*q + 3*q^2", "0" when zero.
    std::string str() const;

private:
    void trim();

    std::vector<BigInt> c_;
};

}  // namespace pbwlab
