#include "qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pbwlab {

QPolynomial::QPolynomial(BigInt constant) {
    if (constant != 0)
        c_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    trim();
}

QPolynomial QPolynomial::monomial(BigInt coeff, std::size_t power) {
    QPolynomial p;
    if (coeff != 0) {
        p.c_.assign(power + 1, BigInt(0));
        p.c_[power] = std::move(coeff);
    }
    return p;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (c_.size() < rhs.c_.size())
        c_.resize(rhs.c_.size(), BigInt(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k)
        c_[k] += rhs.c_[k];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> prod(c_.size() + rhs.c_.size() - 1, BigInt(0));
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < rhs.c_.size(); ++b)
            prod[a + b] += c_[a] * rhs.c_[b];
    c_ = std::move(prod);
    trim();
    return *this;
}

QPolynomial& QPolynomial::shift(std::size_t power) {
    if (!is_zero() && power > 0)
        c_.insert(c_.begin(), power, BigInt(0));
    return *this;
}

BigInt QPolynomial::eval(const BigInt& q) const {
    BigInt value = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        value = value * q + c_[k];
    return value;
}

std::string QPolynomial::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        if (!first)
            out << (c_[k] < 0 ? " - " : " + ");
        else if (c_[k] < 0)
            out << "-";
        first = false;
        BigInt a = abs(c_[k]);
        if (k == 0)
            out << a.str();
        else {
            if (a != 1)
                out << a.str() << "*";
            out << "q";
            if (k > 1)
                out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace pbwlab
