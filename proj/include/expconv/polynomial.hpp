#pragma once

#include <initializer_list>
#include <vector>

#include "expconv/scalar.hpp"

namespace expconv {

/// Dense complex polynomial, coefficients ascending, trailing zeros stripped.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, Complex coeff);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Complex coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs_.size())) ? coeffs_[j] : Complex{};
    }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex eval(Complex x) const;
    Poly derivative() const;
    Poly conjugated() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(Complex c);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(Poly a, Complex c) { a *= c; return a; }
    friend Poly operator*(Complex c, Poly a) { a *= c; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly&) const = default;

private:
    void trim();
    std::vector<Complex> coeffs_;
};

} // namespace expconv
