#include "expconv/polynomial.hpp"

namespace expconv {

Poly Poly::monomial(int degree, Complex coeff) {
    if (degree < 0) throw Error("monomial degree must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{});
    c.back() = coeff;
    Poly p{std::move(c)};
    return p;
}

Complex Poly::eval(Complex x) const {
    Complex v{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        d[j - 1] = coeffs_[j] * static_cast<double>(j);
    return Poly{std::move(d)};
}

Poly Poly::conjugated() const {
    std::vector<Complex> c(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = std::conj(coeffs_[j]);
    return Poly{std::move(c)};
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
}

Poly& Poly::operator*=(Complex c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly{std::move(c)};
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

} // namespace expconv
