#pragma once

#include <initializer_list>
#include <vector>

#include "tautdrg/spectral.hpp"

namespace tautdrg {

// Dense real polynomial in the monomial basis, coefficient of lambda^i at [i].
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);
    static Polynomial constant(double c) { return Polynomial({c}); }
    static Polynomial lambda() { return Polynomial({0.0, 1.0}); }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int i) const { return (i < 0 || i > degree()) ? 0.0 : c_[i]; }
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }
    const std::vector<double>& coeffs() const { return c_; }

    double operator()(double x) const;
    // p(M) v by Horner, without forming p(M).
    Vector apply(const Matrix& m, const Vector& v) const;
    Matrix at(const Matrix& m) const;

    Polynomial times_lambda() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(double s) const;
    Polynomial operator/(double s) const { return *this * (1.0 / s); }
    friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }

    // max |coefficient difference|
    double distance(const Polynomial& o) const;

private:
    void trim();
    std::vector<double> c_;
};

}  // namespace tautdrg
