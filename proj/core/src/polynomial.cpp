#include "tautdrg/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace tautdrg {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0.0)
        c_.pop_back();
}

double Polynomial::operator()(double x) const
{
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Vector Polynomial::apply(const Matrix& m, const Vector& v) const
{
    Vector r = Vector::Zero(v.size());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = m * r + *it * v;
    return r;
}

Matrix Polynomial::at(const Matrix& m) const
{
    const auto n = m.rows();
    Matrix r = Matrix::Zero(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = m * r;
        r.diagonal().array() += *it;
    }
    return r;
}

Polynomial Polynomial::times_lambda() const
{
    if (c_.empty())
        return {};
    std::vector<double> out(c_.size() + 1, 0.0);
    std::copy(c_.begin(), c_.end(), out.begin() + 1);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    std::vector<double> out(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(double s) const
{
    std::vector<double> out(c_);
    for (auto& x : out)
        x *= s;
    return Polynomial(std::move(out));
}

double Polynomial::distance(const Polynomial& o) const
{
    double worst = 0;
    const int top = std::max(degree(), o.degree());
    for (int i = 0; i <= top; ++i)
        worst = std::max(worst, std::abs(coeff(i) - o.coeff(i)));
    return worst;
}

}  // namespace tautdrg
