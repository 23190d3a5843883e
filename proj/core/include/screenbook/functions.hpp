#pragma once

#include <memory>
#include <string>
#include <vector>

namespace screenbook {

// One-dimensional smooth function with two derivatives. Families are immutable
// after construction and safe to share across threads.
class SmoothFn {
  public:
    virtual ~SmoothFn() = default;
    virtual double value(double x) const = 0;
    virtual double deriv(double x) const = 0;
    virtual double deriv2(double x) const = 0;
    virtual std::string describe() const = 0;
};

using SmoothFnPtr = std::shared_ptr<const SmoothFn>;

// p(x) = sum_i coeffs[i] * x^i
class Polynomial final : public SmoothFn {
  public:
    explicit Polynomial(std::vector<double> coeffs);
    double value(double x) const override;
    double deriv(double x) const override;
    double deriv2(double x) const override;
    std::string describe() const override;
    const std::vector<double>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  private:
    std::vector<double> coeffs_;
};

SmoothFnPtr make_polynomial(std::vector<double> coeffs);

// C(q) = linear*q + quadratic*q^2, the workhorse cost family.
SmoothFnPtr make_linear_quadratic(double linear, double quadratic);

}  // namespace screenbook
