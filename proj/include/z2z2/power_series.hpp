#pragma once

#include "z2z2/scalar.hpp"

#include <vector>

namespace z2z2 {

/// Truncated formal power series with exact coefficients.  All operations
/// are coefficient-wise exact up to the truncation order; division requires
/// an invertible constant term.
class PowerSeries {
  public:
    static constexpr int kDefaultOrder = 16;

    PowerSeries(Field f, int order) : f_(f), c_(order + 1, Scalar::zero(f)) {
        if (order < 0) throw Error("negative series order");
    }
    static PowerSeries zero(Field f, int order) { return PowerSeries(f, order); }
    static PowerSeries constant(const Scalar& a, int order) {
        PowerSeries p(a.mode(), order);
        p.c_[0] = a;
        return p;
    }
    static PowerSeries identity(Field f, int order) {  // the series "x"
        PowerSeries p(f, order);
        if (order >= 1) p.c_[1] = Scalar::one(f);
        return p;
    }

    int order() const { return int(c_.size()) - 1; }
    Field mode() const { return f_; }
    const Scalar& coeff(int k) const {
        if (k < 0 || k > order()) throw Error("series coefficient out of range");
        return c_[k];
    }
    void set_coeff(int k, const Scalar& a) {
        if (k < 0 || k > order()) throw Error("series coefficient out of range");
        c_[k] = a.to_field(f_);
    }
    bool is_zero() const;

    PowerSeries truncate(int order) const;
    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries operator*(const Scalar& a) const;
    PowerSeries operator-() const;
    PowerSeries inverse() const;  // error if constant term is zero
    PowerSeries operator/(const PowerSeries& o) const { return *this * o.inverse(); }
    PowerSeries derivative() const;
    // Multiply by x^k (shifting coefficients up, dropping overflow).
    PowerSeries shift(int k) const;

    bool operator==(const PowerSeries& o) const { return f_ == o.f_ && c_ == o.c_; }

    std::string str() const;

  private:
    Field f_;
    std::vector<Scalar> c_;
};

}  // namespace z2z2
