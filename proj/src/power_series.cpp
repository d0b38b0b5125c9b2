#include "z2z2/power_series.hpp"

#include <algorithm>
#include <sstream>

namespace z2z2 {

bool PowerSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& a) { return a.is_zero(); });
}

PowerSeries PowerSeries::truncate(int order) const {
    PowerSeries p(f_, order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) p.c_[k] = c_[k];
    return p;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    int n = std::min(order(), o.order());
    PowerSeries p(f_, n);
    for (int k = 0; k <= n; ++k) p.c_[k] = c_[k] + o.c_[k];
    return p;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const { return *this + (-o); }

PowerSeries PowerSeries::operator-() const {
    PowerSeries p = *this;
    for (auto& a : p.c_) a = -a;
    return p;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    int n = std::min(order(), o.order());
    PowerSeries p(f_, n);
    for (int i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.c_[j].is_zero()) continue;
            p.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return p;
}

PowerSeries PowerSeries::operator*(const Scalar& a) const {
    PowerSeries p = *this;
    for (auto& x : p.c_) x = x * a;
    return p;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0].is_zero()) throw Error("series inverse: constant term is zero");
    PowerSeries p(f_, order());
    Scalar c0i = c_[0].inv();
    p.c_[0] = c0i;
    for (int k = 1; k <= order(); ++k) {
        Scalar acc = Scalar::zero(f_);
        for (int j = 1; j <= k; ++j) acc += c_[j] * p.c_[k - j];
        p.c_[k] = -(c0i * acc);
    }
    return p;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(f_, 0);
    PowerSeries p(f_, order() - 1);
    for (int k = 1; k <= order(); ++k) p.c_[k - 1] = c_[k] * Scalar(k, f_);
    return p;
}

PowerSeries PowerSeries::shift(int k) const {
    PowerSeries p(f_, order());
    for (int j = 0; j + k <= order(); ++j) p.c_[j + k] = c_[j];
    return p;
}

std::string PowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[k].str() << ")";
        if (k >= 1) os << "*x" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    os << " + O(x^" << order() + 1 << ")";
    return os.str();
}

}  // namespace z2z2
