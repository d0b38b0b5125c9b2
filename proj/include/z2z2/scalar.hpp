#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace z2z2 {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class Field { Real, Complex };

std::string field_name(Field f);
Field parse_field(std::string_view s);

/**
 * Exact scalar of the working field: a rational number, or a Gaussian
 * rational (re + im*i) in Complex mode.  All arithmetic is exact; mixing
 * modes is an error.  In Real mode the imaginary part is identically zero.
 */
class Scalar {
  public:
    Scalar() : mode_(Field::Real) {}
    Scalar(long n, Field f = Field::Real) : re_(n), mode_(f) {}
    Scalar(const BigRat& re, Field f = Field::Real) : re_(re), mode_(f) {}
    Scalar(long num, long den, Field f = Field::Real) : re_(BigRat(num, den)), mode_(f) {}

    static Scalar zero(Field f) { return Scalar(0, f); }
    static Scalar one(Field f) { return Scalar(1, f); }
    static Scalar complex(const BigRat& re, const BigRat& im);
    static Scalar imag_unit() { return complex(0, 1); }

    Field mode() const { return mode_; }
    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar to_field(Field f) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar conj() const;
    Scalar inv() const;
    // re^2 + im^2, as a rational.
    BigRat norm_sq() const { return re_ * re_ + im_ * im_; }
    // sign of the real part (-1, 0, 1); Real-mode helper.
    int sign() const;

    // Total order used for canonical tie-breaking: (re, im) lexicographic.
    int cmp(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    // "p/q" or "p/q+r/s i"; parse accepts the same forms.
    std::string str() const;
    static std::optional<Scalar> parse(std::string_view s, Field f);

  private:
    void check_mode(const Scalar& o) const;
    BigRat re_, im_;
    Field mode_;
};

// Exact square root of a nonnegative rational, if it exists in Q.
std::optional<BigRat> sqrt_rational(const BigRat& x);

// Canonical exact square root within the scalar's field (principal branch:
// positive real part, or zero real part with nonnegative imaginary part).
// Empty when no root exists in the field.
std::optional<Scalar> sqrt_exact(const Scalar& x);

bool is_square(const Scalar& x);

}  // namespace z2z2
