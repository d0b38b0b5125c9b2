#include "z2z2/scalar.hpp"

#include <sstream>

namespace z2z2 {

std::string field_name(Field f) { return f == Field::Real ? "R" : "C"; }

Field parse_field(std::string_view s) {
    if (s == "R" || s == "r" || s == "real") return Field::Real;
    if (s == "C" || s == "c" || s == "complex") return Field::Complex;
    throw Error("unknown field: " + std::string(s));
}

Scalar Scalar::complex(const BigRat& re, const BigRat& im) {
    Scalar s;
    s.re_ = re;
    s.im_ = im;
    s.mode_ = Field::Complex;
    return s;
}

Scalar Scalar::to_field(Field f) const {
    if (f == mode_) return *this;
    if (f == Field::Real && im_ != 0) throw Error("cannot narrow " + str() + " to R");
    Scalar s = *this;
    s.mode_ = f;
    return s;
}

void Scalar::check_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw Error("scalar mode mismatch: " + str() + " vs " + o.str());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.re_ = -s.re_;
    s.im_ = -s.im_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_mode(o);
    Scalar s = *this;
    s.re_ += o.re_;
    s.im_ += o.im_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_mode(o);
    Scalar s;
    s.mode_ = mode_;
    s.re_ = re_ * o.re_ - im_ * o.im_;
    s.im_ = re_ * o.im_ + im_ * o.re_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero scalar");
    BigRat n = norm_sq();
    Scalar s;
    s.mode_ = mode_;
    s.re_ = re_ / n;
    s.im_ = -im_ / n;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_mode(o);
    return *this * o.inv();
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    s.im_ = -s.im_;
    return s;
}

int Scalar::sign() const {
    if (re_ > 0) return 1;
    if (re_ < 0) return -1;
    return 0;
}

int Scalar::cmp(const Scalar& o) const {
    if (re_ != o.re_) return re_ < o.re_ ? -1 : 1;
    if (im_ != o.im_) return im_ < o.im_ ? -1 : 1;
    return 0;
}

static std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string s;
    if (re_ != 0) s = rat_str(re_);
    if (im_ > 0 && re_ != 0) s += "+";
    if (im_ == -1)
        s += "-";
    else if (im_ != 1)
        s += rat_str(im_);
    s += "i";
    return s;
}

static std::optional<BigRat> parse_rat(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string t(s);
    try {
        auto slash = t.find('/');
        if (slash == std::string::npos) return BigRat(BigInt(t));
        BigInt num(t.substr(0, slash)), den(t.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return BigRat(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<Scalar> Scalar::parse(std::string_view sv, Field f) {
    std::string s;
    for (char c : sv)
        if (c != ' ' && c != '*') s += c;
    if (s.empty()) return std::nullopt;
    if (s.back() == 'i') {
        if (f == Field::Real) return std::nullopt;
        // split "re±imi" at the sign that starts the imaginary part
        s.pop_back();
        if (s.empty() || s == "+") return Scalar::complex(0, 1);
        if (s == "-") return Scalar::complex(0, -1);
        size_t pos = std::string::npos;
        for (size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
                pos = k;
                break;
            }
        }
        if (pos == std::string::npos) {
            auto im = parse_rat(s);
            if (!im) return std::nullopt;
            return Scalar::complex(0, *im);
        }
        auto re = parse_rat(s.substr(0, pos));
        std::string imtxt = s.substr(pos);
        if (imtxt == "+") imtxt = "1";
        if (imtxt == "-") imtxt = "-1";
        auto im = parse_rat(imtxt);
        if (!re || !im) return std::nullopt;
        return Scalar::complex(*re, *im);
    }
    auto re = parse_rat(s);
    if (!re) return std::nullopt;
    return Scalar(*re, f);
}

std::optional<BigRat> sqrt_rational(const BigRat& x) {
    if (x < 0) return std::nullopt;
    BigInt n = numerator(x), d = denominator(x);
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return BigRat(sn, sd);
}

std::optional<Scalar> sqrt_exact(const Scalar& x) {
    if (x.is_zero()) return Scalar::zero(x.mode());
    if (x.im() == 0) {
        if (x.re() > 0) {
            auto r = sqrt_rational(x.re());
            if (r) return Scalar(*r, x.mode());
            return std::nullopt;
        }
        // negative real: root is purely imaginary, Complex mode only
        if (x.mode() == Field::Real) return std::nullopt;
        auto r = sqrt_rational(-x.re());
        if (r) return Scalar::complex(0, *r);
        return std::nullopt;
    }
    // w = u+vi with w^2 = a+bi: u^2+v^2 = sqrt(a^2+b^2), u^2-v^2 = a, 2uv = b
    BigRat a = x.re(), b = x.im();
    auto m = sqrt_rational(a * a + b * b);
    if (!m) return std::nullopt;
    auto u = sqrt_rational((a + *m) / 2);
    if (!u || *u == 0) return std::nullopt;
    BigRat v = b / (2 * *u);
    if (*u * *u - v * v != a) return std::nullopt;
    return Scalar::complex(*u, v);  // u > 0: principal branch
}

bool is_square(const Scalar& x) { return sqrt_exact(x).has_value(); }

}  // namespace z2z2
