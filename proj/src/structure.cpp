#include "z2z2/structure.hpp"

#include <algorithm>
#include <sstream>

namespace z2z2 {

std::string AlgebraConstants::str() const {
    std::ostringstream os;
    os << "d=(" << d[0].str() << "," << d[1].str() << "," << d[2].str() << ") b=(" << b[0].str()
       << "," << b[1].str() << "," << b[2].str() << ")";
    return os.str();
}

std::string SuperalgebraConstants::str() const {
    std::ostringstream os;
    os << "a=(" << a1.str() << "," << a2.str() << ") b=" << b.str() << " c=" << c.str()
       << " beta=(" << beta1.str() << "," << beta2.str() << ") alpha=(" << alpha1.str() << ","
       << alpha2.str() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Labels

std::string TableLabel::str() const {
    std::ostringstream os;
    switch (kind) {
        case AlgebraKind::Z2: {
            static const char* names[] = {"", "Z2.i", "Z2.ii", "Z2.iii"};
            return names[family];
        }
        case AlgebraKind::Algebra: os << "A" << family; break;
        case AlgebraKind::Superalgebra: os << "S" << family; break;
    }
    bool need = eps.has_value() || !params.empty();
    if (need) {
        os << "[";
        bool first = true;
        if (eps) {
            os << "eps=" << (*eps > 0 ? "1" : "-1");
            first = false;
        }
        const char* pn2[] = {"y", "z"};
        for (size_t k = 0; k < params.size(); ++k) {
            if (!first) os << ",";
            os << (params.size() == 1 ? "x" : pn2[k]) << "=" << params[k].str();
            first = false;
        }
        os << "]";
    }
    return os.str();
}

TableLabel TableLabel::parse(const std::string& s, Field f) {
    TableLabel l;
    if (s.rfind("Z2.", 0) == 0) {
        l.kind = AlgebraKind::Z2;
        std::string c = s.substr(3);
        l.family = c == "i" ? 1 : c == "ii" ? 2 : c == "iii" ? 3 : 0;
        if (!l.family) throw Error("bad Z2 class: " + s);
        return l;
    }
    if (s.empty() || (s[0] != 'A' && s[0] != 'S')) throw Error("bad label: " + s);
    l.kind = s[0] == 'A' ? AlgebraKind::Algebra : AlgebraKind::Superalgebra;
    size_t br = s.find('[');
    l.family = std::stoi(s.substr(1, br == std::string::npos ? br : br - 1));
    if (br != std::string::npos) {
        if (s.back() != ']') throw Error("bad label: " + s);
        std::string body = s.substr(br + 1, s.size() - br - 2);
        std::istringstream is(body);
        std::string item;
        Scalar y, z;
        bool have_y = false, have_z = false, have_x = false;
        Scalar x;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw Error("bad label parameter: " + item);
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            auto v = Scalar::parse(val, f);
            if (!v) throw Error("bad label parameter value: " + val);
            if (key == "eps")
                l.eps = v->sign();
            else if (key == "x") {
                x = *v;
                have_x = true;
            } else if (key == "y") {
                y = *v;
                have_y = true;
            } else if (key == "z") {
                z = *v;
                have_z = true;
            } else
                throw Error("unknown label parameter: " + key);
        }
        if (have_x) l.params = {x};
        if (have_y || have_z) {
            if (!(have_y && have_z)) throw Error("label needs both y and z");
            l.params = {y, z};
        }
    }
    return l;
}

int TableLabel::cmp(const TableLabel& o) const {
    if (kind != o.kind) return int(kind) < int(o.kind) ? -1 : 1;
    if (family != o.family) return family < o.family ? -1 : 1;
    int e1 = eps.value_or(0), e2 = o.eps.value_or(0);
    if (e1 != e2) return e1 > e2 ? -1 : 1;  // +1 sorts before -1
    if (params.size() != o.params.size()) return params.size() < o.params.size() ? -1 : 1;
    for (size_t k = 0; k < params.size(); ++k) {
        int c = params[k].cmp(o.params[k]);
        if (c) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Catalog rows

static Scalar sc(long v, Field f) { return Scalar(v, f); }

static void check_eps(const TableLabel& l) {
    if (!l.eps || (*l.eps != 1 && *l.eps != -1)) throw Error(l.str() + ": eps must be +1 or -1");
}

static bool arg_in_upper_half(const Scalar& x) {
    // arg in [0, pi): positive imaginary part, or real and nonnegative
    if (x.im() > 0) return true;
    return x.im() == 0 && x.re() >= 0;
}

Z2Constants z2_entry(const TableLabel& label, Field f) {
    if (label.kind != AlgebraKind::Z2) throw Error("not a Z2 label: " + label.str());
    switch (label.family) {
        case 1: return {sc(0, f), sc(0, f)};
        case 2: return {sc(0, f), sc(1, f)};
        case 3: return {sc(1, f), sc(0, f)};
    }
    throw Error("bad Z2 class");
}

AlgebraConstants table1_entry(const TableLabel& label, Field f) {
    if (label.kind != AlgebraKind::Algebra) throw Error("not an algebra label: " + label.str());
    Scalar z0 = sc(0, f), o = sc(1, f);
    auto eps = [&] {
        check_eps(label);
        return sc(*label.eps, f);
    };
    switch (label.family) {
        case 1: return {{eps(), o, o}, {z0, z0, z0}};
        case 2: return {{z0, eps(), o}, {z0, z0, z0}};
        case 3: return {{z0, eps(), o}, {z0, o, o}};
        case 4: return {{z0, z0, o}, {z0, z0, z0}};
        case 5: return {{z0, z0, o}, {o, -o, z0}};
        case 6: {
            if (label.params.size() != 1) throw Error("A6 needs parameter x");
            Scalar x = label.params[0].to_field(f);
            if (f == Field::Real) {
                if (x.sign() < 0) throw Error("A6 requires x >= 0");
            } else if (!arg_in_upper_half(x)) {
                throw Error("A6 over C requires arg(x) in [0,pi)");
            }
            Scalar half(1, 2, f);
            return {{z0, z0, o}, {half - x, half + x, o}};
        }
        case 7: return {{z0, z0, z0}, {z0, z0, z0}};
        case 8: {
            if (label.params.size() != 2) throw Error("A8 needs parameters y,z");
            Scalar y = label.params[0].to_field(f), z = label.params[1].to_field(f);
            if (!(y.norm_sq() <= z.norm_sq() && z.norm_sq() <= 1))
                throw Error("A8 requires 0 <= |y| <= |z| <= 1");
            return {{z0, z0, z0}, {y, z, o}};
        }
    }
    throw Error("bad algebra family A" + std::to_string(label.family));
}

SuperalgebraConstants table2_entry(const TableLabel& label, Field f) {
    if (label.kind != AlgebraKind::Superalgebra)
        throw Error("not a superalgebra label: " + label.str());
    Scalar z0 = sc(0, f), o = sc(1, f);
    auto eps = [&] {
        check_eps(label);
        return sc(*label.eps, f);
    };
    auto row = [&](Scalar a1, Scalar a2, Scalar b, Scalar c, Scalar b1, Scalar b2, Scalar al1,
                   Scalar al2) {
        return SuperalgebraConstants{a1, a2, b, c, b1, b2, al1, al2};
    };
    auto param_x = [&] {
        if (label.params.size() != 1) throw Error(label.str() + " needs parameter x");
        Scalar x = label.params[0].to_field(f);
        if (x.is_zero()) throw Error(label.str() + " requires x != 0");
        return x;
    };
    switch (label.family) {
        case 1: return row(z0, z0, z0, z0, z0, z0, z0, z0);
        case 2: return row(z0, z0, z0, z0, z0, z0, z0, o);
        case 3: return row(z0, z0, z0, z0, z0, z0, eps(), o);
        case 4: return row(z0, z0, z0, z0, z0, o, z0, z0);
        case 5: return row(z0, z0, z0, z0, z0, o, z0, o);
        case 6: return row(z0, z0, z0, z0, eps(), o, z0, z0);
        case 7: return row(z0, z0, z0, z0, eps(), o, eps(), o);
        case 8: return row(z0, z0, z0, o, z0, z0, z0, z0);
        case 9: return row(z0, z0, z0, o, z0, z0, z0, o);
        case 10: return row(z0, z0, z0, o, z0, z0, eps(), o);
        case 11: return row(z0, z0, o, z0, z0, z0, z0, z0);
        case 12: return row(z0, o, z0, z0, z0, z0, z0, z0);
        case 13: return row(z0, o, o, o, eps(), z0, eps(), z0);
        case 14: return row(z0, o, -o, z0, z0, o, z0, z0);
        case 15: return row(z0, o, o, z0, o, z0, z0, z0);
        case 16: return row(z0, o, o, o, z0, z0, z0, z0);
        case 17: return row(z0, o, param_x(), z0, z0, z0, z0, z0);
        case 18: {
            if (label.params.size() != 2) throw Error("S18 needs parameters y,z");
            Scalar y = label.params[0].to_field(f), z = label.params[1].to_field(f);
            if (y.is_zero() || y.norm_sq() > 1) throw Error("S18 requires 0 < |y| <= 1");
            return row(o, y, z, z0, z0, z0, z0, z0);
        }
        case 19: {
            Scalar x = param_x();
            return row(o, x, o - x, z0, z0, o, z0, z0);
        }
        case 20: return row(o, o, z0, z0, o, eps(), z0, z0);
        case 21: {
            if (label.params.size() != 1) throw Error("S21 needs parameter y");
            Scalar y = label.params[0].to_field(f);
            if (y.is_zero() || y.norm_sq() > 1) throw Error("S21 requires 0 < |y| <= 1");
            return row(o, y, o + y, o, z0, z0, z0, z0);
        }
    }
    throw Error("bad superalgebra family S" + std::to_string(label.family));
}

// ---------------------------------------------------------------------------
// Witness application

namespace {

Scalar principal_root(const Scalar& x) {
    auto r = sqrt_exact(x);
    if (!r) throw Error("square certificate is not a perfect square: " + x.str());
    return *r;
}

// value must equal +-principal_sqrt(value^2); returns the sign.
std::optional<int> branch_of(const Scalar& value) {
    if (value.is_zero()) return std::nullopt;
    Scalar root = principal_root(value * value);
    if (value == root) return 1;
    if (value == -root) return -1;
    return std::nullopt;  // unreachable for exact arithmetic
}

Scalar eval_root_multiplier(const Scalar& arg, const std::optional<int>& branch,
                            const char* what) {
    if (!branch) throw Error(std::string("witness multiplier unavailable for ") + what);
    auto r = sqrt_exact(arg);
    if (!r)
        throw Error(std::string("witness multiplier for ") + what +
                    " has irrational magnitude: sqrt(" + arg.str() + ")");
    return *branch > 0 ? *r : -*r;
}

// Branch sign of a composed multiplier: principal roots of the two parts
// against the principal root of the product (an exact +-1 correction).
std::optional<int> compose_branch(const std::optional<int>& u2, const Scalar& arg2,
                                  const std::optional<int>& u1, const Scalar& arg1) {
    if (!u2 || !u1) return std::nullopt;
    auto r2 = sqrt_exact(arg2), r1 = sqrt_exact(arg1), rt = sqrt_exact(arg2 * arg1);
    if (!r2 || !r1 || !rt) return std::nullopt;
    int corr = (*r2 * *r1 == *rt) ? 1 : -1;
    return *u2 * *u1 * corr;
}

std::optional<int> invert_branch(const std::optional<int>& u, const Scalar& arg) {
    if (!u) return std::nullopt;
    auto r = sqrt_exact(arg), ri = sqrt_exact(arg.inv());
    if (!r || !ri) return std::nullopt;
    int corr = (*r * *ri == Scalar::one(arg.mode())) ? 1 : -1;
    return *u * corr;
}

void check_real_square(const Scalar& sq) {
    if (sq.is_zero()) throw Error("zero rescaling");
    if (sq.mode() == Field::Real && sq.sign() < 0)
        throw Error("real-mode rescaling square must be positive: " + sq.str());
}

}  // namespace

Z2Constants apply_equivalence(const Z2Constants& c, const Z2Witness& w) {
    if (w.lambda_h.is_zero()) throw Error("zero rescaling");
    check_real_square(w.lambda_q_sq);
    Z2Constants out = c;
    out.r = c.r * w.lambda_h;
    if (!c.s.is_zero()) out.s = c.s * (w.lambda_q_sq / w.lambda_h);
    return out;
}

Z2Witness Z2Witness::inverse() const { return {lambda_h.inv(), lambda_q_sq.inv()}; }

bool Z2Witness::acts_trivially(const Z2Constants& c) const {
    return apply_equivalence(c, *this) == c;
}

AlgebraWitness AlgebraWitness::identity(Field f) {
    AlgebraWitness w;
    w.lambda_h = Scalar::one(f);
    w.lambda_sq = {Scalar::one(f), Scalar::one(f), Scalar::one(f)};
    return w;
}

AlgebraWitness AlgebraWitness::from_rescalings(const std::array<int, 3>& perm,
                                               const Scalar& lambda_h,
                                               const std::array<Scalar, 3>& lambda) {
    AlgebraWitness w;
    w.perm = perm;
    w.lambda_h = lambda_h;
    for (int k = 0; k < 3; ++k) {
        if (lambda[k].is_zero()) throw Error("zero rescaling");
        w.lambda_sq[k] = lambda[k] * lambda[k];
    }
    for (int k = 0; k < 3; ++k)
        w.branch[k] = branch_of(lambda[(k + 1) % 3] * lambda[(k + 2) % 3] / lambda[k]);
    return w;
}

Scalar AlgebraWitness::mu(int k) const {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    return eval_root_multiplier(lambda_sq[i] * lambda_sq[j] / lambda_sq[k], branch[k], "d");
}

AlgebraConstants apply_equivalence(const AlgebraConstants& c, const AlgebraWitness& w) {
    if (w.lambda_h.is_zero()) throw Error("zero rescaling");
    for (auto& sq : w.lambda_sq) check_real_square(sq);
    AlgebraConstants out;
    for (int k = 0; k < 3; ++k) {
        out.d[k] = c.d[w.perm[k]];
        out.b[k] = c.b[w.perm[k]] * w.lambda_h;
    }
    std::array<std::optional<Scalar>, 3> mus;
    for (int k = 0; k < 3; ++k)
        if (!out.d[k].is_zero()) mus[k] = w.mu(k);
    // realizability: mu_i mu_j = lambda_k^2 whenever both act
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        if (mus[i] && mus[j] && !(*mus[i] * *mus[j] == w.lambda_sq[k]))
            throw Error("inconsistent witness: multiplier products violate square certificates");
    }
    for (int k = 0; k < 3; ++k)
        if (mus[k]) out.d[k] = out.d[k] * *mus[k];
    return out;
}

AlgebraWitness AlgebraWitness::inverse() const {
    AlgebraWitness w;
    std::array<int, 3> pinv{};
    for (int k = 0; k < 3; ++k) pinv[perm[k]] = k;
    w.perm = pinv;
    w.lambda_h = lambda_h.inv();
    for (int k = 0; k < 3; ++k) w.lambda_sq[k] = lambda_sq[pinv[k]].inv();
    for (int k = 0; k < 3; ++k) {
        int kk = pinv[k];  // slot in *this feeding slot k of the inverse
        int i = (kk + 1) % 3, j = (kk + 2) % 3;
        w.branch[k] = invert_branch(branch[kk], lambda_sq[i] * lambda_sq[j] / lambda_sq[kk]);
    }
    return w;
}

AlgebraWitness AlgebraWitness::compose(const AlgebraWitness& second, const AlgebraWitness& first) {
    AlgebraWitness w;
    for (int k = 0; k < 3; ++k) w.perm[k] = first.perm[second.perm[k]];
    w.lambda_h = second.lambda_h * first.lambda_h;
    for (int k = 0; k < 3; ++k) w.lambda_sq[k] = second.lambda_sq[k] * first.lambda_sq[second.perm[k]];
    auto arg = [](const AlgebraWitness& v, int k) {
        return v.lambda_sq[(k + 1) % 3] * v.lambda_sq[(k + 2) % 3] / v.lambda_sq[k];
    };
    for (int k = 0; k < 3; ++k)
        w.branch[k] =
            compose_branch(second.branch[k], arg(second, k), first.branch[second.perm[k]],
                           arg(first, second.perm[k]));
    return w;
}

bool AlgebraWitness::acts_trivially(const AlgebraConstants& c) const {
    return apply_equivalence(c, *this) == c;
}

SuperalgebraWitness SuperalgebraWitness::identity(Field f) {
    SuperalgebraWitness w;
    w.lambda_h = Scalar::one(f);
    w.sq1 = w.sq2 = w.sqz = Scalar::one(f);
    return w;
}

SuperalgebraWitness SuperalgebraWitness::from_rescalings(bool swap, const Scalar& lambda_h,
                                                         const Scalar& l1, const Scalar& l2,
                                                         const Scalar& lz) {
    if (l1.is_zero() || l2.is_zero() || lz.is_zero()) throw Error("zero rescaling");
    SuperalgebraWitness w;
    w.swap = swap;
    w.lambda_h = lambda_h;
    w.sq1 = l1 * l1;
    w.sq2 = l2 * l2;
    w.sqz = lz * lz;
    w.branch_c = branch_of(l1 * l2 / lz);
    w.branch_b1 = branch_of(lz * l1 / l2);
    w.branch_b2 = branch_of(lz * l2 / l1);
    return w;
}

Scalar SuperalgebraWitness::mu_c() const {
    return eval_root_multiplier(sq1 * sq2 / sqz, branch_c, "c");
}
Scalar SuperalgebraWitness::mu_b1() const {
    return eval_root_multiplier(sqz * sq1 / sq2, branch_b1, "beta1");
}
Scalar SuperalgebraWitness::mu_b2() const {
    return eval_root_multiplier(sqz * sq2 / sq1, branch_b2, "beta2");
}

SuperalgebraConstants apply_equivalence(const SuperalgebraConstants& c,
                                        const SuperalgebraWitness& w) {
    if (w.lambda_h.is_zero()) throw Error("zero rescaling");
    check_real_square(w.sq1);
    check_real_square(w.sq2);
    check_real_square(w.sqz);
    SuperalgebraConstants s = c;
    if (w.swap) {
        std::swap(s.a1, s.a2);
        std::swap(s.alpha1, s.alpha2);
        std::swap(s.beta1, s.beta2);
        s.c = -s.c;  // [Q2,Q1] = -[Q1,Q2]
    }
    s.a1 = s.a1 * w.lambda_h;
    s.a2 = s.a2 * w.lambda_h;
    s.b = s.b * w.lambda_h;
    std::optional<Scalar> mc, mb1, mb2;
    if (!s.c.is_zero()) mc = w.mu_c();
    if (!s.beta1.is_zero()) mb1 = w.mu_b1();
    if (!s.beta2.is_zero()) mb2 = w.mu_b2();
    if (mc && mb1 && !(*mc * *mb1 == w.sq1))
        throw Error("inconsistent witness: c/beta1 multipliers violate square certificates");
    if (mc && mb2 && !(*mc * *mb2 == w.sq2))
        throw Error("inconsistent witness: c/beta2 multipliers violate square certificates");
    if (mb1 && mb2 && !(*mb1 * *mb2 == w.sqz))
        throw Error("inconsistent witness: beta multipliers violate square certificates");
    if (mc) s.c = s.c * *mc;
    if (mb1) s.beta1 = s.beta1 * *mb1;
    if (mb2) s.beta2 = s.beta2 * *mb2;
    if (!s.alpha1.is_zero()) s.alpha1 = s.alpha1 * (w.sq1 / w.lambda_h);
    if (!s.alpha2.is_zero()) s.alpha2 = s.alpha2 * (w.sq2 / w.lambda_h);
    return s;
}

SuperalgebraWitness SuperalgebraWitness::inverse() const {
    SuperalgebraWitness w;
    w.swap = swap;
    w.lambda_h = lambda_h.inv();
    const Scalar& s1 = swap ? sq2 : sq1;
    const Scalar& s2 = swap ? sq1 : sq2;
    w.sq1 = s1.inv();
    w.sq2 = s2.inv();
    w.sqz = sqz.inv();
    w.branch_c = invert_branch(branch_c, sq1 * sq2 / sqz);
    const std::optional<int>& b1 = swap ? branch_b2 : branch_b1;
    const std::optional<int>& b2 = swap ? branch_b1 : branch_b2;
    w.branch_b1 = invert_branch(b1, sqz * (swap ? sq2 : sq1) / (swap ? sq1 : sq2));
    w.branch_b2 = invert_branch(b2, sqz * (swap ? sq1 : sq2) / (swap ? sq2 : sq1));
    return w;
}

SuperalgebraWitness SuperalgebraWitness::compose(const SuperalgebraWitness& second,
                                                 const SuperalgebraWitness& first) {
    SuperalgebraWitness w;
    w.swap = first.swap != second.swap;
    w.lambda_h = second.lambda_h * first.lambda_h;
    const Scalar& f1 = second.swap ? first.sq2 : first.sq1;
    const Scalar& f2 = second.swap ? first.sq1 : first.sq2;
    w.sq1 = second.sq1 * f1;
    w.sq2 = second.sq2 * f2;
    w.sqz = second.sqz * first.sqz;
    Scalar arg_c1 = first.sq1 * first.sq2 / first.sqz;  // symmetric under the odd swap
    w.branch_c = compose_branch(second.branch_c, second.sq1 * second.sq2 / second.sqz,
                                first.branch_c, arg_c1);
    const std::optional<int>& fb1 = second.swap ? first.branch_b2 : first.branch_b1;
    const std::optional<int>& fb2 = second.swap ? first.branch_b1 : first.branch_b2;
    w.branch_b1 = compose_branch(second.branch_b1, second.sqz * second.sq1 / second.sq2, fb1,
                                 first.sqz * f1 / f2);
    w.branch_b2 = compose_branch(second.branch_b2, second.sqz * second.sq2 / second.sq1, fb2,
                                 first.sqz * f2 / f1);
    return w;
}

bool SuperalgebraWitness::acts_trivially(const SuperalgebraConstants& c) const {
    return apply_equivalence(c, *this) == c;
}

// ---------------------------------------------------------------------------
// Residuals

Scalar jacobi_residuals_z2(const Z2Constants& c) { return c.r * c.s; }

std::array<Scalar, 3> jacobi_residuals_algebra(const AlgebraConstants& c) {
    return {c.d[0] * (c.b[0] - c.b[1] - c.b[2]), c.d[1] * (c.b[1] - c.b[2] - c.b[0]),
            c.d[2] * (c.b[2] - c.b[0] - c.b[1])};
}

std::array<Scalar, 8> jacobi_residuals_superalgebra(const SuperalgebraConstants& c) {
    return {c.c * (c.b - c.a1 - c.a2),
            c.beta1 * (c.a2 - c.a1 - c.b),
            c.beta2 * (c.a1 - c.a2 - c.b),
            c.c * c.beta1 - c.alpha1 * c.a2,
            c.c * c.beta2 + c.alpha2 * c.a1,
            c.c * c.beta1 - c.alpha1 * c.b,
            c.c * c.beta2 + c.alpha2 * c.b,
            c.beta1 * c.alpha2 - c.alpha1 * c.beta2};
}

Elem4 elem_zero(Field f) {
    Scalar z = Scalar::zero(f);
    return {z, z, z, z};
}

Elem4 elem_gen(int g, Field f) {
    Elem4 e = elem_zero(f);
    e[g] = Scalar::one(f);
    return e;
}

Elem4 elem_add(const Elem4& a, const Elem4& b) {
    Elem4 r = a;
    for (int k = 0; k < 4; ++k) r[k] += b[k];
    return r;
}

Elem4 elem_neg(const Elem4& a) {
    Elem4 r = a;
    for (auto& x : r) x = -x;
    return r;
}

Elem4 elem_scale(const Scalar& s, const Elem4& a) {
    Elem4 r = a;
    for (auto& x : r) x = s * x;
    return r;
}

bool elem_is_zero(const Elem4& a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

Elem4 bracket_eval(const AlgebraConstants& c, int gi, int gj) {
    Field f = c.field();
    Elem4 r = elem_zero(f);
    if (gi == gj) return r;                       // diagonal brackets are commutators, zero
    if (gi == 0) {                                 // [H, Qj] = b_j Qj
        r[gj] = c.b[gj - 1];
        return r;
    }
    if (gj == 0) {                                 // [Qi, H] = -b_i Qi
        r[gi] = -c.b[gi - 1];
        return r;
    }
    int k = 6 - gi - gj;                           // {Qi,Qj} = d_k Qk, symmetric
    r[k] = c.d[k - 1];
    return r;
}

Elem4 bracket_eval(const SuperalgebraConstants& c, int gi, int gj) {
    Field f = c.field();
    Elem4 r = elem_zero(f);
    // generators: 0 = H, 1 = Q1 (10), 2 = Q2 (01), 3 = Z (11)
    if (gi == 0 && gj == 0) return r;
    if (gi == 0 || gj == 0) {  // commutators with H, antisymmetric
        int g = gi + gj;
        Scalar coeff = g == 1 ? c.a1 : g == 2 ? c.a2 : c.b;
        r[g] = gi == 0 ? coeff : -coeff;
        return r;
    }
    if (gi == 3 && gj == 3) return r;  // [Z,Z] = 0
    if (gi == gj) {                    // {Qi,Qi} = alpha_i H
        r[0] = gi == 1 ? c.alpha1 : c.alpha2;
        return r;
    }
    if (gi != 3 && gj != 3) {  // [Q1,Q2] = cZ, antisymmetric commutator
        r[3] = gi == 1 ? c.c : -c.c;
        return r;
    }
    int q = gi == 3 ? gj : gi;  // {Z,Qi} = beta_i Q_other, symmetric
    r[3 - q] = q == 1 ? c.beta1 : c.beta2;
    return r;
}

namespace {

template <class Constants>
std::vector<JacobiTriple> scan_impl(const Constants& c, GradingKind kind) {
    Field f = c.field();
    auto secs = sector_gradings();
    std::vector<JacobiTriple> out;
    auto br = [&](const Elem4& x, const Elem4& y) { return bracket_eval_elem(c, x, y); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                std::array<GradingVector, 3> deg{secs[i], secs[j], secs[k]};
                std::array<Elem4, 3> abc{elem_gen(i, f), elem_gen(j, f), elem_gen(k, f)};
                // jacobi_combination needs +, unary -: wrap Elem4 locally
                struct E {
                    Elem4 v;
                    E operator+(const E& o) const { return {elem_add(v, o.v)}; }
                    E operator-() const { return {elem_neg(v)}; }
                };
                auto brE = [&](const E& x, const E& y) { return E{br(x.v, y.v)}; };
                E res = jacobi_combination(kind, deg, std::array<E, 3>{E{abc[0]}, E{abc[1]}, E{abc[2]}},
                                           brE);
                out.push_back({{i, j, k}, res.v, elem_is_zero(res.v)});
            }
    return out;
}

}  // namespace

std::vector<JacobiTriple> full_jacobi_scan(const AlgebraConstants& c) {
    return scan_impl(c, GradingKind::Z2Z2Algebra);
}

std::vector<JacobiTriple> full_jacobi_scan(const SuperalgebraConstants& c) {
    return scan_impl(c, GradingKind::Z2Z2Superalgebra);
}

bool full_jacobi_admissible(const AlgebraConstants& c) {
    auto scan = full_jacobi_scan(c);
    return std::all_of(scan.begin(), scan.end(), [](const JacobiTriple& t) { return t.zero; });
}

bool full_jacobi_admissible(const SuperalgebraConstants& c) {
    auto scan = full_jacobi_scan(c);
    return std::all_of(scan.begin(), scan.end(), [](const JacobiTriple& t) { return t.zero; });
}

bool admissible(const AlgebraConstants& c) {
    auto r = jacobi_residuals_algebra(c);
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool admissible(const SuperalgebraConstants& c) {
    auto r = jacobi_residuals_superalgebra(c);
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool admissible(const Z2Constants& c) { return jacobi_residuals_z2(c).is_zero(); }

// ---------------------------------------------------------------------------

TableLabel collapse_eps(const TableLabel& label, Field f) {
    if (f == Field::Real || !label.eps) return label;
    TableLabel l = label;
    l.eps = 1;
    return l;
}

bool expected_boundary_alias(const TableLabel& a, const TableLabel& b, Field f) {
    TableLabel x = collapse_eps(a, f), y = collapse_eps(b, f);
    if (x == y) return true;
    if (x.kind != y.kind || x.family != y.family) return false;
    if (x.kind == AlgebraKind::Algebra && x.family == 8) {
        // With no anticommutator present all sector permutations act freely,
        // so (y,z,1) is canonical only up to permutation and overall scale;
        // ties in |.| leave genuine aliases at the boundary.
        if (x.params.size() != 2 || y.params.size() != 2) return false;
        std::array<Scalar, 3> u = {x.params[0], x.params[1], Scalar::one(f)};
        std::array<Scalar, 3> v = {y.params[0], y.params[1], Scalar::one(f)};
        std::array<int, 3> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end());
        do {
            if (v[idx[2]].is_zero()) continue;
            Scalar lam = v[idx[2]].inv();
            if (v[idx[0]] * lam == u[0] && v[idx[1]] * lam == u[1]) return true;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return false;
    }
    if (x.kind == AlgebraKind::Superalgebra && x.family == 18) {
        // S18_{-1,z} ~ S18_{-1,-z}; over C also |y| = 1 pairs y' = 1/y, z' = z/y
        if (x.params.size() != 2 || y.params.size() != 2) return false;
        const Scalar &y1 = x.params[0], &z1 = x.params[1], &y2 = y.params[0], &z2 = y.params[1];
        if (y1.norm_sq() != 1) return false;
        return y2 == y1.inv() && z2 == z1 * y1.inv();
    }
    if (x.kind == AlgebraKind::Superalgebra && x.family == 21 && f == Field::Complex) {
        // |y| = 1: y' = 1/y after the odd swap
        if (x.params.size() != 1 || y.params.size() != 1) return false;
        return x.params[0].norm_sq() == 1 && y.params[0] == x.params[0].inv();
    }
    return false;
}

}  // namespace z2z2
