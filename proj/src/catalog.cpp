#include "z2z2/matrep.hpp"

namespace z2z2 {

namespace {

using Entry = std::tuple<int, int, Scalar>;

GradedMatrix ent(Field f, std::initializer_list<Entry> entries) {
    GradedMatrix m(4, f);
    for (const auto& [r, c, v] : entries) m.set(r, c, v);
    return m;
}

GradedMatrix diag(Field f, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    GradedMatrix m(4, f);
    m.set(0, 0, a);
    m.set(1, 1, b);
    m.set(2, 2, c);
    m.set(3, 3, d);
    return m;
}

struct Ctx {
    Field f;
    const TableLabel& label;
    const RepParams& par;
    Scalar one() const { return Scalar::one(f); }
    Scalar num(long n) const { return Scalar(n, f); }
    Scalar eps() const {
        if (!label.eps) throw Error(label.str() + ": representation needs eps");
        return Scalar(*label.eps, f);
    }
    Scalar lam() const { return par.get("lambda", f); }
    Scalar mu() const { return par.get("mu", f); }
    Scalar p() const { return par.get("p", f); }
    Scalar q() const { return par.get("q", f); }
    Scalar pnz() const { return par.get_nonzero("p", f); }
    Scalar qnz() const { return par.get_nonzero("q", f); }
    Scalar param(size_t k) const {
        if (label.params.size() <= k) throw Error(label.str() + ": missing label parameter");
        return label.params[k].to_field(f);
    }
};

Representation algebra_rep(const Ctx& x, const std::string& variant) {
    Field f = x.f;
    Scalar o = x.one(), l = x.lam(), half(1, 2, f);
    Representation rep;
    rep.kind = GradingKind::Z2Z2Algebra;
    rep.h = GradedMatrix::zero(4, f);
    rep.q1 = rep.q2 = rep.q3 = rep.h;
    switch (x.label.family) {
        case 1: {
            Scalar e = x.eps();
            if (variant == "") {
                rep.h = diag(f, l, l, x.mu(), l);
                rep.q1 = ent(f, {{1, 3, o}, {3, 1, o}});
                rep.q2 = ent(f, {{0, 3, o}, {3, 0, e}});
                rep.q3 = ent(f, {{0, 1, o}, {1, 0, e}});
                return rep;
            }
            if (variant == "mu=lambda") {
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, half}, {1, 3, half}, {2, 0, half}, {3, 1, half}});
                rep.q2 = ent(f, {{0, 3, half}, {1, 2, half * e}, {2, 1, half}, {3, 0, half * e}});
                rep.q3 = ent(f, {{0, 1, half}, {1, 0, half * e}, {2, 3, half}, {3, 2, half * e}});
                return rep;
            }
            break;
        }
        case 2: {
            Scalar e = x.eps();
            if (variant == "") {
                rep.h = diag(f, l, l, x.mu(), l);
                rep.q1 = ent(f, {{1, 3, o}, {3, 1, e}});
                rep.q2 = ent(f, {{0, 1, o}});
                rep.q3 = ent(f, {{0, 3, o}});
                return rep;
            }
            if (variant == "mu=lambda") {
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, p}, {1, 3, o - p * q}, {2, 0, e * p * q * q},
                                 {3, 1, e * (o - p * q)}});
                rep.q2 = ent(f, {{0, 1, o}, {2, 3, q}});
                rep.q3 = ent(f, {{0, 3, o}, {2, 1, e * q}});
                return rep;
            }
            break;
        }
        case 3: {
            Scalar e = x.eps(), p = x.p();
            if (variant != "") break;
            rep.h = diag(f, l, l - o, l, l - o);
            rep.q1 = ent(f, {{0, 2, e - p}, {1, 3, e * p}, {2, 0, o - e * p}, {3, 1, p}});
            rep.q2 = ent(f, {{0, 1, o}, {2, 3, e}});
            rep.q3 = ent(f, {{0, 3, o}, {2, 1, o}});
            return rep;
        }
        case 4: {
            if (variant == "") {
                rep.h = diag(f, l, l, x.mu(), l);
                rep.q1 = ent(f, {{1, 3, o}});
                rep.q2 = ent(f, {{0, 1, o}});
                rep.q3 = ent(f, {{0, 3, o}});
                return rep;
            }
            if (variant == "mu=lambda") {
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{1, 3, o}});
                rep.q2 = ent(f, {{0, 1, o}, {2, 3, x.p()}});
                rep.q3 = ent(f, {{0, 3, o}});
                return rep;
            }
            break;
        }
        case 6: {
            // only the x = 1/2 member has a four-generator family
            if (!(x.param(0) == half))
                throw Error("A6 admits a minimal family only at x = 1/2");
            if (variant != "") break;
            rep.h = diag(f, l, l - o, l, l - o);
            rep.q1 = ent(f, {{2, 0, o}, {3, 1, o}});
            rep.q2 = ent(f, {{0, 1, o}});
            rep.q3 = ent(f, {{2, 1, o}});
            return rep;
        }
        case 7: {
            if (variant != "") break;
            Scalar p = x.p(), q = x.q();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {1, 3, -p}, {2, 0, p}, {3, 1, -o}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, -q}, {2, 1, o}, {3, 0, -q}});
            rep.q3 = ent(f, {{0, 1, o}, {1, 0, p * q}, {2, 3, p}, {3, 2, q}});
            return rep;
        }
        case 8: {
            Scalar y = x.param(0), z = x.param(1);
            if (variant == "") {
                rep.h = diag(f, l, l - o, l - z, l - y);
                rep.q1 = ent(f, {{0, 3, o}});
                rep.q2 = ent(f, {{0, 2, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            if (variant == "y=1-z") {
                if (!(y == o - z)) throw Error("A8 variant y=1-z needs y = 1-z");
                Scalar p = x.p();
                rep.h = diag(f, l, l - o, l - z, l - o + z);
                rep.q1 = ent(f, {{0, 3, o}, {2, 1, p}});
                rep.q2 = ent(f, {{0, 2, o}, {3, 1, -p}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            break;
        }
        case 5: throw Error("A5 has no minimal family with four nonzero generators");
    }
    throw Error("no catalog family for " + x.label.str() + " variant '" + variant + "'");
}

Representation super_rep(const Ctx& x, const std::string& variant) {
    Field f = x.f;
    Scalar o = x.one(), l = x.lam(), half(1, 2, f);
    Representation rep;
    rep.kind = GradingKind::Z2Z2Superalgebra;
    rep.h = GradedMatrix::zero(4, f);
    rep.q1 = rep.q2 = rep.q3 = rep.h;
    switch (x.label.family) {
        case 1: {
            Scalar p = x.p(), q = x.q();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, -q}});
            rep.q3 = ent(f, {{0, 1, o}, {1, 0, -p * q}, {2, 3, -p}, {3, 2, q}});
            return rep;
        }
        case 2: {
            Scalar p = x.pnz();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {3, 1, -l / (x.num(2) * p)}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, -p}, {2, 1, -l / (x.num(2) * p)}, {3, 0, half * l}});
            rep.q3 = ent(f, {{0, 1, o}, {3, 2, p}});
            return rep;
        }
        case 3: {
            Scalar p = x.pnz(), e = x.eps();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {1, 3, -e * p}, {2, 0, e * half * l},
                             {3, 1, -l / (x.num(2) * p)}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, -p}, {2, 1, -l / (x.num(2) * p)}, {3, 0, half * l}});
            rep.q3 = ent(f, {{0, 1, o}, {1, 0, e * p * p}, {2, 3, e * p}, {3, 2, p}});
            return rep;
        }
        case 4: {
            Scalar p = x.p();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, o - p}});
            rep.q3 = ent(f, {{0, 1, o}, {3, 2, p}});
            return rep;
        }
        case 5: {
            Scalar p = x.pnz();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {3, 1, l / (x.num(2) * p)}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, p}, {2, 1, l / (x.num(2) * p)}, {3, 0, half * l}});
            rep.q3 = ent(f, {{0, 1, o}, {3, 2, o - p}});
            return rep;
        }
        case 6: {
            Scalar e = x.eps();
            if (variant == "") {
                rep.h = diag(f, l, x.mu(), l, l);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{2, 3, e}, {3, 2, o}});
                return rep;
            }
            if (variant == "mu=lambda") {
                // closure forces the eps weight on the second Q1 entry
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, e * p}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, p}});
                rep.q3 = ent(f, {{0, 1, q}, {1, 0, e * p * p * q}, {2, 3, e * (o - p * q)},
                                 {3, 2, o - p * q}});
                return rep;
            }
            break;
        }
        case 7: {
            Scalar e = x.eps(), p = x.pnz();
            if (variant == "") {
                // closure forces the (2,0) entry to eps*lambda/2
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, e * p}, {2, 0, e * half * l},
                                 {3, 1, l / (x.num(2) * p)}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, p}, {2, 1, l / (x.num(2) * p)}, {3, 0, half * l}});
                rep.q3 = ent(f, {{0, 1, o}, {1, 0, e * p * p}, {2, 3, e * (o - p)}, {3, 2, o - p}});
                return rep;
            }
            if (variant == "second") {
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, p}, {1, 3, e}, {2, 0, e * l / (x.num(2) * p)},
                                 {3, 1, half * l}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, p}, {2, 1, l / (x.num(2) * p)}, {3, 0, half * l}});
                rep.q3 = ent(f, {{0, 1, o}, {1, 0, e}});
                return rep;
            }
            break;
        }
        case 8: {
            if (variant == "") {
                rep.h = diag(f, l, l, l, x.mu());
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            if (variant == "second") {
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l, l, l);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{2, 1, o}, {3, 0, q}});
                rep.q3 = ent(f, {{0, 1, o}, {1, 0, p * q}, {2, 3, -p}, {3, 2, -q}});
                return rep;
            }
            break;
        }
        case 9: {
            Scalar p = x.p(), q = x.qnz();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, q}, {2, 1, l / (x.num(2) * q)}, {3, 0, half * l}});
            rep.q3 = ent(f, {{0, 1, l / (x.num(2) * q)}, {1, 0, half * l * p},
                             {2, 3, -half * l * p / q}, {3, 2, -half * l}});
            return rep;
        }
        case 10: {
            Scalar p = x.pnz(), q = x.qnz(), e = x.eps();
            rep.h = diag(f, l, l, l, l);
            rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}, {2, 0, e * half * l},
                             {3, 1, e * l / (x.num(2) * p)}});
            rep.q2 = ent(f, {{0, 3, o}, {1, 2, q}, {2, 1, l / (x.num(2) * q)}, {3, 0, half * l}});
            Scalar u = p - e * q;
            rep.q3 = ent(f, {{0, 1, l * u / (x.num(2) * p * q)}, {1, 0, half * l * u},
                             {2, 3, -half * l * u / q}, {3, 2, -half * l * u / p}});
            return rep;
        }
        case 11: {
            rep.h = diag(f, l, l - o, l, l);
            rep.q1 = ent(f, {{0, 2, o}});
            rep.q2 = ent(f, {{0, 3, o}});
            rep.q3 = ent(f, {{0, 1, o}});
            return rep;
        }
        case 12: {
            rep.h = diag(f, l, l, l, l - o);
            rep.q1 = ent(f, {{0, 2, o}});
            rep.q2 = ent(f, {{0, 3, o}});
            rep.q3 = ent(f, {{0, 1, o}});
            return rep;
        }
        case 13:
            throw Error("S13 has no minimal family with four nonzero generators");
        case 14: {
            if (variant == "") {
                rep.h = diag(f, l, x.mu(), l, l - o);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{3, 2, o}});
                return rep;
            }
            if (variant == "mu=lambda") {
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l + o, l, l - o);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, q}});
                rep.q3 = ent(f, {{0, 1, p}, {3, 2, o - p * q}});
                return rep;
            }
            break;
        }
        case 15: {
            if (variant == "") {
                rep.h = diag(f, l, x.mu(), l, l - o);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{2, 3, o}});
                return rep;
            }
            if (variant == "mu=lambda-1") {
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l - o, l, l - o);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{0, 1, q}, {2, 3, o - p * q}});
                return rep;
            }
            break;
        }
        case 16: {
            if (variant == "") {
                rep.h = diag(f, l, l - o, l, x.mu());
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            if (variant == "mu=lambda+1") {
                Scalar p = x.p();
                rep.h = diag(f, l, l - o, l, l + o);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{2, 1, o}, {3, 0, -p}});
                rep.q3 = ent(f, {{0, 1, o}, {3, 2, p}});
                return rep;
            }
            if (variant == "mu=lambda-1") {
                Scalar p = x.p();
                rep.h = diag(f, l, l - o, l, l - o);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}, {2, 3, -p}});
                return rep;
            }
            break;
        }
        case 17: {
            Scalar xx = x.param(0);
            rep.h = diag(f, l, l - xx, l, l - o);
            rep.q1 = ent(f, {{0, 2, o}});
            rep.q2 = ent(f, {{0, 3, o}});
            rep.q3 = ent(f, {{0, 1, o}});
            return rep;
        }
        case 18: {
            Scalar y = x.param(0), z = x.param(1);
            if (variant == "") {
                rep.h = diag(f, l, l - z, l - o, l - y);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            if (variant == "z=y-1") {
                if (!(z == y - o)) throw Error("S18 variant z=y-1 needs z = y-1");
                Scalar p = x.p();
                rep.h = diag(f, l, l + o - y, l - o, l - y);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{0, 1, o}, {2, 3, -p}});
                return rep;
            }
            if (variant == "z=1-y") {
                if (!(z == o - y)) throw Error("S18 variant z=1-y needs z = 1-y");
                Scalar p = x.p();
                rep.h = diag(f, l, l + y - o, l - o, l - y);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, -p}});
                rep.q3 = ent(f, {{0, 1, o}, {3, 2, p}});
                return rep;
            }
            if (variant == "z=0,y=1") {
                if (!(z.is_zero() && y == o)) throw Error("S18 variant z=0,y=1 needs (y,z) = (1,0)");
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l, l - o, l - o);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, -q}});
                rep.q3 = ent(f, {{0, 1, o}, {1, 0, -p * q}, {2, 3, -p}, {3, 2, q}});
                return rep;
            }
            break;
        }
        case 19: {
            Scalar xx = x.param(0);
            if (variant == "") {
                rep.h = diag(f, l, x.mu(), l - o, l - xx);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{3, 2, o}});
                return rep;
            }
            if (variant == "mu=lambda+x-1") {
                // closure forces the one-entry Q1: a second entry cannot
                // survive {Z,Q2} = Q1 with this H
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l + xx - o, l - o, l - xx);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, q}});
                rep.q3 = ent(f, {{0, 1, p}, {3, 2, o - p * q}});
                return rep;
            }
            break;
        }
        case 20: {
            Scalar e = x.eps();
            if (variant == "") {
                rep.h = diag(f, l, x.mu(), l - o, l - o);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, o}});
                rep.q3 = ent(f, {{2, 3, o}, {3, 2, e}});
                return rep;
            }
            if (variant == "mu=lambda") {
                Scalar p = x.p(), q = x.q();
                rep.h = diag(f, l, l, l - o, l - o);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{0, 3, o}, {1, 2, e * p}});
                rep.q3 = ent(f, {{0, 1, q}, {1, 0, e * p * p * q}, {2, 3, o - p * q},
                                 {3, 2, e * (o - p * q)}});
                return rep;
            }
            break;
        }
        case 21: {
            Scalar y = x.param(0);
            if (variant == "") {
                rep.h = diag(f, l, l - o - y, l - o, x.mu());
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            if (variant == "mu=lambda-y-2") {
                Scalar p = x.p();
                rep.h = diag(f, l, l - o - y, l - o, l - x.num(2) - y);
                rep.q1 = ent(f, {{0, 2, o}, {1, 3, p}});
                rep.q2 = ent(f, {{2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}, {2, 3, -p}});
                return rep;
            }
            if (variant == "mu=lambda+y") {
                Scalar p = x.p();
                rep.h = diag(f, l, l - o - y, l - o, l + y);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{2, 1, o}, {3, 0, -p}});
                rep.q3 = ent(f, {{0, 1, o}, {3, 2, p}});
                return rep;
            }
            if (variant == "mu=lambda-y") {
                Scalar p = x.p();
                rep.h = diag(f, l, l - o - y, l - o, l - y);
                rep.q1 = ent(f, {{0, 2, o}});
                rep.q2 = ent(f, {{0, 3, p}, {2, 1, o}});
                rep.q3 = ent(f, {{0, 1, o}});
                return rep;
            }
            break;
        }
    }
    throw Error("no catalog family for " + x.label.str() + " variant '" + variant + "'");
}

}  // namespace

Representation catalog_rep(const TableLabel& label, const RepParams& params,
                           const std::string& variant) {
    Field f = Field::Real;
    for (const auto& [k, v] : params.values)
        if (v.mode() == Field::Complex) f = Field::Complex;
    Ctx x{f, label, params};
    Representation rep;
    if (label.kind == AlgebraKind::Algebra) {
        rep = algebra_rep(x, variant);
        rep.constants = table1_entry(label, f);
    } else if (label.kind == AlgebraKind::Superalgebra) {
        rep = super_rep(x, variant);
        rep.constants = table2_entry(label, f);
    } else {
        throw Error("no 4x4 catalog for Z2 labels");
    }
    if (rep.h.is_zero()) throw Error(label.str() + ": weight matrix vanishes (pick lambda != 0)");
    return rep;
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> out;
    auto A = [&](int fam, std::string variant, std::vector<std::string> params,
                 std::vector<std::string> nonzero = {}) {
        out.push_back({{AlgebraKind::Algebra, fam, std::nullopt, {}}, std::move(variant),
                       std::move(params), std::move(nonzero)});
    };
    auto S = [&](int fam, std::string variant, std::vector<std::string> params,
                 std::vector<std::string> nonzero = {}) {
        out.push_back({{AlgebraKind::Superalgebra, fam, std::nullopt, {}}, std::move(variant),
                       std::move(params), std::move(nonzero)});
    };
    A(1, "", {"lambda", "mu"});
    A(1, "mu=lambda", {"lambda"}, {"lambda"});
    A(2, "", {"lambda", "mu"});
    A(2, "mu=lambda", {"lambda", "p", "q"}, {"lambda"});
    A(3, "", {"lambda", "p"});
    A(4, "", {"lambda", "mu"});
    A(4, "mu=lambda", {"lambda", "p"}, {"lambda"});
    A(6, "", {"lambda"});
    A(7, "", {"lambda", "p", "q"}, {"lambda"});
    A(8, "", {"lambda"});
    A(8, "y=1-z", {"lambda", "p"});
    S(1, "", {"lambda", "p", "q"}, {"lambda"});
    S(2, "", {"lambda", "p"}, {"lambda", "p"});
    S(3, "", {"lambda", "p"}, {"lambda", "p"});
    S(4, "", {"lambda", "p"}, {"lambda"});
    S(5, "", {"lambda", "p"}, {"lambda", "p"});
    S(6, "", {"lambda", "mu"});
    S(6, "mu=lambda", {"lambda", "p", "q"}, {"lambda"});
    S(7, "", {"lambda", "p"}, {"lambda", "p"});
    S(7, "second", {"lambda", "p"}, {"lambda", "p"});
    S(8, "", {"lambda", "mu"});
    S(8, "second", {"lambda", "p", "q"}, {"lambda"});
    S(9, "", {"lambda", "p", "q"}, {"lambda", "q"});
    S(10, "", {"lambda", "p", "q"}, {"lambda", "p", "q"});
    S(11, "", {"lambda"});
    S(12, "", {"lambda"});
    S(14, "", {"lambda", "mu"});
    S(14, "mu=lambda", {"lambda", "p", "q"});
    S(15, "", {"lambda", "mu"});
    S(15, "mu=lambda-1", {"lambda", "p", "q"});
    S(16, "", {"lambda", "mu"});
    S(16, "mu=lambda+1", {"lambda", "p"});
    S(16, "mu=lambda-1", {"lambda", "p"});
    S(17, "", {"lambda"});
    S(18, "", {"lambda"});
    S(18, "z=y-1", {"lambda", "p"});
    S(18, "z=1-y", {"lambda", "p"});
    S(18, "z=0,y=1", {"lambda", "p", "q"});
    S(19, "", {"lambda", "mu"});
    S(19, "mu=lambda+x-1", {"lambda", "p", "q"});
    S(20, "", {"lambda", "mu"});
    S(20, "mu=lambda", {"lambda", "p", "q"});
    S(21, "", {"lambda", "mu"});
    S(21, "mu=lambda-y-2", {"lambda", "p"});
    S(21, "mu=lambda+y", {"lambda", "p"});
    S(21, "mu=lambda-y", {"lambda", "p"});
    return out;
}

}  // namespace z2z2
