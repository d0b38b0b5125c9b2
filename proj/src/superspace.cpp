#include "z2z2/superspace.hpp"

namespace z2z2 {

Superfield Superfield::zero(const Ctx& ctx) {
    return {{GradedPoly(ctx), GradedPoly(ctx), GradedPoly(ctx), GradedPoly(ctx)}};
}

Superfield Superfield::operator+(const Superfield& o) const {
    return {{coeff[0] + o.coeff[0], coeff[1] + o.coeff[1], coeff[2] + o.coeff[2],
             coeff[3] + o.coeff[3]}};
}

Superfield Superfield::operator-(const Superfield& o) const {
    return {{coeff[0] - o.coeff[0], coeff[1] - o.coeff[1], coeff[2] - o.coeff[2],
             coeff[3] - o.coeff[3]}};
}

bool Superfield::operator==(const Superfield& o) const {
    for (int k = 0; k < 4; ++k)
        if (!(coeff[k] == o.coeff[k])) return false;
    return true;
}

bool Superfield::is_zero() const {
    for (int k = 0; k < 4; ++k)
        if (!coeff[k].is_zero()) return false;
    return true;
}

void Superfield::check_homogeneous() const {
    auto secs = sector_gradings();
    for (int k = 0; k < 4; ++k) {
        auto g = coeff[k].grading();
        if (coeff[k].is_zero()) continue;
        if (!g || !(*g == secs[k]))
            throw Error("superfield coefficient of sector " + secs[k].str() +
                        " is not homogeneous: " + coeff[k].str());
    }
}

namespace {

void check_labels(const Superfield& a, const Superfield& b) {
    const Ctx& ctx = a.coeff[0].ctx();
    if (ctx.get() != b.coeff[0].ctx().get())
        throw Error("superfields live in different coordinate algebras");
    for (size_t s = 0; s < ctx->size(); ++s) {
        bool in_a = false, in_b = false;
        for (int k = 0; k < 4; ++k) {
            in_a = in_a || a.coeff[k].uses_symbol(int(s));
            in_b = in_b || b.coeff[k].uses_symbol(int(s));
        }
        if (in_a && in_b)
            throw Error("point label collision: both fields use " + ctx->info(int(s)).name);
    }
}

template <class Constants>
Superfield commutator_impl(const Constants& c, GradingKind kind, const Superfield& a,
                           const Superfield& b, bool require_disjoint) {
    a.check_homogeneous();
    b.check_homogeneous();
    if (require_disjoint) check_labels(a, b);
    const Ctx& ctx = a.coeff[0].ctx();
    Superfield out = Superfield::zero(ctx);
    auto secs = sector_gradings();
    for (int i = 0; i < 4; ++i) {
        if (a.coeff[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.coeff[j].is_zero()) continue;
            Elem4 br = bracket_eval(c, i, j);
            if (elem_is_zero(br)) continue;
            GradedPoly uv = a.coeff[i] * b.coeff[j];
            if (bracket_sign(kind, secs[i], secs[j]) < 0) uv = -uv;
            for (int k = 0; k < 4; ++k)
                if (!br[k].is_zero()) out.coeff[k] = out.coeff[k] + uv.scaled(br[k]);
        }
    }
    return out;
}

}  // namespace

Superfield superfield_commutator(const AlgebraConstants& c, const Superfield& a,
                                 const Superfield& b, bool require_disjoint) {
    return commutator_impl(c, GradingKind::Z2Z2Algebra, a, b, require_disjoint);
}

Superfield superfield_commutator(const SuperalgebraConstants& c, const Superfield& a,
                                 const Superfield& b, bool require_disjoint) {
    return commutator_impl(c, GradingKind::Z2Z2Superalgebra, a, b, require_disjoint);
}

// ---------------------------------------------------------------------------

PowerSeries bch_series(int order) {
    Field f = Field::Real;
    // k(x) = (e^x - 1)/x; the coefficients are 1/(n+1)!
    PowerSeries k(f, order + 1);
    BigRat fact = 1;
    for (int n = 0; n <= order + 1; ++n) {
        fact *= (n + 1);
        k.set_coeff(n, Scalar(BigRat(1) / fact, f));
    }
    PowerSeries inv = k.inverse();
    PowerSeries out(f, order);
    for (int n = 0; n <= order; ++n) out.set_coeff(n, inv.coeff(n + 1));
    return out;
}

std::vector<Scalar> bch_coefficients(int n) {
    PowerSeries s = bch_series(n);
    std::vector<Scalar> out;
    for (int k = 0; k <= n; ++k) out.push_back(s.coeff(k));
    return out;
}

PowerSeries shifted_solution_series(const Scalar& C, int order) {
    Field f = C.mode();
    if (C.is_zero()) throw Error("shifted solution needs C != 0");
    // h(x) = (1 - e^{-Cx})/x = sum (-1)^n C^{n+1} x^n / (n+1)!
    PowerSeries h(f, order + 1);
    Scalar cpow = C;
    BigRat fact = 1;
    for (int n = 0; n <= order + 1; ++n) {
        fact *= (n + 1);
        Scalar coeff = cpow * Scalar(BigRat(1) / fact, f);
        if (n & 1) coeff = -coeff;
        h.set_coeff(n, coeff);
        cpow = cpow * C;
    }
    PowerSeries inv = h.inverse();  // f_C = (C/h - 1)/x
    PowerSeries out(f, order);
    for (int n = 0; n <= order; ++n) out.set_coeff(n, C * inv.coeff(n + 1));
    return out;
}

PowerSeries riccati_residual(const Scalar& C, const PowerSeries& f) {
    int n = f.order();
    PowerSeries x = PowerSeries::identity(f.mode(), n);
    PowerSeries xfp(f.mode(), n);  // x f' has exact coefficients k*f_k
    for (int k = 1; k <= n; ++k) xfp.set_coeff(k, f.coeff(k) * Scalar(k, f.mode()));
    PowerSeries one = PowerSeries::constant(Scalar::one(f.mode()), n);
    PowerSeries two_f = f * Scalar(2, f.mode());
    PowerSeries xf2 = (x * f * f).truncate(n);
    PowerSeries rhs = (one + (x * f).truncate(n)) * C;
    return xfp + two_f + xf2 - rhs;
}

// ---------------------------------------------------------------------------

TwoPointModel two_point_model(GradingKind kind, Field f) {
    auto raw = std::make_shared<GradedContext>(kind, f);
    bool super = kind == GradingKind::Z2Z2Superalgebra;
    const char* names_a[4] = {"xA", "thA", "etA", "sA"};
    const char* names_w[4] = {"xA", "w1A", "w2A", "w3A"};
    const char* names_b[4] = {"xB", "thB", "etB", "sB"};
    const char* names_wb[4] = {"xB", "w1B", "w2B", "w3B"};
    auto secs = sector_gradings();
    TwoPointModel m;
    for (int k = 0; k < 4; ++k)
        m.a_coord[k] = raw->add_symbol(super ? names_a[k] : names_w[k], secs[k], 1);
    for (int k = 0; k < 4; ++k)
        m.b_coord[k] = raw->add_symbol(super ? names_b[k] : names_wb[k], secs[k], 2);
    m.ctx = raw;
    m.phi_a = Superfield::zero(m.ctx);
    m.phi_b = Superfield::zero(m.ctx);
    for (int k = 0; k < 4; ++k) {
        m.phi_a.coeff[k] = GradedPoly::symbol(m.ctx, m.a_coord[k]);
        m.phi_b.coeff[k] = GradedPoly::symbol(m.ctx, m.b_coord[k]);
    }
    return m;
}

Superfield printed_two_point(const AlgebraConstants& c, const TwoPointModel& m) {
    auto S = [&](int k, bool bpoint) {
        return GradedPoly::symbol(m.ctx, bpoint ? m.b_coord[k] : m.a_coord[k]);
    };
    GradedPoly xA = S(0, false), xB = S(0, true);
    GradedPoly w1A = S(1, false), w2A = S(2, false), w3A = S(3, false);
    GradedPoly w1B = S(1, true), w2B = S(2, true), w3B = S(3, true);
    Superfield out = Superfield::zero(m.ctx);
    out.coeff[1] =
        (xA * w1B - w1A * xB).scaled(c.b[0]) - (w2A * w3B + w3A * w2B).scaled(c.d[0]);
    out.coeff[2] =
        (xA * w2B - w2A * xB).scaled(c.b[1]) - (w3A * w1B + w1A * w3B).scaled(c.d[1]);
    // the second weight term reads w2A*w1B in the printed formula
    out.coeff[3] =
        (xA * w3B - w2A * w1B).scaled(c.b[2]) - (w1A * w2B + w2A * w1B).scaled(c.d[2]);
    return out;
}

Superfield printed_two_point(const SuperalgebraConstants& c, const TwoPointModel& m) {
    auto S = [&](int k, bool bpoint) {
        return GradedPoly::symbol(m.ctx, bpoint ? m.b_coord[k] : m.a_coord[k]);
    };
    GradedPoly xA = S(0, false), thA = S(1, false), etA = S(2, false), sA = S(3, false);
    GradedPoly xB = S(0, true), thB = S(1, true), etB = S(2, true), sB = S(3, true);
    Superfield out = Superfield::zero(m.ctx);
    out.coeff[0] = -(thA * thB).scaled(c.alpha1) - (etA * etB).scaled(c.alpha2);
    out.coeff[1] = (xA * thB - xB * thA).scaled(c.a1) - (etA * sB + sA * etB).scaled(c.beta2);
    out.coeff[2] = (xA * etB - xB * etA).scaled(c.a2) - (thA * sB + sA * thB).scaled(c.beta1);
    out.coeff[3] = (xA * sB - sA * xB).scaled(c.b) + (thA * etB - etA * thB).scaled(c.c);
    return out;
}

// ---------------------------------------------------------------------------

GradedPoly CovariantDerivative::apply(const GradedPoly& p) const {
    GradedPoly out(p.ctx());
    for (const auto& [coeff, sym] : terms) out = out + coeff * p.derivative(sym);
    return out;
}

GradedPoly bracket_apply(const CovariantDerivative& a, const CovariantDerivative& b,
                         const GradedPoly& p) {
    GradedPoly ab = a.apply(b.apply(p)), ba = b.apply(a.apply(p));
    GradingKind kind = p.ctx()->kind();
    return bracket_kind(kind, a.grading, b.grading) == BracketKind::Anticommutator ? ab + ba
                                                                                   : ab - ba;
}

namespace {

GradedPoly series_in_symbol(const Ctx& ctx, int sym, const PowerSeries& s) {
    GradedPoly out(ctx);
    GradedMono m{};
    for (int n = 0; n <= s.order(); ++n) {
        if (!s.coeff(n).is_zero()) {
            GradedMono mm = n == 0 ? GradedMono{} : GradedMono{{sym, n}};
            out.add_term(mm, s.coeff(n));
        }
    }
    return out;
}

}  // namespace

SuperspaceModel superspace_model(SuperspaceCase cs, const Scalar& eps, int order) {
    Field f = Field::Real;
    bool super = cs == SuperspaceCase::S10;
    auto raw = std::make_shared<GradedContext>(
        super ? GradingKind::Z2Z2Superalgebra : GradingKind::Z2Z2Algebra, f);
    auto secs = sector_gradings();
    const char* names_s[4] = {"x", "th", "et", "s"};
    const char* names_w[4] = {"x", "w1", "w2", "w3"};
    SuperspaceModel m;
    for (int k = 0; k < 4; ++k)
        m.coord[k] = raw->add_symbol(super ? names_s[k] : names_w[k], secs[k]);
    if (cs == SuperspaceCase::A8) raw->set_cap(m.coord[0], order);
    m.ctx = raw;
    m.order = order;

    auto sym = [&](int k) { return GradedPoly::symbol(m.ctx, m.coord[k]); };
    auto one = [&] { return GradedPoly::scalar(m.ctx, Scalar::one(f)); };
    Scalar half(1, 2, f);

    for (int k = 0; k < 4; ++k) m.d[k] = CovariantDerivative{secs[k], {{one(), m.coord[k]}}};
    switch (cs) {
        case SuperspaceCase::S10:
            if (!(eps * eps).is_one()) throw Error("S10 needs eps = +-1");
            m.d[1].terms.push_back({sym(1).scaled(-half * eps), m.coord[0]});
            m.d[1].terms.push_back({sym(2).scaled(half), m.coord[3]});
            m.d[2].terms.push_back({sym(2).scaled(-half), m.coord[0]});
            m.d[2].terms.push_back({sym(1).scaled(-half), m.coord[3]});
            break;
        case SuperspaceCase::A4:
            m.d[1].terms.push_back({sym(2).scaled(-half), m.coord[3]});
            m.d[2].terms.push_back({sym(1).scaled(-half), m.coord[3]});
            break;
        case SuperspaceCase::A8: {
            PowerSeries fser = bch_series(order);
            GradedPoly fx = series_in_symbol(m.ctx, m.coord[0], fser);
            m.d[0].terms.push_back({-(sym(3) * fx), m.coord[3]});
            m.d[3] = CovariantDerivative{secs[3], {{one() + sym(0) * fx, m.coord[3]}}};
            break;
        }
    }
    return m;
}

// ---------------------------------------------------------------------------

TransformationModel transformation_model(SuperspaceCase cs, const Scalar& eps, int order) {
    Field f = Field::Real;
    bool super = cs == SuperspaceCase::S10;
    auto raw = std::make_shared<GradedContext>(
        super ? GradingKind::Z2Z2Superalgebra : GradingKind::Z2Z2Algebra, f);
    auto secs = sector_gradings();
    const char* names_s[4] = {"x", "th", "et", "s"};
    const char* names_w[4] = {"x", "w1", "w2", "w3"};
    const char* par_s[4] = {"ep", "nu", "rho", "sig"};
    const char* par_w[4] = {"ep", "d1", "d2", "d3"};
    TransformationModel m;
    for (int k = 0; k < 4; ++k)
        m.coord[k] = raw->add_symbol(super ? names_s[k] : names_w[k], secs[k], 1);
    for (int k = 0; k < 4; ++k)
        m.param[k] = raw->add_symbol(super ? par_s[k] : par_w[k], secs[k], 2);
    if (cs == SuperspaceCase::A8) raw->set_cap(m.coord[0], order);
    m.ctx = raw;
    m.order = order;
    m.phi = Superfield::zero(m.ctx);
    m.lam = Superfield::zero(m.ctx);
    for (int k = 0; k < 4; ++k) {
        m.phi.coeff[k] = GradedPoly::symbol(m.ctx, m.coord[k]);
        m.lam.coeff[k] = GradedPoly::symbol(m.ctx, m.param[k]);
    }
    Field ff = f;
    switch (cs) {
        case SuperspaceCase::S10: {
            TableLabel l{AlgebraKind::Superalgebra, 10, eps.sign(), {}};
            m.constants = table2_entry(l, ff);
            break;
        }
        case SuperspaceCase::A4: {
            m.constants = table1_entry(TableLabel{AlgebraKind::Algebra, 4, std::nullopt, {}}, ff);
            break;
        }
        case SuperspaceCase::A8: {
            Scalar z0 = Scalar::zero(ff);
            m.constants =
                table1_entry(TableLabel{AlgebraKind::Algebra, 8, std::nullopt, {z0, z0}}, ff);
            break;
        }
    }
    return m;
}

std::array<GradedPoly, 4> infinitesimal_transformations(const TransformationModel& m) {
    std::vector<Scalar> cn = bch_coefficients(m.order);
    Superfield acc = m.lam;
    Superfield level = Superfield::zero(m.ctx);
    if (std::holds_alternative<AlgebraConstants>(m.constants)) {
        const auto& c = std::get<AlgebraConstants>(m.constants);
        level = superfield_commutator(c, m.phi, m.lam, false);
        for (int n = 0; n <= m.order && !level.is_zero(); ++n) {
            for (int k = 0; k < 4; ++k)
                acc.coeff[k] = acc.coeff[k] + level.coeff[k].scaled(cn[n]);
            level = superfield_commutator(c, m.phi, level, false);
        }
    } else {
        const auto& c = std::get<SuperalgebraConstants>(m.constants);
        level = superfield_commutator(c, m.phi, m.lam, false);
        for (int n = 0; n <= m.order && !level.is_zero(); ++n) {
            for (int k = 0; k < 4; ++k)
                acc.coeff[k] = acc.coeff[k] + level.coeff[k].scaled(cn[n]);
            level = superfield_commutator(c, m.phi, level, false);
        }
    }
    return {acc.coeff[0], acc.coeff[1], acc.coeff[2], acc.coeff[3]};
}

}  // namespace z2z2
