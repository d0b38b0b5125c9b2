#include "z2z2/structure.hpp"

#include <algorithm>

namespace z2z2 {

namespace {

Scalar conv(const Scalar& s, Field f) { return s.to_field(f); }

AlgebraConstants conv(const AlgebraConstants& c, Field f) {
    AlgebraConstants out;
    for (int k = 0; k < 3; ++k) {
        out.d[k] = conv(c.d[k], f);
        out.b[k] = conv(c.b[k], f);
    }
    return out;
}

SuperalgebraConstants conv(const SuperalgebraConstants& c, Field f) {
    return {conv(c.a1, f),    conv(c.a2, f),    conv(c.b, f),      conv(c.c, f),
            conv(c.beta1, f), conv(c.beta2, f), conv(c.alpha1, f), conv(c.alpha2, f)};
}

int sign_of(const Scalar& value) {
    auto r = sqrt_exact(value * value);
    return (value == *r) ? 1 : -1;  // sign relative to the principal root
}

struct DScales {
    std::array<Scalar, 3> sq;
    std::array<std::optional<int>, 3> branch;
};

// Generator rescalings with prescribed multipliers mu_k = l_i l_j / l_k on
// the d slots.  Unconstrained slots are free.  Over R the constrained
// multipliers must share a sign, otherwise no real rescaling exists.
std::optional<DScales> scales_from_mu(std::array<Scalar, 3> mu, std::array<bool, 3> constrained,
                                      Field f) {
    int sign_hint = 0;
    for (int k = 0; k < 3; ++k)
        if (constrained[k]) {
            if (mu[k].is_zero()) return std::nullopt;
            if (f == Field::Real) {
                int s = mu[k].sign();
                if (sign_hint && s != sign_hint) return std::nullopt;
                sign_hint = s;
            }
        }
    if (!sign_hint) sign_hint = 1;
    for (int k = 0; k < 3; ++k)
        if (!constrained[k]) mu[k] = Scalar(sign_hint, f);
    DScales out;
    for (int k = 0; k < 3; ++k) out.sq[k] = mu[(k + 1) % 3] * mu[(k + 2) % 3];
    for (int k = 0; k < 3; ++k) out.branch[k] = sign_of(mu[k]);
    return out;
}

// Witness scales from lambda_h, the odd squares and one anchor multiplier;
// the other root multipliers are forced by the square certificates.
SuperalgebraWitness make_super_scales(Field f, bool swap, const Scalar& lambda_h,
                                      const Scalar& sq1, const Scalar& sq2,
                                      std::optional<Scalar> m_c, std::optional<Scalar> m_b1,
                                      std::optional<Scalar> m_b2) {
    SuperalgebraWitness w = SuperalgebraWitness::identity(f);
    w.swap = swap;
    w.lambda_h = lambda_h;
    w.sq1 = sq1;
    w.sq2 = sq2;
    std::optional<Scalar> mc = m_c, mb1 = m_b1, mb2 = m_b2;
    if (mc) {
        w.sqz = sq1 * sq2 / (*mc * *mc);
        mb1 = sq1 / *mc;
        mb2 = sq2 / *mc;
    } else if (mb1) {
        w.sqz = *mb1 * *mb1 * sq2 / sq1;
        mc = sq1 / *mb1;
        mb2 = w.sqz / *mb1;
    } else if (mb2) {
        w.sqz = *mb2 * *mb2 * sq1 / sq2;
        mc = sq2 / *mb2;
        mb1 = w.sqz / *mb2;
    }
    if (mc) {
        w.branch_c = sign_of(*mc);
        w.branch_b1 = sign_of(*mb1);
        w.branch_b2 = sign_of(*mb2);
    }
    return w;
}

}  // namespace

// ---------------------------------------------------------------------------

Normalized<Z2Witness> classify_z2(const Z2Constants& c) {
    if (!jacobi_residuals_z2(c).is_zero())
        throw Error("inadmissible Z2 constants: r*s = " + jacobi_residuals_z2(c).str());
    Field f = c.field();
    TableLabel l;
    l.kind = AlgebraKind::Z2;
    Z2Witness w{Scalar::one(f), Scalar::one(f)};
    if (c.r.is_zero() && c.s.is_zero()) {
        l.family = 1;
    } else if (c.r.is_zero()) {
        l.family = 2;
        w.lambda_h = c.s;  // s' = s * lambda_q^2 / lambda_h
    } else {
        l.family = 3;
        w.lambda_h = c.r.inv();
    }
    if (!(apply_equivalence(c, w) == z2_entry(l, f))) throw Error("classify_z2: witness check failed");
    return {l, w};
}

// ---------------------------------------------------------------------------

Normalized<AlgebraWitness> normalize_algebra(const AlgebraConstants& input, Field field) {
    AlgebraConstants c = conv(input, field);
    Field f = field;
    if (!admissible(c)) throw Error("inadmissible algebra constants: " + c.str());

    const Scalar one = Scalar::one(f);
    std::vector<Normalized<AlgebraWitness>> cands;

    auto try_emit = [&](const TableLabel& label, const AlgebraWitness& w) {
        AlgebraConstants entry;
        try {
            entry = table1_entry(label, f);
        } catch (const Error&) {
            return;  // parameters outside the admissible range for this arrangement
        }
        if (!(apply_equivalence(c, w) == entry))
            throw Error("normalize_algebra: witness does not reach table entry for " + label.str());
        cands.push_back({label, w});
    };

    static const std::array<std::array<int, 3>, 6> all_perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    for (const auto& perm : all_perms) {
        AlgebraWitness base = AlgebraWitness::identity(f);
        base.perm = perm;
        AlgebraConstants p = apply_equivalence(c, base);

        int nd = 0;
        for (auto& x : p.d)
            if (!x.is_zero()) ++nd;
        bool bzero = p.b[0].is_zero() && p.b[1].is_zero() && p.b[2].is_zero();

        if (nd == 0) {
            if (bzero) {
                try_emit({AlgebraKind::Algebra, 7, std::nullopt, {}}, base);
            } else if (!p.b[2].is_zero() && p.b[0].norm_sq() <= p.b[1].norm_sq() &&
                       p.b[1].norm_sq() <= p.b[2].norm_sq()) {
                AlgebraWitness w = base;
                w.lambda_h = p.b[2].inv();
                try_emit({AlgebraKind::Algebra, 8, std::nullopt, {p.b[0] / p.b[2], p.b[1] / p.b[2]}},
                         w);
            }
        } else if (nd == 1) {
            if (!p.d[2].is_zero()) {
                Scalar t = p.d[2].inv();  // uniform rescaling multiplies each d slot by t
                AlgebraWitness w = AlgebraWitness::from_rescalings(perm, one, {t, t, t});
                if (bzero) {
                    try_emit({AlgebraKind::Algebra, 4, std::nullopt, {}}, w);
                } else if (p.b[2].is_zero()) {
                    if (!p.b[0].is_zero()) {
                        w.lambda_h = p.b[0].inv();
                        try_emit({AlgebraKind::Algebra, 5, std::nullopt, {}}, w);
                    }
                } else {
                    w.lambda_h = p.b[2].inv();
                    Scalar x = Scalar(1, 2, f) - p.b[0] / p.b[2];
                    try_emit({AlgebraKind::Algebra, 6, std::nullopt, {x}}, w);
                }
            }
        } else if (nd == 2) {
            if (p.d[0].is_zero()) {
                int eps = 1;
                if (f == Field::Real) eps = (p.d[1] * p.d[2]).sign();
                auto sc = scales_from_mu({one, Scalar(eps, f) / p.d[1], p.d[2].inv()},
                                         {false, true, true}, f);
                if (sc) {
                    AlgebraWitness w = base;
                    w.lambda_sq = sc->sq;
                    w.branch = sc->branch;
                    if (bzero) {
                        try_emit({AlgebraKind::Algebra, 2, eps, {}}, w);
                    } else if (!p.b[1].is_zero()) {
                        w.lambda_h = p.b[1].inv();
                        try_emit({AlgebraKind::Algebra, 3, eps, {}}, w);
                    }
                }
            }
        } else {
            int eps = 1;
            if (f == Field::Real) {
                int s1 = p.d[0].sign(), s2 = p.d[1].sign(), s3 = p.d[2].sign();
                eps = (s1 == s2 && s2 == s3) ? 1 : -1;
            }
            auto sc = scales_from_mu({Scalar(eps, f) / p.d[0], p.d[1].inv(), p.d[2].inv()},
                                     {true, true, true}, f);
            if (sc) {
                AlgebraWitness w = base;
                w.lambda_sq = sc->sq;
                w.branch = sc->branch;
                try_emit({AlgebraKind::Algebra, 1, eps, {}}, w);
            }
        }
    }

    if (cands.empty()) throw Error("normalize_algebra: no canonical form found for " + c.str());
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const auto& a, const auto& b) { return a.label < b.label; });
    return *best;
}

// ---------------------------------------------------------------------------

Normalized<SuperalgebraWitness> normalize_superalgebra(const SuperalgebraConstants& input,
                                                       Field field) {
    SuperalgebraConstants c = conv(input, field);
    Field f = field;
    if (!admissible(c)) throw Error("inadmissible superalgebra constants: " + c.str());

    const Scalar one = Scalar::one(f);
    std::vector<Normalized<SuperalgebraWitness>> cands;

    auto try_emit = [&](int family, std::optional<int> eps, std::vector<Scalar> params,
                        const SuperalgebraWitness& w) {
        TableLabel label{AlgebraKind::Superalgebra, family, eps, std::move(params)};
        SuperalgebraConstants entry;
        try {
            entry = table2_entry(label, f);
        } catch (const Error&) {
            return;
        }
        if (!(apply_equivalence(c, w) == entry))
            throw Error("normalize_superalgebra: witness does not reach table entry for " +
                        label.str());
        cands.push_back({label, w});
    };

    // eps of a pair (u, v) rescaled to (eps, 1) by squares: the relative sign.
    auto pair_eps = [&](const Scalar& u, const Scalar& v) {
        return f == Field::Real ? (u * v).sign() : 1;
    };

    for (bool sw : {false, true}) {
        SuperalgebraWitness base = SuperalgebraWitness::identity(f);
        base.swap = sw;
        SuperalgebraConstants s = apply_equivalence(c, base);

        auto emit = [&](int family, std::optional<int> eps, std::vector<Scalar> params,
                        SuperalgebraWitness rescale, bool extra_swap = false) {
            SuperalgebraWitness w = rescale;
            if (extra_swap) {
                SuperalgebraWitness sw_only = SuperalgebraWitness::identity(f);
                sw_only.swap = true;
                w = SuperalgebraWitness::compose(sw_only, rescale);
            }
            try_emit(family, eps, std::move(params), w);
        };

        auto mk = [&](const Scalar& lambda_h, const Scalar& sq1, const Scalar& sq2,
                      std::optional<Scalar> m_c, std::optional<Scalar> m_b1,
                      std::optional<Scalar> m_b2) {
            return make_super_scales(f, sw, lambda_h, sq1, sq2, m_c, m_b1, m_b2);
        };

        if (!s.c.is_zero()) {
            Scalar mc = s.c.inv();  // normalizes c to 1
            if (s.alpha1.is_zero() && s.alpha2.is_zero()) {
                if (s.a1.is_zero() && s.a2.is_zero()) {
                    emit(8, std::nullopt, {}, mk(one, one, one, mc, {}, {}));
                } else if (s.a1.is_zero()) {
                    emit(16, std::nullopt, {}, mk(s.a2.inv(), one, one, mc, {}, {}));
                } else if (!s.a2.is_zero() && s.a2.norm_sq() <= s.a1.norm_sq()) {
                    emit(21, std::nullopt, {s.a2 / s.a1}, mk(s.a1.inv(), one, one, mc, {}, {}));
                }
            } else if (!s.alpha1.is_zero() && !s.alpha2.is_zero()) {
                int eps = pair_eps(s.alpha1, s.alpha2);
                Scalar sq1 = Scalar(eps, f) * s.alpha2 / s.alpha1;
                emit(10, eps, {}, mk(s.alpha2, sq1, one, mc, {}, {}));
            } else if (!s.alpha1.is_zero()) {
                // alpha on side 1 forces a1 = 0; the nonzero-a2 case is S13.
                if (!s.a2.is_zero()) {
                    int eps = pair_eps(s.alpha1, s.a2);
                    Scalar lh = s.a2.inv();
                    Scalar sq1 = Scalar(eps, f) * lh / s.alpha1;
                    emit(13, eps, {}, mk(lh, sq1, one, mc, {}, {}));
                }
                // a2 == 0 is reached as S9 from the swapped arrangement
            } else {
                if (s.a1.is_zero()) emit(9, std::nullopt, {}, mk(s.alpha2, one, one, mc, {}, {}));
            }
        } else {
            bool no_alpha = s.alpha1.is_zero() && s.alpha2.is_zero();
            bool no_beta = s.beta1.is_zero() && s.beta2.is_zero();
            if (!s.alpha1.is_zero() && !s.alpha2.is_zero()) {
                int eps = pair_eps(s.alpha1, s.alpha2);
                Scalar sq1 = Scalar(eps, f) * s.alpha2 / s.alpha1;
                if (no_beta) {
                    emit(3, eps, {}, mk(s.alpha2, sq1, one, {}, {}, {}));
                } else if (!s.beta1.is_zero() && !s.beta2.is_zero()) {
                    emit(7, eps, {}, mk(s.alpha2, sq1, one, {}, {}, s.beta2.inv()));
                }
            } else if (!s.alpha2.is_zero() && s.alpha1.is_zero()) {
                if (s.a2.is_zero() && s.beta1.is_zero()) {
                    if (s.beta2.is_zero())
                        emit(2, std::nullopt, {}, mk(s.alpha2, one, one, {}, {}, {}));
                    else
                        emit(5, std::nullopt, {}, mk(s.alpha2, one, one, {}, {}, s.beta2.inv()));
                }
            } else if (no_alpha && !s.beta1.is_zero() && !s.beta2.is_zero()) {
                int eps = pair_eps(s.beta1, s.beta2);
                if (s.a1.is_zero()) {
                    // S6 wants (beta1', beta2') = (eps, 1)
                    Scalar sq1 = Scalar(eps, f) * s.beta2 / s.beta1;
                    emit(6, eps, {}, mk(one, sq1, one, {}, {}, s.beta2.inv()));
                } else {
                    // S20 wants (beta1', beta2') = (1, eps)
                    Scalar sq1 = s.beta2 / (Scalar(eps, f) * s.beta1);
                    emit(20, eps, {}, mk(s.a1.inv(), sq1, one, {}, s.beta1.inv(), {}));
                }
            } else if (no_alpha && !s.beta2.is_zero() && s.beta1.is_zero()) {
                Scalar mb2 = s.beta2.inv();
                if (s.a1.is_zero() && s.a2.is_zero()) {
                    emit(4, std::nullopt, {}, mk(one, one, one, {}, {}, mb2));
                } else if (s.a1.is_zero()) {
                    emit(14, std::nullopt, {}, mk(s.a2.inv(), one, one, {}, {}, mb2));
                } else if (s.a2.is_zero()) {
                    emit(15, std::nullopt, {}, mk(s.a1.inv(), one, one, {}, {}, mb2),
                         /*extra_swap=*/true);
                } else {
                    emit(19, std::nullopt, {s.a2 / s.a1}, mk(s.a1.inv(), one, one, {}, {}, mb2));
                }
            } else if (no_alpha && no_beta) {
                bool b0 = s.b.is_zero();
                if (s.a1.is_zero() && s.a2.is_zero()) {
                    if (b0)
                        emit(1, std::nullopt, {}, mk(one, one, one, {}, {}, {}));
                    else
                        emit(11, std::nullopt, {}, mk(s.b.inv(), one, one, {}, {}, {}));
                } else if (s.a1.is_zero()) {
                    Scalar lh = s.a2.inv();
                    if (b0)
                        emit(12, std::nullopt, {}, mk(lh, one, one, {}, {}, {}));
                    else
                        emit(17, std::nullopt, {s.b / s.a2}, mk(lh, one, one, {}, {}, {}));
                } else if (!s.a2.is_zero() && s.a2.norm_sq() <= s.a1.norm_sq()) {
                    emit(18, std::nullopt, {s.a2 / s.a1, s.b / s.a1},
                         mk(s.a1.inv(), one, one, {}, {}, {}));
                }
            }
        }
    }

    if (cands.empty())
        throw Error("normalize_superalgebra: no canonical form found for " + c.str());
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const auto& a, const auto& b) { return a.label < b.label; });
    return *best;
}

}  // namespace z2z2
