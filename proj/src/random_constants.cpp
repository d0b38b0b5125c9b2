#include "z2z2/structure.hpp"

#include <algorithm>

namespace z2z2 {

static BigRat random_rat(Rng& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return BigRat(n, den(rng));
}

Scalar random_rational(Rng& rng, Field f, bool nonzero) {
    if (f == Field::Real) return Scalar(random_rat(rng, nonzero), f);
    std::uniform_int_distribution<int> coin(0, 3);
    int kind = coin(rng);  // 0: real, 1: imaginary, 2-3: generic
    BigRat re = kind == 1 ? BigRat(0) : random_rat(rng, nonzero && kind != 3);
    BigRat im = kind == 0 ? BigRat(0) : random_rat(rng, nonzero && (kind == 1 || re == 0));
    return Scalar::complex(re, im);
}

static std::array<int, 3> random_perm3(Rng& rng) {
    std::array<int, 3> p{0, 1, 2};
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

AlgebraConstants random_admissible_algebra(Rng& rng, Field f) {
    Scalar z0 = Scalar::zero(f);
    AlgebraConstants c{{z0, z0, z0}, {z0, z0, z0}};
    std::uniform_int_distribution<int> branch(0, 3);
    switch (branch(rng)) {
        case 0:  // d = 0, b free
            for (auto& x : c.b) x = random_rational(rng, f);
            break;
        case 1:  // one anticommutator: b3 = b1 + b2
            c.d[2] = random_rational(rng, f, true);
            c.b[0] = random_rational(rng, f);
            c.b[1] = random_rational(rng, f);
            c.b[2] = c.b[0] + c.b[1];
            break;
        case 2:  // two anticommutators: b1 = 0, b2 = b3
            c.d[1] = random_rational(rng, f, true);
            c.d[2] = random_rational(rng, f, true);
            c.b[1] = c.b[2] = random_rational(rng, f);
            break;
        default:  // all three: b = 0
            for (auto& x : c.d) x = random_rational(rng, f, true);
            break;
    }
    auto perm = random_perm3(rng);
    AlgebraConstants out = c;
    for (int k = 0; k < 3; ++k) {
        out.d[k] = c.d[perm[k]];
        out.b[k] = c.b[perm[k]];
    }
    return out;
}

SuperalgebraConstants random_admissible_superalgebra(Rng& rng, Field f) {
    Scalar z0 = Scalar::zero(f);
    SuperalgebraConstants c{z0, z0, z0, z0, z0, z0, z0, z0};
    std::uniform_int_distribution<int> branch(0, 9);
    auto nz = [&] { return random_rational(rng, f, true); };
    auto any = [&] { return random_rational(rng, f); };
    switch (branch(rng)) {
        case 0:  // central extension with both odd squares
            c.c = nz();
            c.alpha1 = nz();
            c.alpha2 = nz();
            break;
        case 1:  // central extension, one odd square, weighted sector
            c.a2 = nz();
            c.alpha1 = nz();
            c.c = nz();
            c.b = c.a2;
            c.beta1 = c.alpha1 * c.a2 / c.c;
            break;
        case 2:  // central extension, weights only: b = a1 + a2
            c.a1 = any();
            c.a2 = any();
            c.c = nz();
            c.b = c.a1 + c.a2;
            break;
        case 3:  // odd squares with parallel Z-action
        {
            c.alpha1 = nz();
            c.alpha2 = nz();
            Scalar t = nz();
            c.beta1 = t * c.alpha1;
            c.beta2 = t * c.alpha2;
            break;
        }
        case 4:  // odd squares only
            c.alpha1 = nz();
            c.alpha2 = nz();
            break;
        case 5:  // single odd square, optional beta on the same side
            c.alpha2 = nz();
            if (rng() & 1) c.beta2 = nz();
            break;
        case 6:  // Z exchanging both odd sectors: a1 = a2, b = 0
            c.beta1 = nz();
            c.beta2 = nz();
            c.a1 = c.a2 = any();
            break;
        case 7:  // Z mapping one odd sector: b = a1 - a2
            c.beta2 = nz();
            c.a1 = any();
            c.a2 = any();
            c.b = c.a1 - c.a2;
            break;
        case 8:  // weights only
            c.a1 = any();
            c.a2 = any();
            c.b = any();
            break;
        default: {  // scrambled catalog row
            std::uniform_int_distribution<int> fam(1, 21);
            TableLabel l{AlgebraKind::Superalgebra, fam(rng), std::nullopt, {}};
            bool needs_eps = l.family == 3 || l.family == 6 || l.family == 7 || l.family == 10 ||
                             l.family == 13 || l.family == 20;
            if (needs_eps) l.eps = (rng() & 1) ? 1 : -1;
            if (l.family == 17 || l.family == 19) l.params = {random_rational(rng, f, true)};
            if (l.family == 18 || l.family == 21) {
                std::uniform_int_distribution<int> num(1, 8), den(8, 12);
                Scalar y(num(rng), den(rng), f);
                if (rng() & 1) y = -y;
                if (l.family == 18)
                    l.params = {y, random_rational(rng, f)};
                else
                    l.params = {y};
            }
            c = table2_entry(l, f);
            break;
        }
    }
    return apply_equivalence(c, random_superalgebra_witness(rng, f));
}

Z2Constants random_admissible_z2(Rng& rng, Field f) {
    Z2Constants c{Scalar::zero(f), Scalar::zero(f)};
    switch (rng() % 3) {
        case 0: break;
        case 1: c.s = random_rational(rng, f, true); break;
        default: c.r = random_rational(rng, f, true); break;
    }
    return c;
}

AlgebraWitness random_algebra_witness(Rng& rng, Field f) {
    std::array<Scalar, 3> lambda;
    for (auto& l : lambda) l = random_rational(rng, f, true);
    return AlgebraWitness::from_rescalings(random_perm3(rng), random_rational(rng, f, true),
                                           lambda);
}

SuperalgebraWitness random_superalgebra_witness(Rng& rng, Field f) {
    return SuperalgebraWitness::from_rescalings(
        rng() & 1, random_rational(rng, f, true), random_rational(rng, f, true),
        random_rational(rng, f, true), random_rational(rng, f, true));
}

// ---------------------------------------------------------------------------
// Deterministic sample grids over every catalog row.

static std::vector<Scalar> grid_x_nonneg(Field f) {
    std::vector<Scalar> xs;
    for (int k = 0; k <= 21; ++k) xs.push_back(Scalar(k, 8, f));
    xs.push_back(Scalar(1, 20, f));
    xs.push_back(Scalar(7, 3, f));
    xs.push_back(Scalar(19, 4, f));
    xs.push_back(Scalar(5, 1, f));
    if (f == Field::Complex) {
        xs.push_back(Scalar::complex(0, 1));
        xs.push_back(Scalar::complex(BigRat(1, 2), BigRat(1, 3)));
        xs.push_back(Scalar::complex(BigRat(-2, 3), BigRat(1, 5)));
        xs.push_back(Scalar::complex(BigRat(3), BigRat(7, 2)));
    }
    return xs;
}

static std::vector<Scalar> grid_x_nonzero(Field f) {
    std::vector<Scalar> xs;
    for (int k = 1; k <= 13; ++k) {
        xs.push_back(Scalar(k, 6, f));
        xs.push_back(Scalar(-k, 6, f));
    }
    xs.push_back(Scalar(1, f));
    if (f == Field::Complex) {
        xs.push_back(Scalar::complex(0, 1));
        xs.push_back(Scalar::complex(BigRat(2, 3), BigRat(-5, 4)));
    }
    return xs;
}

std::vector<TableLabel> table1_samples(Field f) {
    std::vector<TableLabel> out;
    auto A = [&](int fam, std::optional<int> eps, std::vector<Scalar> params = {}) {
        out.push_back({AlgebraKind::Algebra, fam, eps, std::move(params)});
    };
    for (int e : {1, -1}) {
        A(1, e);
        A(2, e);
        A(3, e);
    }
    A(4, std::nullopt);
    A(5, std::nullopt);
    A(7, std::nullopt);
    for (const Scalar& x : grid_x_nonneg(f)) A(6, std::nullopt, {x});
    // (y,z) grid including the |y| = |z|, |z| = 1 and y = 0 boundaries
    std::vector<Scalar> zs;
    for (int k : {8, 6, 4, 3, 1}) {
        zs.push_back(Scalar(k, 8, f));
        zs.push_back(Scalar(-k, 8, f));
    }
    for (const Scalar& z : zs) {
        std::vector<Scalar> ys = {Scalar(0, f), z, -z};
        Scalar half = z * Scalar(1, 2, f);
        ys.push_back(half);
        ys.push_back(-half);
        for (const Scalar& y : ys) A(8, std::nullopt, {y, z});
    }
    if (f == Field::Complex) {
        A(8, std::nullopt, {Scalar::complex(0, BigRat(1, 2)), Scalar::complex(BigRat(1, 2), BigRat(1, 2))});
        A(8, std::nullopt, {Scalar::complex(BigRat(1, 4), BigRat(-1, 4)), Scalar::complex(0, 1)});
    }
    return out;
}

std::vector<TableLabel> table2_samples(Field f) {
    std::vector<TableLabel> out;
    auto S = [&](int fam, std::optional<int> eps, std::vector<Scalar> params = {}) {
        out.push_back({AlgebraKind::Superalgebra, fam, eps, std::move(params)});
    };
    for (int fam : {1, 2, 4, 5, 8, 9, 11, 12, 14, 15, 16}) S(fam, std::nullopt);
    for (int e : {1, -1})
        for (int fam : {3, 6, 7, 10, 13, 20}) S(fam, e);
    for (const Scalar& x : grid_x_nonzero(f)) S(17, std::nullopt, {x});
    for (const Scalar& x : grid_x_nonzero(f)) S(19, std::nullopt, {x});
    // y in (0,1] by modulus (both signs), z unconstrained
    std::vector<Scalar> ys;
    for (int k : {8, 5, 3, 1}) {
        ys.push_back(Scalar(k, 8, f));
        ys.push_back(Scalar(-k, 8, f));
    }
    std::vector<Scalar> zs = {Scalar(0, f), Scalar(1, f), Scalar(-7, 3, f), Scalar(5, 2, f)};
    for (const Scalar& y : ys) {
        for (const Scalar& z : zs) S(18, std::nullopt, {y, z});
        S(21, std::nullopt, {y});
    }
    for (int k : {7, 6, 4, 2}) {
        S(21, std::nullopt, {Scalar(k, 9, f)});
        S(21, std::nullopt, {Scalar(-k, 9, f)});
    }
    if (f == Field::Complex) {
        Scalar yi = Scalar::complex(0, BigRat(1, 2));
        S(18, std::nullopt, {yi, Scalar::complex(BigRat(1, 3), BigRat(2, 5))});
        S(21, std::nullopt, {yi});
        S(21, std::nullopt, {Scalar::complex(BigRat(3, 5), BigRat(4, 5))});
    }
    return out;
}

std::vector<TableLabel> z2_samples() {
    std::vector<TableLabel> out;
    for (int fam : {1, 2, 3}) out.push_back({AlgebraKind::Z2, fam, std::nullopt, {}});
    return out;
}

}  // namespace z2z2
