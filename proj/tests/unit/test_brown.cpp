#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "z4forms/brown.hpp"
#include "z4forms/errors.hpp"

using namespace z4;

namespace {

Enhancement torus(int a, int b) { return Enhancement(BilinearForm::hyperbolic(1), {Z4(a), Z4(b)}); }
Enhancement rp2(int a) { return Enhancement(BilinearForm::crosscaps(1), {Z4(a)}); }
Enhancement genus2(int a, int b, int c, int d) {
    return Enhancement(BilinearForm::hyperbolic(2), {Z4(a), Z4(b), Z4(c), Z4(d)});
}

int beta(const Enhancement& q) { return brown_invariant(q).beta.value(); }

std::multiset<int> census(const BilinearForm& form) {
    std::multiset<int> out;
    for_each_enhancement(form, [&out](const Enhancement& q) { out.insert(beta(q)); });
    return out;
}

int oracle_beta(const Enhancement& q) {
    oracle::Gram g(q.dim(), std::vector<int>(q.dim(), 0));
    std::vector<int> v;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        v.push_back(q.basis_values()[i].value());
        for (std::size_t j = 0; j < q.dim(); ++j) g[i][j] = q.form().gram().at(i, j) ? 1 : 0;
    }
    return oracle::beta_by_complex_gauss_sum(g, v);
}

}  // namespace

TEST_CASE("gauss_sum examples") {
    const auto g0 = gauss_sum(Enhancement(BilinearForm::hyperbolic(0), {}));
    CHECK(g0.a == 1);
    CHECK(g0.b == 0);
    const auto g1 = gauss_sum(rp2(1));
    CHECK(g1.a == 1);
    CHECK(g1.b == 1);
    const auto g2 = gauss_sum(torus(2, 2));
    CHECK(g2.a == -2);
    CHECK(g2.b == 0);
    CHECK(g2.counts == std::array<std::uint64_t, 4>{1, 0, 3, 0});
    CHECK_THROWS_AS(gauss_sum(Enhancement(BilinearForm::crosscaps(21), std::vector<Z4>(21, Z4(1)))),
                    ResourceLimit);
}

TEST_CASE("brown_invariant examples") {
    CHECK(beta(rp2(1)) == 1);
    CHECK(beta(rp2(3)) == 7);
    CHECK(beta(torus(2, 2)) == 4);
    CHECK(beta(torus(0, 0)) == 0);
    CHECK(beta(Enhancement(BilinearForm::hyperbolic(0), {})) == 0);
    CHECK_THROWS_AS(brown_invariant(Enhancement(BilinearForm(F2Matrix(1, 1)), {Z4(0)})), DegenerateForm);
}

TEST_CASE("decoding rejects pairs off the eight patterns") {
    GaussSumResult g;
    g.n = 2;
    g.a = 1;
    g.b = 1;
    CHECK_THROWS_AS(decode_gauss_sum(g), DegenerateForm);
    g.n = 3;
    g.a = 2;
    g.b = -2;
    CHECK(decode_gauss_sum(g).beta == Z8(7));
}

TEST_CASE("arf_from_brown examples") {
    CHECK(arf_from_brown(torus(0, 0)) == 0);
    CHECK(arf_from_brown(torus(2, 2)) == 1);
    CHECK(arf_from_brown(genus2(2, 2, 2, 2)) == 0);
    CHECK_THROWS_AS(arf_from_brown(rp2(1)), UnsupportedInput);
}

TEST_CASE("Brown invariant agrees with the floating-point Gauss sum oracle") {
    for (const auto& surface : standard_surfaces(8)) {
        for_each_enhancement(surface.form(), [](const Enhancement& q) { CHECK(beta(q) == oracle_beta(q)); });
    }
}

TEST_CASE("census of small surfaces") {
    CHECK(census(BilinearForm::crosscaps(1)) == std::multiset<int>{1, 7});
    CHECK(census(BilinearForm::crosscaps(2)) == std::multiset<int>{0, 0, 2, 6});
    CHECK(census(BilinearForm::hyperbolic(1)) == std::multiset<int>{0, 0, 0, 4});
    const auto g2 = census(BilinearForm::hyperbolic(2));
    CHECK(g2.count(0) == 10);
    CHECK(g2.count(4) == 6);
}

TEST_CASE("magnitude A^2 + B^2 = 2^n for nondegenerate enhancements") {
    for (const auto& surface : standard_surfaces(10)) {
        for_each_enhancement(surface.form(), [](const Enhancement& q) {
            const auto g = gauss_sum(q);
            CHECK(g.a * g.a + g.b * g.b == (std::int64_t{1} << g.n));
        });
    }
}

TEST_CASE("Brown invariant is additive under direct sum") {
    std::vector<Enhancement> pool;
    for (const auto& surface : standard_surfaces(4)) {
        for_each_enhancement(surface.form(), [&pool](const Enhancement& q) { pool.push_back(q); });
    }
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            CHECK(brown_invariant(direct_sum(a, b)).beta == brown_invariant(a).beta + brown_invariant(b).beta);
        }
    }
}

TEST_CASE("torsor sign calibration reproduces the frozen sign") {
    CHECK(calibrate_torsor_sign(2) == kTorsorDeltaSign);
    CHECK(calibrate_torsor_sign(4) == kTorsorDeltaSign);
}

TEST_CASE("torsor change formula") {
    // RP^2: v = 1 -> v = 3 moves beta from 1 to 7.
    const Covector y(F2Vector(1, 1));
    CHECK(measured_torsor_delta(rp2(1), y) == Z8(6));
    CHECK(predicted_torsor_delta(rp2(1), y) == Z8(6));

    for (const auto& surface : standard_surfaces(6)) {
        const auto& form = surface.form();
        for_each_enhancement(form, [&form](const Enhancement& q) {
            for (std::uint32_t bits = 0; bits < (1U << form.dim()); ++bits) {
                const Covector cov(F2Vector(form.dim(), bits));
                CHECK(measured_torsor_delta(q, cov) == predicted_torsor_delta(q, cov));
            }
        });
    }
}

TEST_CASE("surgery preserves the Brown invariant") {
    for (const auto& surface : standard_surfaces(6)) {
        const auto& form = surface.form();
        for_each_enhancement(form, [&form](const Enhancement& q) {
            for (std::uint32_t bits = 1; bits < (1U << form.dim()); ++bits) {
                const F2Vector c(form.dim(), bits);
                if (form.self(c) || eval_q(q, c) != Z4(0)) continue;
                CHECK(brown_invariant(isotropic_reduction(q, c)) == brown_invariant(q));
            }
        });
    }
    CHECK(beta(torus(2, 0)) == 0);
    CHECK(beta(isotropic_reduction(torus(2, 0), F2Vector(2, 0b10))) == 0);
}
