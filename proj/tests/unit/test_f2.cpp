#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "z4forms/errors.hpp"
#include "z4forms/f2.hpp"

using namespace z4;

namespace {

F2Matrix matrix_from_rows(std::size_t cols, const std::vector<std::uint32_t>& rows) {
    std::vector<F2Vector> vs;
    for (auto r : rows) vs.emplace_back(cols, r);
    return F2Matrix(cols, vs);
}

}  // namespace

TEST_CASE("vectors add coordinatewise and are their own inverses") {
    const F2Vector a(4, 0b1010);
    const F2Vector b(4, 0b0110);
    CHECK((a + b).bits() == 0b1100);
    CHECK((a + a).is_zero());
    CHECK(a.to_string() == "0101");
    CHECK(F2Vector::from_bits({0, 1, 0, 1}) == a);
    CHECK(a.pivot() == 1);
    CHECK(F2Vector(3).pivot() == 3);
    CHECK_THROWS_AS(a + F2Vector(3), ContractViolation);
    CHECK_THROWS_AS(F2Vector(33), ContractViolation);
    CHECK_THROWS_AS(F2Vector(2, 0b100), ContractViolation);
}

TEST_CASE("rank examples") {
    CHECK(rank(F2Matrix(3, 3)) == 0);
    CHECK(rank(F2Matrix::identity(4)) == 4);
    CHECK(rank(matrix_from_rows(2, {0b11, 0b11})) == 1);
}

TEST_CASE("solve examples") {
    auto x = solve(F2Matrix::identity(2), F2Vector(2, 0b01));
    REQUIRE(x);
    CHECK(*x == F2Vector(2, 0b01));

    CHECK_FALSE(solve(F2Matrix(1, 1), F2Vector(1, 0b1)));

    // rows (1,1), b = 0: free variable x1 = 0 forces x0 = 0.
    auto y = solve(matrix_from_rows(2, {0b11}), F2Vector(1, 0));
    REQUIRE(y);
    CHECK(y->is_zero());

    CHECK_THROWS_AS(solve(F2Matrix::identity(2), F2Vector(3)), ContractViolation);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(F2Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(F2Matrix(3, 3)) == Subspace::full(3));
    const Subspace k = kernel_basis(matrix_from_rows(2, {0b11}));
    CHECK(k == Subspace::span(2, {F2Vector(2, 0b11)}));
}

TEST_CASE("rank-nullity and solve round trip, exhaustive over small matrices") {
    // Every 3x3 matrix, plus random matrices up to 6x6.
    auto check = [](const F2Matrix& m, const std::vector<std::uint32_t>& rows) {
        const auto r = rank(m);
        CHECK(r == oracle::rank_by_span(rows));
        const Subspace k = kernel_basis(m);
        CHECK(r + k.dim() == m.cols());
        k.for_each_element([&](const F2Vector& x) { CHECK(m.apply(x).is_zero()); });
        for (std::uint32_t b = 0; b < (1U << m.rows()); ++b) {
            const F2Vector rhs(m.rows(), b);
            const auto x = solve(m, rhs);
            bool brute = false;
            for (std::uint32_t c = 0; c < (1U << m.cols()); ++c) {
                brute = brute || m.apply(F2Vector(m.cols(), c)) == rhs;
            }
            CHECK(x.has_value() == brute);
            if (x) CHECK(m.apply(*x) == rhs);
        }
    };
    for (std::uint32_t bits = 0; bits < (1U << 9); ++bits) {
        std::vector<std::uint32_t> rows{bits & 7U, (bits >> 3) & 7U, (bits >> 6) & 7U};
        check(matrix_from_rows(3, rows), rows);
    }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + rng() % 6;
        const std::size_t c = 1 + rng() % 6;
        std::vector<std::uint32_t> rows(r);
        for (auto& row : rows) row = rng() & ((1U << c) - 1U);
        check(matrix_from_rows(c, rows), rows);
    }
}

TEST_CASE("subspaces are canonical") {
    const auto a = Subspace::span(3, {F2Vector(3, 0b011), F2Vector(3, 0b110)});
    const auto b = Subspace::span(3, {F2Vector(3, 0b101), F2Vector(3, 0b011), F2Vector(3, 0)});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains(F2Vector(3, 0b101)));
    CHECK_FALSE(a.contains(F2Vector(3, 0b001)));
    int count = 0;
    a.for_each_element([&count](const F2Vector&) { ++count; });
    CHECK(count == 4);
}

TEST_CASE("subspace enumeration examples") {
    CHECK(enumerate_subspaces(2, 1).size() == 3);
    const auto zero = enumerate_subspaces(5, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.front() == Subspace(5));
    CHECK(enumerate_subspaces(4, 2).size() == 35);
    CHECK_THROWS_AS(enumerate_subspaces(13, 1), ResourceLimit);
    CHECK_THROWS_AS(enumerate_subspaces(3, 4), ContractViolation);
}

TEST_CASE("subspace enumeration matches brute-force counts and is duplicate free") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const auto all = enumerate_subspaces(n, k);
            const std::set<Subspace> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
            CHECK(all.size() == gaussian_binomial(n, k));
            if (n <= 5) CHECK(all.size() == oracle::count_subspaces(n, k));
            for (const auto& s : all) {
                CHECK(s.dim() == k);
                CHECK(Subspace::span(n, s.basis()) == s);
            }
        }
    }
    CHECK(gaussian_binomial(10, 5) == 109221651ULL);
}

TEST_CASE("enumeration can stop early") {
    int seen = 0;
    for_each_subspace(4, 2, [&seen](const Subspace&) { return ++seen < 5; });
    CHECK(seen == 5);
}
