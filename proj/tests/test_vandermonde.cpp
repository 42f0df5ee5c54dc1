#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "expconv/vandermonde.hpp"

using namespace expconv;

namespace {

void check_entry(const VandermondeSystem& sys, int i, int j, Complex want) {
    CHECK(std::abs(sys.at(i, j) - want) < 1e-12);
}

} // namespace

TEST_CASE("root multiset merges and validates") {
    RootMultiset rm;
    rm.add(Complex{-1.0, 0.0});
    rm.add(Complex{-1.0, 0.0}, 2);
    rm.add(Complex{-2.0, 0.0});
    CHECK(rm.clusters().size() == 2);
    CHECK(rm.total() == 4);
    CHECK(rm.conjugate_closed());

    RootMultiset pair;
    pair.add(Complex{1.0, 2.0});
    CHECK_FALSE(pair.conjugate_closed());
    pair.add(Complex{1.0, -2.0});
    CHECK(pair.conjugate_closed());

    CHECK_THROWS_AS(RootMultiset({{Complex{1.0, 0.0}, 1}, {Complex{1.0, 0.0}, 1}}),
                    DuplicateRoots);
    CHECK_THROWS_AS(rm.add(Complex{3.0, 0.0}, 0), Error);
}

TEST_CASE("simple 2x2 system") {
    const std::array<Complex, 2> roots{Complex{-1.0, 0.0}, Complex{-2.0, 0.0}};
    VandermondeSystem sys = build_simple(roots);
    check_entry(sys, 0, 0, Complex{1.0, 0.0});
    check_entry(sys, 0, 1, Complex{1.0, 0.0});
    check_entry(sys, 1, 0, Complex{-1.0, 0.0});
    check_entry(sys, 1, 1, Complex{-2.0, 0.0});
    CHECK(sys.rhs[0] == Complex{});
    CHECK(sys.rhs[1] == Complex{1.0, 0.0});

    const auto& a = solve(sys);
    CHECK(std::abs(a[0] - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(a[1] - Complex{-1.0, 0.0}) < 1e-12);
    CHECK(sys.residual <= kResidualRelTol * (1.0 + rhs_inf_norm(sys)));
}

TEST_CASE("simple build rejects duplicate roots") {
    const std::array<Complex, 2> roots{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    CHECK_THROWS_AS(build_simple(roots), DuplicateRoots);
}

TEST_CASE("simple 3x3 squares complex nodes") {
    const std::array<Complex, 3> roots{Complex{-3.0, 0.0}, Complex{-2.0, 2.0},
                                       Complex{-2.0, -2.0}};
    VandermondeSystem sys = build_simple(roots);
    check_entry(sys, 2, 0, Complex{9.0, 0.0});
    check_entry(sys, 2, 1, Complex{0.0, -8.0}); // (-2+2i)^2
    check_entry(sys, 2, 2, Complex{0.0, 8.0});
}

TEST_CASE("confluent matrix for a triple root") {
    VandermondeSystem sys = build_confluent(RootMultiset::single(Complex{0.5, 0.0}, 3));
    // rows: [1 0 0; 0.5 1 0; 0.25 1 1]
    check_entry(sys, 0, 0, Complex{1.0, 0.0});
    check_entry(sys, 0, 1, Complex{});
    check_entry(sys, 1, 0, Complex{0.5, 0.0});
    check_entry(sys, 1, 1, Complex{1.0, 0.0});
    check_entry(sys, 1, 2, Complex{});
    check_entry(sys, 2, 0, Complex{0.25, 0.0});
    check_entry(sys, 2, 1, Complex{1.0, 0.0}); // C(2,1) 0.5
    check_entry(sys, 2, 2, Complex{1.0, 0.0});

    const auto& a = solve(sys);
    CHECK(std::abs(a[0]) < 1e-12);
    CHECK(std::abs(a[1]) < 1e-12);
    CHECK(std::abs(a[2] - Complex{1.0, 0.0}) < 1e-12);

    // initial data (-1, 2, 0.8) -> coefficients (-1, 2.5, -1.45)
    solve_with_rhs(sys, {Complex{-1.0, 0.0}, Complex{2.0, 0.0}, Complex{0.8, 0.0}});
    CHECK(std::abs((*sys.solution)[0] - Complex{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs((*sys.solution)[1] - Complex{2.5, 0.0}) < 1e-12);
    CHECK(std::abs((*sys.solution)[2] - Complex{-1.45, 0.0}) < 1e-12);
}

TEST_CASE("confluent matrix mixing simple and repeated clusters") {
    // {(-2i, 1), (2i, 3)}: binomial-weighted derivative columns
    RootMultiset rm;
    rm.add(Complex{0.0, -2.0}, 1);
    rm.add(Complex{0.0, 2.0}, 3);
    VandermondeSystem sys = build_confluent(rm);
    REQUIRE(sys.n == 4);
    const Complex j2{0.0, 2.0};
    // column 0: powers of -2i
    check_entry(sys, 0, 0, Complex{1.0, 0.0});
    check_entry(sys, 1, 0, Complex{0.0, -2.0});
    check_entry(sys, 2, 0, Complex{-4.0, 0.0});
    check_entry(sys, 3, 0, Complex{0.0, 8.0});
    // column 1: powers of 2i
    check_entry(sys, 1, 1, j2);
    check_entry(sys, 3, 1, Complex{0.0, -8.0});
    // column 2: C(i-1,1) (2i)^{i-2}
    check_entry(sys, 0, 2, Complex{});
    check_entry(sys, 1, 2, Complex{1.0, 0.0});
    check_entry(sys, 2, 2, Complex{0.0, 4.0});
    check_entry(sys, 3, 2, Complex{-12.0, 0.0});
    // column 3: C(i-1,2) (2i)^{i-3}
    check_entry(sys, 2, 3, Complex{1.0, 0.0});
    check_entry(sys, 3, 3, Complex{0.0, 6.0});

    const auto& a = solve(sys);
    CHECK(std::abs(a[0] - Complex{0.0, -0.015625}) < 1e-12);
    CHECK(std::abs(a[1] - Complex{0.0, 0.015625}) < 1e-12);
    CHECK(std::abs(a[2] - Complex{0.0625, 0.0}) < 1e-12);
    CHECK(std::abs(a[3] - Complex{0.0, -0.25}) < 1e-12);
}

TEST_CASE("order one system") {
    VandermondeSystem sys = build_confluent(RootMultiset::single(Complex{2.0, 1.0}));
    REQUIRE(sys.n == 1);
    check_entry(sys, 0, 0, Complex{1.0, 0.0});
    CHECK(sys.rhs[0] == Complex{1.0, 0.0});
    CHECK(std::abs(solve(sys)[0] - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("inverse reconstruction stays accurate") {
    const std::array<Complex, 4> roots{Complex{-1.0, 0.0}, Complex{0.5, 0.0}, Complex{0.0, 1.5},
                                       Complex{2.0, -0.5}};
    // solve against each identity column and verify V * V^{-1} = I
    std::array<std::vector<Complex>, 4> inv_cols;
    VandermondeSystem sys = build_simple(roots);
    for (int c = 0; c < 4; ++c) {
        std::vector<Complex> e(4, Complex{});
        e[static_cast<std::size_t>(c)] = Complex{1.0, 0.0};
        inv_cols[static_cast<std::size_t>(c)] = solve_with_rhs(sys, std::move(e));
        CHECK(sys.residual <= 1e-8 * (1.0 + rhs_inf_norm(sys)));
    }
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) {
            Complex acc{};
            for (int k = 0; k < 4; ++k)
                acc += sys.at(i, k) * inv_cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
            const Complex want = (i == c) ? Complex{1.0, 0.0} : Complex{};
            CHECK(std::abs(acc - want) < 1e-8);
        }
}

TEST_CASE("singular systems are reported") {
    VandermondeSystem sys;
    sys.n = 2;
    sys.matrix = {Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0}};
    sys.rhs = {Complex{}, Complex{1.0, 0.0}};
    sys.column_roots = {Complex{1.0, 0.0}, Complex{1.0 + 1e-15, 0.0}};
    CHECK_THROWS_AS(solve(sys), NumericallySingular);

    VandermondeSystem zero_row;
    zero_row.n = 2;
    zero_row.matrix = {Complex{}, Complex{}, Complex{1.0, 0.0}, Complex{2.0, 0.0}};
    zero_row.rhs = {Complex{}, Complex{1.0, 0.0}};
    CHECK_THROWS_AS(solve(zero_row), NumericallySingular);
}

TEST_CASE("rhs mismatch is rejected") {
    VandermondeSystem sys = build_confluent(RootMultiset::single(Complex{1.0, 0.0}, 2));
    CHECK_THROWS_AS(solve_with_rhs(sys, {Complex{1.0, 0.0}}), Error);
}
