#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobsig/matrix.hpp"

using namespace frobsig;

namespace {

FpMatrix from_rows(PrimeField F, const std::vector<std::vector<fp_t>>& rows) {
    FpMatrix m(F, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    PrimeField F(5);
    FpMatrix id(F, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(matrix_rank(id) == 3);

    FpMatrix z(F, 4, 2);
    CHECK(matrix_rank(z) == 0);

    CHECK(matrix_rank(from_rows(F, {{1, 2}, {2, 4}})) == 1);  // proportional rows
}

TEST_CASE("solve_linear basics and convention") {
    PrimeField F5(5);
    FpMatrix id(F5, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto x = solve_linear(id, {4, 2, 3});
    REQUIRE(x);
    CHECK(*x == std::vector<fp_t>{4, 2, 3});

    FpMatrix z(F5, 2, 2);
    CHECK(!solve_linear(z, {1, 0}));

    // [[1,1]] rhs [1] over F_3: free variable set to 0 -> [1,0]
    PrimeField F3(3);
    auto y = solve_linear(from_rows(F3, {{1, 1}}), {1});
    REQUIRE(y);
    CHECK(*y == std::vector<fp_t>{1, 0});
}

TEST_CASE("kernel basics") {
    PrimeField F2(2);
    FpMatrix id(F2, 2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK(kernel_basis(id).empty());

    FpMatrix z(F2, 3, 3);
    CHECK(kernel_basis(z).size() == 3);

    auto k = kernel_basis(from_rows(F2, {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<fp_t>{1, 1});
}

TEST_CASE("rank-nullity and solve verification on random matrices") {
    for (fp_t p : {2u, 3u, 5u, 7u}) {
        PrimeField F(p);
        std::mt19937 rng(p * 13);
        std::uniform_int_distribution<int> dim(1, 12), val(0, (int)p - 1);
        for (int trial = 0; trial < 120; ++trial) {
            size_t r = dim(rng), c = dim(rng);
            FpMatrix m(F, r, c);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) m.at(i, j) = (fp_t)val(rng);

            int rank = matrix_rank(m);
            auto kb = kernel_basis(m);
            CHECK(rank + (int)kb.size() == (int)c);

            // every kernel vector is killed by m
            for (const auto& v : kb) {
                for (size_t i = 0; i < r; ++i) {
                    fp_t s = 0;
                    for (size_t j = 0; j < c; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
                    CHECK(s == 0);
                }
            }

            // a solvable system: rhs = m * w
            std::vector<fp_t> w(c);
            for (auto& e : w) e = (fp_t)val(rng);
            std::vector<fp_t> rhs(r, 0);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < c; ++j) rhs[i] = F.add(rhs[i], F.mul(m.at(i, j), w[j]));
            auto x = solve_linear(m, rhs);
            REQUIRE(x);
            for (size_t i = 0; i < r; ++i) {
                fp_t s = 0;
                for (size_t j = 0; j < c; ++j) s = F.add(s, F.mul(m.at(i, j), (*x)[j]));
                CHECK(s == rhs[i]);
            }
        }
    }
}
