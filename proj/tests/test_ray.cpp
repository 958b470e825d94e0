#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ks/ray.hpp"

using ks::QuadInt;
using ks::Ray;

namespace {

Ray make_ray(std::initializer_list<QuadInt> entries) {
    return Ray(std::vector<QuadInt>(entries));
}

Ray random_ray(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    std::vector<QuadInt> entries;
    for (;;) {
        entries.clear();
        for (std::size_t i = 0; i < dim; ++i) entries.emplace_back(d(rng), d(rng));
        for (const auto& e : entries) {
            if (!e.is_zero()) return Ray(entries);
        }
    }
}

QuadInt random_nonzero_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    for (;;) {
        QuadInt s(d(rng), d(rng));
        if (!s.is_zero()) return s;
    }
}

}  // namespace

TEST_CASE("construction") {
    const Ray r = Ray::from_ints({1, 0, 0, -1});
    CHECK(r.dim() == 4);
    CHECK(r[0] == QuadInt(1));
    CHECK(r[3] == QuadInt(-1));

    CHECK_THROWS_AS(Ray::from_ints({0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Ray(std::vector<QuadInt>{}), std::invalid_argument);
}

TEST_CASE("canonical forms") {
    CHECK(Ray::from_ints({0, 0, 2, -2}).canonical() == Ray::from_ints({0, 0, 1, -1}));
    CHECK(Ray::from_ints({-1, -1, 1, 1}).canonical() == Ray::from_ints({1, 1, -1, -1}));
    CHECK(Ray::from_ints({-3, 0, 0, 0}).canonical() == Ray::from_ints({1, 0, 0, 0}));
    CHECK(Ray::from_ints({6, -9}).canonical() == Ray::from_ints({2, -3}));

    // sqrt2 * (1, 1, 0, 0)
    CHECK(make_ray({QuadInt(0, 1), QuadInt(0, 1), QuadInt(0), QuadInt(0)}).canonical() ==
          Ray::from_ints({1, 1, 0, 0}));
    // (1 + sqrt2) * (1, 1, 0, 0)
    CHECK(make_ray({QuadInt(1, 1), QuadInt(1, 1), QuadInt(0), QuadInt(0)}).canonical() ==
          Ray::from_ints({1, 1, 0, 0}));
    // (1 - sqrt2) is negative, so the sign flips too.
    CHECK(make_ray({QuadInt(1, -1), QuadInt(0), QuadInt(2, -2), QuadInt(0)}).canonical() ==
          Ray::from_ints({1, 0, 2, 0}));
    // Leading zeros are skipped when picking the pivot.
    CHECK(make_ray({QuadInt(0), QuadInt(0, -2), QuadInt(2, 0), QuadInt(0)}).canonical() ==
          make_ray({QuadInt(0), QuadInt(2), QuadInt(0, -1), QuadInt(0)}).canonical());
}

TEST_CASE("canonicalization is idempotent and scale invariant") {
    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 400; ++i) {
        const Ray r = random_ray(rng, 4);
        const Ray c = r.canonical();

        CHECK(c.canonical() == c);
        CHECK(r.scaled(random_nonzero_scalar(rng)).canonical() == c);
        CHECK(r.scaled(QuadInt(-1)).canonical() == c);
        CHECK(r.scaled(QuadInt(0, 1)).canonical() == c);

        // Canonical invariants: positive pivot, primitive coefficients.
        std::size_t k = 0;
        while (c[k].is_zero()) ++k;
        CHECK(c[k].sign() > 0);
    }
}

TEST_CASE("equivalence") {
    const Ray r = Ray::from_ints({1, -1, 1, 1});
    CHECK(r.equivalent_to(Ray::from_ints({2, -2, 2, 2})));
    CHECK(r.equivalent_to(Ray::from_ints({-1, 1, -1, -1})));
    CHECK(r.equivalent_to(r.scaled(QuadInt(3, -1))));
    CHECK_FALSE(r.equivalent_to(Ray::from_ints({1, 1, 1, 1})));

    // operator== is exact on representatives, not on classes.
    CHECK_FALSE(r == Ray::from_ints({2, -2, 2, 2}));
}

TEST_CASE("scaling by zero is rejected") {
    CHECK_THROWS_AS(Ray::from_ints({1, 0}).scaled(QuadInt(0)), std::invalid_argument);
}

TEST_CASE("exact dot product") {
    const Ray u = Ray::from_ints({1, 1, 1, -1});
    const Ray v = Ray::from_ints({1, -1, 0, 0});
    const Ray w = Ray::from_ints({1, 1, -1, 1});

    CHECK(ks::dot(u, v) == QuadInt(0));
    CHECK(ks::dot(u, w) == QuadInt(0));
    CHECK(ks::dot(u, u) == QuadInt(4));
    CHECK(ks::dot(v, w) == QuadInt(0));

    // sqrt2 entries stay exact: (1, sqrt2) . (sqrt2, -1) = 0.
    const Ray a = make_ray({QuadInt(1), QuadInt(0, 1)});
    const Ray b = make_ray({QuadInt(0, 1), QuadInt(-1)});
    CHECK(ks::dot(a, b) == QuadInt(0));
    CHECK(ks::dot(a, a) == QuadInt(3));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Ray x = random_ray(rng, 3);
        const Ray y = random_ray(rng, 3);
        CHECK(ks::dot(x, y) == ks::dot(y, x));
    }

    CHECK_THROWS_AS(ks::dot(u, a), std::invalid_argument);
}

TEST_CASE("orthogonal basis check") {
    const std::vector<Ray> good = {
        Ray::from_ints({1, 0, 0, 0}),
        Ray::from_ints({0, 1, 0, 0}),
        Ray::from_ints({0, 0, 1, 1}),
        Ray::from_ints({0, 0, 1, -1}),
    };
    CHECK(ks::is_orthogonal_basis(good, 4));

    auto wrong_count = good;
    wrong_count.pop_back();
    const auto c1 = ks::check_orthogonal_basis(wrong_count, 4);
    CHECK_FALSE(c1.ok);
    CHECK(c1.why == ks::BasisCheck::Why::WrongCount);

    std::vector<Ray> bad = good;
    bad[1] = Ray::from_ints({1, 1, 0, 0});
    const auto c2 = ks::check_orthogonal_basis(bad, 4);
    CHECK_FALSE(c2.ok);
    CHECK(c2.why == ks::BasisCheck::Why::NotOrthogonal);
    REQUIRE(c2.offending.has_value());
    CHECK(c2.offending->first == 0);
    CHECK(c2.offending->second == 1);

    std::vector<Ray> mixed_dim = wrong_count;
    mixed_dim.push_back(Ray::from_ints({1, 0}));
    CHECK_THROWS_AS(ks::check_orthogonal_basis(mixed_dim, 4), std::invalid_argument);
}

TEST_CASE("string form") {
    CHECK(Ray::from_ints({1, 0, 0, -1}).str() == "(1, 0, 0, -1)");
    CHECK(make_ray({QuadInt(1, 1), QuadInt(0)}).str() == "(1:1, 0)");
}
