#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ks/coloring.hpp"
#include "ks/ksset.hpp"
#include "ks/pauli.hpp"

using ks::Assignment;
using ks::ColoringOptions;
using ks::Context;
using ks::KSSet;
using ks::QuadInt;
using ks::Ray;

namespace {

const std::string kDataDir = KS_DATA_DIR;

// Pinned count for the bundled set with its last context removed; the test
// cross-checks it against both search routes.
constexpr std::uint64_t kMinusC9Count = 26u;

KSSet load_table1() { return ks::load_ksset(kDataDir + "/table1.ks"); }

KSSet build_set(std::size_t dim, const std::vector<std::pair<std::string, Ray>>& rays,
                const std::vector<Context>& contexts) {
    KSSet set;
    set.dim = dim;
    for (const auto& [name, ray] : rays) set.rays.push_back({name, ray.canonical()});
    set.contexts = contexts;
    return set;
}

// Accumulates distinct rays (up to equivalence) and hands out stable names.
class RayPool {
  public:
    std::string name_of(const Ray& r) {
        const Ray c = r.canonical();
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (rays_[i].second == c) return rays_[i].first;
        }
        std::string name = "r" + std::to_string(rays_.size());
        rays_.emplace_back(name, c);
        return name;
    }

    const std::vector<std::pair<std::string, Ray>>& rays() const { return rays_; }

  private:
    std::vector<std::pair<std::string, Ray>> rays_;
};

// All word pairs whose four sign combinations are four rank-1 joint
// eigenrays; each yields an orthogonal basis of dimension 4.
const std::vector<std::array<Ray, 4>>& pauli_bases() {
    static const std::vector<std::array<Ray, 4>> bases = [] {
        using ks::PauliLetter;
        using ks::PauliWord;
        std::vector<PauliWord> words;
        for (PauliLetter a : {PauliLetter::I, PauliLetter::Z, PauliLetter::X}) {
            for (PauliLetter b : {PauliLetter::I, PauliLetter::Z, PauliLetter::X}) {
                PauliWord w{a, b};
                if (!w.is_identity()) words.push_back(w);
            }
        }
        std::vector<std::array<Ray, 4>> out;
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                try {
                    std::vector<Ray> rays;
                    for (int s1 : {1, -1}) {
                        for (int s2 : {1, -1}) {
                            rays.push_back(ks::joint_eigenray({words[i], s1}, {words[j], s2}));
                        }
                    }
                    out.push_back({rays[0], rays[1], rays[2], rays[3]});
                } catch (const std::domain_error&) {
                    // Non-commuting or dependent pair; skip.
                }
            }
        }
        return out;
    }();
    return bases;
}

// (p,q,0,0), (q,-p,0,0), (0,0,p,q), (0,0,q,-p): orthogonal for any (p,q) != 0.
std::array<Ray, 4> block_basis(const QuadInt& p, const QuadInt& q) {
    const QuadInt zero;
    return {
        Ray({p, q, zero, zero}),
        Ray({q, -p, zero, zero}),
        Ray({zero, zero, p, q}),
        Ray({zero, zero, q, -p}),
    };
}

KSSet set_from_bases(const std::vector<std::array<Ray, 4>>& bases) {
    RayPool pool;
    std::vector<Context> contexts;
    for (std::size_t b = 0; b < bases.size(); ++b) {
        Context ctx;
        ctx.name = "b" + std::to_string(b);
        for (const Ray& r : bases[b]) ctx.members.push_back(pool.name_of(r));
        contexts.push_back(std::move(ctx));
    }
    return build_set(4, pool.rays(), contexts);
}

void check_both_routes_agree(const KSSet& set) {
    for (bool strong : {false, true}) {
        const ColoringOptions opts{strong};
        const std::uint64_t fast = ks::count_colorings(set, opts);
        const std::uint64_t brute = ks::count_colorings_bruteforce(set, opts);
        INFO("strong=", strong, " fast=", fast, " brute=", brute);
        CHECK(fast == brute);

        const auto coloring = ks::find_coloring(set, opts);
        CHECK(coloring.has_value() == (fast > 0));
        if (coloring) CHECK(ks::is_valid_coloring(set, *coloring, opts));

        if (ks::parity_certificate(set).has_value()) CHECK(fast == 0);
    }
}

}  // namespace

TEST_CASE("the bundled set admits no coloring, by three routes") {
    const KSSet set = load_table1();
    CHECK_FALSE(ks::find_coloring(set).has_value());
    CHECK(ks::count_colorings(set) == 0);
    CHECK(ks::count_colorings_bruteforce(set) == 0);
    CHECK(ks::parity_certificate(set).has_value());

    const ColoringOptions strong{true};
    CHECK(ks::count_colorings(set, strong) == 0);
    CHECK(ks::count_colorings_bruteforce(set, strong) == 0);
}

TEST_CASE("small sets have known counts") {
    const auto e1 = Ray::from_ints({1, 0, 0, 0});
    const auto e2 = Ray::from_ints({0, 1, 0, 0});
    const auto e3 = Ray::from_ints({0, 0, 1, 0});
    const auto e4 = Ray::from_ints({0, 0, 0, 1});

    SUBCASE("one context: one yes among 4") {
        const KSSet set = build_set(
            4, {{"a", e1}, {"b", e2}, {"c", e3}, {"d", e4}},
            {Context{"c1", {"a", "b", "c", "d"}}});
        CHECK(ks::count_colorings(set) == 4);
        CHECK(ks::count_colorings_bruteforce(set) == 4);
        const auto coloring = ks::find_coloring(set);
        REQUIRE(coloring.has_value());
        CHECK(ks::is_valid_coloring(set, *coloring));
        CHECK(std::count_if(coloring->begin(), coloring->end(),
                            [](const auto& kv) { return kv.second; }) == 1);
    }

    SUBCASE("two disjoint contexts multiply") {
        const auto f1 = Ray::from_ints({1, 1, 0, 0});
        const auto f2 = Ray::from_ints({1, -1, 0, 0});
        const auto f3 = Ray::from_ints({0, 0, 1, 1});
        const auto f4 = Ray::from_ints({0, 0, 1, -1});
        const KSSet set = build_set(4,
                                    {{"a", e1},
                                     {"b", e2},
                                     {"c", e3},
                                     {"d", e4},
                                     {"e", f1},
                                     {"f", f2},
                                     {"g", f3},
                                     {"h", f4}},
                                    {Context{"c1", {"a", "b", "c", "d"}},
                                     Context{"c2", {"e", "f", "g", "h"}}});
        CHECK(ks::count_colorings(set) == 16);
        CHECK(ks::count_colorings_bruteforce(set) == 16);
        check_both_routes_agree(set);  // strong mode prunes cross-context pairs
    }

    SUBCASE("duplicate constraint changes nothing") {
        const KSSet set = build_set(
            4, {{"a", e1}, {"b", e2}, {"c", e3}, {"d", e4}},
            {Context{"c1", {"a", "b", "c", "d"}}, Context{"c2", {"d", "c", "b", "a"}}});
        CHECK(ks::count_colorings(set) == 4);
        CHECK(ks::count_colorings_bruteforce(set) == 4);
    }

    SUBCASE("rays outside every context are free") {
        const KSSet set = build_set(
            4, {{"a", e1}, {"b", e2}, {"c", e3}, {"d", e4}, {"x", Ray::from_ints({1, 1, 1, 1})}},
            {Context{"c1", {"a", "b", "c", "d"}}});
        CHECK(ks::count_colorings(set) == 8);  // 4 choices x free ray
        CHECK(ks::count_colorings_bruteforce(set) == 8);
    }
}

TEST_CASE("removing any context makes the bundled set colorable") {
    const KSSet full = load_table1();
    for (std::size_t i = 0; i < full.contexts.size(); ++i) {
        KSSet set = full;
        set.contexts.erase(set.contexts.begin() + static_cast<std::ptrdiff_t>(i));
        const std::uint64_t fast = ks::count_colorings(set);
        const std::uint64_t brute = ks::count_colorings_bruteforce(set);
        INFO("without context ", full.contexts[i].name);
        // The set is symmetric enough that every deletion leaves the same count.
        CHECK(fast == kMinusC9Count);
        CHECK(fast == brute);
        const auto coloring = ks::find_coloring(set);
        REQUIRE(coloring.has_value());
        CHECK(ks::is_valid_coloring(set, *coloring));
    }
}

TEST_CASE("count without the all-entangled context is pinned") {
    KSSet set = load_table1();
    set.contexts.pop_back();  // c9 is declared last
    const std::uint64_t fast = ks::count_colorings(set);
    CHECK(fast == ks::count_colorings_bruteforce(set));
    CHECK(fast == kMinusC9Count);
}

TEST_CASE("random context subsets of the bundled set: both routes agree") {
    const KSSet full = load_table1();
    std::mt19937_64 rng(20260823);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<std::size_t> idx(full.contexts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        const std::size_t k = 1 + rng() % 7;

        KSSet set;
        set.dim = full.dim;
        set.rays = full.rays;
        for (std::size_t i = 0; i < k; ++i) set.contexts.push_back(full.contexts[idx[i]]);
        check_both_routes_agree(set);
    }
}

TEST_CASE("random unions of orthogonal bases: both routes agree") {
    const auto& pauli = pauli_bases();
    REQUIRE(!pauli.empty());

    const std::vector<std::pair<QuadInt, QuadInt>> pq = {
        {QuadInt(1), QuadInt(0)},  {QuadInt(1), QuadInt(1)},   {QuadInt(1), QuadInt(-1)},
        {QuadInt(2), QuadInt(1)},  {QuadInt(1, 1), QuadInt(1)}, {QuadInt(0, 1), QuadInt(1)},
    };

    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t k = 1 + rng() % 4;
        std::vector<std::array<Ray, 4>> bases;
        for (std::size_t b = 0; b < k; ++b) {
            if (rng() % 2 == 0) {
                bases.push_back(pauli[rng() % pauli.size()]);
            } else {
                const auto& [p, q] = pq[rng() % pq.size()];
                bases.push_back(block_basis(p, q));
            }
        }
        const KSSet set = set_from_bases(bases);
        REQUIRE(set.rays.size() <= 20);
        REQUIRE(ks::verify(set).ok);
        check_both_routes_agree(set);
    }
}

TEST_CASE("searching an unverified set is rejected") {
    const auto e1 = Ray::from_ints({1, 0, 0, 0});
    const auto bad = Ray::from_ints({1, 1, 0, 0});
    const KSSet set = build_set(4, {{"a", e1}, {"b", bad}}, {Context{"c1", {"a", "b"}}});
    CHECK_THROWS_AS(ks::find_coloring(set), std::invalid_argument);
    CHECK_THROWS_AS(ks::count_colorings(set), std::invalid_argument);
    CHECK_THROWS_AS(ks::count_colorings_bruteforce(set), std::invalid_argument);
}

TEST_CASE("brute force refuses more than 24 rays") {
    std::vector<std::pair<std::string, Ray>> rays;
    for (int k = 0; k < 25; ++k) {
        rays.emplace_back("r" + std::to_string(k), Ray::from_ints({1, 0, 0, k}));
    }
    const KSSet set = build_set(4, rays, {});
    CHECK_THROWS_AS(ks::count_colorings_bruteforce(set), std::invalid_argument);
}

TEST_CASE("is_valid_coloring rejects rule violations") {
    const auto e1 = Ray::from_ints({1, 0, 0, 0});
    const auto e2 = Ray::from_ints({0, 1, 0, 0});
    const auto e3 = Ray::from_ints({0, 0, 1, 0});
    const auto e4 = Ray::from_ints({0, 0, 0, 1});
    const KSSet set = build_set(4, {{"a", e1}, {"b", e2}, {"c", e3}, {"d", e4}},
                                {Context{"c1", {"a", "b", "c", "d"}}});

    Assignment two_yes = {{"a", true}, {"b", true}, {"c", false}, {"d", false}};
    CHECK_FALSE(ks::is_valid_coloring(set, two_yes));

    Assignment no_yes = {{"a", false}, {"b", false}, {"c", false}, {"d", false}};
    CHECK_FALSE(ks::is_valid_coloring(set, no_yes));

    Assignment partial = {{"a", true}};
    CHECK_FALSE(ks::is_valid_coloring(set, partial));

    Assignment good = {{"a", true}, {"b", false}, {"c", false}, {"d", false}};
    CHECK(ks::is_valid_coloring(set, good));

    // Strong rule: a and b are orthogonal without sharing a context.
    const KSSet pairset = build_set(4, {{"a", e1}, {"b", e2}}, {});
    Assignment both = {{"a", true}, {"b", true}};
    CHECK(ks::is_valid_coloring(pairset, both));
    CHECK_FALSE(ks::is_valid_coloring(pairset, both, ColoringOptions{true}));
}
