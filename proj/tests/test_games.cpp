#include <gtest/gtest.h>

#include <chrono>

#include "helpers.hpp"

using namespace tropcomp;
using namespace testing_support;

namespace {

constexpr std::nullopt_t x = std::nullopt;

ClassicalGame coordination() {
    return {rat_matrix({{"2", "1"}, {"1", "2"}}), rat_matrix({{"2", "1"}, {"1", "2"}})};
}

RationalVector rv(std::initializer_list<const char*> xs) {
    RationalVector out;
    for (const char* v : xs) out.push_back(parse_rational(v));
    return out;
}

TEST(GameToNecp, CoordinationGameNeedsNoShift) {
    auto c = game_to_necp(coordination());
    auto expected = rat_matrix({{"0", "0", "-2", "-1"}, {"0", "0", "-1", "-2"}, {"-2", "-1", "0", "0"}, {"-1", "-2", "0", "0"}});
    EXPECT_EQ(c.m, expected);
    EXPECT_EQ(c.q, RationalVector(4, Rational(1)));
}

TEST(GameToNecp, NegativeEntriesAreShifted) {
    ClassicalGame g{rat_matrix({{"-3", "1"}, {"0", "2"}}), rat_matrix({{"2", "1"}, {"1", "2"}})};
    auto c = game_to_necp(g);
    EXPECT_EQ(-c.m(0, 2), 1);
    EXPECT_EQ(-c.m(0, 3), 5);
    EXPECT_TRUE(validate(c).empty());
}

TEST(GameToNecp, SolutionsAreEquilibria) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen_dominant_game(1 + seed % 3, 1 + seed % 2, seed);
        for (const auto& s : brute_lcp(game_to_necp(g)))
            EXPECT_TRUE(is_classical_nash(g, strategies_from_necp(s, g.r())));
    }
}

TEST(GameToTnecp, AntidiagonalBlocks) {
    TropicalGame g{trop_matrix({{0, -1}, {-1, 0}}), trop_matrix({{0, -1}, {-1, 0}})};
    auto t = game_to_tnecp(g);
    EXPECT_EQ(t.m_minus, trop_matrix({{x, x, 0, -1}, {x, x, -1, 0}, {0, -1, x, x}, {-1, 0, x, x}}));
    EXPECT_TRUE(validate(t).empty());
}

TEST(Strategies, Normalization) {
    auto sp = normalize_strategies(trop_vector({-4, 0, -3, x}), 2);
    EXPECT_EQ(sp.x, trop_vector({-4, 0}));
    EXPECT_EQ(sp.y, trop_vector({0, x}));
    TropVector<MaxPlus> z = sp.x;
    z.insert(z.end(), sp.y.begin(), sp.y.end());
    auto again = normalize_strategies(z, 2);
    EXPECT_EQ(again.x, sp.x);
    EXPECT_EQ(again.y, sp.y);
}

TEST(TropicalNash, SmallGames) {
    TropicalGame g{trop_matrix({{0, -1}, {-1, 0}}), trop_matrix({{0, -1}, {-1, 0}})};
    auto sp = tropical_nash(g);
    EXPECT_TRUE(is_tropical_nash(g, sp));
    EXPECT_TRUE(is_tropical_nash(g, {trop_vector({0, x}), trop_vector({0, x})}));
    TropicalGame one{trop_matrix({{5}}), trop_matrix({{-2}})};
    auto s1 = tropical_nash(one);
    EXPECT_EQ(s1.x, trop_vector({0}));
    EXPECT_EQ(s1.y, trop_vector({0}));
}

TEST(TropicalNash, StrictBestResponseRejectsUniformPair) {
    TropicalGame g{trop_matrix({{1, 0}, {0, 0}}), trop_matrix({{1, 0}, {0, 0}})};
    EXPECT_FALSE(is_tropical_nash(g, {trop_vector({0, 0}), trop_vector({0, 0})}));
}

TEST(TropicalNash, RandomGamesAndInequalityForm) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = gen_tropical_game(1 + seed % 4, 1 + seed % 3, seed, false);
        auto sp = tropical_nash(g);
        EXPECT_TRUE(is_tropical_nash(g, sp));
        EXPECT_TRUE(satisfies_tropical_best_response_inequalities(g, sp));
    }
}

TEST(ClassicalNash, CoordinationGame) {
    auto g = coordination();
    EXPECT_TRUE(is_classical_nash(g, {rv({"1", "0"}), rv({"1", "0"})}));
    EXPECT_TRUE(is_classical_nash(g, {rv({"1/2", "1/2"}), rv({"1/2", "1/2"})}));
    EXPECT_FALSE(is_classical_nash(g, {rv({"1", "0"}), rv({"0", "1"})}));
    EXPECT_FALSE(is_classical_nash(g, {rv({"1", "1"}), rv({"1", "0"})}));
}

TEST(SpecPoly, Examples) {
    EXPECT_TRUE(check_spec_poly(coordination()));
    EXPECT_FALSE(check_spec_poly({rat_matrix({{"1", "1"}, {"1", "1"}}), rat_matrix({{"2", "1"}, {"1", "2"}})}));
    EXPECT_TRUE(check_spec_poly({rat_matrix({{"1", "1"}}), rat_matrix({{"3", "1"}})}));
    EXPECT_THROW(check_spec_poly({rat_matrix({{"-1"}}), rat_matrix({{"1"}})}), invalid_input);
}

TEST(SolveGamePoly, CoordinationGame) {
    auto g = coordination();
    auto sp = solve_game_poly(g);
    EXPECT_TRUE(is_classical_nash(g, sp));
    std::vector<ClassicalStrategies> all;
    for (const auto& s : brute_lcp(game_to_necp(g))) all.push_back(strategies_from_necp(s, 2));
    bool found = false;
    for (const auto& e : all) found = found || (e.x == sp.x && e.y == sp.y);
    EXPECT_TRUE(found);
}

TEST(SolveGamePoly, RandomQualifyingGames) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = gen_dominant_game(1 + seed % 5, 1 + (seed / 5) % 5, seed);
        auto start = std::chrono::steady_clock::now();
        auto sp = solve_game_poly(g);
        auto elapsed = std::chrono::steady_clock::now() - start;
        EXPECT_LT(elapsed, std::chrono::milliseconds(100));
        EXPECT_TRUE(is_classical_nash(g, sp));
    }
}

TEST(SolveGamePoly, RejectsNonQualifyingGame) {
    EXPECT_THROW(solve_game_poly({rat_matrix({{"1", "1"}, {"1", "1"}}), rat_matrix({{"1", "1"}, {"1", "1"}})}),
                 invalid_input);
}

TEST(QuintShubik, RandomSquareGames) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t r = 1 + seed % 5;
        auto g = gen_tropical_game(r, r, seed, true);
        auto audit = quint_shubik_audit(g);
        EXPECT_TRUE(audit.bound_ok);
        EXPECT_LE(audit.count, (std::size_t{1} << r) - 1);
        EXPECT_EQ(audit.count, (std::size_t{1} << audit.components) - 1);
        EXPECT_GE(audit.smallest_component_nodes, 4u);
        EXPECT_LE(audit.components, r);
        for (const auto& sp : audit.equilibria) EXPECT_TRUE(is_tropical_nash(g, sp));
    }
}

TEST(QuintShubik, RequiresUniqueMaxima) {
    TropicalGame g{trop_matrix({{0, 0}, {0, 0}}), trop_matrix({{0, -1}, {-1, 0}})};
    EXPECT_THROW(quint_shubik_audit(g), degenerate_instance);
}

}  // namespace
