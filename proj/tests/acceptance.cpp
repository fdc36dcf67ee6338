// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "tropcomp/tropcomp.hpp"

using namespace tropcomp;

namespace {

using T = TropScalar<MaxPlus>;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Check {
public:
    void expect(bool cond, const std::string& what) {
        if (!cond && ok_) {
            ok_ = false;
            first_ = what;
        }
        if (!cond) ++failures_;
    }
    Outcome result(const std::string& summary) const {
        if (ok_) return {true, summary};
        return {false, first_ + " (" + std::to_string(failures_) + " failing checks)"};
    }

private:
    bool ok_ = true;
    std::size_t failures_ = 0;
    std::string first_;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

TropVector<MaxPlus> tv(std::initializer_list<std::optional<long>> xs) {
    TropVector<MaxPlus> out;
    for (const auto& v : xs) out.push_back(v ? T(*v) : T::zero());
    return out;
}

TnecpInstance<MaxPlus> block_diagonal(const std::vector<TnecpInstance<MaxPlus>>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.n();
    TnecpInstance<MaxPlus> t{TropMatrix<MaxPlus>(n, n), TropVector<MaxPlus>(n)};
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.n(); ++i) {
            t.q_plus[off + i] = b.q_plus[i];
            for (std::size_t j = 0; j < b.n(); ++j) t.m_minus(off + i, off + j) = b.m_minus(i, j);
        }
        off += b.n();
    }
    return t;
}

template <class S>
bool same_set(std::vector<S> a, std::vector<S> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// 1. Worked 4x4 example: shipped file, solution and graph.
Outcome worked_example() {
    auto start = Clock::now();
    Check c;
    std::ifstream in(std::filesystem::path(TROPCOMP_DATA) / "example31.json");
    std::string text{std::istreambuf_iterator<char>(in), {}};
    auto t = std::get<TnecpInstance<MaxPlus>>(parse_instance(text));
    auto s = solve(t, lowest_row_index);
    constexpr std::nullopt_t x = std::nullopt;
    c.expect(s.w == tv({x, x, x, 0}), "w differs from (-inf,-inf,-inf,0)");
    c.expect(s.z == tv({-4, 0, -3, x}), "z differs from (-4,0,-3,-inf)");
    auto g = build_graph(t);
    std::set<std::pair<std::size_t, std::size_t>> red, blue;
    for (const auto& e : g.red_edges()) red.insert({e.row + 1, e.col + 1});
    for (const auto& e : g.blue_edges()) blue.insert({e.row + 1, e.col + 1});
    c.expect(red == std::set<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 2}, {4, 2}, {1, 3}, {3, 4}, {4, 4}},
             "red edge set differs");
    c.expect(blue == std::set<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 2}, {3, 3}, {4, 4}},
             "blue edge set differs");
    double secs = seconds_since(start);
    c.expect(secs < 1.0, "took longer than 1 s");
    return c.result("exact solution and 6 red + 4 blue edges in " + std::to_string(secs) + " s");
}

// 2. Tropical Lemke-Howson takes at most 2n - 1 pivots.
Outcome pivot_bound() {
    auto start = Clock::now();
    Check c;
    std::size_t runs = 0, worst = 0;
    for (std::size_t n : {2, 5, 10, 25, 50}) {
        for (std::uint64_t k = 0; k < 1000; ++k) {
            auto t = gen_random_tnecp(n, 1'000'000 * n + k, true);
            auto r = lh_tropical(t, k % n);
            c.expect(r.trace.pivots() <= 2 * n - 1, "pivot bound violated at n = " + std::to_string(n));
            c.expect(is_solution(t, r.solution), "final point is not a solution");
            worst = std::max(worst, r.trace.pivots() * 100 / (2 * n - 1));
            ++runs;
        }
    }
    double secs = seconds_since(start);
    c.expect(secs < 60.0, "took longer than 60 s");
    return c.result(std::to_string(runs) + " runs, worst pivots at " + std::to_string(worst) + "% of 2n-1, " +
                    std::to_string(secs) + " s");
}

// 3. Solution count 2^kappa - 1 against brute force.
Outcome solution_count() {
    Check c;
    std::size_t instances = 0;
    std::array<std::size_t, 4> by_kappa{};
    auto check = [&](const TnecpInstance<MaxPlus>& t) {
        auto count = count_solutions(t);
        auto sols = enumerate_solutions(t, 1u << 10);
        auto brute = brute_tnecp(t);
        c.expect(count.exact, "nondegenerate instance reported inexact");
        c.expect(BigInt(sols.size()) == count.lower_bound, "enumeration size differs from 2^kappa - 1");
        c.expect(sols.size() == brute.size() && same_set(sols, brute), "enumeration differs from brute force");
        if (count.components < by_kappa.size()) ++by_kappa[count.components];
        ++instances;
    };
    for (std::uint64_t k = 0; k < 200; ++k) check(gen_random_tnecp(1 + k % 7, 31'000 + k, true));

    // connected blocks, combined into kappa = 1, 2, 3 components
    std::vector<TnecpInstance<MaxPlus>> connected;
    for (std::uint64_t k = 0; connected.size() < 60; ++k) {
        auto b = gen_random_tnecp(1 + k % 3, 47'000 + k, true);
        if (count_solutions(b).components == 1) connected.push_back(b);
    }
    std::mt19937_64 rng(3);
    for (std::size_t k = 0; k < 90; ++k) {
        const std::size_t kappa = 1 + k % 3;
        std::vector<TnecpInstance<MaxPlus>> blocks;
        std::size_t n = 0;
        while (blocks.size() < kappa) {
            const auto& b = connected[rng() % connected.size()];
            if (n + b.n() > 7) continue;
            blocks.push_back(b);
            n += b.n();
        }
        auto t = block_diagonal(blocks);
        c.expect(count_solutions(t).components == kappa, "block construction has the wrong component count");
        check(t);
    }
    c.expect(by_kappa[1] > 0 && by_kappa[2] > 0 && by_kappa[3] > 0, "kappa 1..3 not all covered");
    return c.result(std::to_string(instances) + " instances (kappa=1: " + std::to_string(by_kappa[1]) +
                    ", 2: " + std::to_string(by_kappa[2]) + ", 3: " + std::to_string(by_kappa[3]) + ")");
}

// 4. Classical and tropical traces coincide under dominance.
Outcome trace_identity() {
    Check c;
    std::size_t instances = 0, runs = 0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        const std::size_t r = 1 + k % 10, s = 1 + (k * 7 / 10) % 10;
        auto inst = gen_dominant_necp(r, s, 88'000 + k);
        for (std::size_t j = 0; j < inst.n(); ++j) {
            auto cmp = compare_traces(inst, j);
            c.expect(cmp.identical, "traces diverge for r = " + std::to_string(r) + ", s = " + std::to_string(s));
            ++runs;
        }
        ++instances;
    }
    return c.result(std::to_string(instances) + " games, " + std::to_string(runs) + " (instance, j*) pairs identical");
}

// 5. Supports of classical and tropical solutions coincide.
Outcome support_families() {
    Check c;
    std::size_t instances = 0, supports = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        const std::size_t r = 1 + k % 4, s = 1 + (k / 4) % 3;
        if (r + s > 7) continue;
        auto inst = gen_dominant_necp(r, s, 120'000 + k);
        auto sc = support_correspondence(inst);
        c.expect(sc.matches, "support families differ");
        supports += sc.classical.size();
        ++instances;
    }
    return c.result(std::to_string(instances) + " instances, " + std::to_string(supports) + " supports matched");
}

// 6. SAT reduction: truth table vs encoded search.
Outcome sat_reduction() {
    Check c;
    std::size_t formulas = 0, sat = 0;
    auto check = [&](const CnfFormula& f) {
        auto truth = truth_table_sat(f);
        auto sol = brute_force_encoded_tlcp(encode(f));
        c.expect(truth.has_value() == sol.has_value(), "satisfiability disagrees");
        if (sol) {
            c.expect(satisfies(f, decode(*sol, f.variables)), "decoded assignment does not satisfy");
            ++sat;
        }
        ++formulas;
    };
    // every multiset of 1..3 clauses of width <= 2 over 1..3 variables
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::vector<int>> pool;
        for (int a = 1; a <= n; ++a) {
            pool.push_back({a});
            pool.push_back({-a});
            for (int b = a + 1; b <= n; ++b)
                for (int sa : {1, -1})
                    for (int sb : {1, -1}) pool.push_back({sa * a, sb * b});
        }
        const std::size_t m = pool.size();
        for (std::size_t i = 0; i < m; ++i) {
            check({static_cast<std::size_t>(n), {pool[i]}});
            for (std::size_t j = i; j < m; ++j) {
                check({static_cast<std::size_t>(n), {pool[i], pool[j]}});
                for (std::size_t k = j; k < m; ++k) check({static_cast<std::size_t>(n), {pool[i], pool[j], pool[k]}});
            }
        }
    }
    std::mt19937_64 rng(66);
    for (int k = 0; k < 500; ++k) {
        CnfFormula f{1 + rng() % 3, {}};
        const std::size_t p = 1 + rng() % 3;
        for (std::size_t g = 0; g < p; ++g) {
            std::vector<int> clause;
            const std::size_t len = 1 + rng() % 3;
            for (std::size_t l = 0; l < len; ++l) {
                int v = 1 + static_cast<int>(rng() % f.variables);
                clause.push_back(rng() % 2 ? v : -v);
            }
            f.clauses.push_back(clause);
        }
        check(f);
    }
    return c.result(std::to_string(formulas) + " formulas, " + std::to_string(sat) + " satisfiable");
}

// 7. Polynomial dominance check vs subset enumeration.
Outcome dominance_checker() {
    Check c;
    std::size_t holds = 0;
    for (std::uint64_t k = 0; k < 600; ++k) {
        const std::size_t n = 1 + k % 4, d = 1 + (k / 4) % 8;
        auto ns = from_columnwise_normal(gen_columnwise_normal(n, d, 700'000 + k));
        bool poly = check_dominance(ns).holds;
        c.expect(poly == brute_force_dominance(ns).holds, "verdicts disagree");
        holds += poly;
    }
    RationalMatrix a(3, 4);
    const char* entries[3][4] = {{"1", "1/2", "2/5", "1"}, {"0", "1", "1/5", "3/5"}, {"3/5", "3/10", "1", "1/2"}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = parse_rational(entries[i][j]);
    auto ns = from_columnwise_normal(a);
    auto brute = brute_force_dominance(ns);
    c.expect(check_dominance(ns).holds, "3x4 example rejected");
    c.expect(brute.holds && brute.covering_submatrices == 2, "3x4 example does not have exactly 2 covering submatrices");
    return c.result("600 random matrices agree (" + std::to_string(holds) + " hold); 3x4 example has " +
                    std::to_string(brute.covering_submatrices) + " covering submatrices");
}

// 8. Polynomial game solver.
Outcome game_pipeline() {
    Check c;
    double worst_ms = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const std::size_t r = 1 + k % 5, s = 1 + (k / 5) % 5;
        auto g = gen_dominant_game(r, s, 800'000 + k);
        auto start = Clock::now();
        auto sp = solve_game_poly(g);
        double ms = seconds_since(start) * 1000;
        worst_ms = std::max(worst_ms, ms);
        c.expect(ms < 100, "solve_game_poly took longer than 100 ms");
        c.expect(is_classical_nash(g, sp), "result is not a Nash equilibrium");
        bool found = false;
        for (const auto& sol : brute_lcp(game_to_necp(g))) {
            auto e = strategies_from_necp(sol, r);
            found = found || (e.x == sp.x && e.y == sp.y);
        }
        c.expect(found, "result not among the brute-force equilibria");
    }
    return c.result("100 games, worst " + std::to_string(worst_ms) + " ms");
}

// 9. Tropical equilibrium count bound for square games.
Outcome quint_shubik() {
    Check c;
    std::size_t games = 0, largest = 0;
    for (std::uint64_t k = 0; k < 240; ++k) {
        const std::size_t r = 1 + k % 6;
        auto g = gen_tropical_game(r, r, 900'000 + k, true);
        auto audit = quint_shubik_audit(g);
        c.expect(audit.count <= (std::size_t{1} << r) - 1, "more than 2^r - 1 equilibria");
        c.expect(audit.count == (std::size_t{1} << audit.components) - 1, "count differs from 2^kappa - 1");
        for (const auto& sp : audit.equilibria) c.expect(is_tropical_nash(g, sp), "enumerated pair is not an equilibrium");
        if (2 * r <= brute_tnecp_max_n)
            c.expect(brute_tnecp(game_to_tnecp(g)).size() == audit.count, "count differs from brute force");
        largest = std::max(largest, audit.count);
        ++games;
    }
    return c.result(std::to_string(games) + " games, largest equilibrium count " + std::to_string(largest));
}

// 10. Semiring laws, adjacency structure, positivity.
Outcome properties() {
    Check c;
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    auto random_scalar = [&] {
        return rng() % 5 == 0 ? T::zero() : T(Rational(Rational(num(rng)) / den(rng)));
    };
    using M = TropScalar<MaxTimes>;
    auto random_mult = [&] {
        return rng() % 5 == 0 ? M::zero() : M(Rational(Rational(1 + std::labs(num(rng))) / den(rng)));
    };
    auto laws = [&](auto a, auto b, auto x, auto zero, auto one) {
        c.expect(trop_add(a, b) == trop_add(b, a), "addition not commutative");
        c.expect(trop_add(trop_add(a, b), x) == trop_add(a, trop_add(b, x)), "addition not associative");
        c.expect(trop_mul(a, b) == trop_mul(b, a), "multiplication not commutative");
        c.expect(trop_mul(trop_mul(a, b), x) == trop_mul(a, trop_mul(b, x)), "multiplication not associative");
        c.expect(trop_mul(a, trop_add(b, x)) == trop_add(trop_mul(a, b), trop_mul(a, x)), "not distributive");
        c.expect(trop_add(a, zero) == a && trop_mul(a, one) == a, "identity laws fail");
        c.expect(trop_mul(a, zero) == zero, "zero not absorbing");
        c.expect(trop_add(a, a) == a, "addition not idempotent");
        if (!a.is_zero()) c.expect(trop_mul(a, trop_residual(one, a).scalar()) == one, "no inverse");
    };
    for (int k = 0; k < 5000; ++k) {
        laws(random_scalar(), random_scalar(), random_scalar(), T::zero(), T::unit());
        laws(random_mult(), random_mult(), random_mult(), M::zero(), M::unit());
    }

    // adjacency: the initial basis has one neighbour, almost fully labeled bases two
    std::size_t almost = 0;
    for (std::uint64_t k = 0; k < 80; ++k) {
        const std::size_t n = 1 + k % 4;
        auto t = gen_random_tnecp(n, 1'100'000 + k, true);
        auto s = stacked_system(t);
        std::vector<LabeledBasis> bases;
        std::vector<bool> pick(2 * n, false);
        std::fill(pick.begin(), pick.begin() + n, true);
        do {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < 2 * n; ++j)
                if (pick[j]) cols.push_back(j);
            if (detail::is_basis_exhaustive(s, cols)) bases.push_back(to_labeled(cols, n));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        for (std::size_t j_star = 0; j_star < n; ++j_star) {
            auto adjacent = [&](const LabeledBasis& a, const LabeledBasis& b) {
                std::size_t common = 0;
                for (const auto& col : a) common += std::binary_search(b.begin(), b.end(), col);
                if (common != n - 1) return false;
                std::vector<int> seen(n, 0);
                for (const auto* side : {&a, &b})
                    for (const auto& col : *side) seen[col.label] |= col.color == Color::blue ? 1 : 2;
                return std::all_of(seen.begin(), seen.end(), [](int v) { return v != 0; }) && seen[j_star] == 3;
            };
            for (const auto& b : bases) {
                std::size_t degree = 0;
                for (const auto& other : bases) degree += adjacent(b, other);
                if (b == initial_basis(n)) {
                    c.expect(degree == 1, "initial basis does not have exactly one neighbour");
                } else if (is_almost_fully_labeled(b, n, j_star)) {
                    c.expect(degree == 2, "almost fully labeled basis does not have exactly two neighbours");
                    ++almost;
                }
            }
        }
    }

    // (I + F) x = 1 has a positive solution when F >= 0 has row sums < 1
    std::uniform_int_distribution<long> entry(0, 20);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 6;
        RationalMatrix a(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            Rational total = 0;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = Rational(entry(rng));
                total += a(i, j);
            }
            Rational scale = Rational(1) / (total + 1 + entry(rng));
            for (std::size_t j = 0; j < n; ++j) a(i, j) *= scale;
            a(i, i) += 1;
        }
        auto x = solve_linear(a, RationalVector(n, Rational(1)));
        c.expect(x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return sgn(v) > 0; }),
                 "resolvent solution is not positive");
    }
    return c.result("10000 law checks, " + std::to_string(almost) +
                    " almost fully labeled bases checked, 500 positivity systems");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"worked 4x4 example: solution and graph", worked_example},
        {"tropical Lemke-Howson pivot bound 2n-1", pivot_bound},
        {"solution count 2^kappa-1 vs brute force", solution_count},
        {"classical/tropical trace identity under dominance", trace_identity},
        {"classical/tropical support families coincide", support_families},
        {"SAT reduction agrees with truth tables", sat_reduction},
        {"dominance checker vs subset enumeration", dominance_checker},
        {"polynomial game solver", game_pipeline},
        {"tropical equilibrium count bound", quint_shubik},
        {"semiring laws, adjacency, positivity", properties},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        auto start = Clock::now();
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %2zu %s  %s: %s [%.2f s]\n", k + 1, o.ok ? "PASS" : "FAIL", criteria[k].first,
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
