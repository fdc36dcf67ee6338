// tropcomp: command-line front end.
//
// Exit codes: 0 success, 1 negative verdict, 2 invalid input, 3 guard
// exceeded, 4 internal error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "tropcomp/tropcomp.hpp"

namespace {

using namespace tropcomp;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_invalid = 2;
constexpr int exit_guard = 3;
constexpr int exit_internal = 4;

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        std::filesystem::path p(path);
        if (p.is_relative())
            if (const char* dir = std::getenv("TROPCOMP_OUT_DIR")) p = std::filesystem::path(dir) / p;
        file_.open(p, std::ios::binary);
        if (!file_) throw invalid_input("cannot write " + p.string());
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

template <class T>
const T& expect(const Instance& instance, const char* what) {
    if (const auto* x = std::get_if<T>(&instance)) return *x;
    throw invalid_input(std::string("expected ") + what + " instance");
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct Options {
    std::string file;
    std::string out;
    std::size_t cap = 1024;
    std::size_t jstar = 1;
    bool trace = false;
    bool tropical = false;
    bool enumerate = false;
    std::string method;
    std::string family = "random-nondegenerate-tnecp";
    std::vector<std::size_t> sizes{2, 5, 10};
    std::size_t count = 10;
    std::uint64_t seed = 1;
    bool no_timing = false;
};

std::size_t zero_based_jstar(const Options& o, std::size_t n) {
    if (o.jstar == 0 || o.jstar > n)
        throw invalid_input("--jstar must lie in 1.." + std::to_string(n));
    return o.jstar - 1;
}

int cmd_solve(const Options& o) {
    auto t = expect<TnecpInstance<MaxPlus>>(parse_instance(read_file(o.file)), "tnecp");
    Output out(o.out);
    print_json(out.stream(), solution_to_json(solve(t)));
    return exit_ok;
}

int cmd_count(const Options& o) {
    auto t = expect<TnecpInstance<MaxPlus>>(parse_instance(read_file(o.file)), "tnecp");
    auto c = count_solutions(t);
    Output out(o.out);
    print_json(out.stream(), {{"components", c.components}, {"count", c.lower_bound.get_str()}, {"exact", c.exact}});
    return exit_ok;
}

int cmd_enumerate(const Options& o) {
    auto t = expect<TnecpInstance<MaxPlus>>(parse_instance(read_file(o.file)), "tnecp");
    json arr = json::array();
    for (const auto& s : enumerate_solutions(t, o.cap)) arr.push_back(solution_to_json(s));
    Output out(o.out);
    print_json(out.stream(), arr);
    return exit_ok;
}

int cmd_graph(const Options& o) {
    auto t = expect<TnecpInstance<MaxPlus>>(parse_instance(read_file(o.file)), "tnecp");
    Output out(o.out);
    print_json(out.stream(), graph_to_json(build_graph(t)));
    return exit_ok;
}

int cmd_lh(const Options& o) {
    auto instance = parse_instance(read_file(o.file));
    Output out(o.out);
    auto emit = [&](const auto& result) {
        if (o.trace) {
            for (const auto& line : trace_to_json_lines(result.trace)) out.stream() << line << '\n';
        } else {
            print_json(out.stream(), {{"pivots", result.trace.pivots()}, {"solution", solution_to_json(result.solution)}});
        }
    };
    if (const auto* t = std::get_if<TnecpInstance<MaxPlus>>(&instance)) {
        emit(lh_tropical(*t, zero_based_jstar(o, t->n())));
    } else if (const auto* c = std::get_if<NecpInstance>(&instance)) {
        emit(lh_classical(*c, zero_based_jstar(o, c->n())));
    } else {
        throw invalid_input("lh expects a tnecp or necp instance");
    }
    return exit_ok;
}

int cmd_compare(const Options& o) {
    auto c = expect<NecpInstance>(parse_instance(read_file(o.file)), "necp");
    auto cmp = compare_traces(c, zero_based_jstar(o, c.n()));
    Output out(o.out);
    print_json(out.stream(), {{"identical", cmp.identical},
                              {"first_divergence", cmp.first_divergence ? json(*cmp.first_divergence) : json(nullptr)},
                              {"classical_pivots", cmp.classical.pivots()},
                              {"tropical_pivots", cmp.tropical.pivots()},
                              {"jstar", o.jstar}});
    return cmp.identical ? exit_ok : exit_negative;
}

int cmd_dominance(const Options& o) {
    auto instance = parse_instance(read_file(o.file));
    DominanceVerdict verdict;
    if (const auto* s = std::get_if<LinearSystem>(&instance))
        verdict = check_dominance(*s);
    else
        verdict = check_dominance(expect<NecpInstance>(instance, "necp or system"));
    Output out(o.out);
    if (verdict.holds) {
        out.stream() << "holds\n";
        return exit_ok;
    }
    out.stream() << "fails: " << verdict.witness->describe() << '\n';
    return exit_negative;
}

int cmd_nash(const Options& o) {
    auto instance = parse_instance(read_file(o.file));
    Output out(o.out);
    if (const auto* g = std::get_if<TropicalGame>(&instance)) {
        if (!o.enumerate) {
            print_json(out.stream(), strategies_to_json(tropical_nash(*g)));
            return exit_ok;
        }
        json arr = json::array();
        for (const auto& s : enumerate_solutions(game_to_tnecp(*g), o.cap))
            arr.push_back(strategies_to_json(normalize_strategies(s.z, g->r())));
        print_json(out.stream(), arr);
        return exit_ok;
    }
    const auto& g = expect<ClassicalGame>(instance, "bimatrix");
    if (o.tropical) throw invalid_input("--tropical needs a bimatrix file with \"tropical\": true");
    if (o.enumerate) {
        json arr = json::array();
        for (const auto& s : brute_lcp(game_to_necp(g))) arr.push_back(strategies_to_json(strategies_from_necp(s, g.r())));
        print_json(out.stream(), arr);
        return exit_ok;
    }
    if (check_spec_poly(g)) {
        print_json(out.stream(), strategies_to_json(solve_game_poly(g)));
        return exit_ok;
    }
    auto c = game_to_necp(g);
    auto result = lh_classical(c, zero_based_jstar(o, c.n()));
    print_json(out.stream(), strategies_to_json(strategies_from_necp(result.solution, g.r())));
    return exit_ok;
}

int cmd_encode_sat(const Options& o) {
    auto f = parse_dimacs(read_file(o.file));
    Output out(o.out);
    out.stream() << serialize(Instance{encode(f)}) << '\n';
    return exit_ok;
}

int cmd_sat_check(const Options& o) {
    auto f = parse_dimacs(read_file(o.file));
    auto sol = brute_force_encoded_tlcp(encode(f));
    Output out(o.out);
    if (!sol) {
        out.stream() << "UNSAT\n";
        return exit_negative;
    }
    auto x = decode(*sol, f.variables);
    if (!satisfies(f, x)) throw internal_error("decoded assignment does not satisfy the formula");
    out.stream() << "SAT\n";
    for (std::size_t i = 0; i < x.size(); ++i) out.stream() << (x[i] ? "" : "-") << i + 1 << ' ';
    out.stream() << "0\n";
    return exit_ok;
}

int cmd_oracle(const Options& o) {
    auto instance = parse_instance(read_file(o.file));
    json arr = json::array();
    if (o.method == "lcp") {
        for (const auto& s : brute_lcp(expect<NecpInstance>(instance, "necp"))) arr.push_back(solution_to_json(s));
    } else {
        for (const auto& s : brute_tnecp(expect<TnecpInstance<MaxPlus>>(instance, "tnecp")))
            arr.push_back(solution_to_json(s));
    }
    Output out(o.out);
    print_json(out.stream(), arr);
    return exit_ok;
}

// CSV columns: family,n,seed,jstar,tropical_pivots,classical_pivots,identical,wall_ms
int cmd_bench(const Options& o) {
    Output out(o.out);
    auto& os = out.stream();
    os << "family,n,seed,jstar,tropical_pivots,classical_pivots,identical,wall_ms\n";
    for (std::size_t size : o.sizes) {
        for (std::size_t k = 0; k < o.count; ++k) {
            const std::uint64_t seed = o.seed + k;
            auto start = std::chrono::steady_clock::now();
            std::size_t n = 0, trop = 0;
            std::string classical = "", identical = "";
            if (o.family == "random-nondegenerate-tnecp") {
                auto t = gen_random_tnecp(size, seed, true);
                n = t.n();
                trop = lh_tropical(t, 0).trace.pivots();
            } else {
                auto c = gen_dominant_necp(size, size, seed);
                n = c.n();
                auto cmp = compare_traces(c, 0);
                trop = cmp.tropical.pivots();
                classical = std::to_string(cmp.classical.pivots());
                identical = cmp.identical ? "true" : "false";
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::ostringstream wall;
            wall.setf(std::ios::fixed);
            wall.precision(3);
            wall << (o.no_timing ? 0.0 : ms);
            os << o.family << ',' << n << ',' << seed << ",1," << trop << ',' << classical << ',' << identical << ','
               << wall.str() << '\n';
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical linear complementarity toolkit"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&) = nullptr;

    auto add = [&](const char* name, const char* desc, int (*fn)(const Options&), bool takes_file = true) {
        auto* sub = app.add_subcommand(name, desc);
        if (takes_file) sub->add_option("file", o.file, "instance file (- for stdin)")->required();
        sub->add_option("--out", o.out, "write the result here instead of stdout");
        sub->add_option("--seed", o.seed, "base seed");
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    add("solve", "one solution of a TNECP instance", cmd_solve);
    add("count", "solution count 2^kappa - 1 of a TNECP instance", cmd_count);
    add("enumerate", "all solutions of a nondegenerate TNECP instance", cmd_enumerate)
        ->add_option("--cap", o.cap, "refuse to produce more solutions than this");
    add("graph", "complementarity graph as an edge list", cmd_graph);
    auto* lh = add("lh", "Lemke-Howson on a tnecp or necp instance", cmd_lh);
    lh->add_option("--jstar", o.jstar, "missing label, 1-based");
    lh->add_flag("--trace", o.trace, "emit the pivot trace as JSON lines");
    add("compare", "classical vs tropical Lemke-Howson traces", cmd_compare)
        ->add_option("--jstar", o.jstar, "missing label, 1-based");
    add("dominance", "check the dominance condition of an NECP instance or system", cmd_dominance);
    auto* nash = add("nash", "Nash equilibrium of a bimatrix game", cmd_nash);
    nash->add_flag("--tropical", o.tropical, "tropical game");
    nash->add_flag("--enumerate", o.enumerate, "all equilibria");
    nash->add_option("--jstar", o.jstar, "missing label for the Lemke-Howson fallback");
    nash->add_option("--cap", o.cap, "cap for tropical enumeration");
    add("encode-sat", "encode a DIMACS formula as a TLCP instance", cmd_encode_sat);
    add("sat-check", "decide a DIMACS formula through the TLCP encoding", cmd_sat_check);
    add("oracle", "brute-force solution set", cmd_oracle)
        ->add_option("--method", o.method, "lcp or tnecp")
        ->required()
        ->check(CLI::IsMember({"lcp", "tnecp"}));
    auto* bench = add("bench", "CSV benchmark of Lemke-Howson runs", cmd_bench, false);
    bench->add_option("--family", o.family, "random-nondegenerate-tnecp or dominant-necp")
        ->check(CLI::IsMember({"random-nondegenerate-tnecp", "dominant-necp"}));
    bench->add_option("--sizes", o.sizes, "n for random instances, r = s for dominant games")->delimiter(',');
    bench->add_option("--count", o.count, "instances per size");
    bench->add_flag("--no-timing", o.no_timing, "print 0 in the wall_ms column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_invalid;
    }

    try {
        return handler(o);
    } catch (const guard_exceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return exit_guard;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_invalid;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}
