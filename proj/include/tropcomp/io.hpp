#pragma once

/**
 * @file io.hpp
 * @brief JSON instance, solution and trace formats.
 *
 * Rationals are strings "p" or "p/q"; the tropical zero is null. Canonical
 * output has sorted keys, no whitespace and lowest-terms rationals.
 *
 *   {"kind":"tnecp","n":N,"M_minus":[[..]],"q_plus":[..]}
 *   {"kind":"tlcp","n":N,"M_minus":..,"M_plus":..,"q_minus":..,"q_plus":..}
 *   {"kind":"necp","n":N,"M":[[..]],"q":[..]}
 *   {"kind":"system","n":N,"d":D,"A":[[..]],"b":[..]}
 *   {"kind":"bimatrix","r":R,"s":S,"P":[[..]],"Q":[[..]],"tropical":bool}
 */

#include <json.hpp>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tropcomp/dominance.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/games.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/lemke_howson.hpp"
#include "tropcomp/matching_solver.hpp"
#include "tropcomp/sat_reduction.hpp"

namespace tropcomp {

using json = nlohmann::json;

class parse_error : public invalid_input {
public:
    enum class Kind { malformed_json, schema, bad_number, dimension, validation };

    parse_error(Kind kind, const std::string& what) : invalid_input(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

using Instance =
    std::variant<TnecpInstance<MaxPlus>, TlcpInstance<MaxPlus>, NecpInstance, LinearSystem, ClassicalGame, TropicalGame>;

namespace detail {

using PK = parse_error::Kind;

inline const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw parse_error(PK::schema, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::size_t size_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw parse_error(PK::schema, std::string("field \"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

inline Rational rational_from(const json& v) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const invalid_input& e) {
            throw parse_error(PK::bad_number, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw parse_error(PK::bad_number, "expected a rational string, got " + v.dump());
}

inline TropScalar<MaxPlus> trop_from(const json& v) {
    if (v.is_null()) return TropScalar<MaxPlus>::zero();
    return TropScalar<MaxPlus>(rational_from(v));
}

template <class T, class Convert>
std::vector<T> vector_from(const json& v, std::size_t len, const char* name, Convert convert) {
    if (!v.is_array()) throw parse_error(PK::schema, std::string(name) + " must be an array");
    if (v.size() != len)
        throw parse_error(PK::dimension, std::string(name) + " has length " + std::to_string(v.size()) +
                                             ", expected " + std::to_string(len));
    std::vector<T> out;
    for (const auto& e : v) out.push_back(convert(e));
    return out;
}

template <class T, class Convert>
Matrix<T> matrix_from(const json& v, std::size_t rows, std::size_t cols, const char* name, Convert convert) {
    if (!v.is_array()) throw parse_error(PK::schema, std::string(name) + " must be an array of rows");
    if (v.size() != rows)
        throw parse_error(PK::dimension, std::string(name) + " has " + std::to_string(v.size()) + " rows, expected " +
                                             std::to_string(rows));
    Matrix<T> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto row = vector_from<T>(v[i], cols, name, convert);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

inline json to_json(const Rational& r) { return format_rational(r); }

inline json to_json(const TropScalar<MaxPlus>& s) {
    return s.is_zero() ? json(nullptr) : json(format_rational(s.value()));
}

template <class T>
json to_json(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(to_json(e));
    return out;
}

template <class T>
json to_json(const Matrix<T>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

template <class I>
void validated(const I& instance) {
    auto v = validate(instance);
    if (v.empty()) return;
    std::string msg = "instance fails validation:";
    for (const auto& x : v) msg += " [" + x.condition + "] " + x.detail + ";";
    throw parse_error(PK::validation, msg);
}

}  // namespace detail

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(parse_error::Kind::malformed_json, std::string("malformed JSON: ") + e.what());
    }
}

inline Instance instance_from_json(const json& j) {
    using detail::PK;
    if (!j.is_object()) throw parse_error(PK::schema, "instance must be a JSON object");
    const auto& kind_field = detail::field(j, "kind");
    if (!kind_field.is_string()) throw parse_error(PK::schema, "\"kind\" must be a string");
    const auto kind = kind_field.get<std::string>();
    auto trop = [](const json& v) { return detail::trop_from(v); };
    auto rat = [](const json& v) { return detail::rational_from(v); };

    if (kind == "tnecp") {
        auto n = detail::size_field(j, "n");
        TnecpInstance<MaxPlus> t{detail::matrix_from<TropScalar<MaxPlus>>(detail::field(j, "M_minus"), n, n, "M_minus", trop),
                                 detail::vector_from<TropScalar<MaxPlus>>(detail::field(j, "q_plus"), n, "q_plus", trop)};
        detail::validated(t);
        return t;
    }
    if (kind == "tlcp") {
        auto n = detail::size_field(j, "n");
        TlcpInstance<MaxPlus> t{detail::matrix_from<TropScalar<MaxPlus>>(detail::field(j, "M_minus"), n, n, "M_minus", trop),
                                detail::matrix_from<TropScalar<MaxPlus>>(detail::field(j, "M_plus"), n, n, "M_plus", trop),
                                detail::vector_from<TropScalar<MaxPlus>>(detail::field(j, "q_minus"), n, "q_minus", trop),
                                detail::vector_from<TropScalar<MaxPlus>>(detail::field(j, "q_plus"), n, "q_plus", trop)};
        detail::validated(t);
        return t;
    }
    if (kind == "necp") {
        auto n = detail::size_field(j, "n");
        NecpInstance c{detail::matrix_from<Rational>(detail::field(j, "M"), n, n, "M", rat),
                       detail::vector_from<Rational>(detail::field(j, "q"), n, "q", rat)};
        detail::validated(c);
        return c;
    }
    if (kind == "system") {
        auto n = detail::size_field(j, "n");
        auto d = detail::size_field(j, "d");
        LinearSystem s{detail::matrix_from<Rational>(detail::field(j, "A"), n, d, "A", rat),
                       detail::vector_from<Rational>(detail::field(j, "b"), n, "b", rat)};
        detail::validated(s);
        return s;
    }
    if (kind == "bimatrix") {
        auto r = detail::size_field(j, "r");
        auto s = detail::size_field(j, "s");
        bool tropical = false;
        if (j.contains("tropical")) {
            if (!j["tropical"].is_boolean()) throw parse_error(PK::schema, "\"tropical\" must be a boolean");
            tropical = j["tropical"].get<bool>();
        }
        if (tropical) {
            TropicalGame g{detail::matrix_from<TropScalar<MaxPlus>>(detail::field(j, "P"), r, s, "P", trop),
                           detail::matrix_from<TropScalar<MaxPlus>>(detail::field(j, "Q"), r, s, "Q", trop)};
            try {
                require_valid(g);
            } catch (const invalid_input& e) {
                throw parse_error(PK::validation, e.what());
            }
            return g;
        }
        return ClassicalGame{detail::matrix_from<Rational>(detail::field(j, "P"), r, s, "P", rat),
                             detail::matrix_from<Rational>(detail::field(j, "Q"), r, s, "Q", rat)};
    }
    throw parse_error(PK::schema, "unknown instance kind \"" + kind + "\"");
}

inline Instance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

inline json to_json(const Instance& instance) {
    using detail::to_json;
    return std::visit(
        [](const auto& x) -> json {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, TnecpInstance<MaxPlus>>) {
                return {{"kind", "tnecp"}, {"n", x.n()}, {"M_minus", to_json(x.m_minus)}, {"q_plus", to_json(x.q_plus)}};
            } else if constexpr (std::is_same_v<X, TlcpInstance<MaxPlus>>) {
                return {{"kind", "tlcp"},
                        {"n", x.n()},
                        {"M_minus", to_json(x.m_minus)},
                        {"M_plus", to_json(x.m_plus)},
                        {"q_minus", to_json(x.q_minus)},
                        {"q_plus", to_json(x.q_plus)}};
            } else if constexpr (std::is_same_v<X, NecpInstance>) {
                return {{"kind", "necp"}, {"n", x.n()}, {"M", to_json(x.m)}, {"q", to_json(x.q)}};
            } else if constexpr (std::is_same_v<X, LinearSystem>) {
                return {{"kind", "system"}, {"n", x.b.size()}, {"d", x.a.cols()}, {"A", to_json(x.a)},
                        {"b", to_json(x.b)}};
            } else if constexpr (std::is_same_v<X, ClassicalGame>) {
                return {{"kind", "bimatrix"}, {"r", x.r()}, {"s", x.s()}, {"P", to_json(x.p)}, {"Q", to_json(x.q)},
                        {"tropical", false}};
            } else {
                return {{"kind", "bimatrix"}, {"r", x.r()}, {"s", x.s()}, {"P", to_json(x.p)}, {"Q", to_json(x.q)},
                        {"tropical", true}};
            }
        },
        instance);
}

/// Canonical serialization: compact, sorted keys.
inline std::string serialize(const Instance& instance) { return to_json(instance).dump(); }

inline json solution_to_json(const TropSolution<MaxPlus>& s) {
    return {{"w", detail::to_json(s.w)}, {"z", detail::to_json(s.z)}};
}

inline json solution_to_json(const ClassicalSolution& s) {
    return {{"w", detail::to_json(s.w)}, {"z", detail::to_json(s.z)}};
}

/// Log-image solutions are printed with their max-times values.
inline json solution_to_json(const TropSolution<MaxTimes>& s) {
    auto vec = [](const TropVector<MaxTimes>& v) {
        json out = json::array();
        for (const auto& e : v) out.push_back(e.is_zero() ? json(nullptr) : json(format_rational(e.value())));
        return out;
    };
    return {{"w", vec(s.w)}, {"z", vec(s.z)}};
}

inline TropSolution<MaxPlus> tropical_solution_from_json(const json& j, std::size_t n) {
    auto trop = [](const json& v) { return detail::trop_from(v); };
    return {detail::vector_from<TropScalar<MaxPlus>>(detail::field(j, "w"), n, "w", trop),
            detail::vector_from<TropScalar<MaxPlus>>(detail::field(j, "z"), n, "z", trop)};
}

inline json strategies_to_json(const ClassicalStrategies& sp) {
    return {{"x", detail::to_json(sp.x)}, {"y", detail::to_json(sp.y)}};
}

inline json strategies_to_json(const TropicalStrategies& sp) {
    return {{"x", detail::to_json(sp.x)}, {"y", detail::to_json(sp.y)}};
}

template <TropicalDomain D>
json graph_to_json(const ComplementarityGraph<D>& g) {
    json blue = json::array(), red = json::array();
    for (const auto& e : g.blue_edges()) blue.push_back({e.row + 1, e.col + 1});
    for (const auto& e : g.red_edges()) red.push_back({e.row + 1, e.col + 1});
    return {{"blue", blue}, {"red", red}};
}

inline json column_to_json(const LabeledColumn& c) { return json::array({c.label + 1, to_string(c.color)}); }

/// One JSON line per pivot: {"enter":[label,color],"leave":[..],"row":i,"step":t}, 1-based.
inline std::vector<std::string> trace_to_json_lines(const LhTrace& trace) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        json line = {{"step", k + 1},
                     {"enter", column_to_json(s.entering)},
                     {"leave", column_to_json(s.leaving)},
                     {"row", s.pivot_row + 1}};
        out.push_back(line.dump());
    }
    return out;
}

}  // namespace tropcomp
