#pragma once

// JSON session configuration. Rationals are strings ("3/4") or JSON integers;
// floating point numbers are rejected.
//
//   {
//     "ring": "rationals" | "complexes" | "quaternions" | "octonions" | "sedenions"
//           | {"kind": "cayley_dickson", "level": 2, "base": <ring>}
//           | {"kind": "jordan_plus", "base": <ring>}
//           | {"kind": "poly1", "variable": "Y"}
//           | {"kind": "poly2", "variables": ["Y", "Z"]}
//           | {"kind": "matrix", "n": 2, "base": <ring>},
//             (any record may also be written {"matrix": {"n": 2, "base": <ring>}})
//     "structure": "ore" | "laurent" | "iterated_laurent" | "power_series" | "laurent_series",
//     "sigma": <map>, "delta": <map>, "sigmas": [<map>, ...], "precision": 8
//   }
//
//   <map> := "identity" | "zero" | "conjugation" | "formal_derivative" | "coefficient_doubler"
//          | "counterexample_sigma" | "exponent_fold" | "transpose"
//          | {"kind": "sigma_q_complex", "q": "2"} | {"kind": "quantum_torus_sigma", "q": "2"}
//          | {"kind": "power", "base": <map>, "exponent": -1}
//          | {"kind": "composition", "maps": [<map>, ...]}      maps[0] applied last

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../error.hpp"
#include "../maps.hpp"
#include "../rational.hpp"
#include "../rings.hpp"

namespace skewring::cli {

using json = nlohmann::json;

enum class Structure { Ore, Laurent, IteratedLaurent, PowerSeries, LaurentSeries };

inline std::string structure_name(Structure s) {
    switch (s) {
        case Structure::Ore: return "ore";
        case Structure::Laurent: return "laurent";
        case Structure::IteratedLaurent: return "iterated_laurent";
        case Structure::PowerSeries: return "power_series";
        case Structure::LaurentSeries: return "laurent_series";
    }
    return "?";
}

struct SessionConfig {
    RingDescriptor ring;
    Structure structure = Structure::Ore;
    std::optional<TwistMap> sigma;
    std::optional<TwistMap> delta;
    std::vector<TwistMap> sigmas;
    std::optional<std::int64_t> precision;
};

namespace config_detail {

inline Rational rational(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ConfigError(where + " must be a rational string such as \"3/4\" or an integer");
}

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ConfigError(where + " needs \"" + key + "\"");
    return j.at(key);
}

// {"matrix": {"n": 2}} -> {"kind": "matrix", "n": 2}
inline json unwrap(const json& j) {
    if (!j.is_object() || j.size() != 1 || j.contains("kind") || !j.begin().value().is_object()) return j;
    json body = j.begin().value();
    body["kind"] = j.begin().key();
    return body;
}

inline std::string kind_of(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    const auto& k = field(j, "kind", where);
    if (!k.is_string()) throw ConfigError(where + ".kind must be a string");
    return k.get<std::string>();
}

inline std::int64_t integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + " must be an integer");
    return j.get<std::int64_t>();
}

inline void check_variable(const std::string& v) {
    bool ok = !v.empty() && std::isalpha(static_cast<unsigned char>(v[0]));
    for (char c : v) ok = ok && std::isalnum(static_cast<unsigned char>(c));
    if (!ok) throw ConfigError("bad variable name '" + v + "'");
    if (v == "X" || v == "O" || v == "i" || v == "j" || v == "k" ||
        (v.size() > 1 && (v[0] == 'X' || v[0] == 'e') && std::all_of(v.begin() + 1, v.end(), [](unsigned char c) { return std::isdigit(c) != 0; })))
        throw ConfigError("variable name '" + v + "' is reserved");
}

}  // namespace config_detail

inline RingDescriptor ring_from_json(const json& record, const std::string& where = "ring") {
    using namespace config_detail;
    const json j = unwrap(record);
    auto kind = kind_of(j, where);
    if (kind == "rationals") return RingDescriptor::rationals();
    if (kind == "complexes") return RingDescriptor::complexes();
    if (kind == "quaternions") return RingDescriptor::quaternions();
    if (kind == "octonions") return RingDescriptor::octonions();
    if (kind == "sedenions") return RingDescriptor::sedenions();
    auto base = [&] {
        return j.is_object() && j.contains("base") ? ring_from_json(j.at("base"), where + ".base")
                                                   : RingDescriptor::rationals();
    };
    if (kind == "cayley_dickson") {
        auto level = integer(field(j, "level", where), where + ".level");
        if (level < 0) throw ConfigError(where + ".level must be nonnegative");
        return RingDescriptor::cayley_dickson(static_cast<unsigned>(level), base());
    }
    if (kind == "jordan_plus") return RingDescriptor::jordan_plus(ring_from_json(field(j, "base", where), where + ".base"));
    if (kind == "poly1") {
        std::string v = j.is_object() && j.contains("variable") ? j.at("variable").get<std::string>() : "Y";
        check_variable(v);
        return RingDescriptor::poly1(v);
    }
    if (kind == "poly2") {
        std::vector<std::string> vs{"Y", "Z"};
        if (j.is_object() && j.contains("variables")) vs = j.at("variables").get<std::vector<std::string>>();
        if (vs.size() != 2) throw ConfigError(where + ".variables must list two names");
        for (const auto& v : vs) check_variable(v);
        return RingDescriptor::poly2(vs[0], vs[1]);
    }
    if (kind == "matrix") {
        auto n = integer(field(j, "n", where), where + ".n");
        if (n < 1 || n > 8) throw ConfigError(where + ".n must lie in 1..8");
        return RingDescriptor::matrix(static_cast<unsigned>(n), base());
    }
    throw ConfigError("unknown ring kind '" + kind + "'");
}

inline TwistMap map_from_json(const json& record, const RingDescriptor& ring, const std::string& where) {
    using namespace config_detail;
    const json j = unwrap(record);
    auto kind = kind_of(j, where);
    if (kind == "identity") return TwistMap::identity(ring);
    if (kind == "zero") return TwistMap::zero(ring);
    if (kind == "conjugation") return TwistMap::conjugation(ring);
    if (kind == "formal_derivative") return TwistMap::formal_derivative(ring);
    if (kind == "coefficient_doubler") return TwistMap::coefficient_doubler(ring);
    if (kind == "counterexample_sigma") return TwistMap::counterexample_sigma(ring);
    if (kind == "exponent_fold") return TwistMap::exponent_fold(ring);
    if (kind == "transpose") return TwistMap::transpose(ring);
    if (kind == "sigma_q_complex") {
        auto m = TwistMap::sigma_q_complex(rational(field(j, "q", where), where + ".q"));
        if (!(m.domain() == ring)) throw ConfigError(where + ": sigma_q_complex acts on C_Q, the ring is " + ring.name());
        return m;
    }
    if (kind == "quantum_torus_sigma")
        return TwistMap::quantum_torus_sigma(ring, rational(field(j, "q", where), where + ".q"));
    if (kind == "power") {
        auto base = map_from_json(field(j, "base", where), ring, where + ".base");
        return TwistMap::power(base, static_cast<int>(integer(field(j, "exponent", where), where + ".exponent")));
    }
    if (kind == "composition") {
        const auto& list = field(j, "maps", where);
        if (!list.is_array() || list.empty()) throw ConfigError(where + ".maps must be a nonempty list");
        std::vector<TwistMap> maps;
        for (std::size_t k = 0; k < list.size(); ++k)
            maps.push_back(map_from_json(list[k], ring, where + ".maps[" + std::to_string(k) + "]"));
        return TwistMap::composition(std::move(maps));
    }
    throw ConfigError("unknown map kind '" + kind + "'");
}

/// Reads and validates a configuration; library errors surface as ConfigError.
inline SessionConfig config_from_json(const json& j) {
    using namespace config_detail;
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    static const std::set<std::string> allowed{"ring", "structure", "sigma", "delta", "sigmas", "precision"};
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw ConfigError("unknown configuration key '" + key + "'");
    try {
        SessionConfig cfg;
        cfg.ring = ring_from_json(field(j, "ring", "configuration"));
        auto s = j.contains("structure") ? j.at("structure").get<std::string>() : std::string("ore");
        if (s == "ore") cfg.structure = Structure::Ore;
        else if (s == "laurent") cfg.structure = Structure::Laurent;
        else if (s == "iterated_laurent") cfg.structure = Structure::IteratedLaurent;
        else if (s == "power_series") cfg.structure = Structure::PowerSeries;
        else if (s == "laurent_series") cfg.structure = Structure::LaurentSeries;
        else throw ConfigError("unknown structure '" + s + "'");

        if (j.contains("sigma")) cfg.sigma = map_from_json(j.at("sigma"), cfg.ring, "sigma");
        if (j.contains("delta")) cfg.delta = map_from_json(j.at("delta"), cfg.ring, "delta");
        if (j.contains("sigmas")) {
            const auto& list = j.at("sigmas");
            if (!list.is_array()) throw ConfigError("sigmas must be a list");
            for (std::size_t k = 0; k < list.size(); ++k)
                cfg.sigmas.push_back(map_from_json(list[k], cfg.ring, "sigmas[" + std::to_string(k) + "]"));
        }
        if (j.contains("precision")) cfg.precision = integer(j.at("precision"), "precision");

        bool series = cfg.structure == Structure::PowerSeries || cfg.structure == Structure::LaurentSeries;
        if (cfg.structure == Structure::IteratedLaurent) {
            if (cfg.sigmas.empty()) throw ConfigError("iterated_laurent needs a nonempty \"sigmas\" list");
            if (cfg.sigma || cfg.delta) throw ConfigError("iterated_laurent takes \"sigmas\", not sigma/delta");
        } else {
            if (!cfg.sigma) throw ConfigError(structure_name(cfg.structure) + " needs \"sigma\"");
            if (!cfg.sigmas.empty()) throw ConfigError("\"sigmas\" is only used by iterated_laurent");
            if (cfg.delta && cfg.structure != Structure::Ore && cfg.delta->kind() != MapKind::Zero)
                throw ConfigError(structure_name(cfg.structure) + " does not take a derivation");
        }
        if (series && !cfg.precision) throw ConfigError("series structures need \"precision\"");
        if (!series && cfg.precision) throw ConfigError("\"precision\" is only used by series structures");
        if (cfg.precision && (*cfg.precision < 1 || *cfg.precision > 512))
            throw ConfigError("precision must lie in 1..512");
        return cfg;
    } catch (const ConfigError&) {
        throw;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

inline SessionConfig config_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

inline SessionConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read configuration file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return config_from_text(buffer.str());
}

/// Q[Y][X; id, d/dY]
inline SessionConfig weyl_config() {
    return config_from_text(R"({"ring": {"kind": "poly1"}, "structure": "ore",
                                "sigma": "identity", "delta": "formal_derivative"})");
}

}  // namespace skewring::cli
