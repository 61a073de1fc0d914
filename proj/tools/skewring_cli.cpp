// skewring-cli: evaluate expressions and run property suites in a configured
// skew ring. Exit status: 0 success, 1 violation found, 2 usage/parse/config error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewring/cli/config.hpp"
#include "skewring/cli/expression.hpp"
#include "skewring/cli/session.hpp"
#include "skewring/cli/suites.hpp"
#include "skewring/noetherian_lab.hpp"

namespace {

using namespace skewring;
using namespace skewring::cli;
using ojson = nlohmann::ordered_json;

struct Globals {
    std::string config_path;
    std::string format = "text";
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::int64_t precision = 0;
    bool precision_given = false;
};

bool json_output(const Globals& g) { return g.format == "json"; }

Session open_session(const Globals& g) {
    SessionConfig cfg = g.config_path.empty() ? weyl_config() : load_config(g.config_path);
    if (g.precision_given) {
        if (cfg.structure != Structure::PowerSeries && cfg.structure != Structure::LaurentSeries)
            throw ConfigError("--precision needs a series structure");
        if (g.precision < 1 || g.precision > 512) throw ConfigError("--precision must lie in 1..512");
        cfg.precision = g.precision;
    }
    return Session(std::move(cfg));
}

ojson header(const std::string& command, const Session& s) {
    ojson j;
    j["command"] = command;
    j["context"] = s.name();
    return j;
}

int emit(const Globals& g, const ojson& j, const std::string& text) {
    if (json_output(g))
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
    return 0;
}

int cmd_eval(const Globals& g, const std::string& text) {
    auto s = open_session(g);
    auto e = s.parse(text);
    auto v = s.eval(*e);
    auto j = header("eval", s);
    j["input"] = render(e);
    j["value"] = to_string(v);
    return emit(g, j, to_string(v) + "\n");
}

int cmd_mul(const Globals& g, const std::string& a, const std::string& b) {
    auto s = open_session(g);
    auto v = Session::mul(s.eval(a), s.eval(b));
    auto j = header("mul", s);
    j["operands"] = {render(s.parse(a)), render(s.parse(b))};
    j["value"] = to_string(v);
    return emit(g, j, to_string(v) + "\n");
}

int cmd_associator(const Globals& g, const std::string& a, const std::string& b, const std::string& c) {
    auto s = open_session(g);
    auto x = s.eval(a), y = s.eval(b), z = s.eval(c);
    auto left = Session::mul(Session::mul(x, y), z);
    auto right = Session::mul(x, Session::mul(y, z));
    auto assoc = Session::sub(left, right);
    auto j = header("associator", s);
    j["operands"] = {render(s.parse(a)), render(s.parse(b)), render(s.parse(c))};
    j["left"] = to_string(left);
    j["right"] = to_string(right);
    j["associator"] = to_string(assoc);
    return emit(g, j,
                "(ab)c = " + to_string(left) + "\na(bc) = " + to_string(right) + "\n(a, b, c) = " + to_string(assoc) +
                    "\n");
}

int cmd_divide(const Globals& g, const std::string& dividend, const std::vector<std::string>& generators) {
    auto s = open_session(g);
    if (!s.ore()) throw DomainError("divide needs an ore structure");
    auto p = std::get<OrePoly>(s.eval(dividend));
    std::vector<OrePoly> gens;
    for (const auto& text : generators) gens.push_back(std::get<OrePoly>(s.eval(text)));
    auto trace = right_divide(p, gens);
    bool exact = replay(trace, gens) == p;

    auto j = header("divide", s);
    j["dividend"] = to_string(p);
    j["generators"] = ojson::array();
    for (const auto& gen : gens) j["generators"].push_back(to_string(gen));
    j["steps"] = ojson::array();
    std::string text;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& step = trace.steps[k];
        auto term = OrePoly::monomial(s.ore(), step.multipliers.front(), step.shift);
        ojson js;
        js["generator"] = step.generator + 1;
        js["shift"] = step.shift;
        js["multiplier"] = to_string(step.multipliers.front());
        j["steps"].push_back(js);
        text += "step " + std::to_string(k + 1) + ": subtract g" + std::to_string(step.generator + 1) + "*(" +
                to_string(term) + ")\n";
    }
    j["remainder"] = to_string(trace.remainder);
    j["replay_exact"] = exact;
    text += "remainder: " + to_string(trace.remainder) + "\nreplay: " + (exact ? "exact" : "MISMATCH") + "\n";
    emit(g, j, text);
    return exact ? 0 : 1;
}

int cmd_series(const Globals& g, const std::string& text) {
    auto s = open_session(g);
    if (!s.is_series()) throw DomainError("series needs a power_series or laurent_series structure");
    auto v = std::get<TruncatedSeries>(s.eval(text));
    auto o = series_order(v);
    auto j = header("series", s);
    j["value"] = to_string(v);
    j["precision"] = v.precision();
    j["order"] = o ? ojson(*o) : ojson(nullptr);
    j["leading_coefficient"] = o ? ojson(to_string(series_leading_coefficient(v))) : ojson(nullptr);
    std::string out = "value: " + to_string(v) + "\nprecision: " + std::to_string(v.precision()) + "\norder: " +
                      (o ? std::to_string(*o) : std::string("none (zero below the precision)")) + "\n";
    if (o) out += "leading coefficient: " + to_string(series_leading_coefficient(v)) + "\n";
    return emit(g, j, out);
}

int report(const Globals& g, const SuiteReport& rep) {
    if (json_output(g))
        std::cout << to_json(rep).dump(2) << '\n';
    else
        std::cout << to_text(rep);
    return rep.passed() ? 0 : 1;
}

int cmd_check(const Globals& g, const std::string& suite, const SuiteOptions& options) {
    auto s = open_session(g);
    return report(g, run_suite(s, suite, options));
}

int cmd_demo_counterexample(const Globals& g, SuiteOptions options) {
    auto sigma = TwistMap::counterexample_sigma();
    const auto& R = sigma.domain();
    auto T = OreContext::make(sigma);
    auto y = monomial(R, {1, 0}), z = monomial(R, {0, 1});
    auto xy = OrePoly::x_power(T, 1) * OrePoly::constant(T, y);

    auto rep = counterexample_suite(options, T->name());
    if (json_output(g)) {
        ojson j;
        j["command"] = "demo counterexample";
        j["ring"] = T->name();
        j["sigma"] = {{"Y", to_string(sigma.apply(y))}, {"Z", to_string(sigma.apply(z))},
                      {"Y*Z", to_string(sigma.apply(y * z))}};
        j["X*Y"] = to_string(xy);
        j["report"] = to_json(rep);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "ring: " << T->name() << "\n"
                  << "sigma(Y) = " << to_string(sigma.apply(y)) << ", sigma(Z) = " << to_string(sigma.apply(z))
                  << ", sigma(Y*Z) = " << to_string(sigma.apply(y * z)) << "\n"
                  << "X*Y = " << to_string(xy) << "\n"
                  << "ideal: left ideal of sums r_i X^i with every r_i in (Y)\n"
                  << "claim: left multiples of generators of degree <= m have coefficients in (Y^2) from X^(m+1) on,\n"
                  << "       while Y*X^(m+1) lies in the ideal and Y is not in (Y^2)\n\n"
                  << to_text(rep);
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in skew polynomial, Laurent and series rings"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "JSON session configuration (default: Q[Y][X; id, d/dY])");
    app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--trials", g.trials, "trials per check (default depends on the suite)");
    app.add_option("--seed", g.seed, "sampling seed");
    auto* precision = app.add_option("--precision", g.precision, "series precision, overrides the configuration");

    std::string a, b, c;
    std::vector<std::string> generators;

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", a)->required();
    auto* mul = app.add_subcommand("mul", "multiply two expressions");
    mul->add_option("a", a)->required();
    mul->add_option("b", b)->required();
    auto* assoc = app.add_subcommand("associator", "(ab)c - a(bc)");
    assoc->add_option("a", a)->required();
    assoc->add_option("b", b)->required();
    assoc->add_option("c", c)->required();
    auto* divide = app.add_subcommand("divide", "right division by generators, with a replayed trace");
    divide->add_option("dividend", a)->required();
    divide->add_option("generators", generators)->required()->expected(1, -1);
    auto* series = app.add_subcommand("series", "evaluate a truncated series and report its order");
    series->add_option("expr", a)->required();

    SuiteOptions options;
    std::string suite;
    std::int64_t n = 0;
    std::uint32_t m = 0;
    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    auto* n_opt = check->add_option("--n", n, "nucleus: largest |n|");
    auto* m_opt = check->add_option("--m", m, "counterexample: generator degree");

    std::string topic;
    auto* demo = app.add_subcommand("demo", "demonstrations");
    demo->add_option("topic", topic)->required()->check(CLI::IsMember({"counterexample"}));
    auto* demo_m = demo->add_option("--m", m, "generator degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.precision_given = precision->count() > 0;
    options.trials = g.trials;
    options.seed = g.seed;
    if (n_opt->count()) options.n = n;
    if (m_opt->count() || demo_m->count()) options.m = m;

    try {
        if (eval->parsed()) return cmd_eval(g, a);
        if (mul->parsed()) return cmd_mul(g, a, b);
        if (assoc->parsed()) return cmd_associator(g, a, b, c);
        if (divide->parsed()) return cmd_divide(g, a, generators);
        if (series->parsed()) return cmd_series(g, a);
        if (check->parsed()) return cmd_check(g, suite, options);
        if (demo->parsed()) return cmd_demo_counterexample(g, options);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
