#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "efg/counterex.hpp"
#include "efg/evaluate.hpp"
#include "efg/json_io.hpp"
#include "efg/linear.hpp"
#include "efg/parser.hpp"
#include "efg/solver.hpp"
#include "efg/suites.hpp"
#include "efg/unnest.hpp"

namespace {

using efg::json;

// exit codes: 0 success, 1 false verdict or suite failure, 2 usage or input error
constexpr int kOk = 0, kFalse = 1, kUsage = 2;

struct Output {
    std::string path;
    std::string format;  // "", "json" or "text"; empty means the command's default

    bool json_for(bool default_json) const { return format.empty() ? default_json : format == "json"; }

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << text << '\n';
    }
    void write_json(json j) const {
        json out{{"schema", 1}};
        out.update(j);
        write(out.dump(2));
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct FormulaSource {
    std::string text;
    std::string file;

    void add(CLI::App* cmd) {
        auto* f = cmd->add_option("--formula", text, "formula text");
        auto* p = cmd->add_option("--file", file, "file holding the formula");
        f->excludes(p);
    }
    efg::Formula get() const {
        if (text.empty() && file.empty()) throw std::invalid_argument("one of --formula or --file is required");
        return efg::parse(file.empty() ? text : read_file(file));
    }
};

json term_to_json(const efg::Term& t) {
    json j{{"power", t.power}};
    if (t.is_fixed_point()) j["base"] = "x*";
    else j["var"] = t.var;
    return j;
}

json formula_to_json(const efg::Formula& f) {
    using efg::Op;
    switch (f.op()) {
        case Op::True: return {{"op", "true"}};
        case Op::False: return {{"op", "false"}};
        case Op::Less: return {{"op", "<"}, {"lhs", term_to_json(f.lhs())}, {"rhs", term_to_json(f.rhs())}};
        case Op::Eq: return {{"op", "="}, {"lhs", term_to_json(f.lhs())}, {"rhs", term_to_json(f.rhs())}};
        case Op::Pred: return {{"op", "pred"}, {"name", f.name()}, {"arg", term_to_json(f.term())}};
        case Op::Not: return {{"op", "not"}, {"arg", formula_to_json(f.child())}};
        case Op::And: return {{"op", "and"}, {"left", formula_to_json(f.left())}, {"right", formula_to_json(f.right())}};
        case Op::Or: return {{"op", "or"}, {"left", formula_to_json(f.left())}, {"right", formula_to_json(f.right())}};
        case Op::Exists: return {{"op", "exists"}, {"var", f.name()}, {"body", formula_to_json(f.child())}};
        case Op::Forall: return {{"op", "forall"}, {"var", f.name()}, {"body", formula_to_json(f.child())}};
    }
    return {};
}

void tree(const efg::Formula& f, int indent, std::ostream& out) {
    using efg::Op;
    out << std::string(static_cast<std::size_t>(indent) * 2, ' ');
    switch (f.op()) {
        case Op::Not: out << "not\n"; tree(f.child(), indent + 1, out); return;
        case Op::And:
        case Op::Or:
            out << (f.op() == Op::And ? "and\n" : "or\n");
            tree(f.left(), indent + 1, out);
            tree(f.right(), indent + 1, out);
            return;
        case Op::Exists:
        case Op::Forall:
            out << (f.op() == Op::Exists ? "exists " : "forall ") << f.name() << '\n';
            tree(f.child(), indent + 1, out);
            return;
        default: out << efg::render(f) << '\n';
    }
}

json formula_summary(const efg::Formula& f) {
    const auto stats = efg::var_stats(f);
    return {{"formula", efg::render(f)},
            {"free", stats.free},
            {"variables", stats.total_distinct},
            {"depth", efg::quantifier_depth(f)},
            {"max_power", efg::max_power(f)}};
}

json steps_to_json(const std::vector<efg::RewriteStep>& steps) {
    json j = json::array();
    for (const auto& s : steps) j.push_back({{"rule", s.rule}, {"before", s.before}, {"after", s.after}});
    return j;
}

efg::Valuation parse_env(const std::vector<std::string>& bindings) {
    efg::Valuation env;
    for (const auto& b : bindings) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("binding '" + b + "' is not var=value");
        env[b.substr(0, eq)] = efg::Rational::parse(b.substr(eq + 1));
    }
    return env;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ehrenfeucht-Fraisse games over signals: formulas, solver and property suites"};
    app.require_subcommand(1);
    app.fallthrough();
    Output output;
    app.add_option("-o,--output", output.path, "write the result to a file instead of stdout");
    app.add_option("--format", output.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    FormulaSource parse_src, unnest_src, eval_src, rewrite_src;
    auto* parse_cmd = app.add_subcommand("parse", "print the syntax tree of a formula");
    parse_src.add(parse_cmd);
    auto* unnest_cmd = app.add_subcommand("unnest", "rewrite every atom into unnested form");
    unnest_src.add(unnest_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "truth of a formula in a signal; exit 1 when false");
    eval_src.add(eval_cmd);
    std::string eval_signal, eval_fn = "1:1";
    std::vector<std::string> eval_env;
    bool eval_no_check = false;
    eval_cmd->add_option("--signal", eval_signal, "signal JSON or a file holding it")->required();
    eval_cmd->add_option("--fn", eval_fn, "f(x) = a x + b as a:b");
    eval_cmd->add_option("--env", eval_env, "free variable binding var=p/q (repeatable)");
    eval_cmd->add_flag("--no-stability-check", eval_no_check, "skip the refined re-evaluation");

    auto* rewrite_cmd = app.add_subcommand("rewrite-antitone", "rewrite a sentence over an antitone f");
    rewrite_src.add(rewrite_cmd);
    std::string rewrite_fn;
    bool rewrite_trace = false;
    rewrite_cmd->add_option("--fn", rewrite_fn, "f(x) = a x + b as a/b:c/d with a < 0")->required();
    rewrite_cmd->add_flag("--trace", rewrite_trace, "include the rewrite trace");

    auto* solve_cmd = app.add_subcommand("solve", "solve a bounded game between two signals");
    std::string solve_a, solve_b, solve_config, solve_fn = "1:1", solve_locality;
    int solve_rounds = 0, solve_pebbles = 0;
    bool solve_refined = false;
    solve_cmd->add_option("--a", solve_a, "signal A (JSON or file)")->required();
    solve_cmd->add_option("--b", solve_b, "signal B (JSON or file)")->required();
    solve_cmd->add_option("--config", solve_config, "starting configuration {\"left\": [...], \"right\": [...]}");
    solve_cmd->add_option("--rounds", solve_rounds, "number of rounds")->required()->check(CLI::Range(0, 30));
    solve_cmd->add_option("--pebbles", solve_pebbles, "pebble bound (unbounded when omitted)")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--locality", solve_locality, "locality bound p/q");
    solve_cmd->add_option("--fn", solve_fn, "f(x) = a x + b as a:b");
    solve_cmd->add_flag("--refined", solve_refined, "use the refined discretization");

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite; exit 1 on any failure");
    std::string verify_name;
    std::uint64_t verify_seed = 1;
    std::size_t verify_instances = 0;
    unsigned verify_threads = 0;
    bool verify_time = false;
    verify_cmd->add_option("name", verify_name, "suite name or 'all'")->required();
    verify_cmd->add_option("--seed", verify_seed, "seed of the instance generators");
    verify_cmd->add_option("--instances", verify_instances, "instance count (suite default when omitted)");
    verify_cmd->add_option("--threads", verify_threads, "worker threads (EFGAME_THREADS or all cores when omitted)");
    verify_cmd->add_flag("--time", verify_time, "include wall time in the report");

    auto* counterex_cmd = app.add_subcommand("counterex", "finite truncations of the sequence construction");
    counterex_cmd->require_subcommand(1);
    auto* run_cmd = counterex_cmd->add_subcommand("run", "pebble games between class labellings");
    int cx_m = 2, cx_l = 2, cx_k = 2, cx_rounds = 2;
    std::size_t cx_samples = 500;
    run_cmd->add_option("--M", cx_m, "largest absolute sequence entry")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--L", cx_l, "largest sequence length")->check(CLI::PositiveNumber);
    run_cmd->add_option("--k", cx_k, "pebbles and classes")->check(CLI::PositiveNumber);
    run_cmd->add_option("--rounds", cx_rounds, "rounds")->check(CLI::NonNegativeNumber);
    run_cmd->add_option("--samples", cx_samples, "sampled pairs for the interpretation check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*parse_cmd) {
            const efg::Formula f = parse_src.get();
            if (output.json_for(false)) {
                json j = formula_summary(f);
                j["ast"] = formula_to_json(f);
                output.write_json(j);
            } else {
                std::ostringstream out;
                tree(f, 0, out);
                std::string s = out.str();
                s.pop_back();
                output.write(s);
            }
        } else if (*unnest_cmd) {
            const efg::Formula f = efg::unnest(unnest_src.get());
            if (output.json_for(false)) output.write_json(formula_summary(f));
            else output.write(efg::render(f));
        } else if (*eval_cmd) {
            const efg::Formula f = eval_src.get();
            const efg::Signal s = efg::signal_from_json(efg::load_json_argument(eval_signal));
            efg::EvalOptions opts;
            opts.stability_check = !eval_no_check;
            const bool value = efg::evaluate(f, s, parse_env(eval_env), efg::FunctionSpec::parse(eval_fn), opts);
            if (output.json_for(false)) output.write_json(json{{"formula", efg::render(f)}, {"value", value}});
            else output.write(value ? "true" : "false");
            return value ? kOk : kFalse;
        } else if (*rewrite_cmd) {
            const efg::Formula f = rewrite_src.get();
            const efg::AntitoneRewrite r = efg::antitone_rewrite(f, efg::FunctionSpec::parse(rewrite_fn));
            if (output.json_for(true)) {
                json j{{"input", efg::render(f)},
                       {"output", efg::render(r.formula)},
                       {"over_square", efg::render(r.over_square)},
                       {"fresh", json::array()}};
                for (const auto& [p, q] : r.fresh) j["fresh"].push_back({p, q});
                if (rewrite_trace)
                    j["trace"] = {{"stages", steps_to_json(r.trace.stages)}, {"atoms", steps_to_json(r.trace.atoms)}};
                output.write_json(j);
            } else {
                std::string s = efg::render(r.formula);
                if (rewrite_trace)
                    for (const auto& st : r.trace.stages) s += "\n" + st.rule + ": " + st.after;
                output.write(s);
            }
        } else if (*solve_cmd) {
            const efg::Signal a = efg::signal_from_json(efg::load_json_argument(solve_a));
            const efg::Signal b = efg::signal_from_json(efg::load_json_argument(solve_b));
            const efg::Configuration c =
                solve_config.empty() ? efg::Configuration{} : efg::configuration_from_json(efg::load_json_argument(solve_config));
            efg::GameSpec spec{solve_rounds, {}, {}};
            if (solve_pebbles > 0) spec.pebbles = solve_pebbles;
            if (!solve_locality.empty()) spec.locality = efg::Rational::parse(solve_locality);
            efg::SolverOptions opts;
            if (solve_refined) opts.discretization = efg::Discretization::refined();
            const auto r = efg::solve(a, b, c, spec, efg::FunctionSpec::parse(solve_fn), opts);
            if (output.json_for(true)) output.write_json(efg::solve_report(r, spec));
            else output.write(efg::to_string(r.winner));
        } else if (*verify_cmd) {
            std::vector<std::string> names;
            if (verify_name == "all") names = efg::suite_names();
            else names = {verify_name};
            for (const auto& n : names) efg::default_instances(n);  // rejects unknown names before running
            efg::SuiteOptions opts;
            opts.seed = verify_seed;
            opts.threads = verify_threads;
            if (verify_instances > 0) opts.instances = verify_instances;
            json suites = json::array();
            std::string text;
            bool ok = true;
            for (const auto& n : names) {
                const auto r = efg::run_suite(n, opts);
                ok = ok && r.ok();
                suites.push_back(r.to_json(verify_time));
                text += n + ": " + std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) +
                        " failures\n";
            }
            if (output.json_for(true)) output.write_json(json{{"seed", verify_seed}, {"ok", ok}, {"suites", suites}});
            else {
                text.pop_back();
                output.write(text);
            }
            return ok ? kOk : kFalse;
        } else if (*run_cmd) {
            const efg::SeqModel m(cx_m, cx_l);
            const auto r = efg::inexpressibility_experiment(m, cx_k, cx_rounds);
            const auto interp = efg::check_interpretations(efg::PairModel(m), cx_samples);
            json j{{"M", cx_m},
                   {"L", cx_l},
                   {"elements", m.size()},
                   {"classes", m.classes()},
                   {"k", r.k},
                   {"rounds", r.rounds},
                   {"k_pebble", {{"pebbles", r.k}, {"rounds", r.rounds}, {"winner", efg::to_string(r.k_pebble)}}},
                   {"companion", {{"pebbles", r.k + 1}, {"rounds", r.rounds + 1}, {"winner", efg::to_string(r.companion)}}},
                   {"identical", {{"pebbles", r.k}, {"rounds", r.rounds}, {"winner", efg::to_string(r.identical)}}},
                   {"interpretation",
                    {{"checked", interp.checked},
                     {"failures", interp.failures.size()},
                     {"e_pairs", interp.e_pairs},
                     {"e_agree", interp.e_agree},
                     {"e_agree_with_equality", interp.e_agree_with_equality},
                     {"e_off_diagonal_failures", interp.e_off_diagonal_failures}}}};
            if (output.json_for(true)) output.write_json(j);
            else
                output.write(std::to_string(r.k) + "-pebble " + std::to_string(r.rounds) + "-round: " +
                             efg::to_string(r.k_pebble) + "\n" + std::to_string(r.k + 1) + "-pebble " +
                             std::to_string(r.rounds + 1) + "-round: " + efg::to_string(r.companion));
        }
    } catch (const efg::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
