#pragma once

// Command-line front end. run() is kept separate from main() so the tests
// can drive it in-process.

#include <algorithm>
#include <charconv>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gec/classic.hpp"
#include "gec/core_arith.hpp"
#include "gec/indexing.hpp"
#include "gec/orbit.hpp"
#include "gec/residue_struct.hpp"
#include "gec/solvability.hpp"
#include "gec/tower.hpp"
#include "gec/verify.hpp"

namespace gec::cli {

inline constexpr char const* version = "1.0.0";

enum exit_code : int {
    ok = 0,
    verdict_false = 1,
    domain_failure = 2,
    budget_failure = 3,
    internal_failure = 4,
};

class usage_error : public error {
public:
    using error::error;
};

inline nat parse_nat(std::string const& text, char const* what)
{
    nat value = 0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last || value > nat_max)
        throw usage_error(std::string("malformed ") + what + ": '" + text + "'");
    return value;
}

inline nat parse_modulus(std::string const& text)
{
    nat m = parse_nat(text, "modulus");
    if (m == 0)
        throw usage_error("modulus must be at least 1");
    return m;
}

/// Collected output of one invocation, printed as text or as one JSON document.
class envelope {
public:
    envelope(std::string command, bool paper_repr) : command_(std::move(command)), paper_repr_(paper_repr) {}

    void set_modulus(nat m) { m_ = m; }

    /// Residues print as [0, m), or with 0 shown as m under --paper-repr.
    nat show(nat residue) const { return paper_repr_ && residue == 0 && m_ ? *m_ : residue; }

    nlohmann::json show_list(std::vector<nat> const& xs) const
    {
        auto arr = nlohmann::json::array();
        for (nat x : xs)
            arr.push_back(show(x));
        return arr;
    }

    void input(std::string const& key, nlohmann::json value) { inputs_[key] = std::move(value); }
    void result(nlohmann::json value, std::string plain)
    {
        result_ = std::move(value);
        plain_.insert(plain_.begin(), std::move(plain));
    }
    void trace(std::string const& key, nlohmann::json value, std::string plain)
    {
        trace_[key] = std::move(value);
        plain_.push_back(key + " " + plain);
    }
    void trace(std::string const& key, nlohmann::json value) { trace_[key] = std::move(value); }
    void line(std::string text) { plain_.push_back(std::move(text)); }

    void write(std::ostream& out, bool machine) const
    {
        if (machine) {
            nlohmann::json doc{{"command", command_}, {"inputs", inputs_},
                               {"result", result_},   {"trace", trace_},
                               {"version", version}};
            out << doc.dump(2) << '\n';
            return;
        }
        for (auto const& l : plain_)
            out << l << '\n';
    }

private:
    std::string command_;
    bool paper_repr_;
    std::optional<nat> m_;
    nlohmann::json inputs_ = nlohmann::json::object();
    nlohmann::json result_;
    nlohmann::json trace_ = nlohmann::json::object();
    std::vector<std::string> plain_;
};

inline std::string join(std::vector<nat> const& xs, envelope const& env)
{
    std::string s;
    for (nat x : xs) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(env.show(x));
    }
    return s;
}

inline char const* yes_no(bool b) { return b ? "true" : "false"; }

inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Idempotents, generalized order and power-residue solvability modulo m", "gec"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    bool paper_repr = false;
    nat max_scan = default_scan_budget;
    app.add_flag("--json", json, "Emit one JSON document instead of plain lines");
    app.add_flag("--paper-repr", paper_repr, "Print the residue 0 as m");
    app.add_option("--max-scan", max_scan, "Largest modulus a linear scan may cover");

    std::vector<std::string> pos;
    std::optional<std::string> cls;
    std::string method = "criterion";
    bool chain_flag = false;
    nat max_m = verify::options{}.max_m;
    nat max_k = verify::options{}.max_k;

    auto add = [&](char const* name, char const* help, std::vector<char const*> names) {
        auto* sub = app.add_subcommand(name, help);
        std::string desc;
        for (auto const* n : names)
            desc += std::string(desc.empty() ? "" : " ") + n;
        if (!names.empty())
            sub->add_option("args", pos, desc)->expected(static_cast<int>(names.size()))->required();
        return sub;
    };
    add("idempotents", "List E_m", {"m"});
    add("order", "Order, idempotent and regularity of a", {"a", "m"});
    auto* regular = add("regular", "List the regular residues", {"m"});
    regular->add_option("--class", cls, "Restrict to the class of this idempotent");
    add("orbit", "Powers a^1 .. a^|a|", {"a", "m"});
    add("index", "Least n with b^n = a", {"b", "a", "m"});
    add("omega", "Primitive order of a", {"a", "m"});
    add("combine", "Combine witnesses b, c of a into one of order lcm(|b|,|c|)", {"a", "b", "c", "m"});
    auto* solvable_cmd = add("solvable", "Decide x^k = a (mod m)", {"k", "a", "m"});
    solvable_cmd->add_option("--method", method, "criterion, brute, classic or necessary")
        ->check(CLI::IsMember({"criterion", "brute", "classic", "necessary"}));
    add("solve", "All solutions of x^k = a (mod m)", {"k", "a", "m"});
    auto* tower_cmd = add("tower", "base^base^...^base (height levels) mod m", {"base", "height", "m"});
    tower_cmd->add_flag("--chain", chain_flag, "Print the modulus descent chain");
    auto* verify_cmd = add("verify", "Run the property sweeps", {});
    verify_cmd->add_option("--max-m", max_m, "Largest modulus swept");
    verify_cmd->add_option("--max-k", max_k, "Largest exponent k swept");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return ok;
    } catch (CLI::ParseError const& e) {
        err << "gec: " << e.what() << '\n' << "run 'gec --help' for usage\n";
        return domain_failure;
    }

    auto* sub = app.get_subcommands().front();
    std::string const name = sub->get_name();
    envelope env(name, paper_repr);
    int code = ok;

    try {
        if (name == "idempotents") {
            nat m = parse_modulus(pos[0]);
            env.set_modulus(m);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto es = idempotents(ctx);
            env.result(env.show_list(es), join(es, env));
        } else if (name == "order") {
            nat m = parse_modulus(pos[1]);
            nat a = parse_nat(pos[0], "a");
            env.set_modulus(m);
            env.input("a", a);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto p = order(a, ctx);
            env.result({{"order", p.ord}, {"idempotent", env.show(p.idem)}, {"regular", p.regular}},
                       std::to_string(p.ord));
            env.line("idempotent " + std::to_string(env.show(p.idem)));
            env.line(std::string("regular ") + yes_no(p.regular));
        } else if (name == "regular") {
            nat m = parse_modulus(pos[0]);
            env.set_modulus(m);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            std::optional<nat> e;
            if (cls) {
                e = ctx.reduce(parse_nat(*cls, "class"));
                env.input("class", *e);
            }
            auto rs = regulars(ctx, e);
            env.result(env.show_list(rs), join(rs, env));
            env.trace("count", rs.size(), std::to_string(rs.size()));
        } else if (name == "orbit") {
            nat m = parse_modulus(pos[1]);
            nat a = parse_nat(pos[0], "a");
            env.set_modulus(m);
            env.input("a", a);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto v = orbit(a, ctx);
            env.result(env.show_list(v.elements), join(v.elements, env));
            env.trace("order", v.elements.size(), std::to_string(v.elements.size()));
        } else if (name == "index") {
            nat m = parse_modulus(pos[2]);
            nat b = parse_nat(pos[0], "b");
            nat a = parse_nat(pos[1], "a");
            env.set_modulus(m);
            env.input("b", b);
            env.input("a", a);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto ind = index_of(b, a, ctx);
            if (ind.exists())
                env.result(*ind.value, std::to_string(*ind.value));
            else
                env.result(nullptr, "none");
        } else if (name == "omega") {
            nat m = parse_modulus(pos[1]);
            nat a = parse_nat(pos[0], "a");
            env.set_modulus(m);
            env.input("a", a);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto w = omega_search(a, ctx);
            env.result(w.omega, std::to_string(w.omega));
            env.trace("witness", env.show(w.witness), std::to_string(env.show(w.witness)));
            nat ord = order(a, ctx).ord;
            env.trace("generalized_primitive_root", w.omega == ord, yes_no(w.omega == ord));
        } else if (name == "combine") {
            nat m = parse_modulus(pos[3]);
            nat a = parse_nat(pos[0], "a");
            nat b = parse_nat(pos[1], "b");
            nat c = parse_nat(pos[2], "c");
            env.set_modulus(m);
            env.input("a", a);
            env.input("b", b);
            env.input("c", c);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            auto r = combine_witnesses(a, b, c, ctx);
            auto const& s = r.split;
            env.result(env.show(r.d), std::to_string(env.show(r.d)));
            env.trace("order", r.order_d, std::to_string(r.order_d));
            env.trace("index", r.index, std::to_string(r.index));
            env.trace("d_bc", r.d_bc, std::to_string(r.d_bc));
            env.trace("d_cb", r.d_cb, std::to_string(r.d_cb));
            env.trace("w", r.w, std::to_string(r.w));
            env.trace("split", {{"u1", s.u1}, {"u2", s.u2}, {"v1", s.v1}, {"v2", s.v2}, {"w1", s.w1}, {"w2", s.w2}},
                      std::to_string(s.u1) + " " + std::to_string(s.u2) + " " + std::to_string(s.v1) +
                          " " + std::to_string(s.v2) + " " + std::to_string(s.w1) + " " +
                          std::to_string(s.w2));
            env.trace("K", r.k, std::to_string(r.k));
            env.trace("N", r.n, std::to_string(r.n));
            env.trace("I", r.i, std::to_string(r.i));
            env.trace("E", r.e, std::to_string(r.e));
        } else if (name == "solvable" || name == "solve") {
            nat m = parse_modulus(pos[2]);
            nat k = parse_nat(pos[0], "k");
            nat a = parse_nat(pos[1], "a");
            env.set_modulus(m);
            env.input("k", k);
            env.input("a", a);
            env.input("m", m);
            modulus_ctx ctx(m, max_scan);
            if (name == "solve") {
                auto sols = solve_brute(a, k, ctx);
                env.result(env.show_list(sols), sols.empty() ? "none" : join(sols, env));
                env.trace("count", sols.size(), std::to_string(sols.size()));
                code = sols.empty() ? verdict_false : ok;
            } else {
                if (method != "brute" && method != "classic" && !is_regular(a, ctx)) {
                    std::string notice = std::to_string(ctx.reduce(a)) +
                                         " is not regular; the criterion does not apply, using brute force";
                    err << "gec: notice: " << notice << '\n';
                    env.trace("notice", notice, notice);
                    method = "brute";
                }
                solvability_report rep = method == "brute"     ? brute_report(a, k, ctx)
                                         : method == "classic" ? classic_report(a, k, ctx)
                                         : method == "necessary" ? necessary_report(a, k, ctx)
                                                                 : solvable(a, k, ctx);
                env.input("method", std::string(to_string(rep.method)));
                env.result(rep.verdict, yes_no(rep.verdict));
                env.trace("method", std::string(to_string(rep.method)), std::string(to_string(rep.method)));
                if (rep.omega_used) {
                    char const* key = rep.method == solve_method::criterion ? "omega" : "phi";
                    env.trace(key, *rep.omega_used, std::to_string(*rep.omega_used));
                }
                if (rep.criterion_power)
                    env.trace("power", env.show(*rep.criterion_power),
                              std::to_string(env.show(*rep.criterion_power)));
                if (rep.sample_solution)
                    env.trace("solution", env.show(*rep.sample_solution),
                              std::to_string(env.show(*rep.sample_solution)));
                if (rep.method == solve_method::necessary_only && rep.verdict)
                    env.trace("note", "inconclusive", "inconclusive");
                code = rep.verdict ? ok : verdict_false;
            }
        } else if (name == "tower") {
            nat base = parse_nat(pos[0], "base");
            nat height = parse_nat(pos[1], "height");
            nat m = parse_modulus(pos[2]);
            env.set_modulus(m);
            env.input("base", base);
            env.input("height", height);
            env.input("m", m);
            nat v = tower_mod({base, height, m}, max_scan);
            env.result(env.show(v), std::to_string(env.show(v)));
            if (chain_flag) {
                auto chain_json = nlohmann::json::array();
                for (auto const& lv : descent_chain(base, m, max_scan)) {
                    chain_json.push_back({{"modulus", lv.modulus}, {"order", lv.order}, {"idempotent", lv.idem}});
                    env.line("chain " + std::to_string(lv.modulus) + " " + std::to_string(lv.order) +
                             " " + std::to_string(lv.idem));
                }
                env.trace("chain", chain_json);
            }
        } else if (name == "verify") {
            env.input("max_m", max_m);
            env.input("max_k", max_k);
            auto results = verify::run_all({max_m, max_k});
            auto matrix = nlohmann::json::array();
            std::uint64_t failures = 0;
            for (auto const& r : results) {
                failures += r.failures;
                nlohmann::json row{{"check", r.name}, {"cases", r.cases}, {"failures", r.failures},
                                   {"passed", r.passed()}};
                if (!r.passed())
                    row["first_failure"] = r.first_failure;
                matrix.push_back(row);
                std::string l = (r.passed() ? "PASS " : "FAIL ") + r.name + " cases=" +
                                std::to_string(r.cases) + " failures=" + std::to_string(r.failures);
                if (!r.passed())
                    l += " first: " + r.first_failure;
                env.line(l);
            }
            env.result({{"checks", matrix}, {"failures", failures}},
                       failures == 0 ? "all checks passed" : std::to_string(failures) + " failures");
            code = failures == 0 ? ok : verdict_false;
        }
    } catch (usage_error const& e) {
        err << "gec: " << e.what() << '\n';
        return domain_failure;
    } catch (scan_limit_error const& e) {
        err << "gec: " << e.what() << '\n';
        return budget_failure;
    } catch (invariant_violation const& e) {
        err << "gec: internal error: " << e.what() << '\n';
        return internal_failure;
    } catch (error const& e) {
        err << "gec: " << e.what() << '\n';
        return domain_failure;
    }

    env.write(out, json);
    return code;
}

} // namespace gec::cli
