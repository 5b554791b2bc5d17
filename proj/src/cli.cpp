#include "recolor/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/planner.hpp"

namespace recolor {

using io::json;

ListPolicy parse_list_policy(const std::string& name) {
    if (name == "deg1-shared") return ListPolicy::deg1_shared;
    if (name == "deg1-disjoint-extra") return ListPolicy::deg1_disjoint_extra;
    if (name == "uniform") return ListPolicy::uniform;
    throw malformed_error("unknown list policy '" + name + "'");
}

ListAssignment synthesize_lists(const Graph& g, const ListSpec& spec) {
    const int n = g.n();
    std::vector<std::vector<Colour>> lists(n);
    switch (spec.policy) {
        case ListPolicy::uniform:
            if (spec.k < 1) throw domain_error("uniform lists need k >= 1");
            if (spec.strict && spec.k < g.max_degree() + 1)
                throw domain_error("uniform k = " + std::to_string(spec.k) + " is below maximum degree plus one");
            for (auto& l : lists)
                for (Colour c = 1; c <= spec.k; ++c) l.push_back(c);
            break;
        case ListPolicy::deg1_shared:
        case ListPolicy::deg1_disjoint_extra:
            for (Vertex v = 0; v < n; ++v)
                for (Colour c = 1; c <= g.degree(v) + 1; ++c) lists[v].push_back(c);
            if (spec.policy == ListPolicy::deg1_disjoint_extra) {
                if (spec.k < 1) throw domain_error("disjoint extra colours need k >= 1");
                if (spec.extra_vertex < 0 || spec.extra_vertex >= n)
                    throw domain_error("extra vertex " + std::to_string(spec.extra_vertex) + " is out of range");
                const Colour top = g.max_degree() + 1;
                for (Colour c = top + 1; c <= top + spec.k; ++c) lists[spec.extra_vertex].push_back(c);
            }
            break;
    }
    return ListAssignment(std::move(lists));
}

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    bool stdin_used = false;

    std::string read(const std::string& path) {
        if (path == "-") {
            if (stdin_used) throw malformed_error("standard input can feed only one argument");
            stdin_used = true;
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
        std::ifstream f(path);
        if (!f) throw malformed_error("cannot read '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    json read_json(const std::string& path) { return io::parse_text(read(path)); }
};

struct Options {
    std::string instance, cover, from, to, plan, colouring, out;
    std::string lists_policy, procedure = "auto", kind;
    int k = -1, extra_vertex = 0, n = 0, p = 2, q = 2;
    bool strict = false, serial = false, no_diameters = false;
    std::uint64_t budget = kDefaultBudget;
};

struct Loaded {
    Graph g;
    ListAssignment L;
};

Loaded load_instance(Io& io, const Options& o) {
    auto f = io::parse_instance(io.read_json(o.instance));
    Loaded r{std::move(f.graph), {}};
    if (f.lists && o.lists_policy.empty()) {
        r.L = std::move(*f.lists);
    } else {
        ListSpec spec;
        spec.policy = o.lists_policy.empty() ? ListPolicy::deg1_shared : parse_list_policy(o.lists_policy);
        spec.k = o.k >= 0 ? o.k : (spec.policy == ListPolicy::uniform ? r.g.max_degree() + 1 : 1);
        spec.extra_vertex = o.extra_vertex;
        spec.strict = o.strict;
        r.L = synthesize_lists(r.g, spec);
    }
    return r;
}

PlanOutcome run_planner(const std::string& procedure, const Graph& g, const ListAssignment& L, const Colouring& a,
                        const Colouring& b) {
    if (procedure == "auto") {
        bool surplus = false;
        for (Vertex v = 0; v < g.n(); ++v) surplus = surplus || L.list_size(v) >= g.degree(v) + 2;
        if (surplus) return plan_key_lemma(g, L, a, b);
        if (g.max_degree() <= 2) return plan_small_case(g, L, a, b);
        return plan_main(g, L, a, b);
    }
    if (procedure == "key-lemma") return plan_key_lemma(g, L, a, b);
    if (procedure == "main") return plan_main(g, L, a, b);
    if (procedure == "small-case") return plan_small_case(g, L, a, b);
    if (procedure == "clique") return plan_clique(g, L, a, b);
    if (procedure == "two-connected") return plan_two_connected(g, L, a, b);
    if (procedure == "regular") return plan_regular_two_connected(g, L, a, b);
    throw malformed_error("unknown procedure '" + procedure + "'");
}

json with_schema(json j, const std::string& name) {
    j["schema"] = {{"name", name}, {"version", 1}};
    return j;
}

ExploreOptions explore_options(const Options& o) {
    ExploreOptions e;
    e.budget = o.budget;
    e.diameters = !o.no_diameters;
    e.exec = o.serial ? Exec::serial : Exec::parallel;
    return e;
}

// Returns the report and the exit code it implies.
std::pair<json, int> dispatch(const std::string& cmd, Io& io, const Options& o) {
    if (cmd == "plan") {
        auto [g, L] = load_instance(io, o);
        const Colouring a = io::parse_colouring(io.read_json(o.from), g.n());
        const Colouring b = io::parse_colouring(io.read_json(o.to), g.n());
        const PlanOutcome r = run_planner(o.procedure, g, L, a, b);
        json j{{"plan", io::plan_json(r.plan)}, {"length", r.plan.size()}, {"end", io::colouring_json(r.end)},
               {"trace", io::trace_json(r.trace)}};
        return {with_schema(j, "recolor.plan"), 0};
    }
    if (cmd == "verify") {
        auto [g, L] = load_instance(io, o);
        const Colouring a = io::parse_colouring(io.read_json(o.from), g.n());
        const Plan p = io::parse_plan(io.read_json(o.plan.empty() ? "-" : o.plan));
        const Verification v = verify_plan(g, L, a, p);
        bool ok = v.ok;
        json j{{"ok", v.ok}, {"end", io::colouring_json(v.end)}, {"length", p.size()}};
        if (!v.ok) {
            j["reason"] = v.reason;
            j["failing_index"] = v.failing_index ? json(*v.failing_index) : json(nullptr);
        }
        if (!o.to.empty()) {
            const bool reached = v.end == io::parse_colouring(io.read_json(o.to), g.n());
            j["reached_target"] = reached;
            ok = ok && reached;
        }
        j["ok"] = ok;
        return {with_schema(j, "recolor.verify"), ok ? 0 : 1};
    }
    if (cmd == "explore") {
        ReconfSummary s;
        if (!o.cover.empty())
            s = cover_reconf(io::parse_cover(io.read_json(o.cover)), explore_options(o));
        else {
            auto [g, L] = load_instance(io, o);
            s = explore(g, L, explore_options(o));
        }
        return {with_schema(io::summary_json(s), "recolor.explore"), 0};
    }
    if (cmd == "distance") {
        auto [g, L] = load_instance(io, o);
        const Colouring a = io::parse_colouring(io.read_json(o.from), g.n());
        const Colouring b = io::parse_colouring(io.read_json(o.to), g.n());
        const auto d = reconf_distance(g, L, a, b, o.budget);
        return {with_schema({{"distance", d ? json(*d) : json(nullptr)}}, "recolor.distance"), 0};
    }
    if (cmd == "frozen") {
        auto [g, L] = load_instance(io, o);
        const FrozenCensus f = frozen_census(g, L, o.budget);
        const SwapSet s = swap_set(g);
        json edges = json::array();
        for (const auto& e : s.edges) edges.push_back({{"v", e.v}, {"w", e.w}, {"witness", e.witness}});
        json j{{"frozen", f.frozen}, {"total", f.total}, {"ratio", f.ratio}, {"bound", f.bound}, {"ok", f.ok},
               {"swap_set", edges}, {"swap_injection", check_swap_injection(g, L, s, o.budget)}};
        return {with_schema(j, "recolor.frozen"), 0};
    }
    if (cmd == "census") {
        return {with_schema(io::census_json(census_covers(o.n)), "recolor.census"), 0};
    }
    if (cmd == "generate") {
        if (o.kind == "shatter") {
            const Instance inst = gen_shatter_instance(o.n, o.p);
            return {with_schema(io::instance_json(inst.graph, &inst.lists), "recolor.instance"), 0};
        }
        Cover c;
        if (o.kind == "straight")
            c = make_straight_cover(Graph::complete(o.n), o.n);
        else if (o.kind == "twisted")
            c = make_twisted_clique_cover(o.n, o.q);
        else if (o.kind == "twist-everywhere")
            c = make_twist_everywhere_cover(o.n);
        else if (o.kind == "mobius-kantor")
            c = make_mobius_kantor_cover();
        else
            throw malformed_error("unknown kind '" + o.kind + "'");
        return {with_schema(io::cover_json(c), "recolor.cover"), 0};
    }
    if (cmd == "winding") {
        const json j = io.read_json(o.colouring);
        if (!j.is_array() && !j.is_object()) throw malformed_error("colouring must be an array or a map");
        const Colouring c = io::parse_colouring(j, static_cast<int>(j.size()));
        return {with_schema({{"winding", winding_number(c)}}, "recolor.winding"), 0};
    }
    throw malformed_error("unknown subcommand '" + cmd + "'");
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::domain: return 1;
        case ErrorKind::malformed: return 2;
        case ErrorKind::budget: return 3;
    }
    return 2;
}

const char* kind_name(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::malformed: return "malformed";
        case ErrorKind::budget: return "budget";
    }
    return "malformed";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"List-colouring reconfiguration planners, oracle and cover census", "recolor"};
    app.require_subcommand(1, 1);
    Options o;
    std::uint64_t budget = kDefaultBudget;

    auto instance_opts = [&](CLI::App* s) {
        s->add_option("--instance", o.instance, "instance JSON file, or - for standard input");
        s->add_option("--lists", o.lists_policy, "list policy: deg1-shared, deg1-disjoint-extra or uniform");
        s->add_option("--k", o.k, "colour count (uniform) or extra colours (deg1-disjoint-extra)");
        s->add_option("--extra-vertex", o.extra_vertex, "vertex receiving the extra colours");
        s->add_flag("--strict", o.strict, "reject uniform k below maximum degree plus one");
    };
    auto budget_opt = [&](CLI::App* s) { s->add_option("--budget", budget, "state-count cap for exhaustive search"); };

    auto* plan = app.add_subcommand("plan", "recolouring plan between two colourings");
    instance_opts(plan);
    plan->add_option("--from", o.from)->required();
    plan->add_option("--to", o.to)->required();
    plan->add_option("--procedure", o.procedure, "auto, key-lemma, main, small-case, clique, two-connected, regular");

    auto* verify = app.add_subcommand("verify", "replay a plan and check every step");
    instance_opts(verify);
    verify->add_option("--from", o.from)->required();
    verify->add_option("--to", o.to, "optional target the plan must reach");
    verify->add_option("--plan", o.plan, "plan JSON file; standard input when omitted");

    auto* exp = app.add_subcommand("explore", "components of the reconfiguration graph");
    instance_opts(exp);
    exp->add_option("--cover", o.cover, "correspondence cover JSON instead of an instance");
    exp->add_flag("--serial", o.serial, "single-threaded reference traversal");
    exp->add_flag("--no-diameters", o.no_diameters, "skip per-component diameters");
    budget_opt(exp);

    auto* dist = app.add_subcommand("distance", "exact recolouring distance");
    instance_opts(dist);
    dist->add_option("--from", o.from)->required();
    dist->add_option("--to", o.to)->required();
    budget_opt(dist);

    auto* frz = app.add_subcommand("frozen", "frozen-colouring ratio and swap-set check");
    instance_opts(frz);
    budget_opt(frz);

    auto* cen = app.add_subcommand("census", "full covers of K_n up to isomorphism");
    cen->add_option("--n", o.n)->required();

    auto* gen = app.add_subcommand("generate", "builtin instances and covers");
    gen->add_option("--kind", o.kind, "shatter, straight, twisted, twist-everywhere, mobius-kantor")->required();
    gen->add_option("--n", o.n, "clique size");
    gen->add_option("--p", o.p, "pendant list size for shatter");
    gen->add_option("--q", o.q, "twist size for twisted");

    auto* wind = app.add_subcommand("winding", "winding number of a 3-colouring of a cycle");
    wind->add_option("--colouring", o.colouring)->required();

    for (auto* s : {plan, verify, exp, dist, frz, cen, gen, wind}) s->add_option("--out", o.out, "write the report here");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "malformed"}, {"reason", e.what()}}.dump() << "\n";
        return 2;
    }
    o.budget = budget;
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (o.instance.empty() && o.cover.empty() && cmd != "census" && cmd != "generate" && cmd != "winding") {
        err << json{{"error", "malformed"}, {"reason", "--instance is required"}}.dump() << "\n";
        return 2;
    }

    Io io{in, out};
    try {
        auto [report, code] = dispatch(cmd, io, o);
        const std::string text = report.dump(2) + "\n";
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out);
            if (!f) throw malformed_error("cannot write '" + o.out + "'");
            f << text;
        }
        return code;
    } catch (const Error& e) {
        json j{{"error", kind_name(e)}, {"reason", e.what()}};
        if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e)) j["estimate"] = b->estimate();
        err << j.dump() << "\n";
        return exit_code(e);
    } catch (const json::exception& e) {
        err << json{{"error", "malformed"}, {"reason", e.what()}}.dump() << "\n";
        return 2;
    }
}

}  // namespace recolor
