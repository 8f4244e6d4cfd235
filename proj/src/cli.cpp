#include "topstruct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topstruct/io.hpp"
#include "topstruct/verifier.hpp"

namespace topstruct {

namespace {

struct ParamFlags {
    int r = 0;
    int k = 0;
    int m = 0;
    CLI::Option* r_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* m_opt = nullptr;

    void attach(CLI::App* app)
    {
        r_opt = app->add_option("--r", r, "clique size; derives k = r(r-1), m = 2k");
        k_opt = app->add_option("--k", k, "block order (generalized mode, needs --m)");
        m_opt = app->add_option("--m", m, "model size (generalized mode, needs --k)");
        r_opt->excludes(k_opt)->excludes(m_opt);
    }

    Parameters resolve() const
    {
        if (*r_opt) return Parameters::from_r(r);
        if (*k_opt && *m_opt) return Parameters::from_km(k, m);
        throw PreconditionFailed("give either --r or both --k and --m");
    }
};

// Thrown for bad invocations and unreadable inputs; maps to exit 64.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return read_graph(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

ColoredDecomposition load_td(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return read_td(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void save(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

std::string strip_extension(const std::string& path)
{
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

int exit_for(VerifyStatus s)
{
    switch (s) {
    case VerifyStatus::Pass: return kExitPass;
    case VerifyStatus::Violation: return kExitViolation;
    case VerifyStatus::Unverified: return kExitBudget;
    }
    return kExitViolation;
}

const char* status_word(VerifyStatus s)
{
    return s == VerifyStatus::Pass ? "pass" : s == VerifyStatus::Violation ? "violation" : "unverified";
}

void print_table(std::ostream& out, const TheoremReport& rep)
{
    out << "node  color  vertices  high-degree  status\n";
    for (const auto& t : rep.torsos)
        out << std::left << std::setw(6) << t.node << std::setw(7) << (t.color.empty() ? "-" : t.color)
            << std::setw(10) << t.vertices << std::setw(13) << t.high_degree << to_string(t.status) << '\n';
    out << std::right;
    for (const auto& p : rep.problems) out << "problem: " << p << '\n';
    out << "adhesion " << rep.adhesion << " (bound " << rep.adhesion_bound << ")\n";
    out << "status: " << status_word(rep.status()) << '\n';
}

std::vector<Vertex> parse_vertex_list(const std::string& text, int n)
{
    std::vector<Vertex> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + item + "' in --z");
        }
        if (v < 1 || v > n) throw UsageError("vertex " + item + " outside 1.." + std::to_string(n));
        out.push_back(v - 1);
    }
    return out;
}

struct DecomposeArgs {
    std::string input;
    std::string out_prefix;
    std::string format = "td";
    std::uint64_t budget = Budget::kDefault;
    std::uint64_t seed = 0;
    bool verbose = false;
    ParamFlags params;
};

int cmd_decompose(DecomposeArgs& a, std::ostream& out, std::ostream& err)
{
    const Graph g = load_graph(a.input);
    const Parameters p = a.params.resolve();
    const std::string prefix = a.out_prefix.empty() ? strip_extension(a.input) : a.out_prefix;
    Budget budget(a.budget);
    RunOptions options;
    if (a.verbose) options.trace = &err;

    StructureResult result;
    try {
        result = run_structure(g, p, budget, options);
    } catch (const BudgetExceeded& e) {
        nlohmann::ordered_json report;
        report["status"] = "budget-exhausted";
        report["budget"] = a.budget;
        report["seed"] = a.seed;
        report["parameters"] = {{"r", p.r}, {"k", p.k}, {"m", p.m}};
        report["error"] = e.what();
        save(prefix + ".report.json", report.dump(2) + "\n");
        err << e.what() << '\n';
        out << "variant=none (budget exhausted)\n";
        return kExitBudget;
    }

    if (const auto* sub = std::get_if<SubdivisionResult>(&result)) {
        std::ostringstream w;
        write_subdivision(w, sub->embedding);
        save(prefix + ".witness", w.str());
        save(prefix + ".report.json", report_json(g, p, result));
        out << "variant=subdivision\n" << "witness " << prefix << ".witness\n";
        if (!verify_subdivision(g, p.r, sub->embedding)) {
            err << "extracted subdivision fails its invariants\n";
            return kExitViolation;
        }
        return kExitPass;
    }

    const auto& dec = std::get<DecompositionResult>(result);
    std::ostringstream td;
    write_td(td, dec.contracted, g.vertex_count(), dec.colors);
    save(prefix + ".td", td.str());
    if (a.format == "dot") {
        std::ostringstream dot;
        write_dot(dot, dec.contracted, dec.colors);
        save(prefix + ".dot", dot.str());
    }
    const TheoremReport rep = verify_theorem(g, dec, p, budget);
    save(prefix + ".report.json", report_json(g, p, result, &rep));
    out << "variant=decomposition\n"
        << "bags " << dec.contracted.node_count() << ", adhesion " << adhesion(dec.contracted) << '\n'
        << "decomposition " << prefix << (a.format == "dot" ? ".td, " + prefix + ".dot" : ".td") << '\n'
        << "verification: " << status_word(rep.status()) << '\n';
    return exit_for(rep.status());
}

struct VerifyArgs {
    std::string graph;
    std::string td;
    std::uint64_t budget = Budget::kDefault;
    ParamFlags params;
};

int cmd_verify(VerifyArgs& a, std::ostream& out)
{
    const Graph g = load_graph(a.graph);
    const ColoredDecomposition cd = load_td(a.td);
    if (cd.vertex_count != g.vertex_count())
        throw UsageError("graph has " + std::to_string(g.vertex_count()) + " vertices, decomposition declares " +
                         std::to_string(cd.vertex_count));
    const Parameters p = a.params.resolve();
    Budget budget(a.budget);
    const TheoremReport rep = verify_theorem(g, cd.td, cd.colors, p, budget);
    print_table(out, rep);
    return exit_for(rep.status());
}

struct FindArgs {
    std::string graph;
    std::string kind;
    std::string z;
    std::string out_path;
    std::uint64_t budget = Budget::kDefault;
    int k = 0;
    int m = 0;
    int r = 0;
};

int cmd_find(FindArgs& a, std::ostream& out)
{
    const Graph g = load_graph(a.graph);
    Budget budget(a.budget);
    std::ostringstream w;
    bool found = false;
    if (a.kind == "block") {
        if (a.k < 1) throw UsageError("--kind block needs --k >= 1");
        const auto blocks = find_k_blocks(g, a.k, budget);
        write_blocks(w, blocks);
        found = !blocks.empty();
    } else if (a.kind == "minor") {
        if (a.m < 1) throw UsageError("--kind minor needs --m >= 1");
        if (auto x = find_clique_model(g, a.m, budget)) {
            write_model(w, *x);
            found = true;
        }
    } else if (a.kind == "subdivision") {
        if (a.r < 1) throw UsageError("--kind subdivision needs --r >= 1");
        if (auto s = find_subdivision(g, a.r, budget)) {
            write_subdivision(w, *s);
            found = true;
        }
    } else {
        if (a.z.empty()) throw UsageError("--kind zmodel needs --z");
        const auto z = parse_vertex_list(a.z, g.vertex_count());
        std::vector<Vertex> sorted = z;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw UsageError("--z repeats a vertex");
        if (auto x = find_z_based_model(g, z, budget)) {
            write_model(w, *x);
            found = true;
        }
    }
    const std::string text = found ? w.str() : "none\n";
    if (a.out_path.empty())
        out << text;
    else {
        save(a.out_path, text);
        out << (found ? "witness " + a.out_path : std::string("none")) << '\n';
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Structure decompositions excluding topological clique minors", "topstruct"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto* d = app.add_subcommand("decompose", "build the colored decomposition or extract a subdivision");
    d->add_option("graph", dec.input, "input .gr file")->required();
    dec.params.attach(d);
    d->add_option("--budget", dec.budget, "search expansion budget")->capture_default_str();
    d->add_option("--format", dec.format, "also emit dot when set to dot")
        ->check(CLI::IsMember({"td", "dot"}))
        ->capture_default_str();
    d->add_option("--seed", dec.seed, "recorded only; search order never depends on it");
    d->add_option("--out", dec.out_prefix, "output prefix (default: input path without extension)");
    d->add_flag("--verbose", dec.verbose, "trace improvement steps on stderr");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "check a decomposition against the structure bounds");
    v->add_option("graph", ver.graph, "input .gr file")->required();
    v->add_option("td", ver.td, "decomposition .td file")->required();
    ver.params.attach(v);
    v->add_option("--budget", ver.budget, "minor-check expansion budget per torso")->capture_default_str();

    FindArgs fnd;
    auto* f = app.add_subcommand("find", "search for a single obstruction");
    f->add_option("graph", fnd.graph, "input .gr file")->required();
    f->add_option("--kind", fnd.kind, "block | minor | subdivision | zmodel")
        ->required()
        ->check(CLI::IsMember({"block", "minor", "subdivision", "zmodel"}));
    f->add_option("--k", fnd.k, "block order");
    f->add_option("--m", fnd.m, "clique minor size");
    f->add_option("--r", fnd.r, "subdivision size");
    f->add_option("--z", fnd.z, "comma-separated vertices for zmodel");
    f->add_option("--budget", fnd.budget, "search expansion budget")->capture_default_str();
    f->add_option("--out", fnd.out_path, "write the witness here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*d) return cmd_decompose(dec, out, err);
        if (*v) return cmd_verify(ver, out);
        return cmd_find(fnd, out);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionFailed& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitViolation;
    }
}

}  // namespace topstruct
