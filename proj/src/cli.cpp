#include "sniplab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sniplab/constructions.hpp"
#include "sniplab/error.hpp"
#include "sniplab/json_io.hpp"
#include "sniplab/snipcore.hpp"
#include "sniplab/xixi.hpp"

namespace sniplab {

namespace {

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

// A path to an existing file yields its contents; anything else is taken as
// inline text.
std::string load_text(const std::string& arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

RootedGraph load_graph(const std::string& arg, const std::optional<Vertex>& root)
{
    const std::string text = trim(load_text(arg));
    if (!text.empty() && text.front() == '{') {
        RootedGraph g = graph_from_json(parse_json(text));
        return root ? g.with_root(*root) : g;
    }
    // First line only: graph6 files may hold several graphs.
    const std::string first = text.substr(0, text.find('\n'));
    return from_graph6(first, root.value_or(0));
}

Matrix load_matrix(const std::string& arg)
{
    return matrix_from_json(parse_json(load_text(arg)));
}

IndexSet parse_index_list(const std::string& text)
{
    IndexSet out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
            throw CLI::ValidationError("--alpha", "expected comma-separated indices, got '" + text + "'");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

NullityPair parse_pair(const std::string& text)
{
    const IndexSet v = parse_index_list(text);
    if (v.size() != 2) {
        throw CLI::ValidationError("--pair", "expected k,l, got '" + text + "'");
    }
    return {v[0], v[1]};
}

// Output sink: human-readable lines plus the JSON document. With --json -
// only the JSON goes to stdout.
class Emitter {
public:
    Emitter(std::ostream& out, std::string json_target) : out_(out), target_(std::move(json_target)) {}

    std::ostream& table()
    {
        static std::ostringstream sink;
        if (target_ == "-") {
            sink.str("");
            return sink;
        }
        return out_;
    }

    void json(const Json& doc)
    {
        if (target_.empty()) {
            return;
        }
        if (target_ == "-") {
            out_ << doc.dump(2) << '\n';
            return;
        }
        std::ofstream file(target_);
        if (!file) {
            throw Error(ErrorKind::InvalidArgument, "cannot write " + target_);
        }
        file << doc.dump(2) << '\n';
    }

private:
    std::ostream& out_;
    std::string target_;
};

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

int cmd_pair(Emitter& emit, const std::string& m, std::size_t i)
{
    const Matrix a = load_matrix(m);
    const NullityPair p = nullity_pair(a, i);
    const IndexType t = index_type_of(p);
    emit.table() << to_string(p) << ' ' << to_string(t) << '\n';
    emit.json(Json{{"index", i}, {"pair", pair_to_json(p)}, {"type", std::string(to_string(t))}});
    return exit_ok;
}

RootedGraph graph_or_support(const std::string& g_arg, const Matrix& a, Vertex root)
{
    if (g_arg.empty()) {
        return support_graph(a, root);
    }
    return load_graph(g_arg, root);
}

int cmd_sap(Emitter& emit, const std::string& m, const std::string& g_arg)
{
    const Matrix a = load_matrix(m);
    const RootedGraph g = graph_or_support(g_arg, a, 0);
    const bool sap = has_sap(a, g);
    const bool recipe = has_sap_recipe(a, g);
    emit.table() << "sap: " << yes_no(sap) << "\nrecipe: " << yes_no(recipe) << '\n';
    emit.json(Json{{"sap", sap}, {"recipe", recipe}});
    if (sap != recipe) {
        throw Error(ErrorKind::InvalidOp, "SAP and full-recipe verdicts disagree");
    }
    return exit_ok;
}

int cmd_snip(Emitter& emit, const std::string& m, const std::string& g_arg, std::size_t i,
             const std::string& method)
{
    const Matrix a = load_matrix(m);
    const RootedGraph g = graph_or_support(g_arg, a, i);
    const NullityPair p = nullity_pair(a, i);
    Json doc{{"index", i}, {"pair", pair_to_json(p)}, {"type", std::string(to_string(index_type_of(p)))}};
    auto& table = emit.table();
    table << "pair: " << to_string(p) << ' ' << to_string(index_type_of(p)) << '\n';
    if (method == "all") {
        const SnipCertificate c = certify(a, g.with_root(i));
        doc["snip_direct"] = c.snip_direct;
        doc["snip_cases"] = c.snip_cases;
        doc["snip_recipe"] = c.snip_recipe;
        doc["agree"] = c.verdicts_agree();
        table << "direct: " << yes_no(c.snip_direct) << "\ncases: " << yes_no(c.snip_cases)
              << "\nrecipe: " << yes_no(c.snip_recipe) << '\n';
        emit.json(doc);
        if (!c.verdicts_agree()) {
            throw Error(ErrorKind::InvalidOp, "SNIP characterizations disagree");
        }
        return exit_ok;
    }
    bool verdict = false;
    if (method == "direct") {
        verdict = has_isnip_direct(a, g, i);
    } else if (method == "cases") {
        verdict = has_isnip_cases(a, g, i);
    } else {
        verdict = has_isnip_recipe(a, g, i);
    }
    doc["snip_" + method] = verdict;
    table << method << ": " << yes_no(verdict) << '\n';
    emit.json(doc);
    return exit_ok;
}

int cmd_recipe(Emitter& emit, const std::string& m, const std::string& g_arg,
               const std::optional<std::size_t>& i)
{
    const Matrix a = load_matrix(m);
    const RootedGraph g = graph_or_support(g_arg, a, i.value_or(0));
    const Matrix basis = i ? kernel_basis(a.remove_row(*i)) : kernel_basis(a);
    const bool full = gives_full_recipe(basis, g);
    emit.table() << "kernel dimension: " << basis.cols() << "\nfull recipe: " << yes_no(full) << '\n';
    Json doc{{"kernel_basis", matrix_to_json(basis)}, {"full_recipe", full}};
    if (i) {
        doc["index"] = *i;
    }
    emit.json(doc);
    return exit_ok;
}

int cmd_schur(Emitter& emit, const std::string& m, const std::string& alpha_text)
{
    const Matrix a = load_matrix(m);
    const IndexSet alpha = parse_index_list(alpha_text);
    const Matrix s = schur_complement(a, alpha);
    auto& table = emit.table();
    table << "null(A) = " << nullity(a) << ", null(A/A[alpha]) = " << nullity(s) << '\n';
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
            table << (c ? " " : "") << std::setw(6) << to_string(s(r, c));
        }
        table << '\n';
    }
    emit.json(Json{{"alpha", alpha},
                   {"schur", matrix_to_json(s)},
                   {"nullity", nullity(a)},
                   {"schur_nullity", nullity(s)}});
    return exit_ok;
}

int cmd_minor(Emitter& emit, const std::string& host_arg, const std::string& pattern_arg,
              const std::optional<Vertex>& host_root, const std::optional<Vertex>& pattern_root,
              bool unrooted, std::size_t cap)
{
    const RootedGraph host = load_graph(host_arg, host_root);
    const RootedGraph pattern = load_graph(pattern_arg, pattern_root);
    const bool contains =
        unrooted ? contains_minor(host, pattern, cap) : contains_rooted_minor(host, pattern, cap);
    emit.table() << "contains: " << yes_no(contains) << '\n';
    emit.json(Json{{"host", graph_to_json(host)},
                   {"pattern", graph_to_json(pattern)},
                   {"rooted", !unrooted},
                   {"contains", contains}});
    return exit_ok;
}

struct GridOptions {
    std::string mode = "auto";
    std::uint64_t samples = 20'000;
    std::optional<std::uint64_t> seed;
    std::uint64_t exhaustive_limit = 200'000;
    unsigned threads = 1;
};

SearchGrid make_grid(const RootedGraph& g, const GridOptions& opt)
{
    SearchGrid grid = default_grid(g);
    grid.threads = opt.threads;
    grid.seed = opt.seed.value_or(seed_from_environment(default_seed));
    const bool random = opt.mode == "random" ||
                        (opt.mode == "auto" && grid_size(g, grid) > opt.exhaustive_limit);
    if (random) {
        grid.mode = SearchMode::Randomized;
        grid.sample_count = opt.samples;
    }
    return grid;
}

std::string describe(const SearchGrid& grid)
{
    if (grid.mode == SearchMode::Exhaustive) {
        return "exhaustive";
    }
    return "randomized (" + std::to_string(grid.sample_count) + " samples, seed " +
           std::to_string(grid.seed) + ")";
}

Json grid_json(const SearchGrid& grid)
{
    Json diag = Json::array();
    for (const auto& v : grid.diagonal_values) {
        diag.push_back(to_string(v));
    }
    Json edge = Json::array();
    for (const auto& v : grid.edge_values) {
        edge.push_back(to_string(v));
    }
    Json j{{"mode", grid.mode == SearchMode::Exhaustive ? "exhaustive" : "randomized"},
           {"diagonal_values", diag},
           {"edge_values", edge}};
    if (grid.mode == SearchMode::Randomized) {
        j["sample_count"] = grid.sample_count;
        j["seed"] = grid.seed;
    }
    return j;
}

int cmd_xixi(Emitter& emit, const RootedGraph& g, const GridOptions& opt, std::size_t cap)
{
    const RootedGraph part = g.induced(component_of(g, g.root()));
    const SearchGrid grid = make_grid(part, opt);
    const XiXiReport r = xixi_minor_based(g, grid, cap);
    auto& table = emit.table();
    table << "graph6          " << to_graph6(g) << " (root " << g.root() << ")\n"
          << "minor value     " << r.minor_value << (r.saturated ? " (saturated: true value may exceed 5)" : "")
          << '\n'
          << "certified lower " << r.certified_lower << '\n'
          << "edge bound      " << (r.edge_bound_ok ? "ok" : "VIOLATED") << '\n'
          << "search          " << describe(grid) << '\n';
    if (!r.certificates.empty()) {
        table << "witness pair    " << to_string(r.certificates.front().pair) << '\n';
    }
    Json doc = report_to_json(r);
    doc["grid"] = grid_json(grid);
    emit.json(doc);
    return exit_ok;
}

int cmd_enumerate(Emitter& emit, const RootedGraph& g, const GridOptions& opt)
{
    const SearchGrid grid = make_grid(g, opt);
    const auto flags = enumerate_pairs(g, grid);
    auto& table = emit.table();
    table << "search: " << describe(grid) << " (pairs not listed may still be allowed)\n";
    for (const auto& f : flags) {
        table << to_string(f.pair) << (f.snip ? " snip" : "") << '\n';
    }
    emit.json(Json{{"graph", graph_to_json(g)}, {"grid", grid_json(grid)}, {"pairs", pair_flags_to_json(flags)}});
    return exit_ok;
}

int cmd_search(Emitter& emit, const RootedGraph& g, const std::string& pair_text, bool snip,
               const GridOptions& opt)
{
    const NullityPair target = parse_pair(pair_text);
    const SearchGrid grid = make_grid(g, opt);
    const auto cert = search_certificate(g, target, snip, grid);
    auto& table = emit.table();
    Json doc{{"target", pair_to_json(target)}, {"require_snip", snip}, {"grid", grid_json(grid)}};
    if (cert) {
        table << "found " << to_string(cert->pair) << " snip=" << yes_no(cert->snip()) << '\n';
        doc["status"] = "found";
        doc["certificate"] = certificate_to_json(*cert);
    } else {
        table << "unknown: no witness in the " << describe(grid) << " grid\n";
        doc["status"] = "unknown";
    }
    emit.json(doc);
    return exit_ok;
}

int cmd_verify_paper(Emitter& emit, bool skip_minimality)
{
    auto& table = emit.table();
    bool ok = true;
    Json records = Json::array();
    table << "matrix vertex cut  pair  type     direct cases recipe\n";
    for (WitnessMatrix id : all_witness_matrices()) {
        const auto [graph, a] = paper_matrix(id);
        for (Vertex v = 0; v < graph.n(); ++v) {
            const bool cut = is_cut_vertex(graph, v);
            const SnipCertificate c = certify(a, graph.with_root(v));
            const bool good = cut || (c.pair == NullityPair{3, 2} && c.snip_direct &&
                                      c.snip_cases && c.snip_recipe);
            ok = ok && good && c.verdicts_agree();
            table << std::left << std::setw(7) << to_string(id) << std::setw(7) << v
                  << std::setw(5) << (cut ? "yes" : "no") << std::setw(6) << to_string(c.pair)
                  << std::setw(9) << to_string(c.index_type) << std::setw(7)
                  << yes_no(c.snip_direct) << std::setw(6) << yes_no(c.snip_cases)
                  << yes_no(c.snip_recipe) << '\n';
            records.push_back(Json{{"matrix", to_string(id)},
                                   {"vertex", v},
                                   {"cut_vertex", cut},
                                   {"pair", pair_to_json(c.pair)},
                                   {"index", std::string(to_string(c.index_type))},
                                   {"snip_direct", c.snip_direct},
                                   {"snip_cases", c.snip_cases},
                                   {"snip_recipe", c.snip_recipe}});
        }
    }
    Json audit = Json::array();
    if (!skip_minimality) {
        table << "\ns  member          root  value  proper minors below s\n";
        for (int s = 0; s <= max_known_minor_family; ++s) {
            for (const auto& member : minimal_minor_family(s)) {
                const int value = minor_value(member);
                bool minimal = true;
                for (const auto& op : one_step_ops(member)) {
                    if (minor_value(apply_minor_op(member, op)) >= s) {
                        minimal = false;
                        break;
                    }
                }
                ok = ok && minimal && value == s;
                table << std::left << std::setw(3) << s << std::setw(16) << to_graph6(member)
                      << std::setw(6) << member.root() << std::setw(7) << value
                      << yes_no(minimal) << '\n';
                audit.push_back(Json{{"s", s},
                                     {"graph", graph_to_json(member)},
                                     {"minor_value", value},
                                     {"minimal", minimal}});
            }
        }
    }
    table << "\nverification " << (ok ? "passed" : "FAILED") << '\n';
    emit.json(Json{{"ok", ok}, {"records", records}, {"minimality", audit}});
    return ok ? exit_ok : exit_domain_error;
}

// Walks down the staircase: west on (k+1,k+1), south on (k,k+1), sw on any
// other pair with both entries positive. Stops when no step applies.
int cmd_staircase(Emitter& emit, const std::string& m, std::size_t i, const std::string& eps_text,
                  std::size_t max_steps)
{
    Matrix a = load_matrix(m);
    const Rational eps = parse_rational(eps_text);
    auto& table = emit.table();
    NullityPair p = nullity_pair(a, i);
    table << "start " << to_string(p) << '\n';
    Json steps = Json::array();
    for (std::size_t n = 0; n < max_steps; ++n) {
        std::optional<PerturbStep> step;
        if (p.k == p.l && p.k > 0) {
            step = west_step(a, i, eps);
        } else if (p.l == p.k + 1) {
            step = south_step(a, i);
        } else if (p.k > 0 && p.l > 0) {
            step = sw_step(a, i);
        } else {
            break;
        }
        table << std::left << std::setw(6) << to_string(step->kind) << to_string(p) << " -> "
              << to_string(step->pair) << "  param " << to_string(step->parameter)
              << (step->strict_pattern ? "" : "  (left strict pattern)") << '\n';
        steps.push_back(step_to_json(*step));
        p = step->pair;
        a = step->matrix;
    }
    emit.json(Json{{"index", i}, {"steps", steps}, {"final_pair", pair_to_json(p)}});
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Nullity pairs, SAP, i-SNIP and rooted-minor tools over exact rationals", "sniplab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string json_target;
    app.add_option("--json", json_target, "Write the JSON document to FILE ('-' for stdout only)");

    std::string matrix_arg;
    std::string graph_arg;
    std::size_t index = 0;
    std::optional<Vertex> root;
    std::size_t cap = default_containment_cap;

    auto add_matrix = [&](CLI::App* sub) {
        sub->add_option("-m,--matrix", matrix_arg, "Matrix JSON file or inline JSON")->required();
    };
    auto add_graph = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("-g,--graph", graph_arg, "Graph JSON, graph6 file, or inline graph6");
        if (required) {
            o->required();
        }
        sub->add_option("--root", root, "Root vertex (overrides the graph's root)");
    };
    auto add_index = [&](CLI::App* sub) {
        sub->add_option("-i,--index", index, "Vertex index i (0-based)")->required();
    };

    GridOptions grid_opt;
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid", grid_opt.mode, "Search mode")
            ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
        sub->add_option("--samples", grid_opt.samples, "Samples in randomized mode");
        sub->add_option("--seed", grid_opt.seed, "Seed for randomized mode (default: SNIPLAB_SEED)");
        sub->add_option("--exhaustive-limit", grid_opt.exhaustive_limit,
                        "Largest grid searched exhaustively in auto mode");
        sub->add_option("--threads", grid_opt.threads, "Worker threads (0 = all cores)");
    };

    auto* pair = app.add_subcommand("pair", "Nullity pair and index type");
    add_matrix(pair);
    add_index(pair);

    auto* sap = app.add_subcommand("sap", "Strong Arnold Property");
    add_matrix(sap);
    add_graph(sap, false);

    std::string method = "direct";
    auto* snip = app.add_subcommand("snip", "i-SNIP verdict");
    add_matrix(snip);
    add_graph(snip, false);
    add_index(snip);
    snip->add_option("--method", method, "Characterization")
        ->check(CLI::IsMember({"direct", "cases", "recipe", "all"}));

    std::optional<std::size_t> recipe_index;
    auto* recipe = app.add_subcommand("recipe", "Full-recipe test on a kernel basis");
    add_matrix(recipe);
    add_graph(recipe, false);
    recipe->add_option("-i,--index", recipe_index, "Use the kernel of A(i,:] instead of A");

    std::string alpha;
    auto* schur = app.add_subcommand("schur", "Schur complement A/A[alpha]");
    add_matrix(schur);
    schur->add_option("--alpha", alpha, "Comma-separated indices")->required();

    std::string host_arg;
    std::string pattern_arg;
    std::optional<Vertex> host_root;
    std::optional<Vertex> pattern_root;
    bool unrooted = false;
    auto* minor = app.add_subcommand("minor", "Rooted minor containment");
    minor->add_option("--host", host_arg, "Host graph")->required();
    minor->add_option("--pattern", pattern_arg, "Pattern graph")->required();
    minor->add_option("--host-root", host_root, "Host root");
    minor->add_option("--pattern-root", pattern_root, "Pattern root");
    minor->add_flag("--unrooted", unrooted, "Ignore roots");
    minor->add_option("--cap", cap, "Largest host size");

    auto* xixi = app.add_subcommand("xixi", "Minor-based xixi value with certified lower bound");
    add_graph(xixi, true);
    add_grid(xixi);
    xixi->add_option("--cap", cap, "Largest root component size");

    auto* enumerate = app.add_subcommand("enumerate", "Nullity pairs realized over the grid");
    add_graph(enumerate, true);
    add_grid(enumerate);

    std::string pair_text;
    bool require_snip = false;
    auto* search = app.add_subcommand("search", "Search the grid for a certificate");
    add_graph(search, true);
    add_grid(search);
    search->add_option("--pair", pair_text, "Target pair k,l")->required();
    search->add_flag("--snip", require_snip, "Require i-SNIP");

    bool skip_minimality = false;
    auto* verify = app.add_subcommand("verify-paper", "Witness-matrix table and minimal-minor audit");
    verify->add_flag("--skip-minimality", skip_minimality, "Only check the witness matrices");

    std::string eps = "1";
    std::size_t max_steps = 64;
    auto* stair = app.add_subcommand("staircase", "Walk sw/west/south steps from a matrix");
    add_matrix(stair);
    add_index(stair);
    stair->add_option("--eps", eps, "Epsilon for west steps");
    stair->add_option("--max-steps", max_steps, "Step limit");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    try {
        Emitter emit(out, json_target);
        if (pair->parsed()) {
            return cmd_pair(emit, matrix_arg, index);
        }
        if (sap->parsed()) {
            return cmd_sap(emit, matrix_arg, graph_arg);
        }
        if (snip->parsed()) {
            if (root && *root != index) {
                throw CLI::ValidationError("--root", "must match --index for snip");
            }
            return cmd_snip(emit, matrix_arg, graph_arg, index, method);
        }
        if (recipe->parsed()) {
            return cmd_recipe(emit, matrix_arg, graph_arg, recipe_index);
        }
        if (schur->parsed()) {
            return cmd_schur(emit, matrix_arg, alpha);
        }
        if (minor->parsed()) {
            return cmd_minor(emit, host_arg, pattern_arg, host_root, pattern_root, unrooted, cap);
        }
        if (xixi->parsed()) {
            return cmd_xixi(emit, load_graph(graph_arg, root), grid_opt, cap);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(emit, load_graph(graph_arg, root), grid_opt);
        }
        if (search->parsed()) {
            return cmd_search(emit, load_graph(graph_arg, root), pair_text, require_snip, grid_opt);
        }
        if (verify->parsed()) {
            return cmd_verify_paper(emit, skip_minimality);
        }
        if (stair->parsed()) {
            return cmd_staircase(emit, matrix_arg, index, eps, max_steps);
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_usage_error;
}

}  // namespace sniplab
