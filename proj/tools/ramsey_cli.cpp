#include "ramsey/ramsey.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace ramsey;

namespace {

struct Globals {
    bool exact = false;
    double tolerance = 1e-9;
    std::uint64_t seed = kSuiteSeed;
    int threads = 1;
};

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Graph load_graph(const std::string& spec)
{
    if (std::filesystem::is_regular_file(spec)) {
        std::ifstream in(spec);
        return read_graph(in);
    }
    return catalog::named(spec);
}

template <typename T>
StepGraphon<T> load_graphon(const std::string& spec)
{
    if (spec == "half") return half_graphon<T>();
    if (spec.rfind("block:", 0) == 0) return block_graphon<T>(load_graph(spec.substr(6)));
    if (spec.rfind("random:", 0) == 0) {
        const auto rest = spec.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw InputError("graphon: random:<k>:<seed> expected");
        const int k = std::stoi(rest.substr(0, colon));
        if (k < 1) throw InputError("graphon: k must be positive");
        std::mt19937_64 rng(std::stoull(rest.substr(colon + 1)));
        if constexpr (is_exact_v<T>)
            return random_rational_graphon(k, rng);
        else
            return random_graphon(k, rng);
    }
    std::ifstream in(spec);
    if (!in) throw InputError("graphon: cannot open '" + spec + "'");
    return read_graphon<T>(in);
}

std::vector<StepGraphon<double>> graphons(const std::string& spec, std::size_t suite, std::uint64_t seed)
{
    if (!spec.empty()) return {load_graphon<double>(spec)};
    return standard_suite(suite, seed);
}

template <typename T>
int print_density(const Graph& h, const std::string& spec, const std::string& kind)
{
    const auto w = load_graphon<T>(spec);
    T value;
    if (kind == "hom")
        value = t_hom(h, w);
    else if (kind == "induced")
        value = t_induced(h, w);
    else if (kind == "signed")
        value = t_signed(h, to_signed(w));
    else
        throw InputError("density: --kind must be hom, induced or signed");
    std::cout << format_value(value) << '\n';
    return 0;
}

template <typename T>
int print_m(const Graph& h, const std::string& spec)
{
    std::cout << format_value(m(h, load_graphon<T>(spec))) << '\n';
    return 0;
}

int expand_check(const Graph& h, const Globals& g, const std::string& spec, std::size_t suite)
{
    if (g.exact) {
        const auto w = load_graphon<Rational>(spec.empty() ? "half" : spec);
        const Rational a = expansion_value(h, w), b = m(h, w);
        std::cout << "expand-check\t" << (a == b ? "PASS" : "FAIL") << '\t' << to_string(a) << '\t' << to_string(b) << '\n';
        return a == b ? 0 : 1;
    }
    double worst = 0;
    const auto ws = graphons(spec, suite, g.seed);
    for (const auto& w : ws) worst = std::max(worst, std::abs(expansion_value(h, w) - m(h, w)));
    const bool pass = worst <= g.tolerance;
    std::cout << "expand-check\t" << (pass ? "PASS" : "FAIL") << "\tmax_abs_diff=" << format_value(worst)
              << "\tgraphons=" << ws.size() << '\n';
    return pass ? 0 : 1;
}

int tritree(const Graph& h, bool show)
{
    if (auto r = find_triangle_decomposition(h)) {
        std::cout << "triangle-tree phi=" << r->phi << " kappa=" << r->kappa << '\n';
        if (show) write_decomposition(std::cout, *r->decomposition);
    } else {
        std::cout << "not a triangle-tree phi=" << phi(h) << " kappa=" << kappa(h) << '\n';
    }
    return 0;
}

int inequalities(const std::string& graph, const Globals& g, const std::string& spec, std::size_t suite)
{
    std::optional<Graph> h;
    if (!graph.empty()) h = load_graph(graph);
    const bool tree = h && find_triangle_decomposition(*h).has_value();
    const bool bipartite = h && small_bipartite_index(*h) >= 0;
    const double golden = (3 - std::sqrt(5.0)) / 4;

    std::map<std::string, std::array<long, 3>> tally;  // holds, violated, n/a
    std::vector<InequalityReport> failures;
    auto record = [&](const InequalityReport& r) {
        auto& t = tally[r.name];
        ++t[r.holds() ? 0 : r.violated() ? 1 : 2];
        if (r.violated() && failures.size() < 20) failures.push_back(r);
    };
    const auto ws = graphons(spec, suite, g.seed);
    for (const auto& w : ws) {
        record(check_goodman(w));
        record(check_holder(catalog::diamond(), catalog::complete(3), catalog::complete(2), 2, 2, w));
        record(check_diamond_lemma(w, 1.0 / 7.0));
        auto gold = check_diamond_lemma(w, golden);
        gold.name = "diamond-golden";
        record(gold);
        record(check_k3plus_cs(to_signed(w)));
        record(check_beachball_bound(2, w));
        if (tree) {
            record(check_tritree_bound(*h, w));
            for (const auto& r : check_tritree_chain(*h, w)) record(r);
        }
        if (bipartite)
            for (const auto& r : check_apex_chain(*h, 1, w)) record(r);
    }
    std::cout << "check\tholds\tviolated\tn/a\n";
    for (const auto& [name, t] : tally) std::cout << name << '\t' << t[0] << '\t' << t[1] << '\t' << t[2] << '\n';
    for (const auto& r : failures) write_report(std::cerr, r);
    return failures.empty() ? 0 : 1;
}

int verify(const std::string& path, int trials, std::size_t suite, std::uint64_t seed)
{
    const auto cert = load_certificate(path);
    const auto report = verify_certificate(cert, trials, standard_suite(suite, seed));
    write_verification(std::cout, report);
    return report.ok() ? 0 : 1;
}

int minimize(const Graph& h, MinimizeConfig cfg)
{
    const auto r = minimize_m(h, cfg);
    std::cout << "value\t" << format_value(r.value) << '\n'
              << "target\t" << format_value(r.target) << '\n'
              << "verdict\t" << to_string(r.verdict) << '\n'
              << "trace_length\t" << r.trace_length << '\n'
              << "best_restart\t" << r.best_restart << '\n';
    write_graphon(std::cout, r.best);
    return 0;
}

int ramsey_count(const Graph& h, int n, int threads)
{
    const long count = exact_ramsey_multiplicity(h, n, threads);
    Integer falling = 1;
    for (int i = 0; i < h.order(); ++i) falling *= n - i;
    std::cout << "M\t" << count << '\n';
    if (falling > 0) std::cout << "ratio\t" << to_string(Rational(Integer(count), falling)) << '\n';
    std::cout << "copies\tinjective\n";
    return 0;
}

int catalog_listing(const std::string& name)
{
    if (!name.empty()) {
        write_graph(std::cout, catalog::named(name));
        return 0;
    }
    std::cout << "name\tv\te\n";
    for (const auto& n : catalog::standard_names()) {
        const Graph g = catalog::named(n);
        std::cout << n << '\t' << g.order() << '\t' << g.size() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monochromatic densities, commonality checks and Ramsey multiplicity"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--exact", g.exact, "Rational arithmetic where supported");
    app.add_option("--tolerance", g.tolerance, "Numerical tolerance");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string graph, graphon_spec = "", kind = "hom", path;
    std::size_t suite = 1000;
    int n = 0, trials = 100;
    bool show = false;
    MinimizeConfig cfg;

    auto* density = app.add_subcommand("density", "Homomorphism density t_H(W)");
    density->add_option("graph", graph)->required();
    density->add_option("--graphon", graphon_spec)->required();
    density->add_option("--kind", kind, "hom, induced or signed");

    auto* mono = app.add_subcommand("m", "Monochromatic density m_H(W)");
    mono->add_option("graph", graph)->required();
    mono->add_option("--graphon", graphon_spec)->required();

    auto* expand = app.add_subcommand("expand-check", "Even-subgraph expansion against m_H");
    expand->add_option("graph", graph)->required();
    expand->add_option("--graphon", graphon_spec);
    expand->add_option("--suite", suite, "Random graphons when no --graphon is given");

    auto* tri = app.add_subcommand("tritree", "Triangle-tree recognition");
    tri->add_option("graph", graph)->required();
    tri->add_flag("--show", show, "Print the decomposition");

    auto* ineq = app.add_subcommand("inequalities", "Inequality battery over graphons");
    ineq->add_option("graph", graph, "Optional graph for the triangle-tree and apex checks");
    ineq->add_option("--graphon", graphon_spec);
    ineq->add_option("--suite", suite);

    auto* cert = app.add_subcommand("verify-certificate", "Verify a commonality certificate");
    cert->add_option("file", path)->required();
    cert->add_option("--trials", trials, "Random graphons for column cross-validation");
    cert->add_option("--suite", suite);

    auto* mini = app.add_subcommand("minimize", "Search for small m_H over step graphons");
    mini->add_option("graph", graph)->required();
    mini->add_option("--parts", cfg.parts)->check(CLI::PositiveNumber);
    mini->add_option("--restarts", cfg.restarts)->check(CLI::PositiveNumber);
    mini->add_option("--iterations", cfg.max_iterations);
    mini->add_flag("--weights", cfg.optimize_weights, "Optimise part weights too");

    auto* ram = app.add_subcommand("ramsey", "Exact Ramsey multiplicity M(H; n)");
    ram->add_option("graph", graph)->required();
    ram->add_option("n", n)->required();

    auto* cat = app.add_subcommand("catalog", "List named graphs, or print one");
    cat->add_option("name", graph);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*density)
            return g.exact ? print_density<Rational>(load_graph(graph), graphon_spec, kind)
                           : print_density<double>(load_graph(graph), graphon_spec, kind);
        if (*mono) return g.exact ? print_m<Rational>(load_graph(graph), graphon_spec) : print_m<double>(load_graph(graph), graphon_spec);
        if (*expand) return expand_check(load_graph(graph), g, graphon_spec, suite);
        if (*tri) return tritree(load_graph(graph), show);
        if (*ineq) return inequalities(graph, g, graphon_spec, suite);
        if (*cert) return verify(path, trials, suite, g.seed);
        if (*mini) {
            cfg.seed = g.seed;
            cfg.threads = g.threads;
            return minimize(load_graph(graph), cfg);
        }
        if (*ram) return ramsey_count(load_graph(graph), n, g.threads);
        if (*cat) return catalog_listing(graph);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
