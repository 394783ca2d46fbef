// cooldec — command-line workbench for cool decorations, Nullstellensatz
// certificates, multiplicative +-1 colorings, golden seeds, Rejmer's
// algorithm, and arithmetic-graph probes.
//
// Exit codes: 0 success, 1 structured none-found/halt/refused outcome,
// 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cooldec/cascades_arith.hpp"
#include "cooldec/decorations.hpp"
#include "cooldec/golden_seeds.hpp"
#include "cooldec/multiplicative.hpp"
#include "cooldec/nullstellensatz.hpp"
#include "cooldec/rejmer.hpp"

using json = nlohmann::ordered_json;
using namespace cooldec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoneFound = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string path; // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << text;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_value_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stod(item));
    }
    if (values.empty()) throw std::runtime_error("empty value list");
    return values;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoll(item));
    }
    if (values.empty()) throw std::runtime_error("empty value list");
    return values;
}

json decoration_json(const Graph& g, const Decoration& d) {
    json out;
    out["kind"] = to_string(d.kind);
    json deco;
    if (!d.vertex_values.empty()) {
        json vv = json::array();
        for (int v = 1; v <= g.n; ++v) vv.push_back({v, d.vertex_values[v]});
        deco["vertices"] = vv;
    }
    if (!d.edge_values.empty()) {
        json ev = json::array();
        for (int e = 0; e < g.edge_count(); ++e)
            ev.push_back({g.edges[e].first, g.edges[e].second, d.edge_values[e]});
        deco["edges"] = ev;
    }
    out["decoration"] = deco;
    auto sums = vertex_sums(g, d);
    json sv = json::array();
    for (int v = 1; v <= g.n; ++v) sv.push_back({v, sums[v]});
    out["sums"] = sv;
    out["cool"] = verify_cool(g, d).cool;
    return out;
}

SignRule rule_from_options(const std::string& rule, std::int64_t qr_p, const std::string& rule_file) {
    if (rule == "liouville") return liouville_rule();
    if (rule == "mod3") return mod3_rule();
    if (rule == "qr") return qr_split_rule(qr_p);
    if (rule == "file") {
        if (rule_file.empty()) throw std::runtime_error("--rule file requires --rule-file");
        std::istringstream in(slurp(rule_file));
        std::map<std::int64_t, int> signs;
        std::optional<int> fallback;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string key, sign;
            if (!(ls >> key >> sign))
                throw std::runtime_error("rule file line " + std::to_string(lineno) + ": expected \"p sign\"");
            int s;
            if (sign == "+1" || sign == "+")
                s = 1;
            else if (sign == "-1" || sign == "-")
                s = -1;
            else
                throw std::runtime_error("rule file line " + std::to_string(lineno) + ": sign must be +-1");
            if (key == "default")
                fallback = s;
            else
                signs[std::stoll(key)] = s;
        }
        return table_rule(std::move(signs), fallback);
    }
    throw std::runtime_error("unknown rule: " + rule);
}

// ---------------------------------------------------------------------------
// decorate
// ---------------------------------------------------------------------------

int run_decorate_kalkowski(const std::string& graph_file, const Output& out) {
    Graph g = parse_graph(slurp(graph_file));
    Decoration d = kalkowski_total(g);
    json j = decoration_json(g, d);
    j["status"] = "found";
    out.write(j.dump(2) + "\n");
    return kExitOk;
}

int run_decorate_brute(const std::string& kind, const std::string& values_csv, int k, int c,
                       std::uint64_t budget, const std::string& file, const Output& out) {
    json j;
    SearchStatus status;
    if (kind == "hyper") {
        Hypergraph h = parse_hypergraph(slurp(file));
        auto r = brute_force_hypergraph(h, c, budget);
        status = r.status;
        j["status"] = to_string(r.status);
        if (r.found()) {
            json vv = json::array();
            for (int v = 1; v <= h.n; ++v) vv.push_back({v, (*r.witness)[v]});
            j["assignment"] = vv;
            json sums = json::array();
            for (const auto& s : h.sets) {
                long long total = 0;
                for (int v : s) total += (*r.witness)[v];
                sums.push_back(total);
            }
            j["set_sums"] = sums;
            j["cool"] = true;
        }
    } else {
        Graph g = parse_graph(slurp(file));
        SearchResult<Decoration> r = SearchResult<Decoration>::make_none();
        if (kind == "edge") {
            r = brute_force_edge(g, parse_value_list(values_csv), budget);
        } else if (kind == "vertex") {
            auto values = parse_value_list(values_csv);
            std::vector<std::vector<double>> lists(g.n + 1, values);
            r = brute_force_vertex(g, lists, budget);
        } else if (kind == "ironic") {
            r = brute_force_ironic(g, k, budget);
        } else if (kind == "cascade") {
            auto cr = brute_force_cascade_lists(g, k, budget);
            status = cr.status;
            j["status"] = to_string(cr.status);
            if (cr.found()) {
                json colors = json::array();
                for (int v = 1; v <= g.n; ++v) colors.push_back({v, (*cr.witness)[v]});
                j["cascade_colors"] = colors;
                Decoration d = cascade_to_ironic(g, *cr.witness);
                j["ironic"] = decoration_json(g, d);
            }
            out.write(j.dump(2) + "\n");
            return status == SearchStatus::found ? kExitOk : kExitNoneFound;
        } else {
            throw std::runtime_error("unknown kind: " + kind);
        }
        status = r.status;
        j["status"] = to_string(r.status);
        if (r.found()) {
            json dj = decoration_json(g, *r.witness);
            for (auto& [key, val] : dj.items()) j[key] = val;
        }
    }
    out.write(j.dump(2) + "\n");
    return status == SearchStatus::found ? kExitOk : kExitNoneFound;
}

// ---------------------------------------------------------------------------
// cn
// ---------------------------------------------------------------------------

Bipartition bipartition_or_die(const Graph& g) {
    auto bp = auto_bipartition(g);
    if (!bp) throw std::runtime_error("graph is not bipartite");
    return *bp;
}

std::string exponents_str(const Exponents& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(e[i]));
    }
    return s + ")";
}

int run_cn_expand(const std::string& mode, int max_factors, const std::string& graph_file,
                  const Output& out) {
    Graph g = parse_graph(slurp(graph_file));
    SparsePolynomial p = mode == "edge"
                             ? build_edge_polynomial(g, max_factors)
                             : build_bipartite_vertex_polynomial(g, bipartition_or_die(g), max_factors);
    std::ostringstream ss;
    ss << "# variables " << p.nvars << " factors " << p.factor_count << " monomials "
       << p.terms.size() << "\n";
    for (const auto& [e, coeff] : p.terms) ss << coeff << " " << exponents_str(e) << "\n";
    out.write(ss.str());
    return kExitOk;
}

int run_cn_certify(const std::string& mode, const std::string& caps_csv, int max_factors,
                   const std::string& graph_file, const Output& out) {
    Graph g = parse_graph(slurp(graph_file));
    const int nvars = mode == "edge" ? g.edge_count() : g.n;
    Exponents caps(nvars, 0);
    auto raw = parse_int_list(caps_csv);
    if (raw.size() == 1)
        std::fill(caps.begin(), caps.end(), static_cast<std::uint8_t>(raw[0]));
    else if (static_cast<int>(raw.size()) == nvars)
        for (int i = 0; i < nvars; ++i) caps[i] = static_cast<std::uint8_t>(raw[i]);
    else
        throw std::runtime_error("--caps needs one value or one per variable");

    SparsePolynomial p = mode == "edge"
                             ? build_edge_polynomial(g, max_factors, &caps)
                             : build_bipartite_vertex_polynomial(g, bipartition_or_die(g), max_factors, &caps);
    auto cert = find_certificate(p, caps);
    if (!cert) {
        out.write("none-found\n");
        return kExitNoneFound;
    }
    out.write("certificate " + exponents_str(cert->exponents) + " coefficient " +
              std::to_string(cert->coefficient) + "\n");
    return kExitOk;
}

int run_cn_decorate(const std::string& mode, const std::string& caps_csv, int max_factors,
                    std::uint64_t budget, const std::string& graph_file, const Output& out) {
    Graph g = parse_graph(slurp(graph_file));
    const bool edge_mode = mode == "edge";
    const int nvars = edge_mode ? g.edge_count() : g.n;
    Exponents caps(nvars, 0);
    auto raw = parse_int_list(caps_csv);
    if (raw.size() == 1)
        std::fill(caps.begin(), caps.end(), static_cast<std::uint8_t>(raw[0]));
    else if (static_cast<int>(raw.size()) == nvars)
        for (int i = 0; i < nvars; ++i) caps[i] = static_cast<std::uint8_t>(raw[i]);
    else
        throw std::runtime_error("--caps needs one value or one per variable");

    Bipartition bp;
    if (!edge_mode) bp = bipartition_or_die(g);
    SparsePolynomial p = edge_mode ? build_edge_polynomial(g, max_factors, &caps)
                                   : build_bipartite_vertex_polynomial(g, bp, max_factors, &caps);
    auto cert = find_certificate(p, caps);
    json j;
    if (!cert) {
        j["status"] = "none-found";
        out.write(j.dump(2) + "\n");
        return kExitNoneFound;
    }
    j["certificate"] = {{"exponents", cert->exponents}, {"coefficient", cert->coefficient}};
    // canonical lists {1..k_i+1} realize the certificate
    std::vector<std::vector<double>> lists(nvars);
    for (int i = 0; i < nvars; ++i)
        for (int x = 1; x <= cert->exponents[i] + 1; ++x) lists[i].push_back(x);
    auto r = decorate_from_lists(g, edge_mode ? PolyMode::edge : PolyMode::bipartite_vertex, lists,
                                 edge_mode ? nullptr : &bp, budget);
    j["status"] = to_string(r.status);
    if (r.found()) {
        json dj = decoration_json(g, *r.witness);
        for (auto& [key, val] : dj.items()) j[key] = val;
    }
    out.write(j.dump(2) + "\n");
    return r.found() ? kExitOk : kExitNoneFound;
}

// ---------------------------------------------------------------------------
// mult
// ---------------------------------------------------------------------------

int run_mult_sieve(const SignRule& rule, std::int64_t n, const Output& out) {
    MultiplicativeColoring f(rule, n);
    std::ostringstream ss;
    ss << "n,f,prefix\n";
    std::int64_t prefix = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        prefix += f.eval(i);
        ss << i << "," << f.eval(i) << "," << prefix << "\n";
    }
    out.write(ss.str());
    return kExitOk;
}

int run_mult_polya(std::int64_t n, int threads, std::int64_t block, const Output& out) {
    PolyaOptions opt;
    opt.threads = threads;
    if (block > 0) opt.block_size = block;
    auto witness = polya_scan(n, opt);
    if (witness) {
        out.write(std::to_string(*witness) + "\n");
        return kExitOk;
    }
    out.write("none-found\n");
    return kExitNoneFound;
}

int run_mult_divine(const SignRule& rule, const std::string& set_csv, const Output& out) {
    auto set = parse_int_list(set_csv);
    std::sort(set.begin(), set.end());
    MultiplicativeColoring f(rule, set.back());
    bool divine = is_divine(f, set);
    out.write(divine ? "true\n" : "false\n");
    return kExitOk;
}

// ---------------------------------------------------------------------------
// seeds
// ---------------------------------------------------------------------------

int run_seeds_enum(int k, const Output& out) {
    std::ostringstream ss;
    for (const auto& s : enumerate_seeds(k)) ss << s.to_string() << " " << (s.is_golden() ? 1 : 0) << "\n";
    out.write(ss.str());
    return kExitOk;
}

int run_seeds_construct(int k, const Output& out) {
    auto cs = construct_seed(k);
    std::ostringstream ss;
    ss << cs.seed.to_string() << "\n";
    if (cs.used_fallback) {
        ss << "fallback\n";
    } else {
        ss << "flips:";
        for (auto p : cs.flipped_primes) ss << " " << p;
        ss << "\n";
    }
    out.write(ss.str());
    return kExitOk;
}

int run_seeds_extend(int k, std::int64_t n, int tail_sign, const Output& out) {
    auto cs = construct_seed(k);
    auto f = extend_seed(cs.seed, n, [tail_sign](std::int64_t) { return tail_sign; });
    auto worst = max_cascade_balance(f, k, n);
    std::ostringstream ss;
    ss << cs.seed.to_string() << "\n";
    ss << "max_cascade_balance " << worst << "\n";
    out.write(ss.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// rejmer
// ---------------------------------------------------------------------------

int run_rejmer(std::int64_t steps, const std::string& emit, const std::string& switch_log,
               const Output& out) {
    auto run = rejmer_run(steps);
    std::ostringstream ss;
    if (emit == "signs") {
        for (std::int64_t i = 1; i <= run.steps(); ++i) ss << (run.signs[i] > 0 ? '+' : '-');
        ss << "\n";
    } else {
        ss << "n,sign,prefix\n";
        std::int64_t prefix = 0;
        for (std::int64_t i = 1; i <= run.steps(); ++i) {
            prefix += run.signs[i];
            ss << i << "," << static_cast<int>(run.signs[i]) << "," << prefix << "\n";
        }
    }
    if (run.halted) ss << "halted at step " << run.halt_step << "\n";
    out.write(ss.str());
    if (!switch_log.empty()) {
        std::ostringstream ls;
        ls << "step,prime,old_sign\n";
        for (const auto& sw : run.switches)
            ls << sw.step << "," << sw.prime << "," << static_cast<int>(sw.old_sign) << "\n";
        Output{switch_log}.write(ls.str());
    }
    return run.halted ? kExitNoneFound : kExitOk;
}

int run_rejmer_diff(std::int64_t steps, const Output& out) {
    auto run = rejmer_run(steps);
    MultiplicativeColoring lam(liouville_rule(), steps);
    std::ostringstream ss;
    ss << "n,R,lambda\n";
    for (std::int64_t i = 1; i <= run.steps(); ++i)
        if (run.signs[i] != lam.eval(i))
            ss << i << "," << static_cast<int>(run.signs[i]) << "," << lam.eval(i) << "\n";
    out.write(ss.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cascade / arith
// ---------------------------------------------------------------------------

int run_cascade_rainbow(std::int64_t p, std::int64_t n, bool verify, const Output& out) {
    if (verify) {
        auto violation = verify_rainbow(p, n);
        if (!violation) {
            out.write("ok\n");
            return kExitOk;
        }
        out.write("violation root=" + std::to_string(violation->root) + " a=" +
                  std::to_string(violation->a) + " b=" + std::to_string(violation->b) + "\n");
        return kExitNoneFound;
    }
    std::ostringstream ss;
    ss << "n,color\n";
    for (std::int64_t i = 1; i <= n; ++i) ss << i << "," << rainbow_color(p, i) << "\n";
    out.write(ss.str());
    return kExitOk;
}

int run_arith_window(std::int64_t k, std::int64_t lo, std::int64_t hi, const Output& out) {
    auto w = build_window(k, lo, hi);
    std::ostringstream ss;
    ss << "# B_" << k << " window [" << lo << "," << hi << "], vertex v is integer lo+v-1\n";
    ss << "n " << w.graph.n << "\n";
    for (auto [u, v] : w.graph.edges) ss << u << " " << v << "\n";
    out.write(ss.str());
    return kExitOk;
}

int run_arith_chi(std::int64_t k, std::int64_t lo, std::int64_t hi, bool exact, int max_exact,
                  const Output& out) {
    auto w = build_window(k, lo, hi);
    auto r = chromatic_probe(w, exact ? ChromaticMode::exact : ChromaticMode::greedy, max_exact);
    std::ostringstream ss;
    ss << "chi " << r.colors << " " << (r.exact ? "exact" : "greedy-upper-bound") << "\n";
    ss << "value,color\n";
    for (int v = 1; v <= w.graph.n; ++v) ss << w.value_of(v) << "," << r.coloring[v] << "\n";
    out.write(ss.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cool decorations & multiplicative colorings workbench"};
    app.require_subcommand(1);
    app.set_config("--config");

    std::string out_path;
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized sampling (reserved; searches are deterministic)");
    app.add_option("--threads", threads, "worker threads for segmented sieving")
        ->check(CLI::PositiveNumber);

    // decorate
    auto* decorate = app.add_subcommand("decorate", "graph decorations");
    decorate->require_subcommand(1);
    auto* kalk = decorate->add_subcommand("kalkowski", "greedy total decoration, vertices {1,2}, edges {1,2,3}");
    std::string kalk_file;
    kalk->add_option("graph-file", kalk_file)->required();

    auto* brute = decorate->add_subcommand("brute", "exhaustive decoration search");
    std::string brute_kind, brute_values = "1,2,3", brute_file;
    int brute_k = 1, brute_c = 1;
    std::uint64_t brute_budget = kDefaultGridBudget;
    brute->add_option("--kind", brute_kind, "edge|vertex|ironic|cascade|hyper")->required();
    brute->add_option("--values", brute_values, "comma-separated values (edge/vertex kinds)");
    brute->add_option("--k", brute_k, "palette size (ironic/cascade kinds)");
    brute->add_option("--c", brute_c, "palette size (hyper kind)");
    brute->add_option("--budget", brute_budget, "max grid points")->check(CLI::PositiveNumber);
    brute->add_option("file", brute_file, "graph or hypergraph file")->required();

    // cn
    auto* cn = app.add_subcommand("cn", "Combinatorial Nullstellensatz certificates");
    cn->require_subcommand(1);
    std::string cn_mode = "edge", cn_caps = "2", cn_file;
    int cn_max_factors = kDefaultExpansionFactors;
    std::uint64_t cn_budget = kDefaultGridBudget;
    auto* cn_expand = cn->add_subcommand("expand", "expand the graph polynomial");
    auto* cn_certify = cn->add_subcommand("certify", "find a certificate monomial within caps");
    auto* cn_decorate = cn->add_subcommand("decorate", "realize a decoration from canonical lists");
    for (auto* sub : {cn_expand, cn_certify, cn_decorate}) {
        sub->add_option("--mode", cn_mode, "edge|bipartite");
        sub->add_option("--max-factors", cn_max_factors, "expansion budget")->check(CLI::PositiveNumber);
        sub->add_option("graph-file", cn_file)->required();
    }
    cn_certify->add_option("--caps", cn_caps, "uniform cap or per-variable list");
    cn_decorate->add_option("--caps", cn_caps, "uniform cap or per-variable list");
    cn_decorate->add_option("--budget", cn_budget, "grid budget")->check(CLI::PositiveNumber);

    // mult
    auto* mult = app.add_subcommand("mult", "multiplicative +-1 colorings");
    mult->require_subcommand(1);
    std::string mult_rule = "liouville", mult_rule_file, mult_emit = "csv", mult_set;
    std::int64_t mult_n = 100, mult_qr_p = 7, mult_block = 0;
    auto* sieve = mult->add_subcommand("sieve", "emit n,f(n),prefix as CSV");
    sieve->add_option("--rule", mult_rule, "liouville|mod3|qr|file");
    sieve->add_option("--rule-file", mult_rule_file, "prime sign table for --rule file");
    sieve->add_option("--p", mult_qr_p, "prime for --rule qr");
    sieve->add_option("--n", mult_n)->required()->check(CLI::PositiveNumber);
    sieve->add_option("--emit", mult_emit, "csv");
    auto* polya = mult->add_subcommand("polya", "first n >= 2 with positive Liouville prefix");
    polya->add_option("--n", mult_n)->required()->check(CLI::PositiveNumber);
    polya->add_option("--block", mult_block, "segment size for the long-range sieve");
    auto* divine = mult->add_subcommand("divine", "divine-coloring check for a set");
    divine->add_option("--set", mult_set, "comma-separated integers")->required();
    divine->add_option("--rule", mult_rule, "liouville|mod3|qr|file");
    divine->add_option("--rule-file", mult_rule_file);
    divine->add_option("--p", mult_qr_p, "prime for --rule qr");

    // seeds
    auto* seeds = app.add_subcommand("seeds", "golden seeds");
    seeds->require_subcommand(1);
    int seeds_k = 6, seeds_tail = -1;
    std::int64_t seeds_n = 100000;
    auto* senum = seeds->add_subcommand("enum", "all range-multiplicative strings, golden flagged");
    senum->add_option("--k", seeds_k)->required()->check(CLI::PositiveNumber);
    auto* sconstruct = seeds->add_subcommand("construct", "build a golden seed");
    sconstruct->add_option("--k", seeds_k)->required()->check(CLI::PositiveNumber);
    auto* sextend = seeds->add_subcommand("extend", "extend a constructed seed and scan cascades");
    sextend->add_option("--k", seeds_k)->required()->check(CLI::PositiveNumber);
    sextend->add_option("--n", seeds_n)->check(CLI::PositiveNumber);
    sextend->add_option("--tail", seeds_tail, "sign for primes above k (+1 or -1)");

    // rejmer
    auto* rejmer = app.add_subcommand("rejmer", "Rejmer's greedy golden-seed algorithm");
    rejmer->require_subcommand(1);
    std::int64_t rej_steps = 100;
    std::string rej_emit = "signs", rej_switch_log;
    auto* rrun = rejmer->add_subcommand("run", "run and emit the sequence");
    rrun->add_option("--steps", rej_steps)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    rrun->add_option("--emit", rej_emit, "signs|csv");
    rrun->add_option("--switch-log", rej_switch_log, "write the switch log CSV to a file");
    auto* rdiff = rejmer->add_subcommand("diff-liouville", "positions where R differs from lambda");
    rdiff->add_option("--steps", rej_steps)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));

    // cascade
    auto* cascade = app.add_subcommand("cascade", "rainbow cascade colorings");
    cascade->require_subcommand(1);
    std::int64_t cas_p = 7, cas_n = 1000;
    bool cas_verify = false;
    auto* rainbow = cascade->add_subcommand("rainbow", "(p-1)-coloring making length-(p-1) cascades rainbow");
    rainbow->add_option("--p", cas_p)->required()->check(CLI::PositiveNumber);
    rainbow->add_option("--n", cas_n)->required()->check(CLI::PositiveNumber);
    rainbow->add_flag("--verify", cas_verify, "scan all cascades instead of emitting colors");

    // arith
    auto* arith = app.add_subcommand("arith", "arithmetic graphs B_k");
    arith->require_subcommand(1);
    std::int64_t ar_k = 3, ar_lo = 1, ar_hi = 30;
    bool ar_exact = false;
    int ar_max_exact = 60;
    std::string ar_emit = "edgelist";
    auto* awin = arith->add_subcommand("window", "emit a window of B_k as an edge list");
    awin->add_option("--k", ar_k)->required()->check(CLI::PositiveNumber);
    awin->add_option("--lo", ar_lo)->check(CLI::PositiveNumber);
    awin->add_option("--hi", ar_hi)->required()->check(CLI::PositiveNumber);
    awin->add_option("--emit", ar_emit, "edgelist");
    auto* achi = arith->add_subcommand("chi", "chromatic probe of a window");
    achi->add_option("--k", ar_k)->required()->check(CLI::PositiveNumber);
    achi->add_option("--lo", ar_lo)->check(CLI::PositiveNumber);
    achi->add_option("--hi", ar_hi)->required()->check(CLI::PositiveNumber);
    achi->add_flag("--exact", ar_exact, "exact branch-and-bound instead of greedy");
    achi->add_option("--max-exact", ar_max_exact, "vertex cap for the exact solver")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    Output out{out_path};
    try {
        if (*kalk) return run_decorate_kalkowski(kalk_file, out);
        if (*brute) return run_decorate_brute(brute_kind, brute_values, brute_k, brute_c, brute_budget,
                                              brute_file, out);
        if (*cn_expand) return run_cn_expand(cn_mode, cn_max_factors, cn_file, out);
        if (*cn_certify) return run_cn_certify(cn_mode, cn_caps, cn_max_factors, cn_file, out);
        if (*cn_decorate)
            return run_cn_decorate(cn_mode, cn_caps, cn_max_factors, cn_budget, cn_file, out);
        if (*sieve) return run_mult_sieve(rule_from_options(mult_rule, mult_qr_p, mult_rule_file), mult_n, out);
        if (*polya) return run_mult_polya(mult_n, threads, mult_block, out);
        if (*divine)
            return run_mult_divine(rule_from_options(mult_rule, mult_qr_p, mult_rule_file), mult_set, out);
        if (*senum) return run_seeds_enum(seeds_k, out);
        if (*sconstruct) return run_seeds_construct(seeds_k, out);
        if (*sextend) return run_seeds_extend(seeds_k, seeds_n, seeds_tail, out);
        if (*rrun) return run_rejmer(rej_steps, rej_emit, rej_switch_log, out);
        if (*rdiff) return run_rejmer_diff(rej_steps, out);
        if (*rainbow) return run_cascade_rainbow(cas_p, cas_n, cas_verify, out);
        if (*awin) return run_arith_window(ar_k, ar_lo, ar_hi, out);
        if (*achi) return run_arith_chi(ar_k, ar_lo, ar_hi, ar_exact, ar_max_exact, out);
    } catch (const budget_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitNoneFound;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
