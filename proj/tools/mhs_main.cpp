#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mhs/mhs.hpp"

namespace {

using nlohmann::json;
using namespace mhs;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconsistent = 2;

struct Options {
    std::string graph_path;
    std::string labels_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string out_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph_file(const std::string& path) {
    if (path.empty()) throw Error("missing --graph");
    return load_graph(read_file(path));
}

Vertex vertex_by_name(const Graph& g, const std::string& name) {
    auto v = g.id_of(name);
    if (!v) throw Error("unknown vertex '" + name + "'");
    return *v;
}

// Label files: one "name label" pair per line, labels 0 or 1.
LabeledSample parse_labels(const Graph& g, const std::string& text) {
    LabeledSample s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string name, label, extra;
        if (!(ls >> name)) continue;
        if (!(ls >> label) || ls >> extra || (label != "0" && label != "1"))
            throw Error("bad label line " + std::to_string(lineno));
        s.add(vertex_by_name(g, name), label == "1" ? 1 : 0);
    }
    return s;
}

// Target files reuse the label format; unlisted vertices default to 0.
VertexSet parse_target(const Graph& g, const std::string& text) {
    VertexSet h(g.vertex_count());
    for (auto [v, y] : parse_labels(g, text).entries)
        if (y == 1) h.add(v);
    return h;
}

// Vertex lists on the command line: comma- or space-separated names.
VertexSet parse_set(const Graph& g, const std::string& arg) {
    VertexSet s(g.vertex_count());
    std::string piece;
    for (char c : arg + ",") {
        if (c == ',' || c == ' ') {
            if (!piece.empty()) s.add(vertex_by_name(g, piece));
            piece.clear();
        } else {
            piece += c;
        }
    }
    return s;
}

std::string format_set(const Graph& g, const VertexSet& s) {
    if (s.empty()) return "{}";
    std::string out;
    for (Vertex v : s) {
        if (!out.empty()) out += ' ';
        out += g.name(v);
    }
    return out;
}

json set_to_json(const Graph& g, const VertexSet& s) {
    json a = json::array();
    for (Vertex v : s) a.push_back(g.name(v));
    return a;
}

std::vector<Halfspace> sorted_canonical(std::vector<Halfspace> v) {
    std::sort(v.begin(), v.end(), [](const Halfspace& a, const Halfspace& b) { return lex_less(a, b); });
    return v;
}

json transcript_to_json(const Graph& g, const LearnerTranscript& t) {
    json events = json::array();
    for (const TranscriptEvent& e : t.events) {
        json j;
        if (e.kind == TranscriptEvent::Kind::query) {
            j["event"] = "query";
            j["vertex"] = g.name(e.vertex);
            j["answer"] = e.answer;
        } else {
            j["event"] = "prediction";
            j["round"] = e.round;
            j["vertex"] = g.name(e.vertex);
            j["predicted"] = e.predicted;
            j["truth"] = e.truth;
            j["mistake"] = e.mistake;
        }
        events.push_back(j);
    }
    return events;
}

// Every command writes through here so --out behaves uniformly.
int emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw Error("cannot write " + opt.out_path);
        out << text;
    }
    return kExitOk;
}

int cmd_check(const Options& opt) {
    Graph g = load_graph_file(opt.graph_path);
    if (opt.labels_path.empty()) throw Error("missing --labels");
    LabeledSample sample = parse_labels(g, read_file(opt.labels_path));
    auto h = mh_check(g, sample);
    std::ostringstream out;
    if (opt.format == "json") {
        json j;
        j["consistent"] = h.has_value();
        if (h) j["halfspace"] = set_to_json(g, *h);
        out << j.dump(2) << "\n";
    } else {
        out << (h ? format_set(g, *h) : "INCONSISTENT") << "\n";
    }
    emit(opt, out.str());
    return h ? kExitOk : kExitInconsistent;
}

int cmd_enumerate(const Options& opt) {
    Graph g = load_graph_file(opt.graph_path);
    std::vector<Halfspace> hs;
    if (opt.labels_path.empty())
        hs = list_all_fpt(g);
    else
        hs = list_version_space(g, parse_labels(g, read_file(opt.labels_path)));
    hs = sorted_canonical(std::move(hs));
    Rational bound = count_bound(g);
    std::ostringstream out;
    if (opt.format == "json") {
        json j;
        j["count"] = hs.size();
        j["bound"] = bound.str();
        j["halfspaces"] = json::array();
        for (const Halfspace& h : hs) j["halfspaces"].push_back(set_to_json(g, h));
        out << j.dump(2) << "\n";
    } else {
        for (const Halfspace& h : hs) out << format_set(g, h) << "\n";
        out << "count=" << hs.size() << " bound=" << bound.str() << "\n";
    }
    return emit(opt, out.str());
}

int cmd_hull(const Options& opt, const std::string& set_arg) {
    Graph g = load_graph_file(opt.graph_path);
    VertexSet h = mhull(g, parse_set(g, set_arg));
    std::ostringstream out;
    if (opt.format == "json")
        out << json{{"hull", set_to_json(g, h)}}.dump(2) << "\n";
    else
        out << format_set(g, h) << "\n";
    return emit(opt, out.str());
}

int cmd_shadow(const Options& opt, const std::string& z_name, const std::string& v_name) {
    Graph g = load_graph_file(opt.graph_path);
    VertexSet s = edge_shadow(g, vertex_by_name(g, z_name), vertex_by_name(g, v_name));
    std::ostringstream out;
    if (opt.format == "json")
        out << json{{"shadow", set_to_json(g, s)}}.dump(2) << "\n";
    else
        out << format_set(g, s) << "\n";
    return emit(opt, out.str());
}

int cmd_convex(const Options& opt, const std::string& set_arg) {
    Graph g = load_graph_file(opt.graph_path);
    bool c = is_mconvex(g, parse_set(g, set_arg));
    std::ostringstream out;
    if (opt.format == "json")
        out << json{{"convex", c}}.dump(2) << "\n";
    else
        out << (c ? "CONVEX" : "NOT CONVEX") << "\n";
    return emit(opt, out.str());
}

int cmd_erm(const Options& opt) {
    Graph g = load_graph_file(opt.graph_path);
    if (opt.labels_path.empty()) throw Error("missing --labels");
    ErmResult r = erm(g, parse_labels(g, read_file(opt.labels_path)));
    std::ostringstream out;
    if (opt.format == "json") {
        json j;
        j["hypothesis"] = set_to_json(g, r.hypothesis);
        j["risk"] = r.risk;
        j["mistakes"] = r.mistakes;
        out << j.dump(2) << "\n";
    } else {
        out << format_set(g, r.hypothesis) << "\n";
        out << "risk=" << r.risk << " mistakes=" << r.mistakes << "\n";
    }
    return emit(opt, out.str());
}

int cmd_active(const Options& opt, const std::string& target_path) {
    Graph g = load_graph_file(opt.graph_path);
    if (target_path.empty()) throw Error("missing --target");
    HalfspaceOracle oracle(parse_target(g, read_file(target_path)));
    LearnerTranscript t;
    Halfspace h = active_learn(g, oracle, &t);
    std::ostringstream out;
    if (opt.format == "json") {
        for (const json& e : transcript_to_json(g, t)) out << e.dump() << "\n";
        json j;
        j["halfspace"] = set_to_json(g, h);
        j["queries"] = oracle.calls();
        out << j.dump(2) << "\n";
    } else {
        out << format_set(g, h) << "\n";
        out << "queries=" << oracle.calls() << "\n";
    }
    return emit(opt, out.str());
}

std::vector<std::pair<Vertex, int>> make_stream(const Graph& g, const Options& opt, const std::string& stream_arg,
                                                const std::string& target_path) {
    if (stream_arg.rfind("random", 0) != 0) {
        // stream file: same line format as labels, in stream order
        std::vector<std::pair<Vertex, int>> s;
        for (auto e : parse_labels(g, read_file(stream_arg)).entries) s.push_back(e);
        return s;
    }
    if (target_path.empty()) throw Error("random streams need --target");
    VertexSet target = parse_target(g, read_file(target_path));
    std::uint64_t seed = opt.seed;
    if (auto colon = stream_arg.find(':'); colon != std::string::npos)
        seed = std::stoull(stream_arg.substr(colon + 1));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, int>> s;
    std::vector<Vertex> order = g.vertices().to_vector();
    for (int pass = 0; pass < 4; ++pass) {
        std::shuffle(order.begin(), order.end(), rng);
        for (Vertex v : order) s.emplace_back(v, target.contains(v) ? 1 : 0);
    }
    return s;
}

int cmd_online(const Options& opt, const std::string& algo, const std::string& stream_arg,
               const std::string& target_path) {
    Graph g = load_graph_file(opt.graph_path);
    auto stream = make_stream(g, opt, stream_arg, target_path);
    LearnerTranscript t;
    std::ostringstream extra;
    if (algo == "winnow") {
        auto l = winnow_online(g);
        t = run_stream(l, stream);
        extra << " bound=" << winnow1_mistake_bound(g);
    } else if (algo == "agnostic-winnow") {
        auto l = agnostic_winnow_online(g);
        t = run_stream(l, stream);
    } else if (algo == "halving") {
        auto l = halving_online(g);
        std::size_t start = l.version_space().size();
        t = run_stream(l, stream);
        extra << " bound=" << std::ceil(std::log2(static_cast<double>(start)));
    } else if (algo == "wm") {
        auto l = weighted_majority_online(g);
        t = run_stream(l, stream);
    } else {
        throw Error("unknown --algo '" + algo + "'");
    }
    std::ostringstream out;
    if (opt.format == "json") {
        for (const json& e : transcript_to_json(g, t)) out << e.dump() << "\n";
        json j;
        j["algo"] = algo;
        j["rounds"] = stream.size();
        j["mistakes"] = t.mistakes;
        out << j.dump(2) << "\n";
    } else {
        out << "algo=" << algo << " rounds=" << stream.size() << " mistakes=" << t.mistakes << extra.str() << "\n";
    }
    return emit(opt, out.str());
}

int cmd_pac(const Options& opt, double eps, double delta, int trials) {
    Graph g = load_graph_file(opt.graph_path);
    int n = g.vertex_count();
    std::vector<Halfspace> targets = sorted_canonical(list_all_fpt(g));
    std::int64_t m = pac_sample_size(eps, delta, omega_tilde(g));
    std::mt19937_64 rng(opt.seed);
    int failures = 0;
    ConsistencyChecker checker(g);
    for (int trial = 0; trial < trials; ++trial) {
        const Halfspace& target = targets[rng() % targets.size()];
        LabeledSample sample;
        for (std::int64_t i = 0; i < m; ++i) {
            Vertex v = static_cast<Vertex>(rng() % n);
            sample.add(v, target.contains(v) ? 1 : 0);
        }
        auto h = checker.check(sample);
        if (!h) throw Error("realizable sample reported inconsistent");
        VertexSet diff = (*h - target) | (target - *h);
        double err = static_cast<double>(diff.size()) / static_cast<double>(n);
        if (err > eps) ++failures;
    }
    double rate = trials ? static_cast<double>(failures) / trials : 0.0;
    std::ostringstream out;
    if (opt.format == "json") {
        json j;
        j["epsilon"] = eps;
        j["delta"] = delta;
        j["trials"] = trials;
        j["sample_size"] = m;
        j["failures"] = failures;
        j["failure_rate"] = rate;
        out << j.dump(2) << "\n";
    } else {
        out << "trials=" << trials << " sample_size=" << m << " failures=" << failures << " rate=" << rate << "\n";
    }
    return emit(opt, out.str());
}

int cmd_stats(const Options& opt) {
    Graph g = load_graph_file(opt.graph_path);
    std::size_t count = list_all_fpt(g).size();
    std::ostringstream out;
    int diam_m = g.vertex_count() <= 16 ? monophonic_diameter_bf(g) : -1;
    if (opt.format == "json") {
        json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        j["omega"] = clique_number(g);
        j["omega_tilde"] = omega_tilde(g);
        j["halfspaces"] = count;
        j["bound"] = count_bound(g).str();
        j["hull_set"] = hull_set_greedy(g).size();
        j["diam_geodesic"] = geodesic_diameter(g);
        if (diam_m >= 0) j["diam_monophonic"] = diam_m;
        out << j.dump(2) << "\n";
    } else {
        out << "n=" << g.vertex_count() << "\n";
        out << "m=" << g.edge_count() << "\n";
        out << "omega=" << clique_number(g) << "\n";
        out << "omega_tilde=" << omega_tilde(g) << "\n";
        out << "halfspaces=" << count << "\n";
        out << "bound=" << count_bound(g).str() << "\n";
        out << "hull_set=" << hull_set_greedy(g).size() << "\n";
        out << "diam_geodesic=" << geodesic_diameter(g) << "\n";
        out << "diam_monophonic=" << (diam_m >= 0 ? std::to_string(diam_m) : "n/a") << "\n";
    }
    return emit(opt, out.str());
}

int cmd_oracle(const Options& opt, const std::string& which, const std::vector<std::string>& args,
               const std::string& set_arg) {
    Graph g = load_graph_file(opt.graph_path);
    std::ostringstream out;
    json j;
    auto need2 = [&] {
        if (args.size() != 2) throw Error("oracle " + which + " needs two vertex arguments");
        return std::pair{vertex_by_name(g, args[0]), vertex_by_name(g, args[1])};
    };
    if (which == "interval") {
        auto [u, v] = need2();
        VertexSet s = interval_bf(g, u, v);
        j["interval"] = set_to_json(g, s);
        out << format_set(g, s) << "\n";
    } else if (which == "shadow") {
        auto [u, v] = need2();
        VertexSet s = shadow_bf(g, u, v);
        j["shadow"] = set_to_json(g, s);
        out << format_set(g, s) << "\n";
    } else if (which == "hull") {
        VertexSet s = hull_bf(g, parse_set(g, set_arg));
        j["hull"] = set_to_json(g, s);
        out << format_set(g, s) << "\n";
    } else if (which == "halfspaces") {
        j["halfspaces"] = json::array();
        for (const VertexSet& h : halfspaces_bf(g)) {
            j["halfspaces"].push_back(set_to_json(g, h));
            out << format_set(g, h) << "\n";
        }
    } else if (which == "vc") {
        int d = vc_dim_bf(g);
        j["vc"] = d;
        out << d << "\n";
    } else if (which == "minhull") {
        VertexSet s = min_hullset_bf(g);
        j["minhull"] = set_to_json(g, s);
        out << format_set(g, s) << "\n";
    } else {
        throw Error("unknown oracle '" + which + "'");
    }
    if (opt.format == "json") {
        std::ostringstream js;
        js << j.dump(2) << "\n";
        return emit(opt, js.str());
    }
    return emit(opt, out.str());
}

int cmd_bench(const Options& opt, const std::string& dir) {
    std::vector<std::pair<std::string, Graph>> corpus;
    if (dir.empty()) {
        corpus.emplace_back("p4", path_graph(4));
        corpus.emplace_back("p5", path_graph(5));
        corpus.emplace_back("c5", cycle_graph(5));
        corpus.emplace_back("k3", complete_graph(3));
        corpus.emplace_back("k4", complete_graph(4));
        corpus.emplace_back("k13", star_graph(4));
        corpus.emplace_back("petersen", petersen_graph());
    } else {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ".el") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) corpus.emplace_back(f.stem().string(), Graph::load_file(f.string()));
    }
    std::ostringstream out;
    out << "graph-id,n,m,omega,halfspaces,enum-ms,check-ms\n";
    std::mt19937_64 rng(opt.seed);
    for (auto& [id, g] : corpus) {
        auto t0 = std::chrono::steady_clock::now();
        std::size_t count = list_all_fpt(g).size();
        auto t1 = std::chrono::steady_clock::now();
        ConsistencyChecker checker(g);
        int n = g.vertex_count();
        for (int trial = 0; trial < 20; ++trial) {
            LabeledSample s;
            int sz = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            for (int i = 0; i < sz; ++i)
                s.add(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)), static_cast<int>(rng() % 2));
            checker.check(s);
        }
        auto t2 = std::chrono::steady_clock::now();
        auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(b - a).count();
        };
        out << id << "," << n << "," << g.edge_count() << "," << clique_number(g) << "," << count << "," << ms(t0, t1)
            << "," << ms(t1, t2) << "\n";
    }
    return emit(opt, out.str());
}

int cmd_gen_corpus(const Options& opt, int n, double p, int count, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::ostringstream listing;
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(i);
        Graph g = erdos_renyi_connected(n, p, seed);
        std::ostringstream name;
        name << "er_n" << n << "_p" << p << "_s" << seed << ".el";
        std::filesystem::path file = std::filesystem::path(out_dir) / name.str();
        std::ofstream out(file);
        if (!out) throw Error("cannot write " + file.string());
        for (auto [u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
        listing << file.string() << "\n";
    }
    return emit(opt, listing.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monophonic halfspaces on graphs: checking, enumeration, learning"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_graph) {
        if (needs_graph) sub->add_option("--graph", opt.graph_path, "edge-list file")->required();
        sub->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--out", opt.out_path, "write output to file");
        return sub;
    };

    auto* check = add_common(app.add_subcommand("check", "find a halfspace consistent with labels"), true);
    check->add_option("--labels", opt.labels_path, "label file")->required();

    auto* enumerate = add_common(app.add_subcommand("enumerate", "list halfspaces (all, or a version space)"), true);
    enumerate->add_option("--labels", opt.labels_path, "label file restricting the version space");

    std::string set_arg;
    auto* hull = add_common(app.add_subcommand("hull", "monophonic convex hull of a vertex set"), true);
    hull->add_option("--set", set_arg, "comma-separated vertex names")->required();

    std::string z_name, v_name;
    auto* shadow = add_common(app.add_subcommand("shadow", "shadow z/v for an edge zv"), true);
    shadow->add_option("z", z_name)->required();
    shadow->add_option("v", v_name)->required();

    auto* convex = add_common(app.add_subcommand("convex", "test monophonic convexity of a vertex set"), true);
    convex->add_option("--set", set_arg, "comma-separated vertex names")->required();

    auto* erm_cmd = add_common(app.add_subcommand("erm", "empirical risk minimizer over all halfspaces"), true);
    erm_cmd->add_option("--labels", opt.labels_path, "label file")->required();

    std::string target_path;
    auto* active = add_common(app.add_subcommand("active", "learn a target halfspace by queries"), true);
    active->add_option("--target", target_path, "target label file")->required();

    std::string algo = "winnow", stream_arg = "random";
    auto* online = add_common(app.add_subcommand("online", "run an online learner over a stream"), true);
    online->add_option("--algo", algo, "winnow|halving|agnostic-winnow|wm");
    online->add_option("--stream", stream_arg, "stream file or random[:seed]");
    online->add_option("--target", target_path, "target labels for random streams");

    double eps = 0.2, delta = 0.2;
    int trials = 100;
    auto* pac = add_common(app.add_subcommand("pac", "PAC-learning experiment"), true);
    pac->add_option("--eps", eps, "accuracy parameter");
    pac->add_option("--delta", delta, "confidence parameter");
    pac->add_option("--trials", trials, "number of trials");

    auto* stats = add_common(app.add_subcommand("stats", "graph and class statistics"), true);
    (void)stats;

    std::string oracle_which;
    std::vector<std::string> oracle_args;
    auto* oracle = add_common(app.add_subcommand("oracle", "brute-force reference computations"), true);
    oracle->add_option("what", oracle_which, "interval|shadow|hull|halfspaces|vc|minhull")->required();
    oracle->add_option("args", oracle_args, "vertex arguments");
    oracle->add_option("--set", set_arg, "vertex set for hull");

    std::string bench_dir;
    auto* bench = add_common(app.add_subcommand("bench", "time enumeration and checking, emit CSV"), false);
    bench->add_option("--dir", bench_dir, "directory of .el graphs (default: built-in fixtures)");

    int gen_n = 8, gen_count = 10;
    double gen_p = 0.4;
    std::string gen_dir = "corpus";
    auto* gen = add_common(app.add_subcommand("gen-corpus", "write random connected graphs"), false);
    gen->add_option("--n", gen_n, "vertices");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--count", gen_count, "number of graphs");
    gen->add_option("--out-dir", gen_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;  // keep --help at 0, fold usage errors into the error code
    }

    try {
        if (check->parsed()) return cmd_check(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (hull->parsed()) return cmd_hull(opt, set_arg);
        if (shadow->parsed()) return cmd_shadow(opt, z_name, v_name);
        if (convex->parsed()) return cmd_convex(opt, set_arg);
        if (erm_cmd->parsed()) return cmd_erm(opt);
        if (active->parsed()) return cmd_active(opt, target_path);
        if (online->parsed()) return cmd_online(opt, algo, stream_arg, target_path);
        if (pac->parsed()) return cmd_pac(opt, eps, delta, trials);
        if (stats->parsed()) return cmd_stats(opt);
        if (oracle->parsed()) return cmd_oracle(opt, oracle_which, oracle_args, set_arg);
        if (bench->parsed()) return cmd_bench(opt, bench_dir);
        if (gen->parsed()) return cmd_gen_corpus(opt, gen_n, gen_p, gen_count, gen_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
