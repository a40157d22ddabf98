// flowpoly: exact computations for the flow polytopes F_{G(lambda,n)}(a).
//
// Every report is deterministic for a given invocation: thread count only
// changes how work is split, never the output. Exit codes: 0 success,
// 1 invalid input, 2 internal cross-check failure (two independent methods
// disagreed, which is always a bug).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flowpoly/closed_forms.hpp"
#include "flowpoly/ct_identity.hpp"
#include "flowpoly/exact.hpp"
#include "flowpoly/face_lattice.hpp"
#include "flowpoly/flow_core.hpp"
#include "flowpoly/json_io.hpp"
#include "flowpoly/kostant.hpp"
#include "flowpoly/lidskii.hpp"
#include "flowpoly/partition_graph.hpp"

namespace {

using json = nlohmann::json;
using namespace flowpoly;

constexpr const char* kSchema = "flowpoly/1";

int env_threads() {
    const char* env = std::getenv("FLOWPOLY_THREADS");
    if (!env) return 1;
    const int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

NetflowVector parse_netflow(const std::string& spec, int needed) {
    if (spec == "ones") return NetflowVector::ones(needed);
    std::vector<Int> entries;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ',')) entries.push_back(int_from_string(item));
    if (static_cast<int>(entries.size()) < needed)
        throw std::invalid_argument("netflow has " + std::to_string(entries.size()) +
                                    " entries, " + std::to_string(needed) + " required");
    if (static_cast<int>(entries.size()) > needed) {
        std::cerr << "warning: netflow has " << entries.size() << " entries, using the first "
                  << needed << "\n";
        entries.resize(needed);
    }
    return NetflowVector(std::move(entries));
}

json netflow_json(const NetflowVector& a) { return int_vector_to_json(a.entries); }

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(int_to_string(x));
    return out;
}

struct CommonArgs {
    std::string partition;
    int n = 0;
    std::string netflow = "ones";
    std::string format = "json";
    int threads = env_threads();
};

void add_format(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
}

void add_threads(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--threads", args.threads, "Worker threads (FLOWPOLY_THREADS as fallback)")
        ->check(CLI::PositiveNumber);
}

void cmd_graph(const CommonArgs& args) {
    const Partition lambda = Partition::parse(args.partition);
    const FlowGraph g = build_graph(lambda, args.n);
    if (args.format == "json") {
        json report = graph_to_json(g);
        report["schema"] = kSchema;
        emit(report);
    } else if (args.format == "csv") {
        for (const auto& [i, j] : g.edges) std::cout << i << "," << j << "\n";
    } else {
        std::cout << "G(" << lambda.to_string() << "; " << args.n << "): " << g.vertex_count
                  << " vertices, " << g.edge_count() << " edges\n";
        for (const auto& [i, j] : g.edges) std::cout << i << " -> " << j << "\n";
    }
}

void cmd_vertices(const CommonArgs& args, bool count_only) {
    const Partition lambda = Partition::parse(args.partition);
    const FlowGraph g = build_graph(lambda, args.n);
    const NetflowVector a = parse_netflow(args.netflow, g.n());
    if (count_only) {
        Int expect = 1;
        for (int p : lambda.parts) expect *= p + 1;
        if (args.format == "json")
            emit(json{{"schema", kSchema}, {"count", int_to_string(expect)}});
        else
            std::cout << int_to_string(expect) << "\n";
        return;
    }
    const std::vector<Flow> vertices = enumerate_vertices(g, a, args.threads);
    if (args.format == "json") {
        json edges = json::array();
        for (const auto& [i, j] : g.edges) edges.push_back({i, j});
        json verts = json::array();
        for (const Flow& f : vertices) {
            json row = json::array();
            for (const Rat& v : f.values) row.push_back(rat_to_string(v));
            verts.push_back(row);
        }
        emit(json{{"schema", kSchema},
                  {"count", std::to_string(vertices.size())},
                  {"edges", edges},
                  {"vertices", verts}});
    } else {
        for (const Flow& f : vertices) {
            std::vector<std::string> vals;
            for (const Rat& v : f.values) vals.push_back(rat_to_string(v));
            std::cout << join(vals, args.format == "csv" ? "," : " ") << "\n";
        }
    }
}

void cmd_volume(const CommonArgs& args) {
    const Partition lambda = Partition::parse(args.partition);
    const FlowGraph g = build_graph(lambda, args.n);
    const NetflowVector a = parse_netflow(args.netflow, g.n());
    const Int lidskii = lidskii_volume(g, a, args.threads);
    const Int closed = limiting_volume(lambda, a);
    const bool agree = lidskii == closed;
    const bool stabilized = args.n >= limiting_index(lambda);
    if (stabilized && !agree)
        throw internal_error("Lidskii volume " + int_to_string(lidskii) +
                             " != closed form " + int_to_string(closed) +
                             " at n >= lambda_1 + l(lambda)");
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"n", args.n},
                  {"netflow", netflow_json(a)},
                  {"lidskii", int_to_string(lidskii)},
                  {"closed_form", int_to_string(closed)},
                  {"agree", agree},
                  {"stabilized", stabilized},
                  {"n_star", limiting_index(lambda)}});
    } else if (args.format == "csv") {
        std::cout << int_to_string(lidskii) << "," << int_to_string(closed) << ","
                  << (agree ? "true" : "false") << "\n";
    } else {
        std::cout << "lidskii     = " << int_to_string(lidskii) << "\n"
                  << "closed_form = " << int_to_string(closed) << "\n"
                  << "agree       = " << (agree ? "true" : "false") << "\n";
    }
}

void cmd_points(const CommonArgs& args) {
    const Partition lambda = Partition::parse(args.partition);
    const FlowGraph g = build_graph(lambda, args.n);
    const NetflowVector a = parse_netflow(args.netflow, g.n());
    const Int via_lidskii = lidskii_points(g, a, args.threads);
    const Int via_kostant = lattice_points(g, a);
    if (via_lidskii != via_kostant)
        throw internal_error("Lidskii point count " + int_to_string(via_lidskii) +
                             " != Kostant count " + int_to_string(via_kostant));
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"n", args.n},
                  {"netflow", netflow_json(a)},
                  {"lidskii", int_to_string(via_lidskii)},
                  {"kostant", int_to_string(via_kostant)},
                  {"agree", true}});
    } else if (args.format == "csv") {
        std::cout << int_to_string(via_lidskii) << "," << int_to_string(via_kostant) << ",true\n";
    } else {
        std::cout << "lattice points = " << int_to_string(via_lidskii) << " (both methods)\n";
    }
}

void cmd_ehrhart(const CommonArgs& args, int t_max) {
    const Partition lambda = Partition::parse(args.partition);
    const FlowGraph g = build_graph(lambda, args.n);
    const NetflowVector a = parse_netflow(args.netflow, g.n());
    const int dim = lambda.size();
    if (t_max < 0) t_max = dim + 1;
    const std::vector<Int> values = ehrhart_values(g, a, t_max);
    const Polynomial p = ehrhart_polynomial(g, a);
    const Rat lead_scaled = p.leading_coefficient() * Rat(factorial(dim));
    if (lead_scaled.get_den() != 1)
        throw internal_error("Ehrhart leading coefficient times dim! is not an integer");
    const Int volume = lead_scaled.get_num();
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"n", args.n},
                  {"netflow", netflow_json(a)},
                  {"values", int_vector_to_json(values)},
                  {"polynomial", polynomial_to_json(p)},
                  {"normalized_volume", int_to_string(volume)}});
    } else if (args.format == "csv") {
        for (std::size_t t = 0; t < values.size(); ++t)
            std::cout << t << "," << int_to_string(values[t]) << "\n";
    } else {
        std::cout << "values (t=0.." << t_max << "): " << join(int_strings(values), " ") << "\n"
                  << "polynomial coefficients: " << join(p.to_strings(), " ") << "\n"
                  << "normalized volume: " << int_to_string(volume) << "\n";
    }
}

void cmd_faces(const CommonArgs& args, int n_opt, bool list_faces) {
    const Partition lambda = Partition::parse(args.partition);
    const int n = n_opt > 0 ? n_opt : limiting_index(lambda);
    check_admissible(lambda, n);
    const NetflowVector a = parse_netflow(args.netflow, n);
    const std::vector<Int> fv = f_vector(lambda);
    const Int total = total_face_count(lambda);
    const bool feasible = total <= (Int(1) << 20);
    bool enumerated = false;
    json face_list = json::array();
    if (feasible) {
        const std::vector<Int> fv_poset = f_vector_from_poset(lambda, n, a);
        if (fv_poset != fv)
            throw internal_error("poset f-vector disagrees with the product formula");
        enumerated = true;
        if (list_faces) {
            for (const FaceInfo& info : enumerate_faces(lambda, n, a))
                face_list.push_back(json{{"boxes", face_mask_hex(lambda, info.boxes)},
                                         {"dim", info.dimension}});
        }
    } else if (list_faces) {
        throw std::invalid_argument("face poset too large to list (over 2^20 faces)");
    }
    if (args.format == "json") {
        json report{{"schema", kSchema},
                    {"partition", lambda.to_string()},
                    {"n", n},
                    {"f_vector", int_vector_to_json(fv)},
                    {"total_faces", int_to_string(total)},
                    {"enumerated", enumerated},
                    {"agree", enumerated ? json(true) : json(nullptr)}};
        if (list_faces) report["faces"] = face_list;
        emit(report);
    } else if (args.format == "csv") {
        std::cout << join(int_strings(fv), ",") << "\n";
    } else {
        std::cout << "f-vector: " << join(int_strings(fv), " ") << "\n"
                  << "total faces: " << int_to_string(total) << "\n";
        if (enumerated) std::cout << "poset enumeration agrees\n";
    }
}

void cmd_hpoly(const CommonArgs& args) {
    const Partition lambda = Partition::parse(args.partition);
    const Polynomial h = h_polynomial(lambda);
    Int vertex_count = 1;
    for (int p : lambda.parts) vertex_count *= p + 1;
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"coefficients", polynomial_to_json(h)},
                  {"degree", h.degree()},
                  {"vertex_count", int_to_string(vertex_count)}});
    } else if (args.format == "csv") {
        std::cout << join(h.to_strings(), ",") << "\n";
    } else {
        std::cout << "h-polynomial coefficients: " << join(h.to_strings(), " ") << "\n";
    }
}

void cmd_ct(const CommonArgs& args, int truncation) {
    const Partition lambda = Partition::parse(args.partition);
    check_admissible(lambda, args.n);
    const NetflowVector a = parse_netflow(args.netflow, args.n);
    const Int series = ct_lhs_series(lambda, args.n, a, truncation);
    const Int lidskii = ct_lhs_lidskii(lambda, args.n, a);
    const Int closed = limiting_volume(lambda, a);
    if (series != lidskii)
        throw internal_error("series CT " + int_to_string(series) + " != Lidskii sum " +
                             int_to_string(lidskii));
    const bool stabilized = args.n >= limiting_index(lambda);
    const bool agree = series == closed;
    if (stabilized && !agree)
        throw internal_error("constant term " + int_to_string(series) +
                             " != limiting volume " + int_to_string(closed));
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"n", args.n},
                  {"netflow", netflow_json(a)},
                  {"series", int_to_string(series)},
                  {"lidskii", int_to_string(lidskii)},
                  {"closed_form", int_to_string(closed)},
                  {"agree", agree},
                  {"stabilized", stabilized}});
    } else if (args.format == "csv") {
        std::cout << int_to_string(series) << "," << int_to_string(lidskii) << ","
                  << int_to_string(closed) << "," << (agree ? "true" : "false") << "\n";
    } else {
        std::cout << "series      = " << int_to_string(series) << "\n"
                  << "lidskii     = " << int_to_string(lidskii) << "\n"
                  << "closed_form = " << int_to_string(closed) << "\n"
                  << "agree       = " << (agree ? "true" : "false") << "\n";
    }
}

void cmd_tesler(const CommonArgs& args, int n, bool with_lidskii) {
    const Int volume = tesler_volume(n);
    const Int catalan_form = tesler_volume_catalan_form(n);
    if (volume != catalan_form)
        throw internal_error("Tesler volume forms disagree: " + int_to_string(volume) + " vs " +
                             int_to_string(catalan_form));
    json lidskii_field = nullptr;
    std::string lidskii_plain;
    if (with_lidskii) {
        const FlowGraph k = n >= 2 ? build_graph(Partition::staircase(n - 1), n)
                                   : complete_graph(2);
        const Int via_lidskii = lidskii_volume(k, NetflowVector::ones(n), args.threads);
        if (via_lidskii != volume)
            throw internal_error("Lidskii volume of K_{n+1} " + int_to_string(via_lidskii) +
                                 " != Tesler product formula " + int_to_string(volume));
        lidskii_field = int_to_string(via_lidskii);
        lidskii_plain = int_to_string(via_lidskii);
    }
    if (args.format == "json") {
        emit(json{{"schema", kSchema},
                  {"n", n},
                  {"volume", int_to_string(volume)},
                  {"catalan_form", int_to_string(catalan_form)},
                  {"agree", true},
                  {"lidskii", lidskii_field}});
    } else if (args.format == "csv") {
        std::cout << int_to_string(volume) << "," << int_to_string(catalan_form) << ",true\n";
    } else {
        std::cout << "vol F_{K_" << n + 1 << "}(1) = " << int_to_string(volume)
                  << " (both closed forms agree)\n";
        if (with_lidskii) std::cout << "lidskii = " << lidskii_plain << "\n";
    }
}

void cmd_table(const CommonArgs& args, int from, int to) {
    const Partition lambda = Partition::parse(args.partition);
    if (from > to) throw std::invalid_argument("--from must not exceed --to");
    for (int n = from; n <= to; ++n) check_admissible(lambda, n);
    const int n_star = limiting_index(lambda);
    std::vector<std::pair<int, Int>> rows;
    for (int n = from; n <= to; ++n) {
        const FlowGraph g = build_graph(lambda, n);
        NetflowVector a = args.netflow == "ones" ? NetflowVector::ones(n)
                                                 : parse_netflow(args.netflow, n);
        rows.emplace_back(n, lidskii_volume(g, a, args.threads));
    }
    if (args.format == "json") {
        json jrows = json::array();
        for (const auto& [n, vol] : rows)
            jrows.push_back(json{{"n", n}, {"volume", int_to_string(vol)}});
        emit(json{{"schema", kSchema},
                  {"partition", lambda.to_string()},
                  {"rows", jrows},
                  {"n_star", n_star}});
    } else if (args.format == "csv") {
        for (const auto& [n, vol] : rows) std::cout << n << "," << int_to_string(vol) << "\n";
    } else {
        std::vector<std::string> header{"n  "}, body{"vol"};
        for (const auto& [n, vol] : rows) {
            std::string ns = std::to_string(n), vs = int_to_string(vol);
            const std::size_t w = std::max(ns.size(), vs.size());
            ns.resize(w, ' ');
            vs.resize(w, ' ');
            header.push_back(ns);
            body.push_back(vs);
        }
        std::cout << join(header, "  ") << "\n" << join(body, "  ") << "\n";
        std::cout << "volume stabilizes at n* = " << n_star << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact flow polytope computations for partition graphs G(lambda, n)"};
    app.require_subcommand(1);

    CommonArgs args;
    bool count_only = false, list_faces = false, with_lidskii = false;
    int t_max = -1, truncation = 0, faces_n = 0, tesler_n = 0, from = 0, to = 0;

    auto add_partition = [&](CLI::App* cmd) {
        cmd->add_option("--partition", args.partition,
                        "Comma-separated decreasing positive parts, e.g. 4,3,2,1")
            ->required();
    };
    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", args.n, "Number of non-sink vertices")->required();
    };
    auto add_netflow = [&](CLI::App* cmd) {
        cmd->add_option("--netflow", args.netflow,
                        "'ones' or comma-separated positive integers")
            ->capture_default_str();
    };

    CLI::App* graph = app.add_subcommand("graph", "Print G(lambda, n)");
    add_partition(graph);
    add_n(graph);
    add_format(graph, args);

    CLI::App* vertices = app.add_subcommand("vertices", "Enumerate polytope vertices");
    add_partition(vertices);
    add_n(vertices);
    add_netflow(vertices);
    add_format(vertices, args);
    add_threads(vertices, args);
    vertices->add_flag("--count-only", count_only, "Print only the vertex count");

    CLI::App* volume = app.add_subcommand("volume", "Lidskii and closed-form volumes");
    add_partition(volume);
    add_n(volume);
    add_netflow(volume);
    add_format(volume, args);
    add_threads(volume, args);

    CLI::App* points = app.add_subcommand("points", "Lattice points by both formulas");
    add_partition(points);
    add_n(points);
    add_netflow(points);
    add_format(points, args);
    add_threads(points, args);

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart values and polynomial");
    add_partition(ehrhart);
    add_n(ehrhart);
    add_netflow(ehrhart);
    add_format(ehrhart, args);
    ehrhart->add_option("--tmax", t_max, "Largest dilation to list (default |lambda|+1)");

    CLI::App* faces = app.add_subcommand("faces", "f-vector and face poset");
    add_partition(faces);
    faces->add_option("--n", faces_n, "Number of non-sink vertices (default lambda_1+l(lambda))");
    add_netflow(faces);
    add_format(faces, args);
    faces->add_flag("--list", list_faces, "List faces as box-bitmask hex strings");

    CLI::App* hpoly = app.add_subcommand("hpoly", "h-polynomial of the combinatorial type");
    add_partition(hpoly);
    add_format(hpoly, args);

    CLI::App* ct = app.add_subcommand("ct", "Constant-term identity check");
    add_partition(ct);
    add_n(ct);
    add_netflow(ct);
    add_format(ct, args);
    ct->add_option("--truncation", truncation, "Series truncation bound override");

    CLI::App* tesler = app.add_subcommand("tesler", "Tesler polytope volume closed forms");
    tesler->add_option("--n", tesler_n, "Tesler parameter n (polytope of K_{n+1})")->required();
    add_format(tesler, args);
    add_threads(tesler, args);
    tesler->add_flag("--with-lidskii", with_lidskii, "Also cross-check by the Lidskii formula");

    CLI::App* table = app.add_subcommand("table", "Volume table over a range of n");
    add_partition(table);
    table->add_option("--from", from, "First n")->required();
    table->add_option("--to", to, "Last n")->required();
    add_netflow(table);
    add_format(table, args);
    add_threads(table, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (graph->parsed()) cmd_graph(args);
        if (vertices->parsed()) cmd_vertices(args, count_only);
        if (volume->parsed()) cmd_volume(args);
        if (points->parsed()) cmd_points(args);
        if (ehrhart->parsed()) cmd_ehrhart(args, t_max);
        if (faces->parsed()) cmd_faces(args, faces_n, list_faces);
        if (hpoly->parsed()) cmd_hpoly(args);
        if (ct->parsed()) cmd_ct(args, truncation);
        if (tesler->parsed()) cmd_tesler(args, tesler_n, with_lidskii);
        if (table->parsed()) cmd_table(args, from, to);
    } catch (const internal_error& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
