// Command-line surface: generate graphs, construct orthogonal colourings,
// verify colouring files, run the exact oracle, and tabulate the cycle
// construction against the oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 no applicable construction, 4 internal verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthocolour/circulant_colourings.hpp"
#include "orthocolour/colouring.hpp"
#include "orthocolour/cycle_colourings.hpp"
#include "orthocolour/errors.hpp"
#include "orthocolour/graph.hpp"
#include "orthocolour/numeric.hpp"
#include "orthocolour/oracle.hpp"
#include "orthocolour/paley.hpp"
#include "orthocolour/products.hpp"
#include "orthocolour/serialize.hpp"

namespace {

using nlohmann::json;
using namespace orthocolour;

std::string read_input(const std::string& path) {
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

Graph load_graph(const std::string& path) {
    return graph_from_json(json::parse(read_input(path)));
}

std::set<int> parse_generators(const std::string& text) {
    std::set<int> generators;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int value = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("invalid generator list entry: " + item);
        generators.insert(value);
    }
    return generators;
}

// Accepts either a single colouring document or an orthogonal-set document,
// without enforcing orthogonality (verify reports that as exit 1, not as a
// parse error).  Colour ranges are still structural and checked here.
std::vector<Colouring> colourings_for_verify(const json& j) {
    std::vector<Colouring> result;
    if (j.contains("colourings")) {
        if (!j.contains("k") || !j["k"].is_number_integer())
            throw std::invalid_argument("colouring document: missing integer field \"k\"");
        if (!j.contains("colour_count") || !j["colour_count"].is_number_integer())
            throw std::invalid_argument(
                "colouring document: missing integer field \"colour_count\"");
        const json& arr = j["colourings"];
        if (!arr.is_array() || static_cast<int>(arr.size()) != j["k"].get<int>())
            throw std::invalid_argument(
                "colouring document: \"k\" does not match the colourings array");
        int colour_count = j["colour_count"].get<int>();
        for (const json& entry : arr) {
            Colouring c{colour_count, entry.get<std::vector<int>>()};
            validate_colouring(c);
            result.push_back(std::move(c));
        }
    } else {
        result.push_back(colouring_from_json(j));
    }
    return result;
}

void emit_graph(const Graph& g, const std::string& label, const std::string& out,
                bool dot) {
    write_output(out, dot ? graph_to_dot(g) : dump_json(graph_to_json(g)));
    std::cerr << label << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
}

void emit_set(const OrthogonalSet& s, const std::string& out) {
    write_output(out, dump_json(orthogonal_set_to_json(s)));
    std::cerr << s.k() << " mutually orthogonal " << s.colour_count()
              << "-colourings of " << s.vertex_count() << " vertices\n";
}

OrthogonalSet take_first(const OrthogonalSet& s, int k) {
    if (k >= s.k()) return s;
    std::vector<Colouring> kept(s.colourings().begin(), s.colourings().begin() + k);
    return OrthogonalSet(std::move(kept));
}

OrthogonalSet colour_cycle(int n, int k) {
    if (k < 1) throw std::invalid_argument("--k must be at least 1");
    if (k <= 2) {
        auto [a, b] = orthogonal_cycle_pair(n);
        return OrthogonalSet({std::move(a), std::move(b)});
    }
    OrthogonalSet family = orthogonal_cycle_family(n);
    if (family.k() < k)
        throw NoApplicableConstruction(
            "the cycle family for n=" + std::to_string(n) + " provides only " +
            std::to_string(family.k()) + " mutually orthogonal colourings, fewer than " +
            std::to_string(k));
    return take_first(family, k);
}

OrthogonalSet colour_circulant(int p, const std::string& generator_list, int k) {
    if (k != 2)
        throw NoApplicableConstruction(
            "circulant constructions produce orthogonal pairs only (--k 2)");
    if (p < 3 || !is_prime(p))
        throw NoApplicableConstruction(
            "circulant construction needs an odd prime p (vertex count p^2); p=" +
            std::to_string(p) + " is not one");
    CirculantSpec spec{p * p, parse_generators(generator_list)};
    auto [a, b] = colour_circulant_prime_square(p, spec);
    return OrthogonalSet({std::move(a), std::move(b)});
}

OrthogonalSet colour_hamming(int d, int q, int k) {
    if (k != 2)
        throw NoApplicableConstruction(
            "Hamming constructions produce orthogonal pairs only (--k 2)");
    ColouringPair pair = [&] {
        if (q == 2) {
            if (d >= 4 && d % 4 == 0) return four_cube_power_pair(d / 4);
            throw NoApplicableConstruction(
                "binary Hamming graphs are constructed as powers of the 4-cube; "
                "the dimension must be a positive multiple of 4, got d=" +
                std::to_string(d));
        }
        if (d >= 1 && d % 2 == 1)
            throw NoApplicableConstruction(
                "the product construction covers even Hamming dimensions only, got d=" +
                std::to_string(d));
        return hamming_even_pair(d, q);
    }();
    return OrthogonalSet({std::move(pair.first), std::move(pair.second)});
}

OrthogonalSet colour_paley(int p, int r, int k, bool on_complement) {
    PaleySpec spec = make_paley_spec(p, r);
    OrthogonalSet s = paley_orthogonal_set(spec);
    if (!on_complement) s = transfer_to_paley_graph(spec, s);
    if (k > 0) {
        if (s.k() < k)
            throw NoApplicableConstruction(
                "the Paley construction for p=" + std::to_string(p) + ", r=" +
                std::to_string(r) + " provides only " + std::to_string(s.k()) +
                " mutually orthogonal colourings, fewer than " + std::to_string(k));
        s = take_first(s, k);
    }
    return s;
}

int run_verify(const std::string& graph_path, const std::string& colouring_path) {
    Graph g = load_graph(graph_path);
    std::vector<Colouring> colourings =
        colourings_for_verify(json::parse(read_input(colouring_path)));
    for (const Colouring& c : colourings)
        if (c.vertex_count() != g.vertex_count())
            throw std::invalid_argument(
                "colouring covers " + std::to_string(c.vertex_count()) +
                " vertices but the graph has " + std::to_string(g.vertex_count()));
    if (auto violation = find_violation(g, colourings)) {
        std::cout << violation->message << "\n";
        return 1;
    }
    std::cerr << "ok: " << colourings.size() << " colouring(s), "
              << colourings.front().colour_count << " colours, "
              << g.vertex_count() << " vertices\n";
    return 0;
}

int run_oracle(const std::string& graph_path, int k, std::optional<int> t,
               std::int64_t budget, bool no_symmetry, const std::string& out) {
    Graph g = load_graph(graph_path);
    SearchConfig cfg;
    cfg.node_budget = budget;
    cfg.symmetry_breaking = !no_symmetry;
    if (t) {
        SearchResult r = search_orthogonal(g, k, *t, cfg);
        json doc{{"k", k}, {"t", *t}, {"nodes", r.nodes}};
        switch (r.status) {
            case SearchStatus::Witness:
                doc["status"] = "witness";
                doc["witness"] = orthogonal_set_to_json(*r.witness);
                break;
            case SearchStatus::Infeasible:
                doc["status"] = "infeasible";
                break;
            case SearchStatus::BudgetExceeded:
                doc["status"] = "budget_exceeded";
                break;
        }
        write_output(out, dump_json(doc));
        std::cerr << "status=" << doc["status"].get<std::string>()
                  << " nodes=" << r.nodes << "\n";
        return 0;
    }
    try {
        int exact = exact_orthochromatic(g, k, cfg);
        write_output(out, dump_json(json{{"exact", exact}, {"k", k}}));
        std::cerr << "exact=" << exact << " k=" << k << "\n";
    } catch (const BudgetExceeded& e) {
        write_output(out, dump_json(json{{"k", k},
                                         {"last_decided_t", e.last_decided_t},
                                         {"status", "budget_exceeded"}}));
        std::cerr << e.what() << "\n";
    }
    return 0;
}

int run_table(const std::string& family, int n_max, int oracle_max, bool no_oracle,
              std::int64_t budget, const std::string& out) {
    if (family != "cycle")
        throw std::invalid_argument("table supports --family cycle only");
    if (n_max < 3) throw std::invalid_argument("--n-max must be at least 3");
    std::string csv;
    for (int n = 3; n <= n_max; ++n) {
        int constructed = orthogonal_cycle_pair(n).first.colour_count;
        std::string oracle_col, agree_col;
        if (!no_oracle && n <= oracle_max) {
            try {
                SearchConfig cfg;
                cfg.node_budget = budget;
                int exact = exact_orthochromatic(cycle(n), 2, cfg);
                oracle_col = std::to_string(exact);
                agree_col = exact == constructed ? "true" : "false";
            } catch (const BudgetExceeded&) {
                // Blank oracle cell: the row stays, the comparison is skipped.
            }
        }
        csv += std::to_string(n) + "," + std::to_string(constructed) + "," +
               oracle_col + "," + agree_col + "\n";
    }
    write_output(out, csv);
    std::cerr << (n_max - 2) << " rows\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Orthogonal colourings of Cayley graphs: generators, constructions, "
        "verifier, and exact oracle"};
    app.require_subcommand(1);

    std::string out_path = "-";
    bool dot = false;

    // ----- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a graph as JSON (or DOT)");
    gen->require_subcommand(1);

    int gen_cycle_n = 0;
    auto* gen_cycle = gen->add_subcommand("cycle", "Cycle C_n");
    gen_cycle->add_option("--n", gen_cycle_n, "Number of vertices (>= 3)")->required();

    int gen_circ_n = 0;
    std::string gen_circ_s;
    auto* gen_circ = gen->add_subcommand("circulant", "Circulant graph on Z_n");
    gen_circ->add_option("--n", gen_circ_n, "Number of vertices")->required();
    gen_circ->add_option("--s", gen_circ_s,
                         "Comma-separated generators in 1..n-1, closed under s -> n-s");

    int gen_complete_q = 0;
    auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_q");
    gen_complete->add_option("--q", gen_complete_q, "Number of vertices")->required();

    int gen_ham_d = 0, gen_ham_q = 0;
    auto* gen_ham = gen->add_subcommand("hamming", "Hamming graph H(d,q)");
    gen_ham->add_option("--d", gen_ham_d, "Dimension (>= 1)")->required();
    gen_ham->add_option("--q", gen_ham_q, "Alphabet size (>= 2)")->required();

    int gen_pal_p = 0, gen_pal_r = 0;
    auto* gen_pal = gen->add_subcommand("paley", "Paley graph on GF(p^{2r})");
    gen_pal->add_option("--p", gen_pal_p, "Odd prime")->required();
    gen_pal->add_option("--r", gen_pal_r, "Half the extension degree (>= 1)")->required();

    std::string prod_left, prod_right;
    auto* gen_prod = gen->add_subcommand("product", "Cartesian product of two graphs");
    gen_prod->add_option("--left", prod_left, "Graph JSON file (or - for stdin)")
        ->required();
    gen_prod->add_option("--right", prod_right, "Graph JSON file")->required();

    std::string comp_graph;
    auto* gen_comp = gen->add_subcommand("complement", "Complement of a graph");
    gen_comp->add_option("--graph", comp_graph, "Graph JSON file (or - for stdin)")
        ->required();

    for (auto* sub : gen->get_subcommands({})) {
        sub->add_option("--out", out_path, "Output file (default: stdout)");
        sub->add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON");
    }

    // ----- colour ---------------------------------------------------------
    auto* colour =
        app.add_subcommand("colour", "Construct a verified orthogonal colouring set");
    colour->require_subcommand(1);

    int col_cycle_n = 0, col_cycle_k = 2;
    auto* col_cycle = colour->add_subcommand("cycle", "Orthogonal colourings of C_n");
    col_cycle->add_option("--n", col_cycle_n, "Number of vertices (>= 3)")->required();
    col_cycle->add_option(
        "--k", col_cycle_k,
        "Number of mutually orthogonal colourings (default 2; more uses the prime "
        "family with ceil(sqrt(n)) prime)");

    int col_circ_p = 0, col_circ_k = 2;
    std::string col_circ_s;
    auto* col_circ = colour->add_subcommand(
        "circulant", "Orthogonal pair on a circulant with p^2 vertices");
    col_circ->add_option("--p", col_circ_p, "Odd prime; the graph lives on Z_{p^2}")
        ->required();
    col_circ->add_option("--s", col_circ_s,
                         "Comma-separated generators in 1..p^2-1, closed under "
                         "s -> p^2-s");
    col_circ->add_option("--k", col_circ_k, "Must be 2 (pairs only)");

    int col_ham_d = 0, col_ham_q = 0, col_ham_k = 2;
    auto* col_ham = colour->add_subcommand("hamming", "Orthogonal pair on H(d,q)");
    col_ham->add_option("--d", col_ham_d, "Even dimension (or a multiple of 4 for q=2)")
        ->required();
    col_ham->add_option("--q", col_ham_q, "Alphabet size")->required();
    col_ham->add_option("--k", col_ham_k, "Must be 2 (pairs only)");

    int col_pal_p = 0, col_pal_r = 0, col_pal_k = 0;
    bool col_pal_complement = false;
    auto* col_pal = colour->add_subcommand(
        "paley", "Coset colourings of the Paley graph on GF(p^{2r})");
    col_pal->add_option("--p", col_pal_p, "Odd prime")->required();
    col_pal->add_option("--r", col_pal_r, "Half the extension degree (>= 1)")
        ->required();
    col_pal->add_option("--k", col_pal_k,
                        "Number of colourings to emit (default: all (p^r+1)/2)");
    col_pal->add_flag("--on-complement", col_pal_complement,
                      "Emit the set on the complement instead of transferring to "
                      "the Paley graph");

    for (const char* name : {"complete", "product", "complement"}) {
        colour->add_subcommand(
            name, "No construction defined; listed for parity with gen");
    }

    for (auto* sub : colour->get_subcommands({}))
        sub->add_option("--out", out_path, "Output file (default: stdout)");

    // ----- verify ---------------------------------------------------------
    std::string verify_graph, verify_colouring;
    auto* verify = app.add_subcommand(
        "verify", "Check a colouring file against a graph (exit 0 iff it passes)");
    verify->add_option("--graph", verify_graph, "Graph JSON file (or - for stdin)")
        ->required();
    verify
        ->add_option("--colouring", verify_colouring,
                     "Colouring or orthogonal-set JSON file")
        ->required();

    // ----- oracle ----------------------------------------------------------
    std::string oracle_graph;
    int oracle_k = 0, oracle_t = 0;
    std::int64_t oracle_budget = SearchConfig{}.node_budget;
    bool oracle_no_sym = false;
    auto* oracle = app.add_subcommand(
        "oracle", "Exact backtracking search for k orthogonal t-colourings");
    oracle->add_option("--graph", oracle_graph, "Graph JSON file (or - for stdin)")
        ->required();
    oracle->add_option("--k", oracle_k, "Number of mutually orthogonal colourings")
        ->required();
    auto* oracle_t_opt = oracle->add_option(
        "--t", oracle_t, "Colour count to test; omit to compute the exact minimum");
    oracle->add_option("--budget", oracle_budget,
                       "Node budget per feasibility question");
    oracle->add_flag("--no-symmetry", oracle_no_sym, "Disable symmetry breaking");
    oracle->add_option("--out", out_path, "Output file (default: stdout)");

    // ----- table ------------------------------------------------------------
    std::string table_family = "cycle";
    int table_n_max = 0, table_oracle_max = 12;
    bool table_no_oracle = false;
    std::int64_t table_budget = SearchConfig{}.node_budget;
    auto* table = app.add_subcommand(
        "table", "CSV rows n,constructed,oracle,agree for a family of graphs");
    table->add_option("--family", table_family, "Graph family (cycle)");
    table->add_option("--n-max", table_n_max, "Largest n (rows run 3..n-max)")
        ->required();
    table->add_option("--oracle-max", table_oracle_max,
                      "Largest n given an oracle column (default 12)");
    table->add_flag("--no-oracle", table_no_oracle, "Leave the oracle column blank");
    table->add_option("--budget", table_budget, "Oracle node budget per row");
    table->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_cycle->parsed())
                emit_graph(cycle(gen_cycle_n), "cycle", out_path, dot);
            else if (gen_circ->parsed())
                emit_graph(circulant(gen_circ_n, parse_generators(gen_circ_s)),
                           "circulant", out_path, dot);
            else if (gen_complete->parsed())
                emit_graph(complete(gen_complete_q), "complete", out_path, dot);
            else if (gen_ham->parsed())
                emit_graph(hamming(gen_ham_d, gen_ham_q), "hamming", out_path, dot);
            else if (gen_pal->parsed())
                emit_graph(paley_graph(make_paley_spec(gen_pal_p, gen_pal_r)), "paley",
                           out_path, dot);
            else if (gen_prod->parsed())
                emit_graph(cartesian_product(load_graph(prod_left),
                                             load_graph(prod_right)),
                           "product", out_path, dot);
            else
                emit_graph(complement(load_graph(comp_graph)), "complement", out_path,
                           dot);
            return 0;
        }
        if (colour->parsed()) {
            if (col_cycle->parsed())
                emit_set(colour_cycle(col_cycle_n, col_cycle_k), out_path);
            else if (col_circ->parsed())
                emit_set(colour_circulant(col_circ_p, col_circ_s, col_circ_k),
                         out_path);
            else if (col_ham->parsed())
                emit_set(colour_hamming(col_ham_d, col_ham_q, col_ham_k), out_path);
            else if (col_pal->parsed())
                emit_set(colour_paley(col_pal_p, col_pal_r, col_pal_k,
                                      col_pal_complement),
                         out_path);
            else
                throw NoApplicableConstruction(
                    "no construction is defined for the " +
                    colour->get_subcommands().front()->get_name() +
                    " family; colour supports cycle, circulant, hamming, paley");
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_graph, verify_colouring);
        if (oracle->parsed())
            return run_oracle(oracle_graph, oracle_k,
                              oracle_t_opt->count() > 0
                                  ? std::optional<int>(oracle_t)
                                  : std::nullopt,
                              oracle_budget, oracle_no_sym, out_path);
        if (table->parsed())
            return run_table(table_family, table_n_max, table_oracle_max,
                             table_no_oracle, table_budget, out_path);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const NoApplicableConstruction& e) {
        std::cerr << "no applicable construction: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 4;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
