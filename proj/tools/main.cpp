// Command-line front end: check tables for the Abelian and Hamiltonian
// properties, decompose them, generate example tables, and run censuses
// over small table classes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magma/analysis.hpp"
#include "magma/cayley_table.hpp"
#include "magma/constructors.hpp"
#include "magma/json_io.hpp"
#include "magma/oracles.hpp"
#include "magma/quasigroup.hpp"
#include "magma/semigroup.hpp"

namespace {

using magma::CayleyTable;
using nlohmann::json;

/// Reads a table from a file path or stdin ("-"). A leading '{' selects
/// the JSON form, anything else the plain-text form.
CayleyTable read_table(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return magma::table_from_json(json::parse(text));
    return magma::parse_table(text);
}

int positive_int(const std::string& s, const char* what) {
    int v = 0;
    try {
        std::size_t used = 0;
        v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(what) + ": expected an integer, got '" + s + "'");
    }
    if (v < 1)
        throw std::runtime_error(std::string(what) + ": must be at least 1");
    return v;
}

CayleyTable generate_table(const std::string& kind,
                           const std::vector<std::string>& args,
                           std::uint64_t seed) {
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw std::runtime_error("generate " + kind + ": expected " +
                                     std::to_string(n) + " argument(s), got " +
                                     std::to_string(args.size()));
    };
    if (kind == "fixture") {
        want(1);
        return magma::fixture(args[0]);
    }
    if (kind == "zn") {
        if (args.empty())
            throw std::runtime_error("generate zn: expected at least one order");
        std::vector<int> orders;
        for (const std::string& a : args)
            orders.push_back(positive_int(a, "zn"));
        return magma::abelian_product(orders);
    }
    if (kind == "leftzero") {
        want(1);
        return magma::leftzero(positive_int(args[0], "leftzero"));
    }
    if (kind == "rightzero") {
        want(1);
        return magma::rightzero(positive_int(args[0], "rightzero"));
    }
    if (kind == "rectband") {
        want(3);
        return magma::rect_band_product(magma::zn(positive_int(args[0], "rectband")),
                                        positive_int(args[1], "rectband"),
                                        positive_int(args[2], "rectband"));
    }
    if (kind == "linearq") {
        want(4);
        const int n = positive_int(args[0], "linearq");
        const int a = positive_int(args[1], "linearq") % n;
        const int b = positive_int(args[2], "linearq") % n;
        const int c = std::stoi(args[3]) % n;
        std::vector<magma::Elem> phi(n), psi(n);
        for (int x = 0; x < n; ++x) {
            phi[x] = static_cast<magma::Elem>((static_cast<long long>(a) * x) % n);
            psi[x] = static_cast<magma::Elem>((static_cast<long long>(b) * x) % n);
        }
        return magma::linear_quasigroup(magma::zn(n), phi, psi,
                                        static_cast<magma::Elem>((c + n) % n));
    }
    if (kind == "inflation") {
        want(2);
        const int n = positive_int(args[0], "inflation");
        const int extra = positive_int(args[1], "inflation");
        return magma::inflate(magma::zn(n), {{0, extra}});
    }
    if (kind == "random-semigroup") {
        want(1);
        return magma::random_semigroup(positive_int(args[0], "random-semigroup"), seed);
    }
    if (kind == "random-latin") {
        want(1);
        return magma::random_latin_square(positive_int(args[0], "random-latin"), seed);
    }
    std::string names;
    for (const std::string& f : magma::fixture_names())
        names += " " + f;
    throw std::runtime_error(
        "unknown generator '" + kind +
        "' (try: fixture|zn|leftzero|rightzero|rectband|linearq|inflation|"
        "random-semigroup|random-latin; fixtures:" + names + ")");
}

/// Random groupoid of order n with 0 as a two-sided identity.
CayleyTable random_identity_groupoid(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<magma::Elem> entries(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            entries[static_cast<std::size_t>(x) * n + y] =
                (x == 0) ? y : (y == 0) ? x : pick(rng);
    return CayleyTable(n, std::move(entries));
}

struct CensusTally {
    long total = 0;
    long abelian_fast = 0;          // class-specific structural decider
    long abelian_oracle = 0;
    long hamiltonian_theorem = 0;   // settled positively by the class theorem
    long hamiltonian_oracle = 0;
    long hamiltonian_undetermined = 0;
    long disagreements = 0;
};

void census_step(const CayleyTable& t, const std::string& cls,
                 CensusTally& tally) {
    ++tally.total;
    const bool fast_abelian =
        cls == "semigroup"    ? magma::semigroup_abelian_fast(t).abelian
        : cls == "quasigroup" ? magma::quasigroup_abelian_fast(t).abelian
                              : magma::identity_groupoid_abelian_fast(t).abelian;
    const magma::Truth oracle_abelian = magma::abelian_oracle(t);
    const magma::HamiltonianResult ham = magma::hamiltonian_oracle(t);
    if (fast_abelian)
        ++tally.abelian_fast;
    if (oracle_abelian == magma::Truth::yes)
        ++tally.abelian_oracle;
    // Abelian members of each class are Hamiltonian by the class theorem.
    if (fast_abelian)
        ++tally.hamiltonian_theorem;
    if (ham.verdict == magma::Truth::yes)
        ++tally.hamiltonian_oracle;
    if (ham.verdict == magma::Truth::undetermined)
        ++tally.hamiltonian_undetermined;

    bool disagree = false;
    if (oracle_abelian != magma::Truth::undetermined &&
        fast_abelian != (oracle_abelian == magma::Truth::yes))
        disagree = true;
    if (cls == "semigroup" &&
        oracle_abelian != magma::Truth::undetermined &&
        magma::abelian_semigroup_criterion(t) !=
            (oracle_abelian == magma::Truth::yes))
        disagree = true;
    if (fast_abelian && ham.verdict == magma::Truth::no)
        disagree = true;
    if (disagree)
        ++tally.disagreements;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finite binary operations: Abelian and Hamiltonian property checks,\n"
        "structural decompositions, table generators, and small-order censuses."};
    app.require_subcommand(1);

    // --- check -------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "Decide the Abelian and Hamiltonian properties of a table");
    std::string check_input = "-";
    bool check_fast_only = false, check_oracle_only = false, check_json = false;
    std::optional<int> check_base;
    int check_cap_order = magma::SubuniverseCaps{}.max_order;
    long check_cap_sets = magma::SubuniverseCaps{}.max_sets;
    std::uint64_t check_seed = 0;
    check->add_option("input", check_input,
                      "table file (plain text or JSON), '-' for stdin");
    check->add_flag("--fast-only", check_fast_only,
                    "structural routes only, skip the oracles");
    check->add_flag("--oracle-only", check_oracle_only,
                    "oracles only, skip the structural routes");
    check->add_option("--base", check_base,
                      "base point for the quasigroup route");
    check->add_option("--cap-order", check_cap_order,
                      "largest order whose subuniverses are enumerated");
    check->add_option("--cap-subuniverses", check_cap_sets,
                      "largest number of subuniverses enumerated");
    check->add_option("--seed", check_seed, "seed for the witness search");
    check->add_flag("--json", check_json, "emit the full JSON report");

    // --- decompose -----------------------------------------------------------
    auto* decompose = app.add_subcommand(
        "decompose", "Show the structural decomposition of a table");
    std::string dec_input = "-", dec_as = "auto";
    std::optional<int> dec_base;
    bool dec_json = false;
    decompose->add_option("input", dec_input,
                          "table file (plain text or JSON), '-' for stdin");
    decompose->add_option("--as", dec_as, "quasigroup, semigroup, or auto")
        ->check(CLI::IsMember({"quasigroup", "semigroup", "auto"}));
    decompose->add_option("--base", dec_base,
                          "base point for the derived loop");
    decompose->add_flag("--json", dec_json, "emit the JSON payload");

    // --- generate ------------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "Emit an example table");
    std::string gen_kind;
    std::vector<std::string> gen_args;
    std::uint64_t gen_seed = 0;
    bool gen_json = false;
    generate->add_option("kind", gen_kind,
                         "fixture|zn|leftzero|rightzero|rectband|linearq|"
                         "inflation|random-semigroup|random-latin")
        ->required();
    generate->add_option("args", gen_args, "generator arguments");
    generate->add_option("--seed", gen_seed, "seed for the random generators");
    generate->add_flag("--json", gen_json, "emit JSON instead of plain text");

    // --- census ----------------------------------------------------------
    auto* census = app.add_subcommand(
        "census", "Analyze every table (or a sample) of a small class");
    int cen_order = 0, cen_sample = 0;
    std::string cen_class;
    std::uint64_t cen_seed = 0;
    bool cen_json = false, cen_csv = false;
    census->add_option("--order", cen_order, "table order")->required();
    census->add_option("--class", cen_class, "semigroup|quasigroup|identity")
        ->required()
        ->check(CLI::IsMember({"semigroup", "quasigroup", "identity"}));
    census->add_option("--sample", cen_sample,
                       "sample this many random tables instead of enumerating");
    census->add_option("--seed", cen_seed, "sampling seed");
    census->add_flag("--json", cen_json, "emit JSON");
    census->add_flag("--csv", cen_csv, "emit a CSV header and row");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            CayleyTable t = read_table(check_input);
            magma::AnalysisOptions opts;
            opts.fast_only = check_fast_only;
            opts.oracle_only = check_oracle_only;
            if (check_base)
                opts.base = *check_base;
            opts.caps.max_order = check_cap_order;
            opts.caps.max_sets = check_cap_sets;
            opts.seed = check_seed;
            magma::Analysis a = magma::analyze(t, opts);
            if (check_json)
                std::cout << a.report.dump(2) << "\n";
            else
                std::cout << magma::render_text(a);
            return magma::exit_code(a);
        }
        if (*decompose) {
            CayleyTable t = read_table(dec_input);
            std::optional<magma::Elem> base;
            if (dec_base)
                base = *dec_base;
            json payload = magma::decomposition_report(t, dec_as, base);
            if (dec_json)
                std::cout << payload.dump(2) << "\n";
            else
                std::cout << magma::render_decomposition_text(payload);
            return 0;
        }
        if (*generate) {
            CayleyTable t = generate_table(gen_kind, gen_args, gen_seed);
            if (gen_json)
                std::cout << magma::table_to_json(t).dump(2) << "\n";
            else
                std::cout << magma::serialize_table(t);
            return 0;
        }
        if (*census) {
            CensusTally tally;
            if (cen_sample > 0) {
                for (int i = 0; i < cen_sample; ++i) {
                    const std::uint64_t seed = cen_seed + static_cast<std::uint64_t>(i);
                    CayleyTable t =
                        cen_class == "semigroup"
                            ? magma::random_semigroup(cen_order, seed)
                        : cen_class == "quasigroup"
                            ? magma::random_latin_square(cen_order, seed)
                            : random_identity_groupoid(cen_order, seed);
                    census_step(t, cen_class, tally);
                }
            } else {
                const magma::TableClass cls =
                    cen_class == "semigroup"     ? magma::TableClass::associative
                    : cen_class == "quasigroup" ? magma::TableClass::quasigroup
                                                : magma::TableClass::with_identity;
                magma::enumerate_tables(cen_order, cls,
                                        [&](const CayleyTable& t) {
                                            census_step(t, cen_class, tally);
                                        });
            }
            if (cen_json) {
                json j{{"class", cen_class},
                       {"order", cen_order},
                       {"sampled", cen_sample > 0},
                       {"total", tally.total},
                       {"abelian_fast", tally.abelian_fast},
                       {"abelian_oracle", tally.abelian_oracle},
                       {"hamiltonian_theorem", tally.hamiltonian_theorem},
                       {"hamiltonian_oracle", tally.hamiltonian_oracle},
                       {"hamiltonian_undetermined", tally.hamiltonian_undetermined},
                       {"disagreements", tally.disagreements}};
                std::cout << j.dump(2) << "\n";
            } else if (cen_csv) {
                std::cout << "class,order,sampled,total,abelian_fast,"
                             "abelian_oracle,hamiltonian_theorem,"
                             "hamiltonian_oracle,hamiltonian_undetermined,"
                             "disagreements\n"
                          << cen_class << "," << cen_order << ","
                          << (cen_sample > 0 ? 1 : 0) << "," << tally.total << ","
                          << tally.abelian_fast << "," << tally.abelian_oracle
                          << "," << tally.hamiltonian_theorem << ","
                          << tally.hamiltonian_oracle << ","
                          << tally.hamiltonian_undetermined << ","
                          << tally.disagreements << "\n";
            } else {
                std::cout << cen_class << " tables of order " << cen_order
                          << (cen_sample > 0 ? " (sampled)" : " (exhaustive)")
                          << ": total " << tally.total << ", abelian "
                          << tally.abelian_fast << " (fast) / "
                          << tally.abelian_oracle << " (oracle), hamiltonian "
                          << tally.hamiltonian_theorem << " (theorem) / "
                          << tally.hamiltonian_oracle << " (oracle)";
                if (tally.hamiltonian_undetermined)
                    std::cout << ", undetermined "
                              << tally.hamiltonian_undetermined;
                std::cout << ", disagreements " << tally.disagreements << "\n";
            }
            return tally.disagreements > 0 ? 2 : 0;
        }
    } catch (const magma::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
