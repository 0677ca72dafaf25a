#include "magma/analysis.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "magma/json_io.hpp"
#include "magma/oracles.hpp"
#include "magma/quasigroup.hpp"
#include "magma/semigroup.hpp"

namespace magma {

using nlohmann::json;

// --- JSON primitives -------------------------------------------------------

json table_to_json(const CayleyTable& t) {
    json rows = json::array();
    for (Elem x = 0; x < t.order(); ++x) {
        json row = json::array();
        for (Elem y = 0; y < t.order(); ++y)
            row.push_back(t.at(x, y));
        rows.push_back(std::move(row));
    }
    json j{{"order", t.order()}, {"entries", std::move(rows)}};
    if (t.has_names())
        j["names"] = t.names();
    return j;
}

CayleyTable table_from_json(const json& j, int order_cap) {
    if (!j.is_object() || !j.contains("order") || !j.contains("entries"))
        throw std::invalid_argument(
            "table JSON must be an object with 'order' and 'entries'");
    const int order = j.at("order").get<int>();
    if (order < 1)
        throw std::invalid_argument("table JSON: order must be at least 1");
    if (order > order_cap)
        throw cap_exceeded("table JSON: order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(order_cap));
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
        throw std::invalid_argument("table JSON: expected " +
                                    std::to_string(order) + " rows");
    std::vector<Elem> entries;
    entries.reserve(static_cast<std::size_t>(order) * order);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            throw std::invalid_argument("table JSON: expected " +
                                        std::to_string(order) +
                                        " entries per row");
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw std::invalid_argument("table JSON: entries must be integers");
            const int e = v.get<int>();
            if (e < 0 || e >= order)
                throw std::invalid_argument("table JSON: entry " +
                                            std::to_string(e) + " out of range");
            entries.push_back(e);
        }
    }
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null()) {
        names = j.at("names").get<std::vector<std::string>>();
        if (static_cast<int>(names.size()) != order)
            throw std::invalid_argument("table JSON: wrong number of names");
    }
    return CayleyTable(order, std::move(entries), std::move(names));
}

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (const std::vector<int>& cls : p.classes())
        out.push_back(cls);
    return out;
}

std::string table_digest(const CayleyTable& t) {
    const std::string s = serialize_table(t);
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

// --- small helpers ---------------------------------------------------------

namespace {

std::string cycle_string(const std::vector<Elem>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (Elem start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        out.push_back('(');
        bool first = true;
        for (Elem x = start; !seen[x]; x = perm[x]) {
            seen[x] = 1;
            if (!first)
                out.push_back(' ');
            out += std::to_string(x);
            first = false;
        }
        out.push_back(')');
    }
    return out;
}

json relation_to_json(const ElementRelation& r) {
    json j{{"name", r.name},
           {"universe", r.universe},
           {"equivalence", r.equivalence()},
           {"reflexive", r.reflexive},
           {"symmetric", r.symmetric},
           {"transitive", r.transitive}};
    if (r.equivalence()) {
        json classes = json::array();
        for (const std::vector<Elem>& cls : r.element_classes())
            classes.push_back(cls);
        j["classes"] = std::move(classes);
    } else {
        // Without transitivity there are no classes; list related pairs.
        json pairs = json::array();
        const int m = static_cast<int>(r.universe.size());
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                if (r.related_by_index(i, k))
                    pairs.push_back(json::array(
                        {r.universe[i], r.universe[k]}));
        j["pairs"] = std::move(pairs);
    }
    return j;
}

json tc_witness_to_json(const TCWitness& w) {
    return json{{"term", w.term.to_string()},
                {"u", w.u},
                {"v", w.v},
                {"c", w.c},
                {"d", w.d},
                {"t_u_c", w.t_u_c},
                {"t_u_d", w.t_u_d},
                {"t_v_c", w.t_v_c},
                {"t_v_d", w.t_v_d}};
}

json loop_payload(const CayleyTable& t, Elem base) {
    LoopDerivation loop = derive_loop(t, base);
    auto orders = translation_inverse_order(t, base);
    SquareRootSpectrum spectrum = square_root_spectrum(t);
    return json{
        {"kind", "derived-loop"},
        {"base", loop.base},
        {"zero", loop.zero},
        {"plus", table_to_json(loop.plus)},
        {"right_translation", loop.right_translation},
        {"left_translation", loop.left_translation},
        {"right_translation_cycles", cycle_string(loop.right_translation)},
        {"left_translation_cycles", cycle_string(loop.left_translation)},
        {"right_translation_order", orders.first},
        {"left_translation_order", orders.second},
        {"residual_right", loop.residual_right},
        {"residual_left", loop.residual_left},
        {"residual_right_cycles", cycle_string(loop.residual_right)},
        {"residual_left_cycles", cycle_string(loop.residual_left)},
        {"square_root_counts", spectrum.counts},
        {"square_root_uniform", spectrum.uniform},
    };
}

json semigroup_payload(const CayleyTable& t) {
    json j{{"kind", "semigroup-decomposition"}};
    j["idempotents"] = idempotents(t);
    j["idempotents_closed"] = idempotents_closed(t);
    j["stationary"] = is_stationary(t);
    j["alpha"] = partition_to_json(relation_alpha(t));
    PhiPsiRelations pp = relations_phi_psi(t);
    j["phi"] = relation_to_json(pp.phi);
    j["psi"] = relation_to_json(pp.psi);
    j["phi_psi_exists_equals_forall"] = pp.exists_equals_forall;
    XYZRelations xyz = relations_xyz(t);
    j["x"] = relation_to_json(xyz.x);
    j["y"] = relation_to_json(xyz.y);
    j["z"] = relation_to_json(xyz.z);
    StarConditionReport star = star_condition(t);
    j["star_pointwise"] = star.pointwise;

    RectBandResult band = rect_band_of_abelian_groups(t);
    if (band.decomposition) {
        const RectBandDecomposition& d = *band.decomposition;
        json blocks = json::array();
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            const RectBandBlock& blk = d.blocks[b];
            blocks.push_back(json{
                {"row", blk.row},
                {"col", blk.col},
                {"identity", blk.identity},
                {"elements", blk.elements},
                {"table", table_to_json(d.block_table(t, static_cast<int>(b)))},
            });
        }
        j["band"] = json{{"universe", d.universe},
                         {"rows", d.rows},
                         {"cols", d.cols},
                         {"blocks", std::move(blocks)}};
        if (idempotents_closed(t)) {
            HijFactorization f = hij_factorization(t, d);
            json coords = json::array();
            for (std::size_t i = 0; i < f.universe.size(); ++i)
                coords.push_back(json{{"element", f.universe[i]},
                                      {"h", f.coords[i][0]},
                                      {"i", f.coords[i][1]},
                                      {"j", f.coords[i][2]}});
            j["factorization"] = json{{"group", table_to_json(f.group)},
                                      {"rows", f.rows},
                                      {"cols", f.cols},
                                      {"coords", std::move(coords)}};
        } else {
            j["factorization"] = nullptr;
        }
    } else {
        j["band"] = nullptr;
        j["band_failure"] = band.failure;
        j["factorization"] = nullptr;
    }

    InflationResult inf = inflation_base(t);
    if (inf.structure) {
        json fibers = json::array();
        for (const std::vector<Elem>& f : inf.structure->fibers())
            fibers.push_back(f);
        j["inflation"] = json{{"base", inf.structure->base},
                              {"representative", inf.structure->representative},
                              {"fibers", std::move(fibers)}};
    } else {
        j["inflation"] = nullptr;
        j["inflation_orphan"] = *inf.orphan;
    }
    return j;
}

struct RouteCheck {
    Route route;
    Truth verdict;
    json extra;  // detail / witness / offender fields merged into the entry
};

json checks_to_json(const std::vector<RouteCheck>& checks) {
    json out = json::array();
    for (const RouteCheck& c : checks) {
        json entry{{"route", to_string(c.route)},
                   {"verdict", to_string(c.verdict)}};
        for (auto it = c.extra.begin(); it != c.extra.end(); ++it)
            entry[it.key()] = it.value();
        out.push_back(std::move(entry));
    }
    return out;
}

/// The primary verdict: the first determinate check wins (fast routes are
/// listed before the oracle); an undetermined check only wins when
/// nothing is determinate.
std::pair<Truth, Route> primary(const std::vector<RouteCheck>& checks) {
    for (const RouteCheck& c : checks)
        if (c.verdict != Truth::undetermined)
            return {c.verdict, c.route};
    return {Truth::undetermined, checks.empty() ? Route::none : checks[0].route};
}

bool all_agree(const std::vector<RouteCheck>& checks) {
    for (std::size_t i = 0; i < checks.size(); ++i)
        for (std::size_t j = i + 1; j < checks.size(); ++j)
            if (checks[i].verdict != Truth::undetermined &&
                checks[j].verdict != Truth::undetermined &&
                checks[i].verdict != checks[j].verdict)
                return false;
    return true;
}

}  // namespace

IdentityGroupoidResult identity_groupoid_abelian_fast(const CayleyTable& t) {
    if (!identity_of(t).has_value())
        throw std::invalid_argument(
            "identity_groupoid_abelian_fast: table has no identity element");
    IdentityGroupoidResult res;
    if (auto w = associativity_witness(t)) {
        res.detail = "not associative at (" + std::to_string(w->x) + ", " +
                     std::to_string(w->y) + ", " + std::to_string(w->z) + ")";
        return res;
    }
    if (auto w = commutativity_witness(t)) {
        res.detail = "not commutative at (" + std::to_string(w->x) + ", " +
                     std::to_string(w->y) + ")";
        return res;
    }
    if (!has_unique_division(t)) {
        res.detail = "division is not unique";
        return res;
    }
    res.abelian = true;
    return res;
}

Analysis analyze(const CayleyTable& t, const AnalysisOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Analysis a;
    a.classification = classify(t);
    const ClassificationReport& cls = a.classification;

    std::vector<RouteCheck> abelian_checks;
    std::vector<RouteCheck> hamiltonian_checks;

    if (!opts.oracle_only) {
        if (cls.identity.has_value()) {
            IdentityGroupoidResult r = identity_groupoid_abelian_fast(t);
            json extra;
            if (!r.abelian)
                extra["detail"] = r.detail;
            abelian_checks.push_back({Route::identity_theorem,
                                      r.abelian ? Truth::yes : Truth::no,
                                      std::move(extra)});
            if (r.abelian)
                hamiltonian_checks.push_back(
                    {Route::identity_theorem, Truth::yes, {}});
        } else if (cls.quasigroup) {
            QuasigroupAbelianResult r = quasigroup_abelian_fast(t, opts.base);
            json extra{{"base", r.base}};
            if (!r.abelian) {
                extra["detail"] = to_string(r.failure);
                extra["witness"] = r.witness;
            }
            abelian_checks.push_back({Route::quasigroup_theorem,
                                      r.abelian ? Truth::yes : Truth::no,
                                      std::move(extra)});
            if (r.abelian)
                hamiltonian_checks.push_back(
                    {Route::quasigroup_theorem, Truth::yes, {}});
        } else if (cls.associative) {
            SemigroupAbelianResult r = semigroup_abelian_fast(t);
            json extra;
            if (!r.abelian) {
                extra["detail"] = r.detail;
                extra["failure"] = to_string(r.failure);
            }
            abelian_checks.push_back({Route::semigroup_theorem,
                                      r.abelian ? Truth::yes : Truth::no,
                                      std::move(extra)});
            if (r.abelian)
                hamiltonian_checks.push_back(
                    {Route::semigroup_theorem, Truth::yes, {}});
        }
        if (cls.associative) {
            // Independent fast cross-check for semigroups.
            const bool ok = abelian_semigroup_criterion(t);
            abelian_checks.push_back({Route::semigroup_criterion,
                                      ok ? Truth::yes : Truth::no,
                                      {}});
        }
    }

    if (!opts.fast_only) {
        Truth verdict = abelian_oracle(t);
        json extra;
        if (verdict == Truth::no && opts.attach_tc_witness && t.order() <= 12) {
            TCSearchOptions search;
            search.seed = opts.seed;
            if (auto w = tc_violation_search(t, search))
                extra["witness"] = tc_witness_to_json(*w);
        }
        abelian_checks.push_back({Route::oracle, verdict, std::move(extra)});

        HamiltonianResult ham = hamiltonian_oracle(t, opts.caps);
        json hextra;
        if (ham.offender)
            hextra["offender"] = *ham.offender;
        hamiltonian_checks.push_back({Route::oracle, ham.verdict,
                                      std::move(hextra)});
    }

    std::tie(a.abelian, a.abelian_route) = primary(abelian_checks);
    std::tie(a.hamiltonian, a.hamiltonian_route) = primary(hamiltonian_checks);
    a.consistent = all_agree(abelian_checks) && all_agree(hamiltonian_checks);

    json report{{"report_version", 1}};
    report["input"] = json{{"order", t.order()}, {"digest", table_digest(t)}};
    report["input"]["names"] =
        t.has_names() ? json(t.names()) : json(nullptr);
    report["classification"] =
        json{{"associative", cls.associative},
             {"commutative", cls.commutative},
             {"identity", cls.identity ? json(*cls.identity) : json(nullptr)},
             {"quasigroup", cls.quasigroup},
             {"loop", cls.loop},
             {"group", cls.group},
             {"idempotents", cls.idempotent_elements}};
    report["abelian"] = json{{"verdict", to_string(a.abelian)},
                             {"route", to_string(a.abelian_route)},
                             {"checks", checks_to_json(abelian_checks)}};
    report["hamiltonian"] = json{{"verdict", to_string(a.hamiltonian)},
                                 {"route", to_string(a.hamiltonian_route)},
                                 {"checks", checks_to_json(hamiltonian_checks)}};
    if (opts.include_structure && !opts.oracle_only) {
        if (cls.associative)
            report["structure"] = semigroup_payload(t);
        else if (cls.quasigroup)
            report["structure"] = loop_payload(t, opts.base.value_or(0));
        else
            report["structure"] = nullptr;
    } else {
        report["structure"] = nullptr;
    }
    report["consistent"] = a.consistent;
    const auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] = json{
        {"total",
         std::chrono::duration<double, std::milli>(t1 - t0).count()}};
    a.report = std::move(report);
    return a;
}

int exit_code(const Analysis& a) {
    return a.consistent ? 0 : 2;
}

std::string render_text(const Analysis& a) {
    const json& r = a.report;
    std::ostringstream out;
    out << "order " << r["input"]["order"].get<int>() << ", digest "
        << r["input"]["digest"].get<std::string>() << "\n";
    const json& c = r["classification"];
    out << "classification:";
    for (const char* flag : {"associative", "commutative", "quasigroup",
                             "loop", "group"})
        if (c[flag].get<bool>())
            out << " " << flag;
    if (!c["identity"].is_null())
        out << " identity=" << c["identity"].get<int>();
    out << "\nidempotents:";
    for (const json& e : c["idempotents"])
        out << " " << e.get<int>();
    out << "\n";
    for (const char* part : {"abelian", "hamiltonian"}) {
        const json& p = r[part];
        out << part << ": " << p["verdict"].get<std::string>() << "  (route "
            << p["route"].get<std::string>() << ")\n";
        for (const json& chk : p["checks"]) {
            out << "    " << chk["route"].get<std::string>() << ": "
                << chk["verdict"].get<std::string>();
            if (chk.contains("detail"))
                out << "  [" << chk["detail"].get<std::string>() << "]";
            if (chk.contains("offender")) {
                out << "  offender {";
                bool first = true;
                for (const json& e : chk["offender"]) {
                    if (!first)
                        out << " ";
                    out << e.get<int>();
                    first = false;
                }
                out << "}";
            }
            out << "\n";
        }
    }
    out << "consistent: " << (a.consistent ? "yes" : "NO - routes disagree")
        << "\n";
    return out.str();
}

json decomposition_report(const CayleyTable& t, const std::string& as,
                          std::optional<Elem> base) {
    std::string kind = as;
    if (kind == "auto") {
        if (is_associative(t))
            kind = "semigroup";
        else if (is_quasigroup(t))
            kind = "quasigroup";
        else
            throw std::invalid_argument(
                "table is neither associative nor a quasigroup; nothing to decompose");
    }
    json payload;
    if (kind == "quasigroup") {
        if (!is_quasigroup(t))
            throw std::invalid_argument("table is not a quasigroup");
        payload = loop_payload(t, base.value_or(0));
    } else if (kind == "semigroup") {
        if (!is_associative(t))
            throw std::invalid_argument("table is not associative");
        payload = semigroup_payload(t);
    } else {
        throw std::invalid_argument("unknown decomposition kind '" + as + "'");
    }
    return json{{"report_version", 1},
                {"input", json{{"order", t.order()},
                               {"digest", table_digest(t)},
                               {"names", t.has_names() ? json(t.names())
                                                       : json(nullptr)}}},
                {"structure", std::move(payload)}};
}

std::string render_decomposition_text(const json& payload) {
    const json& s = payload["structure"];
    std::ostringstream out;
    out << "order " << payload["input"]["order"].get<int>() << ", digest "
        << payload["input"]["digest"].get<std::string>() << "\n";
    const std::string kind = s["kind"].get<std::string>();
    if (kind == "derived-loop") {
        out << "derived loop at base " << s["base"].get<int>() << ", zero "
            << s["zero"].get<int>() << "\n";
        out << "right translation " << s["right_translation_cycles"].get<std::string>()
            << " (order " << s["right_translation_order"].get<long long>() << ")\n";
        out << "left translation " << s["left_translation_cycles"].get<std::string>()
            << " (order " << s["left_translation_order"].get<long long>() << ")\n";
        out << "residual right " << s["residual_right_cycles"].get<std::string>()
            << ", residual left " << s["residual_left_cycles"].get<std::string>()
            << "\n";
        out << "square-root counts";
        for (const json& v : s["square_root_counts"])
            out << " " << v.get<int>();
        out << (s["square_root_uniform"].get<bool>() ? " (uniform)"
                                                     : " (not uniform)")
            << "\n";
        out << "sum table:\n";
        for (const json& row : s["plus"]["entries"]) {
            out << " ";
            for (const json& v : row)
                out << " " << v.get<int>();
            out << "\n";
        }
        return out.str();
    }
    out << "semigroup decomposition\n";
    out << "idempotents";
    for (const json& v : s["idempotents"])
        out << " " << v.get<int>();
    out << (s["idempotents_closed"].get<bool>() ? " (closed)" : " (not closed)")
        << "\n";
    out << "stationary: " << (s["stationary"].get<bool>() ? "yes" : "no")
        << "\n";
    auto classes_line = [&](const char* key) {
        const json& rel = s[key];
        out << rel["name"].get<std::string>() << ": ";
        if (rel["equivalence"].get<bool>()) {
            out << rel["classes"].size() << " classes";
        } else {
            out << "not an equivalence";
        }
        out << "\n";
    };
    out << "alpha: " << s["alpha"].size() << " classes\n";
    classes_line("phi");
    classes_line("psi");
    classes_line("x");
    classes_line("y");
    classes_line("z");
    if (!s["band"].is_null()) {
        out << "band: " << s["band"]["rows"].get<int>() << " x "
            << s["band"]["cols"].get<int>() << " grid of commutative groups,"
            << " universe size " << s["band"]["universe"].size() << "\n";
        for (const json& blk : s["band"]["blocks"])
            out << "  block (" << blk["row"].get<int>() << ", "
                << blk["col"].get<int>() << "): order "
                << blk["elements"].size() << ", identity "
                << blk["identity"].get<int>() << "\n";
    } else {
        out << "band: none (" << s["band_failure"].get<std::string>() << ")\n";
    }
    if (!s["inflation"].is_null()) {
        out << "inflation of the product part, fiber sizes";
        for (const json& f : s["inflation"]["fibers"])
            out << " " << f.size();
        out << "\n";
    } else {
        out << "not an inflation of its product part (element "
            << s["inflation_orphan"].get<int>() << ")\n";
    }
    if (!s["factorization"].is_null()) {
        out << "factorization: group of order "
            << s["factorization"]["group"]["order"].get<int>() << " x leftzero("
            << s["factorization"]["rows"].get<int>() << ") x rightzero("
            << s["factorization"]["cols"].get<int>() << ")\n";
    }
    return out.str();
}

}  // namespace magma
