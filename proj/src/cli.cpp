#include "plumbing/cli.hpp"

#include "plumbing/cluster.hpp"
#include "plumbing/coxeter.hpp"
#include "plumbing/element_parser.hpp"
#include "plumbing/errors.hpp"
#include "plumbing/ginzburg.hpp"
#include "plumbing/hom_table.hpp"
#include "plumbing/linalg.hpp"
#include "plumbing/localization.hpp"
#include "plumbing/presentations.hpp"
#include "plumbing/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

namespace plumbing::cli {

namespace {

using nlohmann::json;

struct Config {
    std::string command;
    std::string quiver = "A5";
    int from = 0, to = 0;
    std::string window;
    std::string side;
    std::string format = "md";
    std::string suite = "all";
    bool experimental_de = false;
    bool seed_check = false;
    std::vector<std::string> exprs;
};

// Raised for bad flags; carries the diagnostic code.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("ConfigError", what) {}
};

DynkinQuiver load_quiver(const std::string& spec) {
    const bool file = spec.size() > 5 && spec.substr(spec.size() - 5) == ".json";
    if (!file) return parse_dynkin(spec);
    std::ifstream in(spec);
    if (!in) throw ConfigError("cannot read quiver file '" + spec + "'");
    json j;
    try {
        in >> j;
        std::string s = j.at("series").get<std::string>();
        int rank = j.at("rank").get<int>();
        if (s.size() != 1 || std::string("ADE").find(s[0]) == std::string::npos)
            throw ParseError("series must be \"A\", \"D\" or \"E\"");
        Series series = s == "A" ? Series::A : s == "D" ? Series::D : Series::E;
        if (!j.contains("arrows")) return build_dynkin(series, rank);
        std::vector<Edge> arrows;
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 2) throw ParseError("each arrow must be [source, target]");
            arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
        return build_dynkin(series, rank, arrows);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed quiver file: ") + e.what());
    }
}

std::pair<int, int> parse_window(const std::string& text, int n) {
    int lo = -(3 * n + 9), hi = n + 11;
    if (!text.empty()) {
        static const std::regex re(R"(\s*(-?\d{1,6})\s*\.\.\s*(-?\d{1,6})\s*)");
        std::smatch m;
        if (!std::regex_match(text, m, re)) throw ConfigError("window must look like a..b, got '" + text + "'");
        lo = std::stoi(m[1]);
        hi = std::stoi(m[2]);
        if (lo > hi) throw ConfigError("window " + text + " is empty");
    }
    long cap = 200;
    if (const char* env = std::getenv("PLUMBING_HOM_MAX_WINDOW")) {
        char* end = nullptr;
        cap = std::strtol(env, &end, 10);
        if (!*env || *end || cap <= 0) throw ConfigError("PLUMBING_HOM_MAX_WINDOW must be a positive integer");
    }
    if (hi - lo + 1 > cap)
        throw ConfigError("window has " + std::to_string(hi - lo + 1) + " degrees, more than the cap " +
                          std::to_string(cap));
    return {lo, hi};
}

std::vector<std::pair<int, int>> pairs(const Config& c, int n) {
    for (int v : {c.from, c.to})
        if (v != 0 && (v < 1 || v > n))
            throw ConfigError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if ((c.from == 0 || c.from == i) && (c.to == 0 || c.to == j)) out.emplace_back(i, j);
    return out;
}

std::vector<Side> sides(const Config& c, Side fallback, bool both) {
    if (c.side.empty()) return both ? std::vector<Side>{Side::Wrapped, Side::Quotient} : std::vector<Side>{fallback};
    return {parse_side(c.side)};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

// Everything the commands share: the quiver, Omega, Omega-bar and the
// engines sized for the window.
struct Session {
    Config cfg;
    DynkinQuiver dq;
    OmegaQuiver om, bar;
    int lo = 0, hi = 0;
    std::unique_ptr<LocalizedAlgebra> loc;

    explicit Session(const Config& c) : cfg(c), dq(load_quiver(c.quiver)), om(build_omega(dq)), bar(build_omega_bar(om)) {
        std::tie(lo, hi) = parse_window(c.window, dq.rank);
        const int period = om.coxeter() + 2;
        loc = std::make_unique<LocalizedAlgebra>(om, std::min({lo, 2 - hi, -3 * period}));
    }
    const QuotientAlgebra& wrapped() const { return loc->wrapped(); }
    bool type_a() const { return om.is_linear_a(); }
    void need_type_a_or_flag(const std::string& what) const {
        if (type_a()) return;
        if (dq.series != Series::A && cfg.experimental_de) return;
        if (dq.series == Series::A)
            throw UnsupportedShape(what + " is implemented for the linear orientation of A_n");
        throw UnsupportedShape(what + " for " + dq.name() + " needs --experimental-de");
    }
};

// ---------------------------------------------------------------- build

int cmd_build(Session& s, std::ostream& out) {
    const bool quotient = s.cfg.side == "quotient";
    const OmegaQuiver& om = quotient ? s.bar : s.om;
    const GradedQuiver& q = om.quiver;
    const int n = om.n();
    const std::string title = std::string(quotient ? "Omega-bar" : "Omega") + " for " + s.dq.name();
    if (s.cfg.format == "json") {
        json j;
        j["quiver"] = s.dq.name();
        j["side"] = quotient ? "quotient" : "wrapped";
        j["phi"] = json::array();
        j["shift"] = json::array();
        for (int i = 1; i <= n; ++i) {
            j["phi"].push_back(om.phi(i));
            j["shift"].push_back(om.shift[i]);
        }
        j["arrows"] = json::array();
        for (const Arrow& a : q.arrows())
            j["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}, {"degree", a.degree}});
        j["relations"] = json::array();
        for (const auto& r : om.relations) j["relations"].push_back(to_string(q, r));
        out << j.dump(2) << "\n";
    } else if (s.cfg.format == "csv") {
        out << "name,source,target,degree\n";
        for (const Arrow& a : q.arrows())
            out << csv_field(a.name) << "," << a.source << "," << a.target << "," << a.degree << "\n";
    } else if (s.cfg.format == "dot") {
        out << "digraph omega {\n";
        for (int i = 1; i <= n; ++i) out << "  " << i << ";\n";
        for (const Arrow& a : q.arrows())
            out << "  " << a.source << " -> " << a.target << " [label=\"" << a.name << " : " << a.degree << "\"];\n";
        out << "}\n";
    } else {
        out << "# " << title << "\n\n| vertex | phi | N |\n|---|---|---|\n";
        for (int i = 1; i <= n; ++i) out << "| " << i << " | " << om.phi(i) << " | " << om.shift[i] << " |\n";
        out << "\n| arrow | source | target | degree |\n|---|---|---|---|\n";
        for (const Arrow& a : q.arrows())
            out << "| " << a.name << " | " << a.source << " | " << a.target << " | " << a.degree << " |\n";
        out << "\nRelations:\n\n";
        for (const auto& r : om.relations) out << "- " << to_string(q, r) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- dims

HomDimTable table_for(const Session& s, int i, int j, Side side) {
    HomDimTable t;
    t.from = i;
    t.to = j;
    t.side = side;
    t.lo = s.lo;
    t.hi = s.hi;
    for (int p = s.lo; p <= s.hi; ++p)
        t.dims[p] = side == Side::Wrapped ? (p > 0 ? 0 : s.wrapped().hom_dim(i, j, p))
                                          : quotient_dim(s.wrapped(), i, j, p);
    return t;
}

// Recomputes every entry along an independent route.
int seed_check(const Session& s, const std::vector<HomDimTable>& tables, std::ostream& err) {
    std::unique_ptr<GinzburgComplex<ModP>> dg;
    int checked = 0, bad = 0;
    for (const HomDimTable& t : tables)
        for (const auto& [p, d] : t.dims) {
            std::optional<int> other;
            if (t.side == Side::Quotient) {
                other = s.type_a() ? closed_form_dim(s.dq, t.from, t.to, p, Side::Quotient)
                                   : s.loc->dim(t.from, t.to, p);
            } else if (s.type_a()) {
                other = closed_form_dim(s.dq, t.from, t.to, p, Side::Wrapped);
            } else if (p > 0) {
                other = 0;
            } else if (p >= -6) {
                if (!dg) dg = std::make_unique<GinzburgComplex<ModP>>(s.dq);
                other = dg->cohomology_dim(t.from, t.to, p);
            }
            if (!other) continue;
            ++checked;
            if (*other != d) {
                ++bad;
                err << "seed-check mismatch at (" << t.from << "," << t.to << "," << p << ") " << side_name(t.side)
                    << ": " << d << " vs " << *other << "\n";
            }
        }
    err << "seed-check: " << checked << " entries recomputed, " << bad << " mismatches\n";
    return bad ? 1 : 0;
}

int cmd_dims(Session& s, std::ostream& out, std::ostream& err) {
    std::vector<HomDimTable> tables;
    for (Side side : sides(s.cfg, Side::Wrapped, true))
        for (auto [i, j] : pairs(s.cfg, s.dq.rank)) tables.push_back(table_for(s, i, j, side));
    if (s.cfg.format == "json") {
        json j = tables.size() == 1 ? json(tables[0]) : json(tables);
        out << j.dump() << "\n";
    } else if (s.cfg.format == "csv") {
        out << "from,to,side,degree,dim\n";
        for (const auto& t : tables)
            for (const auto& [p, d] : t.dims)
                out << t.from << "," << t.to << "," << side_name(t.side) << "," << p << "," << d << "\n";
    } else {
        out << "| degree |";
        for (const auto& t : tables) out << " " << t.from << "->" << t.to << " " << side_name(t.side) << " |";
        out << "\n|---|";
        for (std::size_t k = 0; k < tables.size(); ++k) out << "---|";
        out << "\n";
        for (int p = s.hi; p >= s.lo; --p) {
            out << "| " << p << " |";
            for (const auto& t : tables) out << " " << t.dims.at(p) << " |";
            out << "\n";
        }
    }
    return s.cfg.seed_check ? seed_check(s, tables, err) : 0;
}

// ---------------------------------------------------------------- basis

std::vector<std::string> basis_strings(const Session& s, int i, int j, int p, Side side) {
    std::vector<std::string> out;
    if (side == Side::Wrapped) {
        if (p > 0) return out;
        for (const Path& b : s.wrapped().hom_basis(i, j, p)) out.push_back(to_string(s.om.quiver, b));
        return out;
    }
    if (s.type_a()) {
        for (const auto& m : quotient_basis(s.bar, i, j, p)) out.push_back(to_string(m));
        return out;
    }
    if (p <= 0) {
        for (const Path& b : s.wrapped().hom_basis(i, j, p)) out.push_back(to_string(s.om.quiver, b));
        return out;
    }
    s.need_type_a_or_flag("a positive-degree quotient basis");
    for (const auto& b : s.loc->basis(i, j, p)) out.push_back(s.loc->to_string(b));
    return out;
}

int cmd_basis(Session& s, std::ostream& out) {
    struct Entry {
        int from, to;
        Side side;
        int degree;
        std::vector<std::string> basis;
    };
    std::vector<Entry> entries;
    for (Side side : sides(s.cfg, Side::Quotient, false))
        for (auto [i, j] : pairs(s.cfg, s.dq.rank))
            for (int p = s.hi; p >= s.lo; --p) {
                auto b = basis_strings(s, i, j, p, side);
                if (!b.empty()) entries.push_back({i, j, side, p, b});
            }
    if (s.cfg.format == "json") {
        json j = json::array();
        for (const auto& e : entries)
            j.push_back({{"from", e.from}, {"to", e.to}, {"side", side_name(e.side)}, {"degree", e.degree},
                         {"basis", e.basis}});
        out << j.dump() << "\n";
    } else if (s.cfg.format == "csv") {
        out << "from,to,side,degree,index,element\n";
        for (const auto& e : entries)
            for (std::size_t k = 0; k < e.basis.size(); ++k)
                out << e.from << "," << e.to << "," << side_name(e.side) << "," << e.degree << "," << k << ","
                    << csv_field(e.basis[k]) << "\n";
    } else {
        int from = -1, to = -1;
        Side side = Side::Wrapped;
        for (const auto& e : entries) {
            if (e.from != from || e.to != to || e.side != side) {
                out << (from < 0 ? "" : "\n") << "## " << e.from << " -> " << e.to << " (" << side_name(e.side)
                    << ")\n\n";
                from = e.from, to = e.to, side = e.side;
            }
            out << "- " << e.degree << ":";
            for (std::size_t k = 0; k < e.basis.size(); ++k) out << (k ? ", " : " ") << e.basis[k];
            out << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- mul

struct Printed {
    std::string element;
    int from, to, degree;
};

Printed evaluate(Session& s, const GradedElement& e, Side side) {
    if (side == Side::Wrapped) {
        for (const auto& [p, c] : e.terms())
            for (int id : p.arrows)
                if (s.bar.quiver.arrow(id).kind == ArrowKind::VInverse)
                    throw UnsupportedShape("inverse arrows exist only on the quotient side");
        GradedElement over_omega(e.source(), e.target(), e.degree());
        for (const auto& [p, c] : e.terms()) over_omega.add(make_path(s.om.quiver, p.source, p.arrows), c);
        if (e.degree() > 0) return {"0", e.source(), e.target(), e.degree()};
        QuotientAlgebra engine(s.om.quiver, s.om.relations, std::min(e.degree(), -1));
        return {to_string(s.om.quiver, engine.normal_form(over_omega)), e.source(), e.target(), e.degree()};
    }
    if (s.type_a()) return {to_string(canonical_form(s.bar, e)), e.source(), e.target(), e.degree()};
    s.need_type_a_or_flag("quotient multiplication");
    LocalizedAlgebra loc(s.om);
    return {loc.to_string(loc.element(e)), e.source(), e.target(), e.degree()};
}

void print_element(const Session& s, const Printed& p, std::ostream& out) {
    if (s.cfg.format == "json") {
        out << json{{"element", p.element}, {"from", p.from}, {"to", p.to}, {"degree", p.degree}}.dump() << "\n";
    } else if (s.cfg.format == "csv") {
        out << "from,to,degree,element\n" << p.from << "," << p.to << "," << p.degree << "," << csv_field(p.element)
            << "\n";
    } else {
        out << p.element << "\n" << "from " << p.from << " to " << p.to << ", degree " << p.degree << "\n";
    }
}

int cmd_mul(Session& s, std::ostream& out) {
    if (s.cfg.exprs.empty() || s.cfg.exprs.size() > 2) throw ConfigError("mul takes one or two elements");
    GradedElement e = parse_element(s.bar, s.cfg.exprs[0]);
    if (s.cfg.exprs.size() == 2) e = compose(s.bar.quiver, e, parse_element(s.bar, s.cfg.exprs[1]));
    Side side = s.cfg.side.empty() ? Side::Quotient : parse_side(s.cfg.side);
    print_element(s, evaluate(s, e, side), out);
    return 0;
}

// ---------------------------------------------------------------- pairing

int cmd_pairing(Session& s, std::ostream& out) {
    if (!s.type_a()) throw NotTypeA("the pairing is explicit for linear A_n only");
    if (s.cfg.exprs.size() == 2) {
        QuotientElement a = canonical_form(s.bar, parse_element(s.bar, s.cfg.exprs[0]));
        QuotientElement b = canonical_form(s.bar, parse_element(s.bar, s.cfg.exprs[1]));
        Rational v = pairing(s.bar, a, b);
        if (s.cfg.format == "json")
            out << json{{"a", to_string(a)}, {"b", to_string(b)}, {"pairing", v.str()}}.dump() << "\n";
        else
            out << v.str() << "\n";
        return 0;
    }
    if (!s.cfg.exprs.empty()) throw ConfigError("pairing takes two elements, or none for Gram determinants");
    struct Row {
        int from, to, degree, size;
        std::string det;
    };
    std::vector<Row> rows;
    bool ok = true;
    for (auto [i, j] : pairs(s.cfg, s.dq.rank))
        for (int p = s.lo; p <= s.hi; ++p) {
            auto left = quotient_basis(s.bar, j, i, 2 - p);
            auto right = quotient_basis(s.bar, i, j, p);
            if (left.size() != right.size()) {
                rows.push_back({i, j, p, -1, "not square"});
                ok = false;
                continue;
            }
            if (left.empty()) continue;
            Rational det = exact_determinant(gram_matrix(s.bar, left, right));
            if (is_zero(det)) ok = false;
            rows.push_back({i, j, p, static_cast<int>(left.size()), det.str()});
        }
    if (s.cfg.format == "json") {
        json j = json::array();
        for (const auto& r : rows)
            j.push_back({{"from", r.from}, {"to", r.to}, {"degree", r.degree}, {"size", r.size}, {"det", r.det}});
        out << j.dump() << "\n";
    } else if (s.cfg.format == "csv") {
        out << "from,to,degree,size,det\n";
        for (const auto& r : rows) out << r.from << "," << r.to << "," << r.degree << "," << r.size << "," << r.det << "\n";
    } else {
        out << "| from | to | degree | size | det |\n|---|---|---|---|---|\n";
        for (const auto& r : rows)
            out << "| " << r.from << " | " << r.to << " | " << r.degree << " | " << r.size << " | " << r.det << " |\n";
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- verify

int cmd_verify(Session& s, std::ostream& out) {
    auto results = run_suite(s.cfg.suite, s.dq, s.lo, s.hi);
    bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
    if (s.cfg.format == "json") {
        json j;
        j["quiver"] = s.dq.name();
        j["window"] = {s.lo, s.hi};
        j["pass"] = ok;
        j["checks"] = json::array();
        for (const auto& r : results)
            j["checks"].push_back({{"suite", r.suite}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
        out << j.dump(2) << "\n";
    } else if (s.cfg.format == "csv") {
        out << "suite,check,pass,detail\n";
        for (const auto& r : results)
            out << r.suite << "," << csv_field(r.check) << "," << (r.pass ? "true" : "false") << ","
                << csv_field(r.detail) << "\n";
    } else {
        for (const auto& r : results)
            out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.check << (r.detail.empty() ? "" : " (")
                << r.detail << (r.detail.empty() ? "" : ")") << "\n";
        out << (ok ? "all checks passed" : "some checks failed") << "\n";
    }
    return ok ? 0 : 1;
}

void diagnose(std::ostream& err, const std::string& code, const std::string& message) {
    err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Graded morphism algebras of cocores in ADE plumbings", "plumbing-hom"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--quiver", cfg.quiver, "A5, D4, E6, ... or a quiver .json file");
        sub->add_option("--window", cfg.window, "degree window a..b");
        sub->add_option("--format", cfg.format, "json, csv or md");
    };
    auto add_pairs = [&](CLI::App* sub) {
        sub->add_option("--from", cfg.from, "source vertex (default: all)");
        sub->add_option("--to", cfg.to, "target vertex (default: all)");
    };
    auto* build = app.add_subcommand("build", "print Omega_Q (or Omega-bar_Q with --side quotient)");
    auto* dims = app.add_subcommand("dims", "graded dimension tables");
    auto* basis = app.add_subcommand("basis", "bases of the degree pieces");
    auto* mul = app.add_subcommand("mul", "multiply elements and print the normal form");
    auto* pair = app.add_subcommand("pairing", "the pairing of two elements, or Gram determinants");
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    for (auto* sub : {build, dims, basis, mul, pair, verify}) {
        add_common(sub);
        sub->add_option("--side", cfg.side, "wrapped or quotient");
        sub->add_flag("--experimental-de", cfg.experimental_de, "allow quotient products and bases for D/E");
    }
    build->get_option("--format")->description("json, csv, md or dot");
    for (auto* sub : {dims, basis, pair}) add_pairs(sub);
    dims->add_flag("--seed-check", cfg.seed_check, "recompute every entry along an independent route");
    mul->add_option("elements", cfg.exprs, "one or two elements, composed right to left");
    pair->add_option("elements", cfg.exprs, "a: j -> i and b: i -> j");
    verify->add_option("--suite", cfg.suite, "all or one of the suites");
    verify->add_flag("--seed-check", cfg.seed_check, "accepted for symmetry; every suite already recomputes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        diagnose(err, "UsageError", e.what());
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    static const std::vector<std::string> formats = {"json", "csv", "md"};
    if (std::find(formats.begin(), formats.end(), cfg.format) == formats.end() &&
        !(cfg.command == "build" && cfg.format == "dot")) {
        diagnose(err, "ConfigError", "unknown format '" + cfg.format + "'");
        return 2;
    }
    try {
        if (!cfg.side.empty()) parse_side(cfg.side);
        Session s(cfg);
        if (cfg.command == "build") return cmd_build(s, out);
        if (cfg.command == "dims") return cmd_dims(s, out, err);
        if (cfg.command == "basis") return cmd_basis(s, out);
        if (cfg.command == "mul") return cmd_mul(s, out);
        if (cfg.command == "pairing") return cmd_pairing(s, out);
        return cmd_verify(s, out);
    } catch (const NotComposable& e) {
        diagnose(err, e.code(), e.what());
        return 3;
    } catch (const Error& e) {
        diagnose(err, e.code(), e.what());
        return 2;
    }
}

} // namespace plumbing::cli
