#include "cohomotopy/cli/cli.hpp"

#include "cohomotopy/catalog/catalog_space.hpp"
#include "cohomotopy/cli/scan.hpp"
#include "cohomotopy/engine/cohomotopy.hpp"
#include "cohomotopy/error.hpp"
#include "cohomotopy/simplicial/complex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cohomotopy::cli {

namespace {

using Json = nlohmann::ordered_json;
using algebra::Coefficients;
using algebra::FinAbGroup;
using algebra::GroupHom;
using algebra::Integer;
using algebra::PrimaryOperation;

struct Options {
    std::string space;
    std::string file;
    bool json = false;
    std::string out_path;
    int n = 0;
    std::string coeff;
    std::string p;
    unsigned r = 0;
    std::string op;
    std::string working_prime;
    std::string pi_m = "Z";
    std::string pi_m1 = "0";
    std::string family = "C";
    std::string n_range = "1..12";
    std::string p_range = "3";
    std::string k_range = "0";
};

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return algebra::to_string(v);
}

Json group_json(const FinAbGroup& g, const std::string& free_symbol = "Z") {
    Json torsion = Json::array();
    for (const auto& d : g.torsion()) torsion.push_back(integer_json(d));
    Json j{{"text", g.to_string(free_symbol)}, {"free_rank", g.free_rank()}, {"torsion", torsion}};
    if (!g.labels().empty()) j["generators"] = g.labels();
    return j;
}

Json matrix_json(const algebra::IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// "0", "Z", "Z^2 ⊕ Z/4", "Z + Z/2 + Z/2".
FinAbGroup parse_group(const std::string& text) {
    std::string t = text;
    for (std::string sep : {"⊕", "+"}) {
        std::size_t at = 0;
        while ((at = t.find(sep, at)) != std::string::npos) t.replace(at, sep.size(), ",");
    }
    algebra::IntVector orders;
    std::stringstream in(t);
    std::string part;
    while (std::getline(in, part, ',')) {
        part = trim(part);
        if (part.empty() || part == "0") continue;
        auto bad = [&] { raise(ErrorCode::ParseError, "cannot read group '" + text + "'"); };
        if (part[0] != 'Z') bad();
        if (part == "Z") {
            orders.push_back(0);
        } else if (part[1] == '^') {
            const int k = std::stoi(part.substr(2));
            for (int i = 0; i < k; ++i) orders.push_back(0);
        } else if (part[1] == '/') {
            const std::string digits = part.substr(2);
            if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) bad();
            orders.push_back(Integer(digits));
        } else {
            bad();
        }
    }
    return FinAbGroup::from_cyclic_orders(orders);
}

std::shared_ptr<const algebra::CochainModel> load_space(const Options& o) {
    const bool has_space = !o.space.empty(), has_file = !o.file.empty();
    if (has_space == has_file) raise(ErrorCode::ParseError, "give exactly one of --space and --file");
    if (has_space) return catalog::catalog_space(catalog::parse_space_expr(o.space));
    return std::make_shared<const simplicial::SimplicialComplex>(simplicial::load_complex(o.file));
}

const catalog::CatalogSpace* as_catalog(const algebra::CochainModel& x) {
    return dynamic_cast<const catalog::CatalogSpace*>(&x);
}

Integer parse_prime(const std::string& text) {
    if (text.empty()) raise(ErrorCode::ParseError, "--p is required");
    if (!std::all_of(text.begin(), text.end(), ::isdigit)) raise(ErrorCode::ParseError, "not a prime: '" + text + "'");
    Integer p(text);
    if (!algebra::is_prime(p)) raise(ErrorCode::InvalidArgument, text + " is not prime");
    return p;
}

Coefficients cohomotopy_coeffs(const Options& o) {
    if (!o.coeff.empty()) return Coefficients::parse(o.coeff);
    const Integer p = parse_prime(o.p);
    return o.r == 0 ? Coefficients::local(p) : Coefficients::modular(algebra::pow(p, o.r));
}

// Labelled group for catalog spaces, plain group otherwise.
FinAbGroup labelled_cohomology(const algebra::CochainModel& x, int degree, const Coefficients& c) {
    if (const auto* cat = as_catalog(x)) return catalog::catalog_cohomology(cat->expr(), degree, c).group;
    return x.cohomology(degree, c)->group();
}

std::string group_label(const std::string& space, int degree, const Coefficients& c) {
    return "H^" + std::to_string(degree) + "(" + space + "; " + c.to_string() + ")";
}

Json base_record(const std::string& verb, const algebra::CochainModel* x) {
    Json j{{"verb", verb}};
    if (x) {
        j["space"] = x->name();
        j["dimension"] = x->dimension();
    }
    return j;
}

Json cohomology_record(const Options& o) {
    auto x = load_space(o);
    const Coefficients c = Coefficients::parse(o.coeff.empty() ? "Z" : o.coeff);
    Json j = base_record("cohomology", x.get());
    j["degree"] = o.n;
    j["coefficients"] = c.to_string();
    const FinAbGroup g = labelled_cohomology(*x, o.n, c);
    j["group"] = group_json(g, c.free_symbol());
    j["summary"] = group_label(x->name(), o.n, c) + " = " + g.to_string(c.free_symbol());
    return j;
}

Json steenrod_record(const Options& o) {
    auto x = load_space(o);
    std::string op = o.op;
    std::transform(op.begin(), op.end(), op.begin(), [](unsigned char ch) { return std::tolower(ch); });
    op.erase(std::remove(op.begin(), op.end(), '^'), op.end());
    GroupHom f = GroupHom::zero({}, {});
    Coefficients source = Coefficients::modular(2), target = Coefficients::modular(2);
    std::string name;
    int shift = 0;
    if (op.rfind("sq", 0) == 0) {
        const std::string k = op.substr(2);
        if (k.empty() || !std::all_of(k.begin(), k.end(), ::isdigit)) raise(ErrorCode::ParseError, "bad operation " + o.op);
        const auto sq = PrimaryOperation::square(static_cast<unsigned>(std::stoul(k)));
        source = o.coeff.empty() ? Coefficients::modular(2) : Coefficients::parse(o.coeff);
        f = algebra::reduced_operation_matrix(*x, sq, source, o.n);
        name = sq.name();
        shift = sq.degree_shift();
    } else if (op == "p1") {
        const auto p1 = PrimaryOperation::reduced_power(parse_prime(o.p));
        target = Coefficients::modular(p1.prime());
        source = o.coeff.empty() ? target : Coefficients::parse(o.coeff);
        f = algebra::reduced_operation_matrix(*x, p1, source, o.n);
        name = p1.name();
        shift = p1.degree_shift();
    } else if (op == "beta" || op == "bockstein") {
        const Integer p = parse_prime(o.p.empty() ? "2" : o.p);
        const unsigned r = o.r == 0 ? 1 : o.r;
        source = Coefficients::modular(algebra::pow(p, r));
        target = Coefficients::modular(p);
        f = algebra::bockstein_matrix(*x, o.n, p, r);
        name = "beta_" + std::to_string(r);
        shift = 1;
    } else {
        raise(ErrorCode::ParseError, "unknown operation '" + o.op + "' (use Sq<k>, P1 or beta)");
    }
    Json j = base_record("steenrod", x.get());
    j["operation"] = name;
    j["degree"] = o.n;
    j["source"] = group_label(x->name(), o.n, source);
    j["target"] = group_label(x->name(), o.n + shift, target);
    j["source_group"] = group_json(labelled_cohomology(*x, o.n, source), source.free_symbol());
    j["target_group"] = group_json(labelled_cohomology(*x, o.n + shift, target));
    j["matrix"] = matrix_json(f.matrix());
    const auto kc = algebra::hom_kernel_cokernel(f);
    j["image"] = group_json(algebra::image(f));
    j["kernel"] = group_json(kc.kernel, source.free_symbol());
    j["summary"] = name + ": " + j["source"].get<std::string>() + " -> " + j["target"].get<std::string>() +
                   ", image " + algebra::image(f).to_string();
    return j;
}

Json verdict_json(const engine::SplitVerdict& v) {
    Json j{{"status", std::string(engine::to_string(v.status))}, {"criterion", std::string(engine::to_string(v.criterion))}};
    j["settled_by"] = v.settled_by ? Json(*v.settled_by) : Json(nullptr);
    j["trace"] = v.trace;
    return j;
}

Json hypotheses_json(const engine::HypothesisReport& h) {
    return Json{{"dimension", h.dimension}, {"n", h.n}, {"p", integer_json(h.p)}, {"dimension_ok", h.dimension_ok},
                {"degree_ok", h.degree_ok}, {"checks", h.lines()}};
}

Json cohomotopy_json(const engine::CohomotopyResult& r) {
    const std::string sym = r.free_symbol();
    Json j{{"n", r.spec.n}, {"coefficients", r.spec.coeffs.to_string()}};
    j["hypotheses"] = hypotheses_json(r.hypotheses);
    j["t_term"] = group_json(r.t_term.group);
    j["t_numerator"] = "H^" + std::to_string(r.t_term.numerator_degree) + "(X; Z/" + algebra::to_string(r.spec.prime()) + ")";
    j["quotient"] = group_json(r.quotient, sym);
    j["verdict"] = verdict_json(r.verdict);
    j["group"] = r.group ? group_json(*r.group, sym) : Json(nullptr);
    Json cands = Json::array();
    for (const auto& c : r.candidates) cands.push_back(c.to_string(sym));
    j["candidates"] = cands;
    j["notes"] = r.notes;
    j["summary"] = engine::summary_line(r);
    return j;
}

Json cohomotopy_record(const Options& o) {
    auto x = load_space(o);
    engine::CohomotopySpec spec{x, o.n, cohomotopy_coeffs(o)};
    Json j = base_record("cohomotopy", x.get());
    const auto h = engine::check_hypotheses(spec);
    if (!h.passed()) {
        j["hypotheses"] = hypotheses_json(h);
        raise(ErrorCode::HypothesisFailure, h.failure_message());
    }
    j.update(cohomotopy_json(engine::modular_cohomotopy(spec)));
    return j;
}

Json primary_record(const Options& o) {
    auto x = load_space(o);
    std::string p = o.p;
    std::transform(p.begin(), p.end(), p.begin(), [](unsigned char ch) { return std::tolower(ch); });
    const bool infinite = p == "inf" || p == "infinity" || p == "0";
    const Integer prime = infinite ? Integer(0) : parse_prime(o.p);
    std::optional<Integer> wp;
    if (!o.working_prime.empty()) wp = parse_prime(o.working_prime);
    const auto rep = engine::primary_component(x, o.n, prime, wp);
    Json j = base_record("primary", x.get());
    j["m"] = o.n;
    j["p"] = infinite ? Json("inf") : integer_json(prime);
    j["working_prime"] = integer_json(rep.working_prime);
    j["component"] = rep.component ? group_json(*rep.component) : Json(nullptr);
    j["integral_rank"] = rep.free_rank;
    j["local"] = cohomotopy_json(rep.local);
    j["summary"] = rep.summary();
    return j;
}

Json uct_record(const Options& o) {
    auto x = load_space(o);
    const Coefficients g = Coefficients::parse(o.coeff.empty() ? "Z/2" : o.coeff);
    const FinAbGroup pm = parse_group(o.pi_m), pm1 = parse_group(o.pi_m1);
    const auto rep = engine::peterson_uct_check(x, o.n, g, pm, pm1);
    Json j = base_record("uct-check", x.get());
    j["m"] = o.n;
    j["coefficients"] = g.to_string();
    j["pi_m"] = group_json(pm);
    j["pi_m_plus_1"] = group_json(pm1);
    j["tensor"] = group_json(rep.tensor);
    j["tor"] = group_json(rep.tor);
    j["predicted_order"] = integer_json(rep.predicted_order);
    j["engine_order"] = integer_json(rep.engine_order);
    j["orders_match"] = rep.orders_match;
    j["split_predicted"] = rep.split_predicted;
    j["groups_match"] = rep.groups_match ? Json(*rep.groups_match) : Json(nullptr);
    j["engine"] = cohomotopy_json(rep.engine);
    j["summary"] = std::string("order ") + (rep.orders_match ? "matches" : "MISMATCH") + ": |pi^m ⊗ G| * |Tor| = " +
                   algebra::to_string(rep.predicted_order) + ", engine " + algebra::to_string(rep.engine_order);
    return j;
}

Json h3_record(const Options& o) {
    auto x = load_space(o);
    const Integer p = parse_prime(o.p);
    const auto rep = engine::hurewicz_image_h3(x, p);
    const std::string sym = Coefficients::local(p).free_symbol();
    Json j = base_record("h3-image", x.get());
    j["p"] = integer_json(p);
    j["h3"] = group_json(rep.h3, sym);
    j["kernel"] = group_json(rep.kernel, sym);
    j["inclusion"] = matrix_json(rep.inclusion);
    j["generators"] = rep.generator_names;
    j["index"] = integer_json(rep.index);
    j["full"] = rep.full;
    j["equality_applies"] = rep.equality_applies;
    std::string gens;
    for (const auto& s : rep.generator_names) gens += (gens.empty() ? "" : ", ") + s;
    j["summary"] = "h3 image bound: subgroup <" + gens + "> of H^3(" + x->name() + "; " + sym + ") of index " +
                   algebra::to_string(rep.index) + (rep.full ? " (full group)" : "");
    return j;
}

Json scan_record(const Options& o) {
    std::string fam = o.family;
    std::transform(fam.begin(), fam.end(), fam.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (fam == "CP") fam = "C";
    if (fam == "HP") fam = "H";
    if (fam.size() != 1) raise(ErrorCode::ParseError, "family must be C or H");
    const auto rows = catalog_scan(fam[0], Range::parse(o.n_range), Range::parse(o.p_range), Range::parse(o.k_range));
    Json j = base_record("catalog-scan", nullptr);
    j["family"] = fam;
    Json table = Json::array();
    for (const auto& row : rows) {
        const std::string sym = "Z_(" + std::to_string(row.p) + ")";
        table.push_back(Json{{"family", std::string(1, row.family)},
                             {"n", row.n},
                             {"p", row.p},
                             {"k", row.k},
                             {"m", row.m},
                             {"dimension_ok", row.dimension_ok},
                             {"degree_ok", row.degree_ok},
                             {"group", row.group ? Json(row.group->to_string(sym)) : Json(nullptr)},
                             {"primary", row.primary ? Json(row.primary->to_string()) : Json(nullptr)},
                             {"integral", row.dimension_ok && row.degree_ok
                                              ? Json(FinAbGroup::free(row.integral_rank).to_string())
                                              : Json(nullptr)}});
    }
    j["rows"] = table;
    j["summary"] = std::to_string(rows.size()) + " rows";
    return j;
}

std::string cell(const Json& v) { return v.is_null() ? "-" : v.is_string() ? v.get<std::string>() : v.dump(); }

std::string yes_no(const Json& v) { return v.get<bool>() ? "yes" : "no"; }

void render_cohomotopy(const Json& j, std::ostream& out, const std::string& indent) {
    out << indent << "hypotheses:";
    for (const auto& line : j["hypotheses"]["checks"]) out << " [" << line.get<std::string>() << "]";
    out << "\n";
    out << indent << "T = " << j["t_term"]["text"].get<std::string>() << " (quotient of "
        << j["t_numerator"].get<std::string>() << ")\n";
    out << indent << "H^" << j["n"].get<int>() << "(X; " << j["coefficients"].get<std::string>()
        << ") = " << j["quotient"]["text"].get<std::string>() << "\n";
    const auto& v = j["verdict"];
    out << indent << "verdict: " << v["status"].get<std::string>() << " (" << v["criterion"].get<std::string>() << ")";
    if (!v["settled_by"].is_null()) out << ", settled by " << v["settled_by"].get<std::string>();
    out << "\n";
    for (const auto& t : v["trace"]) out << indent << "  " << t.get<std::string>() << "\n";
    if (j["candidates"].size() > 1 || j["group"].is_null()) {
        out << indent << "candidates:";
        for (const auto& c : j["candidates"]) out << " " << c.get<std::string>() << ";";
        out << "\n";
    }
    for (const auto& n : j["notes"]) out << indent << "note: " << n.get<std::string>() << "\n";
}

void render_text(const Json& j, std::ostream& out) {
    const std::string verb = j["verb"];
    if (verb == "catalog-scan") {
        out << "family n  p  k  m   dim-ok deg-ok group              p-primary integral\n";
        for (const auto& row : j["rows"]) {
            std::ostringstream line;
            line << std::left;
            line.width(7);
            line << row["family"].get<std::string>();
            line.width(3);
            line << row["n"].get<int>();
            line.width(3);
            line << row["p"].get<int>();
            line.width(3);
            line << row["k"].get<int>();
            line.width(4);
            line << row["m"].get<int>();
            line.width(7);
            line << yes_no(row["dimension_ok"]);
            line.width(7);
            line << yes_no(row["degree_ok"]);
            line.width(19);
            line << cell(row["group"]);
            line.width(10);
            line << cell(row["primary"]);
            line << cell(row["integral"]);
            out << line.str() << "\n";
        }
        out << j["summary"].get<std::string>() << "\n";
        return;
    }
    out << j["summary"].get<std::string>() << "\n";
    if (verb == "cohomology") {
        if (j["group"].contains("generators")) {
            out << "  generators:";
            for (const auto& g : j["group"]["generators"]) out << " " << g.get<std::string>();
            out << "\n";
        }
    } else if (verb == "steenrod") {
        out << "  source " << j["source_group"]["text"].get<std::string>() << ", target "
            << j["target_group"]["text"].get<std::string>() << "\n";
        out << "  matrix:";
        for (const auto& row : j["matrix"]) out << " " << row.dump();
        out << "\n  kernel " << j["kernel"]["text"].get<std::string>() << "\n";
    } else if (verb == "cohomotopy") {
        render_cohomotopy(j, out, "  ");
    } else if (verb == "primary") {
        out << "  computed as " << j["local"]["summary"].get<std::string>() << "\n";
        render_cohomotopy(j["local"], out, "    ");
    } else if (verb == "uct-check") {
        out << "  pi^m ⊗ G = " << j["tensor"]["text"].get<std::string>() << ", Tor(pi^{m+1}, G) = "
            << j["tor"]["text"].get<std::string>() << "\n";
        out << "  engine: " << j["engine"]["summary"].get<std::string>() << "\n";
        if (j["split_predicted"].get<bool>())
            out << "  G has no 2-torsion, split predicted; groups "
                << (j["groups_match"].is_null() ? "not compared" : j["groups_match"].get<bool>() ? "match" : "DIFFER")
                << "\n";
    } else if (verb == "h3-image") {
        out << "  H^3 = " << j["h3"]["text"].get<std::string>() << ", kernel = " << j["kernel"]["text"].get<std::string>()
            << "\n";
        out << "  " << (j["equality_applies"].get<bool>() ? "equals the Hurewicz image" : "upper bound for the Hurewicz image")
            << "\n";
    }
}

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::HypothesisFailure: return 3;
    case ErrorCode::UnsupportedOperation: return 4;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegreeOutOfRange:
    case ErrorCode::RangeTooLarge:
    case ErrorCode::NotConnected:
    case ErrorCode::IncompatibleCoefficients:
    case ErrorCode::WrongCoefficients:
    case ErrorCode::TooLarge: return 2;
    default: return 1;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Modular cohomotopy groups of finite complexes and catalog spaces", "cohomotopy"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_space) {
        if (needs_space) {
            sub->add_option("--space", o.space, "catalog space, e.g. \"CP(5)\" or \"M(6; 2^1)\"");
            sub->add_option("--file", o.file, "facet list or JSON complex");
        }
        sub->add_flag("--json", o.json, "print the structured record");
        sub->add_option("--out", o.out_path, "also write the structured record to a file");
    };

    auto* coh = app.add_subcommand("cohomology", "reduced cohomology group");
    add_common(coh, true);
    coh->add_option("--n,--degree", o.n, "degree")->required();
    coh->add_option("--coeff", o.coeff, "Z, Z/m or Z_(p)");

    auto* st = app.add_subcommand("steenrod", "matrix of a cohomology operation");
    add_common(st, true);
    st->add_option("--op", o.op, "Sq<k>, P1 or beta")->required();
    st->add_option("--degree,--n", o.n, "source degree")->required();
    st->add_option("--coeff", o.coeff, "source coefficients (reduced before the operation)");
    st->add_option("--p", o.p, "prime for P1 and beta");
    st->add_option("--r", o.r, "level for beta");

    auto* ct = app.add_subcommand("cohomotopy", "pi^n(X; G) for G = Z/p^r or Z_(p)");
    add_common(ct, true);
    ct->add_option("--n", o.n, "degree")->required();
    ct->add_option("--coeff", o.coeff, "Z/p^r or Z_(p)");
    ct->add_option("--p", o.p, "prime, when --coeff is not given");
    ct->add_option("--r", o.r, "level; omitted means Z_(p)");

    auto* pr = app.add_subcommand("primary", "p-primary component or integral summand of pi^m(X)");
    add_common(pr, true);
    pr->add_option("--n,--m", o.n, "degree m")->required();
    pr->add_option("--p", o.p, "prime, or inf")->required();
    pr->add_option("--working-prime", o.working_prime, "prime used for p = inf");

    auto* uc = app.add_subcommand("uct-check", "universal-coefficient order check");
    add_common(uc, true);
    uc->add_option("--n,--m", o.n, "degree m")->required();
    uc->add_option("--coeff", o.coeff, "Z/p^r");
    uc->add_option("--pi-m", o.pi_m, "integral pi^m(X)");
    uc->add_option("--pi-m1", o.pi_m1, "integral pi^{m+1}(X)");

    auto* h3 = app.add_subcommand("h3-image", "kernel of P^1 on H^3(X; Z_(p))");
    add_common(h3, true);
    h3->add_option("--p", o.p, "prime")->required();

    auto* sc = app.add_subcommand("catalog-scan", "table over projective spaces");
    add_common(sc, false);
    sc->add_option("--family", o.family, "C or H");
    sc->add_option("--n", o.n_range, "range, e.g. 1..13");
    sc->add_option("--p", o.p_range, "prime range, e.g. 3..5");
    sc->add_option("--k", o.k_range, "offset range");

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
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        Json record;
        if (verb == "cohomology") record = cohomology_record(o);
        else if (verb == "steenrod") record = steenrod_record(o);
        else if (verb == "cohomotopy") record = cohomotopy_record(o);
        else if (verb == "primary") record = primary_record(o);
        else if (verb == "uct-check") record = uct_record(o);
        else if (verb == "h3-image") record = h3_record(o);
        else record = scan_record(o);

        if (o.json) out << record.dump(2) << "\n";
        else render_text(record, out);
        if (!o.out_path.empty()) {
            std::ofstream file(o.out_path);
            if (!file) raise(ErrorCode::InvalidArgument, "cannot write " + o.out_path);
            file << record.dump(2) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (o.json) out << Json{{"verb", verb}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.message()}}}}.dump(2) << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cohomotopy::cli
