#include "hecke/cli.hpp"

#include "hecke/io.hpp"
#include "hecke/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace hecke::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string element;
    std::string mode;
    std::string group = "pgl3";
    std::string format = "text";
    std::string b;
    std::string lambda;
    std::string suite;
    std::string cache_action;
    std::string cache_file;
    std::optional<std::int64_t> det;
    std::optional<std::uint64_t> seed;
    long q = 0;
    int max_length = 20;
    int ghkr_offset = kDefaultGhkrOffset;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string r;
    for (const auto& f : fields) {
        if (!r.empty()) r += ',';
        r += csv_field(f);
    }
    return r + "\n";
}

std::string str(const BigInt& x) { return x.str(); }

Mode element_mode(const Options& o, const Element& w) {
    Mode m;
    if (!o.mode.empty()) {
        if (!mode_from_name(o.mode, m)) throw UsageError("unknown mode " + o.mode);
        return m;
    }
    switch (kappa(w)) {
        case 0: return Mode::Split;
        case 1: return Mode::SplitTau;
        default: throw UsageError("element lies in the tau^2 coset; pass --mode explicitly");
    }
}

Mode required_mode(const Options& o) {
    Mode m;
    if (o.mode.empty()) throw UsageError("--mode is required");
    if (!mode_from_name(o.mode, m)) throw UsageError("unknown mode " + o.mode);
    return m;
}

Group group_of(const Options& o) {
    Group g;
    if (!group_from_name(o.group, g)) throw UsageError("unknown group " + o.group);
    return g;
}

SigmaClass sigma_of(Group g, const Options& o) {
    if (o.b.empty()) throw UsageError("--b is required");
    auto b = parse_sigma_class(g, o.b);
    if (!b) throw UsageError("cannot parse sigma class '" + o.b + "' for " + group_name(g));
    return *b;
}

GroupElt group_elt_of(Group g, const Options& o) {
    GroupElt w = group_elt(g, parse_element(o.element));
    if (o.det) {
        if (g != Group::GL3) throw UsageError("--det only applies to gl3");
        w.det = *o.det;
    }
    return w;
}

AlphaCoords parse_lambda(const std::string& text) {
    std::int64_t m = 0, n = 0;
    char comma = 0;
    std::istringstream is(text);
    if (!(is >> m >> comma >> n) || comma != ',' || !is.eof())
        throw UsageError("--lambda expects m,n (coefficients of a1, a2), got '" + text + "'");
    return {m, n};
}

// ---- subcommands -----------------------------------------------------------------------

int cmd_classify(const Options& o, Engine&, std::ostream& out) {
    const Element w = parse_element(o.element);
    const Mode mode = element_mode(o, w);
    const ConjClassId c = classify(w, mode);
    const InvariantF inv = invariant_of_class(c);
    if (o.format == "json") {
        out << json{{"element", format_element(w)},
                    {"mode", mode_name(mode)},
                    {"class", to_string(c)},
                    {"min_length", min_length(c)},
                    {"newton", to_string(inv.newton)},
                    {"kottwitz", inv.kottwitz}}
                   .dump()
            << "\n";
    } else if (o.format == "csv") {
        out << csv_row({"element", "mode", "class", "min_length", "newton", "kottwitz"});
        out << csv_row({format_element(w), mode_name(mode), to_string(c), std::to_string(min_length(c)),
                        to_string(inv.newton), std::to_string(inv.kottwitz)});
    } else {
        out << to_string(c) << "\n";
    }
    return kExitOk;
}

void write_poly_csv(std::ostream& out, const std::string& prefix, const ClassPolynomial& f, bool header) {
    if (header) out << "class,power,coefficient\n";
    for (const auto& [c, p] : f.entries)
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            out << prefix << csv_field(to_string(c)) << "," << i << "," << str(p.coeffs()[i]) << "\n";
}

int cmd_classpoly(const Options& o, Engine& eng, std::ostream& out) {
    const Element w = parse_element(o.element);
    const Mode mode = element_mode(o, w);
    const ClassPolynomial f = eng.class_polynomial(w, mode);
    if (o.format == "json") out << to_json(f).dump() << "\n";
    else if (o.format == "csv") write_poly_csv(out, "", f, true);
    else out << f.to_string() << "\n";
    return kExitOk;
}

int cmd_adlv(const Options& o, Engine& eng, std::ostream& out) {
    const Group g = group_of(o);
    const SigmaClass b = sigma_of(g, o);
    const GroupElt w = group_elt_of(g, o);
    const DimResult r = adlv(g, w, b, eng);
    const json j = to_json(g, w, b, r);
    if (o.format == "json") {
        out << j.dump() << "\n";
    } else if (o.format == "csv") {
        out << csv_row({"group", "element", "b", "nonempty", "dim", "witness_class", "degree"});
        out << csv_row({group_name(g), format_element(w.w), to_string(b), r.nonempty ? "true" : "false",
                        r.nonempty ? std::to_string(r.dim) : "", r.nonempty ? to_string(r.witness_class) : "",
                        r.nonempty ? std::to_string(r.degree) : ""});
    } else if (r.nonempty) {
        out << "dim " << r.dim << " (witness " << to_string(r.witness_class) << ", degree " << r.degree << ")\n";
    } else {
        out << "empty\n";
    }
    return kExitOk;
}

int cmd_points(const Options& o, Engine& eng, std::ostream& out) {
    const Group g = group_of(o);
    const SigmaClass b = sigma_of(g, o);
    const GroupElt w = group_elt_of(g, o);
    const BigInt n = rational_points(g, w, b, o.q, eng);
    if (o.format == "json") {
        out << json{{"group", group_name(g)}, {"element", format_element(w.w)}, {"b", to_string(b)},
                    {"q", o.q},               {"points", to_json(n)}}
                   .dump()
            << "\n";
    } else if (o.format == "csv") {
        out << csv_row({"group", "element", "b", "q", "points"});
        out << csv_row({group_name(g), format_element(w.w), to_string(b), std::to_string(o.q), str(n)});
    } else {
        out << str(n) << "\n";
    }
    return kExitOk;
}

int cmd_ghkr(const Options& o, Engine& eng, std::ostream& out) {
    const Group g = group_of(o);
    const SigmaClass b = sigma_of(g, o);
    const GroupElt w = group_elt_of(g, o);
    const bool ok = ghkr_check(g, w, b, o.ghkr_offset, eng);
    if (o.format == "json") {
        out << json{{"group", group_name(g)},
                    {"element", format_element(w.w)},
                    {"b", to_string(b)},
                    {"threshold", ghkr_threshold(b, o.ghkr_offset)},
                    {"holds", ok}}
                   .dump()
            << "\n";
    } else if (o.format == "csv") {
        out << csv_row({"group", "element", "b", "threshold", "holds"});
        out << csv_row({group_name(g), format_element(w.w), to_string(b),
                        std::to_string(ghkr_threshold(b, o.ghkr_offset)), ok ? "true" : "false"});
    } else {
        out << (ok ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_leading(const Options& o, Engine& eng, std::ostream& out) {
    if (group_of(o) != Group::PGL3) throw UsageError("leading tables are defined for pgl3 only");
    const AlphaCoords lam = parse_lambda(o.lambda);
    const LeadingTable t = leading_table(lam, eng);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& [b, c] : t.rows) rows.push_back({{"b", to_string(b)}, {"leading", to_json(c)}});
        out << json{{"lambda", {lam.m, lam.n}}, {"N0", to_json(t.n0)}, {"rows", rows}}.dump() << "\n";
    } else if (o.format == "csv") {
        out << "b,leading\n" << csv_row({"N0", str(t.n0)});
        for (const auto& [b, c] : t.rows) out << csv_row({to_string(b), str(c)});
    } else {
        out << "N0 = " << t.n0 << "\n";
        for (const auto& [b, c] : t.rows) out << to_string(b) << "\t" << c << "\tN0-" << (t.n0 - c) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o, Engine& eng, std::ostream& out) {
    if (!is_suite(o.suite)) throw UsageError("unknown suite " + o.suite);
    if (o.max_length < 0) throw UsageError("--max-length must be non-negative");
    const Report r = run_suite(o.suite, o.max_length, eng);
    if (o.format == "json") {
        out << json{{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}, {"notes", r.notes}}.dump()
            << "\n";
    } else if (o.format == "csv") {
        out << "kind,text\n";
        for (const auto& n : r.notes) out << csv_row({"note", n});
        for (const auto& f : r.failures) out << csv_row({"failure", f});
    } else {
        out << format_report(r);
    }
    return r.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const Options& o, Engine& eng, std::ostream& out) {
    const Mode mode = required_mode(o);
    if (o.max_length < 0) throw UsageError("--max-length must be non-negative");
    std::vector<Element> els = elements_up_to(mode, o.max_length);
    std::vector<std::pair<std::pair<int, std::string>, Element>> keyed;
    keyed.reserve(els.size());
    for (const Element& w : els) keyed.push_back({{length(w), format_element(w)}, w});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    json arr = json::array();
    if (o.format == "csv") out << "element,length,class,entry,power,coefficient\n";
    for (const auto& [key, w] : keyed) {
        const ClassPolynomial f = eng.class_polynomial(w, mode);
        const std::string cls = to_string(classify(w, mode));
        if (o.format == "json") {
            arr.push_back({{"element", key.second}, {"length", key.first}, {"class", cls}, {"poly", to_json(f)}});
        } else if (o.format == "csv") {
            const std::string prefix = csv_field(key.second) + "," + std::to_string(key.first) + "," + csv_field(cls) + ",";
            write_poly_csv(out, prefix, f, false);
        } else {
            out << key.second << "\t" << key.first << "\t" << cls << "\t" << f.to_string() << "\n";
        }
    }
    if (o.format == "json") out << arr.dump() << "\n";
    return kExitOk;
}

int cmd_cache(const Options& o, Engine& eng, std::ostream& out) {
    if (o.cache_file.empty()) throw UsageError("cache commands need --cache-file or HECKE_CACHE");
    if (o.cache_action == "info") {
        out << o.cache_file << ": " << eng.memo_size() << " entries\n";
    } else if (o.cache_action == "warm") {
        if (o.max_length < 0) throw UsageError("--max-length must be non-negative");
        for (Mode m : {Mode::Split, Mode::SplitTau, Mode::Twisted})
            for (const Element& w : elements_up_to(m, o.max_length)) eng.class_polynomial(w, m);
        out << o.cache_file << ": " << eng.memo_size() << " entries\n";
    } else if (o.cache_action == "clear") {
        eng.clear();
        out << o.cache_file << ": cleared\n";
    } else {
        throw UsageError("unknown cache action " + o.cache_action + " (info, warm, clear)");
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Class polynomials and affine Deligne-Lusztig varieties for type A2 tilde", "hecke_cli"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    const std::vector<std::string> formats = {"json", "csv", "text"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--cache-file", o.cache_file, "Memo cache file (default: $HECKE_CACHE)");
        sub->add_option("--seed", o.seed, "Shuffle the reduction order with this seed");
    };
    auto element = [&](CLI::App* sub) {
        sub->add_option("element", o.element, "Element, e.g. t[1,0].s1.tau^0")->required();
    };
    auto group = [&](CLI::App* sub) {
        sub->add_option("--group", o.group, "pgl3, gl3, u3 or d3x")
            ->check(CLI::IsMember({"pgl3", "gl3", "u3", "d3x"}));
    };
    auto sigma = [&](CLI::App* sub) {
        sub->add_option("--b", o.b, "Sigma class: 1, tau, tau^2, a class name, delta(<class>), optional @det")
            ->required();
        sub->add_option("--det", o.det, "GL3 determinant valuation of the element");
    };
    const auto modes = std::vector<std::string>{"split", "split_tau", "twisted"};

    auto* classify_cmd = app.add_subcommand("classify", "Conjugacy class of an element");
    element(classify_cmd);
    classify_cmd->add_option("--mode", o.mode, "split, split_tau or twisted")->check(CLI::IsMember(modes));
    common(classify_cmd);

    auto* classpoly_cmd = app.add_subcommand("classpoly", "Class polynomial of an element");
    element(classpoly_cmd);
    classpoly_cmd->add_option("--mode", o.mode, "split, split_tau or twisted")->check(CLI::IsMember(modes));
    common(classpoly_cmd);

    auto* adlv_cmd = app.add_subcommand("adlv", "Nonemptiness and dimension of X_w(b)");
    element(adlv_cmd);
    group(adlv_cmd);
    sigma(adlv_cmd);
    common(adlv_cmd);

    auto* points_cmd = app.add_subcommand("points", "Number of F_q-points of X_w(b) for superbasic b");
    element(points_cmd);
    group(points_cmd);
    sigma(points_cmd);
    points_cmd->add_option("--q", o.q, "Residue field size")->required();
    common(points_cmd);

    auto* ghkr_cmd = app.add_subcommand("ghkr", "Check the GHKR dimension identity");
    element(ghkr_cmd);
    group(ghkr_cmd);
    sigma(ghkr_cmd);
    ghkr_cmd->add_option("--ghkr-offset", o.ghkr_offset, "Length threshold offset above <nu_b,2rho>");
    common(ghkr_cmd);

    auto* leading_cmd = app.add_subcommand("leading", "Leading coefficients of f_{w0 t^lambda, O_b}");
    leading_cmd->add_option("--lambda", o.lambda, "m,n for lambda = m a1 + n a2 (dominant)")->required();
    group(leading_cmd);
    common(leading_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 2 on failure");
    verify_cmd->add_option("suite", o.suite, "closedform, dims, points, ghkr, invariants, classification or leading")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--max-length", o.max_length, "Length bound (k0 bound for leading)");
    common(verify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "Class polynomials of every element up to a length");
    sweep_cmd->add_option("--mode", o.mode, "split, split_tau or twisted")->required()->check(CLI::IsMember(modes));
    sweep_cmd->add_option("--max-length", o.max_length, "Length bound");
    common(sweep_cmd);

    auto* cache_cmd = app.add_subcommand("cache", "Inspect, warm or clear the memo cache file");
    cache_cmd->add_option("action", o.cache_action, "info, warm or clear")
        ->required()
        ->check(CLI::IsMember({"info", "warm", "clear"}));
    cache_cmd->add_option("--max-length", o.max_length, "Length bound for warm");
    common(cache_cmd);

    std::vector<std::string> argv_store{"hecke_cli"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (o.cache_file.empty())
        if (const char* env = std::getenv("HECKE_CACHE")) o.cache_file = env;

    // Each run owns its engine, so a cache file or seed never leaks into another invocation.
    Engine eng;
    eng.set_shuffle_seed(o.seed);
    try {
        if (!o.cache_file.empty() && std::filesystem::exists(o.cache_file)) eng.load(o.cache_file);

        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        int code = kExitOk;
        if (name == "classify") code = cmd_classify(o, eng, out);
        else if (name == "classpoly") code = cmd_classpoly(o, eng, out);
        else if (name == "adlv") code = cmd_adlv(o, eng, out);
        else if (name == "points") code = cmd_points(o, eng, out);
        else if (name == "ghkr") code = cmd_ghkr(o, eng, out);
        else if (name == "leading") code = cmd_leading(o, eng, out);
        else if (name == "verify") code = cmd_verify(o, eng, out);
        else if (name == "sweep") code = cmd_sweep(o, eng, out);
        else if (name == "cache") code = cmd_cache(o, eng, out);

        if (!o.cache_file.empty() && (name == "sweep" || (name == "cache" && o.cache_action != "info"))) eng.save(o.cache_file);
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

}  // namespace hecke::cli
