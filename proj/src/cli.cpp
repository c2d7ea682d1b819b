#include "cartan/cli.hpp"

#include "cartan/balanced.hpp"
#include "cartan/calabi.hpp"
#include "cartan/epsilon.hpp"
#include "cartan/error.hpp"
#include "cartan/moments.hpp"
#include "cartan/wallach.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cartan::cli {

namespace {

using nlohmann::json;

// Epsilon spread classification.
constexpr double constant_spread = 1e-5;
constexpr double nonconstant_spread = 1e-3;

struct Options {
    bool json = false;
    bool manifest = false;
    std::string domain;
    std::string beta, mu, alpha, s;
    int dim_cap = 27;
    int d = 1;
    int cap = 60;
    int points = 10;
    double rmax = 0.9;
    std::string check_grid = "0.4:5";
    std::string grid = "8x8";
    std::string caps = "80,80";
    double rz_max = 0.6;
    double w_frac = 0.6;
    std::string csv;
};

// "p/q", an integer, or a decimal literal.
double parse_real(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text).to_double();
    } catch (const invalid_parameter&) {
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw invalid_parameter(std::string(flag) + ": not a number: '" + text + "'");
    return v;
}

Rational parse_exact(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const invalid_parameter& e) {
        throw invalid_parameter(std::string(flag) + ": " + e.what());
    }
}

std::pair<int, int> parse_pair(const std::string& text, char sep, const char* flag) {
    auto pos = text.find(sep);
    try {
        if (pos == std::string::npos) throw std::invalid_argument("");
        std::size_t u1 = 0, u2 = 0;
        int a = std::stoi(text.substr(0, pos), &u1);
        int b = std::stoi(text.substr(pos + 1), &u2);
        if (u1 != pos || u2 != text.size() - pos - 1) throw std::invalid_argument("");
        return {a, b};
    } catch (const std::exception&) {
        throw invalid_parameter(std::string(flag) + ": expected two integers separated by '" +
                                std::string(1, sep) + "', got '" + text + "'");
    }
}

std::string decimal(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

json domain_json(const CartanDomain& d) {
    return {{"label", d.label()}, {"r", d.r}, {"a", d.a}, {"b", d.b},
            {"genus", d.genus},   {"dim", d.dim}, {"is_ball", d.is_ball()}};
}

json strings(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(q.str());
    return a;
}

json report_json(const EpsilonReport& r) {
    json grid = json::array();
    for (const auto& p : r.grid) grid.push_back({p.abs_z, p.abs_w});
    return {{"grid", grid},
            {"values", r.values},
            {"min", r.min},
            {"max", r.max},
            {"spread", r.spread},
            {"truncation_degree", r.truncation_degree},
            {"tail_bound", r.tail_bound}};
}

std::string classify_spread(double spread) {
    if (spread < constant_spread) return "constant";
    if (spread > nonconstant_spread) return "non-constant";
    return "inconclusive";
}

class Runner {
public:
    Runner(std::string command, const Options& opt, json params, std::ostream& out)
        : command_(std::move(command)), opt_(opt), params_(std::move(params)), out_(out) {}

    int run();

private:
    int emit(json body, const std::string& text, int code = exit_ok) {
        json manifest = {{"tool", "cartan"},
                         {"version", tool_version},
                         {"catalog_hash", catalog_hash(27)},
                         {"command", command_},
                         {"parameters", params_}};
        if (opt_.json) {
            json doc = {{"schema_version", schema_version}, {"command", command_}};
            doc.update(body);
            if (opt_.manifest) doc["manifest"] = manifest;
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << text;
            if (opt_.manifest) out_ << "manifest: " << manifest.dump() << '\n';
        }
        return code;
    }

    HartogsSpec hartogs_spec() const {
        return {parse_domain(opt_.domain), parse_exact(opt_.mu, "--mu"), parse_exact(opt_.alpha, "--alpha")};
    }

    int catalog();
    int wallach();
    int projective();
    int projective_hartogs();
    int moment();
    int moment_ratio_cmd();
    int balanced_cartan();
    int balanced_hartogs();
    int scan();
    int corollary();
    int immersion();
    int epsilon_ball_cmd();
    int epsilon_hartogs_cmd();

    std::string command_;
    const Options& opt_;
    json params_;
    std::ostream& out_;
};

int Runner::run() {
    if (command_ == "catalog") return catalog();
    if (command_ == "wallach") return wallach();
    if (command_ == "projective") return projective();
    if (command_ == "projective-hartogs") return projective_hartogs();
    if (command_ == "moment") return moment();
    if (command_ == "moment-ratio") return moment_ratio_cmd();
    if (command_ == "balanced-cartan") return balanced_cartan();
    if (command_ == "balanced-hartogs") return balanced_hartogs();
    if (command_ == "scan") return scan();
    if (command_ == "corollary-scan") return corollary();
    if (command_ == "immersion") return immersion();
    if (command_ == "epsilon-ball") return epsilon_ball_cmd();
    if (command_ == "epsilon-hartogs") return epsilon_hartogs_cmd();
    throw invalid_parameter("unknown subcommand " + command_);
}

int Runner::catalog() {
    json rows = json::array();
    std::ostringstream text;
    for (const auto& d : enumerate_catalog(opt_.dim_cap)) {
        rows.push_back(domain_json(d));
        text << std::left << std::setw(8) << d.label() << " r=" << d.r << " a=" << d.a << " b=" << d.b
             << " genus=" << d.genus << " dim=" << d.dim << (d.is_ball() ? " (ball)" : "") << '\n';
    }
    return emit({{"domains", rows}}, text.str());
}

int Runner::wallach() {
    auto dom = parse_domain(opt_.domain);
    auto w = wallach_set(dom);
    std::ostringstream text;
    text << "discrete: {";
    for (std::size_t i = 0; i < w.discrete.size(); ++i) text << (i ? ", " : "") << w.discrete[i];
    text << "}\nthreshold: " << w.continuous_threshold << '\n';
    return emit({{"domain", dom.label()}, {"discrete", strings(w.discrete)},
                 {"threshold", w.continuous_threshold.str()}},
                text.str());
}

int Runner::projective() {
    auto dom = parse_domain(opt_.domain);
    Rational beta = parse_exact(opt_.beta, "--beta");
    bool ok = cartan_projectively_induced(dom, beta);
    Rational eta = beta * Rational(dom.genus);
    std::string text = "projectively induced: " + std::string(ok ? "true" : "false") +
                       " (beta*genus = " + eta.str() + ")\n";
    return emit({{"domain", dom.label()}, {"beta", beta.str()}, {"beta_genus", eta.str()},
                 {"projectively_induced", ok}},
                text, ok ? exit_ok : exit_false);
}

int Runner::projective_hartogs() {
    auto spec = hartogs_spec();
    auto v = hartogs_projectively_induced(spec);
    std::string text = "projectively induced: " + std::string(v.induced ? "true" : "false");
    json body = {{"domain", spec.base.label()}, {"mu", spec.mu.str()}, {"alpha", spec.alpha.str()},
                 {"projectively_induced", v.induced}, {"failing_m", nullptr}};
    if (v.failing_m) {
        Rational eta = (spec.alpha + Rational(*v.failing_m)) * spec.mu;
        text += " (fails at m=" + std::to_string(*v.failing_m) + ": (alpha+m)*mu = " + eta.str() +
                " not in the Wallach set)";
        body["failing_m"] = *v.failing_m;
    }
    return emit(body, text + "\n", v.induced ? exit_ok : exit_false);
}

int Runner::moment() {
    auto dom = parse_domain(opt_.domain);
    Rational s = parse_exact(opt_.s, "--s");
    if (!moment_converges(dom, s))
        throw precondition_error("moment integral diverges for s = " + s.str() + " (needs s > -1)");
    Rational v = moment_ratio(dom).as_rational.eval_at(s);
    return emit({{"domain", dom.label()}, {"s", s.str()}, {"value", v.str()}, {"decimal", v.to_double()}},
                "F(s)/F(0) at s=" + s.str() + ": " + v.str() + " ~ " + decimal(v.to_double()) + "\n");
}

int Runner::moment_ratio_cmd() {
    auto dom = parse_domain(opt_.domain);
    auto m = moment_ratio(dom);
    std::ostringstream text;
    text << "F(s)/F(0) = " << m.as_rational.pretty("s") << "\nblock lengths:";
    for (int L : m.block_lengths) text << ' ' << L;
    text << "\nexact: " << m.as_rational.serialize() << '\n';
    return emit({{"domain", dom.label()},
                 {"ratio", m.as_rational.pretty("s")},
                 {"exact", m.as_rational.serialize()},
                 {"block_lengths", m.block_lengths}},
                text.str());
}

int Runner::balanced_cartan() {
    auto dom = parse_domain(opt_.domain);
    Rational beta = parse_exact(opt_.beta, "--beta");
    bool ok = cartan_balanced(dom, beta);
    Rational th = cartan_balanced_threshold(dom);
    return emit({{"domain", dom.label()}, {"beta", beta.str()}, {"threshold", th.str()}, {"balanced", ok}},
                "balanced: " + std::string(ok ? "true" : "false") + " (threshold " + th.str() + ")\n",
                ok ? exit_ok : exit_false);
}

json verdict_json(const BalancedVerdict& v) {
    json j = {{"balanced", v.balanced}, {"reason", reason_name(v.reason)}, {"witness_m", nullptr}};
    if (v.witness) {
        j["witness_m"] = v.witness->witness_m;
        j["witness_value"] = v.witness->witness_value.str();
        j["reference_m"] = v.witness->reference_m;
        j["reference_value"] = v.witness->reference_value.str();
    }
    return j;
}

int Runner::balanced_hartogs() {
    auto spec = hartogs_spec();
    auto v = hartogs_balanced(spec);
    auto q = final_quantity(spec);
    std::ostringstream text;
    text << "balanced: " << (v.balanced ? "true" : "false") << "\nreason: " << reason_name(v.reason) << '\n';
    if (v.witness)
        text << "witness: Q(" << v.witness->reference_m << ") = " << v.witness->reference_value << ", Q("
             << v.witness->witness_m << ") = " << v.witness->witness_value << '\n';
    text << "final quantity Q(m) = " << q.pretty("m") << '\n';
    json body = {{"domain", spec.base.label()}, {"mu", spec.mu.str()}, {"alpha", spec.alpha.str()},
                 {"final_quantity", q.pretty("m")}};
    body.update(verdict_json(v));
    return emit(body, text.str(), v.balanced ? exit_ok : exit_false);
}

int Runner::scan() {
    auto rows = balanced_scan(opt_.dim_cap);
    json arr = json::array();
    std::ostringstream text;
    int balanced = 0;
    for (const auto& r : rows) {
        json j = {{"domain", r.domain.label()}, {"mu", r.mu.str()}, {"alpha", r.alpha.str()}};
        j.update(verdict_json(r.verdict));
        arr.push_back(j);
        if (r.verdict.balanced) ++balanced;
        text << std::left << std::setw(8) << r.domain.label() << " mu=" << std::setw(6) << r.mu.str()
             << " alpha=" << std::setw(8) << r.alpha.str() << ' '
             << (r.verdict.balanced ? "balanced" : "not balanced") << " (" << reason_name(r.verdict.reason);
        if (r.verdict.witness) text << ", m=" << r.verdict.witness->witness_m;
        text << ")\n";
    }
    text << rows.size() << " rows, " << balanced << " balanced\n";
    return emit({{"rows", arr}}, text.str());
}

int Runner::corollary() {
    auto rows = corollary_scan(opt_.dim_cap);
    json arr = json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& r : rows) {
        all = all && r.holds();
        json j = {{"domain", r.domain.label()}, {"excluded", r.excluded}};
        text << std::left << std::setw(8) << r.domain.label() << ' ';
        if (r.excluded) {
            text << "excluded: ball\n";
        } else {
            j.update({{"mu0", r.mu0.str()}, {"alpha", r.alpha.str()},
                      {"projectively_induced", r.projectively_induced}, {"balanced", r.balanced},
                      {"holds", r.holds()}, {"error", r.error ? json(*r.error) : json(nullptr)}});
            text << "mu0=" << std::setw(6) << r.mu0.str() << " alpha=" << std::setw(8) << r.alpha.str()
                 << " projectively induced=" << (r.projectively_induced ? "true" : "false")
                 << " balanced=" << (r.balanced ? "true" : "false");
            if (r.error) text << " ERROR: " << *r.error;
            text << '\n';
        }
        arr.push_back(j);
    }
    text << (all ? "all rows hold\n" : "some rows FAIL\n");
    return emit({{"rows", arr}, {"all_hold", all}}, text.str(), all ? exit_ok : exit_false);
}

int Runner::immersion() {
    HartogsSpec spec{ball(opt_.d), parse_exact(opt_.mu, "--mu"), parse_exact(opt_.alpha, "--alpha")};
    auto colon = opt_.check_grid.find(':');
    if (colon == std::string::npos)
        throw invalid_parameter("--check-grid: expected max:points, got '" + opt_.check_grid + "'");
    double maxmod = parse_real(opt_.check_grid.substr(0, colon), "--check-grid");
    int n = std::stoi(opt_.check_grid.substr(colon + 1));
    auto coeffs = build_immersion(spec, opt_.cap);
    auto check = verify_pullback(coeffs, pullback_grid(opt_.d, maxmod, n));
    std::ostringstream text;
    text << "terms: " << coeffs.entries.size() << "\nmax relative error: " << decimal(check.max_rel_error)
         << "\ntail bound: " << decimal(check.max_tail_bound)
         << "\nwithin tail bound: " << (check.within_tail_bound ? "true" : "false") << '\n';
    return emit({{"terms", coeffs.entries.size()},
                 {"max_rel_error", check.max_rel_error},
                 {"tail_bound", check.max_tail_bound},
                 {"within_tail_bound", check.within_tail_bound}},
                text.str(), check.within_tail_bound ? exit_ok : exit_false);
}

void maybe_csv(const std::string& path, const EpsilonReport& r) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw invalid_parameter("--csv: cannot open '" + path + "' for writing");
    write_epsilon_csv(r, f);
}

std::string report_text(const EpsilonReport& r) {
    std::ostringstream text;
    text << "min: " << decimal(r.min) << "\nmax: " << decimal(r.max) << "\nspread: " << decimal(r.spread)
         << " (" << classify_spread(r.spread) << ")\ntruncation degree: " << r.truncation_degree
         << "\ntail bound: " << decimal(r.tail_bound) << '\n';
    return text.str();
}

int Runner::epsilon_ball_cmd() {
    double alpha = parse_real(opt_.alpha, "--alpha");
    auto r = epsilon_ball(opt_.d, alpha, opt_.rmax, opt_.cap, opt_.points);
    maybe_csv(opt_.csv, r);
    json body = report_json(r);
    body["classification"] = classify_spread(r.spread);
    return emit(body, report_text(r));
}

int Runner::epsilon_hartogs_cmd() {
    double mu = parse_real(opt_.mu, "--mu");
    double alpha = parse_real(opt_.alpha, "--alpha");
    auto [nz, nw] = parse_pair(opt_.grid, 'x', "--grid");
    auto [zc, wc] = parse_pair(opt_.caps, ',', "--caps");
    HartogsGrid g{nz, nw, opt_.rz_max, opt_.w_frac};
    auto r = epsilon_hartogs_disc(mu, alpha, g, zc, wc);
    maybe_csv(opt_.csv, r);
    json body = report_json(r);
    body["classification"] = classify_spread(r.spread);
    return emit(body, report_text(r));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced and projectively induced metrics on Cartan and Cartan-Hartogs domains", "cartan"};
    app.require_subcommand(1);
    Options opt;

    auto global = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_flag("--manifest", opt.manifest, "append tool version, catalog hash and parameters");
    };
    auto domain = [&](CLI::App* sub) {
        sub->add_option("--domain", opt.domain, "domain, e.g. I:2,3, II:3, IV:4, V, VI")->required();
    };

    auto* c_catalog = app.add_subcommand("catalog", "list catalog domains up to a dimension");
    c_catalog->add_option("--dim-cap", opt.dim_cap, "largest dimension")->check(CLI::PositiveNumber);

    auto* c_wallach = app.add_subcommand("wallach", "Wallach set of a domain");
    domain(c_wallach);

    auto* c_proj = app.add_subcommand("projective", "is beta g_B projectively induced (exit 2 if not)");
    domain(c_proj);
    c_proj->add_option("--beta", opt.beta, "exact rational p/q")->required();

    auto* c_projh = app.add_subcommand("projective-hartogs",
                                       "is alpha g(mu) projectively induced (exit 2 if not)");
    domain(c_projh);
    c_projh->add_option("--mu", opt.mu, "exact rational p/q")->required();
    c_projh->add_option("--alpha", opt.alpha, "exact rational p/q")->required();

    auto* c_moment = app.add_subcommand("moment", "exact moment ratio F(s)/F(0)");
    domain(c_moment);
    c_moment->add_option("--s", opt.s, "exact rational p/q")->required();

    auto* c_mratio = app.add_subcommand("moment-ratio", "F(s)/F(0) as a factored rational function");
    domain(c_mratio);

    auto* c_bc = app.add_subcommand("balanced-cartan", "is beta g_B balanced (exit 2 if not)");
    domain(c_bc);
    c_bc->add_option("--beta", opt.beta, "exact rational p/q")->required();

    auto* c_bh = app.add_subcommand("balanced-hartogs", "is alpha g(mu) balanced (exit 2 if not)");
    domain(c_bh);
    c_bh->add_option("--mu", opt.mu, "exact rational p/q")->required();
    c_bh->add_option("--alpha", opt.alpha, "exact rational p/q")->required();

    auto* c_scan = app.add_subcommand("scan", "balancedness over the catalog and parameter grids");
    c_scan->add_option("--dim-cap", opt.dim_cap, "largest dimension")->check(CLI::PositiveNumber);

    auto* c_cor = app.add_subcommand("corollary-scan",
                                     "projectively induced but not balanced at mu0 (exit 2 on any failure)");
    c_cor->add_option("--dim-cap", opt.dim_cap, "largest dimension")->check(CLI::Range(2, 1000));

    auto* c_imm = app.add_subcommand("immersion", "check the explicit immersion over a ball base (exit 2 if the tail bound is violated)");
    c_imm->add_option("--d", opt.d, "base ball dimension")->check(CLI::PositiveNumber);
    c_imm->add_option("--mu", opt.mu, "exact rational p/q")->required();
    c_imm->add_option("--alpha", opt.alpha, "exact rational p/q")->required();
    c_imm->add_option("--cap", opt.cap, "total degree cutoff")->check(CLI::NonNegativeNumber);
    c_imm->add_option("--check-grid", opt.check_grid, "max:points for |z| and |w|");

    auto* c_eb = app.add_subcommand("epsilon-ball", "numerical epsilon function on the ball");
    c_eb->add_option("--d", opt.d, "dimension (1 or 2)");
    c_eb->add_option("--alpha", opt.alpha, "metric multiple of g_hyp")->required();
    c_eb->add_option("--rmax", opt.rmax, "largest |z| sampled");
    c_eb->add_option("--cap", opt.cap, "degree cutoff");
    c_eb->add_option("--points", opt.points, "radial samples");
    c_eb->add_option("--csv", opt.csv, "write samples to this CSV file");

    auto* c_eh = app.add_subcommand("epsilon-hartogs", "numerical epsilon function on M_disc(mu)");
    c_eh->add_option("--mu", opt.mu, "fiber exponent")->required();
    c_eh->add_option("--alpha", opt.alpha, "metric multiple")->required();
    c_eh->add_option("--grid", opt.grid, "NZxNW samples");
    c_eh->add_option("--caps", opt.caps, "z-degree,w-degree cutoffs");
    c_eh->add_option("--rz-max", opt.rz_max, "largest |z| sampled");
    c_eh->add_option("--w-frac", opt.w_frac, "largest |w| as a fraction of N^(mu/2)");
    c_eh->add_option("--csv", opt.csv, "write samples to this CSV file");

    for (auto* sub : app.get_subcommands({})) global(sub);

    // opt.cap default depends on the subcommand
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        if (std::find(args.begin(), args.end(), "epsilon-ball") != args.end()) opt.cap = 200;
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_error;
    }

    CLI::App* sub = app.get_subcommands().front();
    json params = json::object();
    for (const auto* o : sub->get_options()) {
        if (o->get_name() == "--help" || o->count() == 0) continue;
        auto res = o->results();
        params[o->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
    }

    try {
        return Runner(sub->get_name(), opt, params, out).run();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

}  // namespace cartan::cli
