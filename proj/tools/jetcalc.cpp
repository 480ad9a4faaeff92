// Command-line front end: runs one job file per invocation and writes a JSON
// report. Exit codes: 0 success, 1 when findings were requested to fail fast
// (verify failures, or --fail-on-findings with an exceptional divisor),
// 2 on any error.

#include <CLI11.hpp>
#include <json.hpp>

#include "jetcalc/blowup.hpp"
#include "jetcalc/coefficient_map.hpp"
#include "jetcalc/errors.hpp"
#include "jetcalc/groebner.hpp"
#include "jetcalc/jobfile.hpp"
#include "jetcalc/properties.hpp"
#include "jetcalc/textio.hpp"
#include "jetcalc/variety.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace jetcalc;
using OrderedJson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string job_path;
    std::string out_path;
    std::string order_name = "degrevlex";
    std::optional<std::uint64_t> seed;
    int max_degree = 64;
    std::uint64_t max_basis = 4096;
    int trials = 5;
    long bound = 1000;
    std::optional<int> buffer;
    bool fail_on_findings = false;
};

Limits make_limits(const Options& o) {
    Limits l;
    l.max_degree = o.max_degree;
    l.max_basis = static_cast<std::size_t>(o.max_basis);
    return l;
}

MonomialOrder make_order(const Options& o) {
    return o.order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
}

SampleParams make_samples(const Options& o) {
    SampleParams p;
    p.seed = *o.seed;
    p.bound = o.bound;
    p.trials = o.trials;
    return p;
}

// ---- job object lookup -----------------------------------------------------

[[noreturn]] void unknown(const std::string& name, const char* kind) {
    throw DomainError("cli: '" + name + "' is not a declared " + kind);
}

const Polynomial& get_poly(const JobFile& job, const std::string& name) {
    auto it = job.polys.find(name);
    if (it == job.polys.end()) unknown(name, "polynomial");
    return it->second;
}

const PolyMap& get_map(const JobFile& job, const std::string& name) {
    auto it = job.maps.find(name);
    if (it == job.maps.end()) unknown(name, "map");
    return it->second;
}

const Jet& get_jet(const JobFile& job, const std::string& name) {
    auto it = job.jets.find(name);
    if (it == job.jets.end()) unknown(name, "jet");
    return it->second;
}

const AffineVariety& get_variety(const JobFile& job, const std::string& name) {
    auto it = job.varieties.find(name);
    if (it == job.varieties.end()) unknown(name, "variety");
    return it->second;
}

const std::vector<Rational>& get_point(const JobFile& job, const std::string& name) {
    auto it = job.points.find(name);
    if (it == job.points.end()) unknown(name, "point");
    return it->second;
}

void need_args(const JobFile& job, std::size_t lo, std::size_t hi, const char* usage) {
    if (job.args.size() < lo || job.args.size() > hi)
        throw DomainError(std::string("cli: usage: command ") + usage);
}

int arg_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("cli: " + std::string(what) + " must be an integer, got '" + s + "'");
    }
}

// ---- JSON rendering ---------------------------------------------------------

OrderedJson names_json(const VarNames& names, int arity) {
    OrderedJson a = OrderedJson::array();
    for (int i = 0; i < arity; ++i) a.push_back(var_name(names, arity, i));
    return a;
}

OrderedJson polys_json(const std::vector<Polynomial>& ps) {
    OrderedJson a = OrderedJson::array();
    for (const auto& p : ps) a.push_back(poly_str(p));
    return a;
}

OrderedJson point_json(const std::vector<Rational>& pt) {
    OrderedJson a = OrderedJson::array();
    for (const auto& q : pt) a.push_back(rat_str(q));
    return a;
}

OrderedJson jet_json(const Jet& j) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& c : j.coords) {
        OrderedJson row = OrderedJson::array();
        for (const auto& q : c.coeff) row.push_back(rat_str(q));
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson envelope(const char* command) {
    return OrderedJson{{"jetcalc_report", 1}, {"command", command}};
}

// ---- command handlers -------------------------------------------------------

OrderedJson cmd_gb(const JobFile& job, const Options& opts) {
    need_args(job, 1, SIZE_MAX, "gb <poly>...");
    std::vector<Polynomial> gens;
    for (const auto& a : job.args) gens.push_back(get_poly(job, a));
    Ideal ideal(gens.front().arity(), gens, gens.front().names());
    GroebnerBasis gb = groebner_basis(ideal, make_order(opts), make_limits(opts));
    OrderedJson rep = envelope("gb");
    rep["parameters"] = {{"order", opts.order_name},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["vars"] = names_json(ideal.names, ideal.arity);
    rep["basis"] = polys_json(gb.basis);
    rep["contains_one"] = gb.contains_one();
    return rep;
}

OrderedJson cmd_nf(const JobFile& job, const Options& opts) {
    need_args(job, 2, SIZE_MAX, "nf <poly> <poly>...");
    const Polynomial& p = get_poly(job, job.args[0]);
    std::vector<Polynomial> gens;
    for (std::size_t i = 1; i < job.args.size(); ++i) gens.push_back(get_poly(job, job.args[i]));
    Ideal ideal(gens.front().arity(), gens, gens.front().names());
    GroebnerBasis gb = groebner_basis(ideal, make_order(opts), make_limits(opts));
    Polynomial rem = normal_form(p, gb, make_limits(opts));
    OrderedJson rep = envelope("nf");
    rep["parameters"] = {{"order", opts.order_name},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["vars"] = names_json(ideal.names, ideal.arity);
    rep["input"] = poly_str(p);
    rep["modulo"] = polys_json(gens);
    rep["basis"] = polys_json(gb.basis);
    rep["normal_form"] = poly_str(rem);
    rep["member"] = rem.is_zero();
    return rep;
}

OrderedJson cmd_eliminate(const JobFile& job, const Options& opts) {
    need_args(job, 2, SIZE_MAX, "eliminate <var,var,...> <poly>...");
    std::vector<Polynomial> gens;
    for (std::size_t i = 1; i < job.args.size(); ++i) gens.push_back(get_poly(job, job.args[i]));
    Ideal ideal(gens.front().arity(), gens, gens.front().names());
    std::vector<int> drop;
    std::stringstream list(job.args[0]);
    std::string item;
    while (std::getline(list, item, ',')) {
        int found = -1;
        for (int v = 0; v < ideal.arity; ++v)
            if (var_name(ideal.names, ideal.arity, v) == item) found = v;
        if (found < 0) throw DomainError("cli: '" + item + "' is not a variable of the ideal");
        drop.push_back(found);
    }
    Ideal out = eliminate(ideal, drop, make_limits(opts));
    OrderedJson rep = envelope("eliminate");
    rep["parameters"] = {{"order", "block"},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    OrderedJson dropped = OrderedJson::array();
    for (int v : drop) dropped.push_back(var_name(ideal.names, ideal.arity, v));
    rep["dropped"] = dropped;
    rep["kept"] = names_json(out.names, out.arity);
    rep["gens"] = polys_json(out.gens);
    return rep;
}

OrderedJson cmd_dim(const JobFile& job, const Options& opts) {
    need_args(job, 1, SIZE_MAX, "dim <variety> | dim <poly>...");
    OrderedJson rep = envelope("dim");
    rep["parameters"] = {{"max_degree", opts.max_degree}, {"max_basis", opts.max_basis}};
    if (job.args.size() == 1 && job.varieties.count(job.args[0])) {
        const AffineVariety& x = get_variety(job, job.args[0]);
        rep["vars"] = names_json(x.ideal.names, x.ideal.arity);
        rep["gens"] = polys_json(x.ideal.gens);
        rep["base_point"] = point_json(x.base_point);
        rep["dimension"] = variety_dimension(x, make_limits(opts));
        return rep;
    }
    std::vector<Polynomial> gens;
    for (const auto& a : job.args) gens.push_back(get_poly(job, a));
    Ideal ideal(gens.front().arity(), gens, gens.front().names());
    rep["vars"] = names_json(ideal.names, ideal.arity);
    rep["gens"] = polys_json(gens);
    rep["dimension"] = ideal_dimension(ideal, make_limits(opts));
    return rep;
}

OrderedJson cmd_initial_form(const JobFile& job, const Options&) {
    need_args(job, 1, 1, "initial-form <poly>");
    const Polynomial& p = get_poly(job, job.args[0]);
    OrderedJson rep = envelope("initial-form");
    rep["parameters"] = OrderedJson::object();
    rep["vars"] = names_json(p.names(), p.arity());
    rep["input"] = poly_str(p);
    rep["initial_form"] = poly_str(initial_form(p));
    return rep;
}

OrderedJson cmd_jacobian(const JobFile& job, const Options&) {
    need_args(job, 1, 1, "jacobian <map>");
    const PolyMap& f = get_map(job, job.args[0]);
    OrderedJson rep = envelope("jacobian");
    rep["parameters"] = OrderedJson::object();
    rep["vars"] = names_json(f.source_names, f.source_arity);
    rep["map"] = polys_json(f.coords);
    OrderedJson matrix = OrderedJson::array();
    for (const auto& row : jacobian(f)) matrix.push_back(polys_json(row));
    rep["matrix"] = matrix;
    if (f.target_arity() == f.source_arity) rep["determinant"] = poly_str(jacobian_det(f));
    return rep;
}

OrderedJson cmd_jet_prolong(const JobFile& job, const Options&) {
    need_args(job, 2, 2, "jet-prolong <map> <jet>");
    const PolyMap& f = get_map(job, job.args[0]);
    const Jet& j = get_jet(job, job.args[1]);
    OrderedJson rep = envelope("jet-prolong");
    rep["parameters"] = OrderedJson::object();
    rep["map"] = polys_json(f.coords);
    rep["jet"] = jet_json(j);
    rep["image"] = jet_json(prolong(f, j));
    return rep;
}

OrderedJson cmd_jet_dim(const JobFile& job, const Options& opts) {
    need_args(job, 3, 3, "jet-dim <map> <order> <point-or-variety>");
    const PolyMap& f = get_map(job, job.args[0]);
    int k = arg_int(job.args[1], "the jet order");
    if (k < 1) throw DomainError("cli: the jet order must be at least 1");
    OrderedJson rep = envelope("jet-dim");
    rep["parameters"] = {{"seed", *opts.seed},
                         {"trials", opts.trials},
                         {"bound", opts.bound},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["map"] = polys_json(f.coords);
    rep["jet_order"] = k;
    if (job.varieties.count(job.args[2])) {
        const AffineVariety& x = get_variety(job, job.args[2]);
        CoefficientMap cm = coefficient_map(f, k, x.base_point);
        Ideal constraint = jet_scheme_ideal(x, k);
        rep["base_point"] = point_json(x.base_point);
        rep["constrained_to"] = polys_json(x.ideal.gens);
        rep["image_dimension"] = image_dimension(cm, constraint, make_samples(opts));
        return rep;
    }
    const std::vector<Rational>& base = get_point(job, job.args[2]);
    CoefficientMap cm = coefficient_map(f, k, base);
    rep["base_point"] = point_json(base);
    rep["image_dimension"] = image_dimension(cm, make_samples(opts));
    return rep;
}

OrderedJson cmd_multiplicity(const JobFile& job, const Options&) {
    need_args(job, 1, 1, "multiplicity <jet>");
    const Jet& j = get_jet(job, job.args[0]);
    std::optional<int> m = multiplicity(j);
    OrderedJson rep = envelope("multiplicity");
    rep["parameters"] = OrderedJson::object();
    rep["jet"] = jet_json(j);
    rep["multiplicity"] = m ? OrderedJson(*m) : OrderedJson(nullptr);
    return rep;
}

OrderedJson cmd_tangent_cone(const JobFile& job, const Options& opts) {
    need_args(job, 1, 1, "tangent-cone <variety>");
    const AffineVariety& x = get_variety(job, job.args[0]);
    ConeIdeal cone = tangent_cone(x, make_limits(opts));
    OrderedJson rep = envelope("tangent-cone");
    rep["parameters"] = {{"max_degree", opts.max_degree}, {"max_basis", opts.max_basis}};
    rep["vars"] = names_json(x.ideal.names, x.ideal.arity);
    rep["base_point"] = point_json(x.base_point);
    rep["gens"] = polys_json(cone.ideal.gens);
    return rep;
}

OrderedJson cmd_lift(const JobFile& job, const Options& opts, bool* finding) {
    need_args(job, 2, 2, "lift <variety> <jet>");
    const AffineVariety& x = get_variety(job, job.args[0]);
    const Jet& j = get_jet(job, job.args[1]);
    int buffer = opts.buffer.value_or(4);
    if (buffer < 1) throw DomainError("cli: --buffer must be at least 1");
    int big_k = j.order() + buffer;
    LiftOptions lo;
    lo.seed = *opts.seed;
    lo.limits = make_limits(opts);
    LiftResult res = lift_jet(x, j, big_k, lo);
    OrderedJson rep = envelope("lift");
    rep["parameters"] = {{"buffer", buffer},
                         {"target_order", big_k},
                         {"attempts", lo.attempts},
                         {"branch_nodes", lo.branch_nodes},
                         {"seed", lo.seed},
                         {"bound", lo.bound},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["vars"] = names_json(x.ideal.names, x.ideal.arity);
    rep["gens"] = polys_json(x.ideal.gens);
    rep["jet"] = jet_json(j);
    switch (res.status) {
    case LiftResult::Status::Lifted:
        rep["status"] = "lifted";
        rep["witness"] = jet_json(*res.witness);
        break;
    case LiftResult::Status::Obstructed:
        rep["status"] = "obstructed";
        rep["obstruction_order"] = res.obstruction_order;
        *finding = true;
        break;
    case LiftResult::Status::Inconclusive:
        rep["status"] = "inconclusive";
        break;
    }
    return rep;
}

OrderedJson cmd_stratum_dim(const JobFile& job, const Options& opts) {
    need_args(job, 3, 3, "stratum-dim <variety> <order> <multiplicity>");
    const AffineVariety& x = get_variety(job, job.args[0]);
    int k = arg_int(job.args[1], "the jet order");
    int m = arg_int(job.args[2], "the multiplicity");
    int buffer = opts.buffer.value_or(4);
    if (buffer < 1) throw DomainError("cli: --buffer must be at least 1");
    StratumResult res = stratum_dimension(x, k, m, k + buffer, make_limits(opts));
    OrderedJson rep = envelope("stratum-dim");
    rep["parameters"] = {{"buffer", buffer},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["vars"] = names_json(x.ideal.names, x.ideal.arity);
    rep["gens"] = polys_json(x.ideal.gens);
    rep["jet_order"] = k;
    rep["multiplicity"] = m;
    rep["buffer_order"] = res.buffer_order;
    rep["empty"] = res.dimension < 0;
    rep["dimension"] = res.dimension;
    return rep;
}

OrderedJson cmd_strict_transform(const JobFile& job, const Options&) {
    need_args(job, 2, 2, "strict-transform <poly> <chart-index>");
    const Polynomial& h = get_poly(job, job.args[0]);
    int index = arg_int(job.args[1], "the chart index");
    BlowupChart chart = blowup_chart(h.arity(), index, h.names());
    StrictTransformResult res = strict_transform(h, chart);
    OrderedJson rep = envelope("strict-transform");
    rep["parameters"] = OrderedJson::object();
    rep["chart"] = {{"index", index},
                    {"vars", names_json(chart.substitution.source_names, chart.arity)}};
    rep["input"] = poly_str(h);
    rep["power"] = res.power;
    rep["transform"] = poly_str(res.transform);
    rep["total"] = poly_str(res.total);
    return rep;
}

OrderedJson cmd_theta(const JobFile& job, const Options&) {
    need_args(job, 2, 2, "theta <jet> <order>");
    const Jet& j = get_jet(job, job.args[0]);
    int l = arg_int(job.args[1], "the image order");
    ThetaResult res = theta(j, l);
    OrderedJson rep = envelope("theta");
    rep["parameters"] = OrderedJson::object();
    rep["jet"] = jet_json(j);
    rep["image_order"] = l;
    rep["chart"] = {{"index", res.chart.index},
                    {"vars", names_json(res.chart.substitution.source_names, res.chart.arity)}};
    rep["point"] = point_json(res.point);
    rep["image"] = jet_json(res.image);
    return rep;
}

OrderedJson cmd_chart_map(const JobFile& job, const Options&) {
    need_args(job, 3, 3, "chart-map <map> <source-chart> <target-chart>");
    const PolyMap& f = get_map(job, job.args[0]);
    int si = arg_int(job.args[1], "the source chart index");
    int ti = arg_int(job.args[2], "the target chart index");
    BlowupChart source = blowup_chart(f.source_arity, si, f.source_names);
    VarNames target_names = f.target_arity() == f.source_arity ? f.source_names : nullptr;
    BlowupChart target = blowup_chart(f.target_arity(), ti, target_names);
    RationalMap m = induced_chart_map(f, source, target);
    OrderedJson rep = envelope("chart-map");
    rep["parameters"] = OrderedJson::object();
    rep["map"] = polys_json(f.coords);
    rep["source_chart"] = {{"index", si}, {"vars", names_json(m.source_names, m.source_arity)}};
    rep["target_chart"] = {{"index", ti}};
    rep["numerators"] = polys_json(m.num);
    rep["denominators"] = polys_json(m.den);
    std::vector<Rational> origin(m.source_arity, rat(0));
    rep["regular_at_origin"] = regular_at(m, origin);
    return rep;
}

OrderedJson cmd_jd(const JobFile& job, const Options&) {
    need_args(job, 2, 2, "jd <map> <point>");
    const PolyMap& f = get_map(job, job.args[0]);
    const std::vector<Rational>& v = get_point(job, job.args[1]);
    JdValue jd = jacobian_multiplicity(f, v);
    OrderedJson rep = envelope("jd");
    rep["parameters"] = OrderedJson::object();
    rep["map"] = polys_json(f.coords);
    rep["point"] = point_json(v);
    rep["infinite"] = jd.infinite;
    rep["order"] = jd.infinite ? OrderedJson(nullptr) : OrderedJson(jd.order);
    return rep;
}

OrderedJson cmd_analyze(const JobFile& job, const Options& opts, bool* finding) {
    need_args(job, 5, SIZE_MAX, "analyze <X> <Y> <rho> <f> <g> [divisor...]");
    EndoInstance inst;
    inst.x = get_variety(job, job.args[0]);
    inst.y = get_variety(job, job.args[1]);
    inst.rho = get_map(job, job.args[2]);
    inst.f = get_map(job, job.args[3]);
    inst.g = get_map(job, job.args[4]);
    if (auto it = job.options.find("s_max"); it != job.options.end()) inst.s_max = it->second;
    if (auto it = job.options.find("jet_order"); it != job.options.end())
        inst.jet_order = it->second;
    std::vector<DivisorCandidate> user;
    for (std::size_t i = 5; i < job.args.size(); ++i) {
        auto it = job.divisors.find(job.args[i]);
        if (it == job.divisors.end()) unknown(job.args[i], "divisor");
        user.push_back(it->second);
    }
    AnalysisReport res = analyze(inst, user, make_samples(opts), make_limits(opts));
    OrderedJson rep = envelope("analyze");
    rep["parameters"] = {{"seed", *opts.seed},
                         {"trials", opts.trials},
                         {"bound", opts.bound},
                         {"s_max", inst.s_max},
                         {"jet_order", inst.jet_order},
                         {"max_degree", opts.max_degree},
                         {"max_basis", opts.max_basis}};
    rep["instance"] = {{"x_gens", polys_json(inst.x.ideal.gens)},
                       {"x_base", point_json(inst.x.base_point)},
                       {"y_gens", polys_json(inst.y.ideal.gens)},
                       {"y_base", point_json(inst.y.base_point)},
                       {"rho", polys_json(inst.rho.coords)},
                       {"f", polys_json(inst.f.coords)},
                       {"g", polys_json(inst.g.coords)}};
    OrderedJson body = OrderedJson::parse(report_str(res));
    for (auto& [key, value] : body.items())
        if (key != "jetcalc_report") rep[key] = value;
    for (const DivisorReport& d : res.divisors)
        if (d.exceptional) *finding = true;
    return rep;
}

OrderedJson cmd_verify(const JobFile& job, const Options& opts, bool* finding) {
    need_args(job, 1, 2, "verify <suite|all> [cases]");
    int cases = job.args.size() > 1 ? arg_int(job.args[1], "the case count") : 20;
    if (cases < 1) throw DomainError("cli: the case count must be at least 1");
    std::vector<std::string> suites;
    if (job.args[0] == "all")
        suites = suite_names();
    else
        suites.push_back(job.args[0]);
    OrderedJson rep = envelope("verify");
    rep["parameters"] = {{"seed", *opts.seed}, {"cases", cases}};
    OrderedJson all = OrderedJson::object();
    int failures = 0;
    for (const std::string& suite : suites) {
        OrderedJson rows = OrderedJson::array();
        for (const PropertyResult& r : run_suite(suite, *opts.seed, cases)) {
            OrderedJson row{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}};
            if (!r.pass) {
                row["detail"] = r.detail;
                ++failures;
            }
            rows.push_back(std::move(row));
        }
        all[suite] = std::move(rows);
    }
    rep["suites"] = all;
    rep["failures"] = failures;
    if (failures > 0) *finding = true;
    return rep;
}

// ---- driver ------------------------------------------------------------------

int run(const Options& opts) {
    std::ifstream in(opts.job_path);
    if (!in) throw DomainError("cli: cannot open '" + opts.job_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    JobFile job = parse_job(buffer.str());

    static const std::set<std::string> randomized = {"jet-dim", "lift", "analyze", "verify"};
    if (randomized.count(job.command) && !opts.seed)
        throw DomainError("cli: command '" + job.command + "' draws random samples; pass --seed");

    bool finding = false;
    OrderedJson rep;
    if (job.command == "gb")
        rep = cmd_gb(job, opts);
    else if (job.command == "nf")
        rep = cmd_nf(job, opts);
    else if (job.command == "eliminate")
        rep = cmd_eliminate(job, opts);
    else if (job.command == "dim")
        rep = cmd_dim(job, opts);
    else if (job.command == "initial-form")
        rep = cmd_initial_form(job, opts);
    else if (job.command == "jacobian")
        rep = cmd_jacobian(job, opts);
    else if (job.command == "jet-prolong")
        rep = cmd_jet_prolong(job, opts);
    else if (job.command == "jet-dim")
        rep = cmd_jet_dim(job, opts);
    else if (job.command == "multiplicity")
        rep = cmd_multiplicity(job, opts);
    else if (job.command == "tangent-cone")
        rep = cmd_tangent_cone(job, opts);
    else if (job.command == "lift")
        rep = cmd_lift(job, opts, &finding);
    else if (job.command == "stratum-dim")
        rep = cmd_stratum_dim(job, opts);
    else if (job.command == "strict-transform")
        rep = cmd_strict_transform(job, opts);
    else if (job.command == "theta")
        rep = cmd_theta(job, opts);
    else if (job.command == "chart-map")
        rep = cmd_chart_map(job, opts);
    else if (job.command == "jd")
        rep = cmd_jd(job, opts);
    else if (job.command == "analyze")
        rep = cmd_analyze(job, opts, &finding);
    else if (job.command == "verify")
        rep = cmd_verify(job, opts, &finding);
    else
        throw DomainError("cli: unknown command '" + job.command + "'");

    std::string text = rep.dump(2) + "\n";
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path);
        if (!out) throw DomainError("cli: cannot write '" + opts.out_path + "'");
        out << text;
    } else {
        std::cout << text;
    }

    bool fail_fast = job.command == "verify" || opts.fail_on_findings;
    return finding && fail_fast ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"jetcalc: exact jet-space calculations on polynomial maps"};
    app.add_option("job", opts.job_path, "job file to run (one command per job)")->required();
    app.add_option("--out", opts.out_path, "write the report here instead of standard output");
    app.add_option("--seed", opts.seed,
                   "seed for randomized sampling (required by jet-dim, lift, analyze, verify)");
    app.add_option("--order", opts.order_name, "monomial order for gb and nf")
        ->check(CLI::IsMember({"degrevlex", "lex"}))
        ->capture_default_str();
    app.add_option("--max-degree", opts.max_degree, "intermediate total-degree cap")
        ->capture_default_str();
    app.add_option("--max-basis", opts.max_basis, "basis-size cap during completion")
        ->capture_default_str();
    app.add_option("--trials", opts.trials, "sample points per randomized rank")
        ->capture_default_str();
    app.add_option("--bound", opts.bound, "coordinate bound for sampled points")
        ->capture_default_str();
    app.add_option("--buffer", opts.buffer,
                   "extra jet orders checked beyond the target (default 4)");
    app.add_flag("--fail-on-findings", opts.fail_on_findings,
                 "exit 1 when the analysis reports an exceptional divisor or an obstructed jet");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
