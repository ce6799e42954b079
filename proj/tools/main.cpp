// Command-line front end: every library operation behind one verb, JSON (or
// TSV for tabular output) on stdout, deterministic for fixed argv and seed.
// Exit codes: 0 success, 1 usage error, 2 domain error with a structured
// error record.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "arbor/dynamics.hpp"
#include "arbor/errors.hpp"
#include "arbor/group_structure.hpp"
#include "arbor/overgroups.hpp"
#include "arbor/padic.hpp"
#include "arbor/signs.hpp"
#include "arbor/verify.hpp"

namespace {

using arbor::Rational;
using Json = nlohmann::ordered_json;

struct Options {
    int d = 0;
    int n = -1;
    int m = 0;
    int mp = 0;
    std::string spec;
    std::string poly;
    std::string poly2;
    std::string alpha;
    long long prime = 0;
    std::string shift = "0";
    std::uint64_t seed = 0;
    long long budget = 1'000'000;
    bool budget_given = false;
    bool tsv = false;
    std::string element;
    std::string variant = "plain";
    std::string suite = "all";
    long long leaf = 0;
    std::string tuple;
    int count = 1;
    int max_steps = 64;
    int max_k = 4;
    int trials = 1000;
};

void emit(const Json& out) { std::cout << out.dump() << "\n"; }

/// The one --budget flag caps both enumeration sizes (default 10^6 elements)
/// and polynomial degrees (default 27); setting it overrides both.
int degree_budget(const Options& opt) {
    if (opt.budget_given)
        return static_cast<int>(std::min<long long>(opt.budget, 1'000'000'000));
    return 27;
}

arbor::TreeAutomorphism element_of(const Options& opt) {
    if (opt.element.empty())
        arbor::fail(arbor::errkind::invalid_argument, "--element is required");
    auto a = arbor::automorphism_from_json(opt.element);
    if (opt.d > 0 && a.depth() > 0 && a.degree() != opt.d)
        arbor::fail(arbor::errkind::shape_mismatch, "element degree differs from --d");
    if (opt.n >= 0 && a.depth() != opt.n)
        arbor::fail(arbor::errkind::shape_mismatch, "element depth differs from --n");
    return a;
}

arbor::GroupSpec spec_of(const Options& opt) {
    if (opt.spec.empty()) arbor::fail(arbor::errkind::invalid_argument, "--spec is required");
    return arbor::GroupSpec::parse(opt.spec);
}

arbor::RationalPoly poly_of(const std::string& text) {
    if (text.empty()) arbor::fail(arbor::errkind::invalid_argument, "--poly is required");
    return arbor::RationalPoly::parse(text);
}

int require_n(const Options& opt) {
    if (opt.n < 0) arbor::fail(arbor::errkind::invalid_argument, "--n is required");
    return opt.n;
}

Json rational_record(const Rational& x) {
    Json rec;
    rec["decimal"] = arbor::format_rational(x);
    const arbor::Int num = arbor::numerator(x);
    rec["sign"] = num == 0 ? 0 : (num < 0 ? -1 : 1);
    const auto factored = [](const arbor::Int& v) -> Json {
        if (v == 0) return nullptr;
        const auto f = arbor::trial_factor(v < 0 ? arbor::Int(-v) : v);
        if (!f.complete) return nullptr;
        Json list = Json::array();
        for (const auto& [p, e] : f.exponents) list.push_back(Json::array({p.str(), e}));
        return list;
    };
    rec["num_factors"] = factored(num);
    if (arbor::denominator(x) != 1) rec["den_factors"] = factored(arbor::denominator(x));
    return rec;
}

Json spec_record(const arbor::GroupSpec& spec) {
    Json rec;
    rec["family"] = spec.family == arbor::GroupSpec::Family::E
                        ? "E"
                        : (spec.family == arbor::GroupSpec::Family::F ? "F" : "Aut");
    rec["d"] = spec.degree;
    if (spec.family != arbor::GroupSpec::Family::Full) rec["m"] = spec.m;
    if (spec.mp) rec["mp"] = *spec.mp;
    return rec;
}

Json orbit_record(const arbor::CriticalOrbit& orbit) {
    Json rec;
    rec["L"] = orbit.tail;
    rec["O"] = orbit.period;
    Json critical = Json::array();
    for (const auto& c : orbit.critical) critical.push_back(arbor::format_rational(c));
    rec["critical"] = critical;
    Json iterates = Json::array();
    for (const auto& level : orbit.iterates) {
        Json values = Json::array();
        for (const auto& v : level) values.push_back(arbor::format_rational(v));
        iterates.push_back(values);
    }
    rec["orbit"] = iterates;
    return rec;
}

int run_sign(const Options& opt) {
    const auto a = element_of(opt);
    int value = 0;
    const auto& v = opt.variant;
    if (v == "plain") {
        value = arbor::sign(a);
    } else if (v.rfind("m:", 0) == 0) {
        value = arbor::sign_at(a, std::stoi(v.substr(2)));
    } else if (v.rfind("upper:", 0) == 0) {
        value = arbor::sign_below(a, std::stoi(v.substr(6)));
    } else if (v.rfind("e:", 0) == 0 || v.rfind("f:", 0) == 0) {
        const auto comma = v.find(',');
        if (comma == std::string::npos)
            arbor::fail(arbor::errkind::invalid_argument, "variant needs e:<m>,<mp>");
        const int m = std::stoi(v.substr(2, comma - 2));
        const int mp = std::stoi(v.substr(comma + 1));
        value = v[0] == 'e' ? arbor::sign_e(a, m, mp) : arbor::sign_f(a, m, mp);
    } else {
        arbor::fail(arbor::errkind::invalid_argument, "unknown sign variant '" + v + "'");
    }
    emit({{"sign", value}});
    return 0;
}

int run_member(const Options& opt) {
    emit({{"member", arbor::is_member(element_of(opt), spec_of(opt))}});
    return 0;
}

int run_order(const Options& opt) {
    emit({{"order", arbor::group_order(spec_of(opt), require_n(opt)).str()}});
    return 0;
}

int run_enumerate(const Options& opt) {
    const auto members = arbor::enumerate_members(spec_of(opt), require_n(opt), opt.budget);
    if (opt.tsv) {
        for (const auto& a : members) std::cout << arbor::to_json(a) << "\n";
        return 0;
    }
    Json elements = Json::array();
    for (const auto& a : members) elements.push_back(Json::parse(arbor::to_json(a)));
    emit({{"count", members.size()}, {"elements", elements}});
    return 0;
}

int run_sample(const Options& opt) {
    const auto spec = spec_of(opt);
    const int n = require_n(opt);
    arbor::Rng rng(opt.seed);
    Json elements = Json::array();
    for (int k = 0; k < opt.count; ++k)
        elements.push_back(Json::parse(arbor::to_json(arbor::random_member(spec, n, rng))));
    emit({{"elements", elements}});
    return 0;
}

int run_orbit(const Options& opt) {
    const auto orbit = arbor::leaf_orbit(spec_of(opt), require_n(opt), opt.leaf, opt.budget);
    if (opt.tsv) {
        for (long long leaf : orbit) std::cout << leaf << "\n";
        return 0;
    }
    emit({{"orbit", orbit}});
    return 0;
}

int run_chief_series(const Options& opt) {
    const auto table = arbor::materialize(spec_of(opt), require_n(opt), opt.budget);
    const auto series = arbor::chief_series(table);
    if (opt.tsv) {
        for (std::size_t i = 0; i + 1 < series.orders.size(); ++i)
            std::cout << series.orders[i + 1] << "\t" << series.factor_hints[i] << "\t"
                      << (series.unique ? "unique" : "non-unique") << "\n";
        return 0;
    }
    Json orders = Json::array();
    for (long long o : series.orders) orders.push_back(std::to_string(o));
    emit({{"orders", orders}, {"unique", series.unique}, {"factors", series.factor_hints}});
    return 0;
}

int run_rank(const Options& opt) {
    const auto spec = spec_of(opt);
    const int n = require_n(opt);
    const auto table = arbor::materialize(spec, n, opt.budget);
    for (int k = 1; k <= opt.max_k; ++k) {
        const auto gens = arbor::find_generating_set(table, k, opt.trials, opt.seed);
        if (!gens) continue;
        Json generators = Json::array();
        for (int g : *gens)
            generators.push_back(Json::parse(arbor::to_json(
                arbor::from_leaf_permutation(table.element(g), {spec.degree, n}))));
        emit({{"rank", k}, {"generators", generators}});
        return 0;
    }
    arbor::fail(arbor::errkind::no_witness,
                "no generating set found up to size " + std::to_string(opt.max_k));
}

int run_abelianization(const Options& opt) {
    const auto table = arbor::materialize(spec_of(opt), require_n(opt), opt.budget);
    emit({{"invariants", arbor::abelian_invariants(table)}});
    return 0;
}

int run_normalize_tuple(const Options& opt) {
    if (opt.tuple.empty()) arbor::fail(arbor::errkind::invalid_argument, "--tuple is required");
    std::vector<int> tuple;
    std::string token;
    std::istringstream in(opt.tuple);
    while (std::getline(in, token, ','))
        tuple.push_back(static_cast<int>(arbor::numerator(arbor::parse_rational(token))));
    const auto norm = arbor::normalize_tuple(tuple);
    Json moves = Json::array();
    for (const auto& move : norm.moves) {
        if (move.kind == arbor::TupleMove::Kind::Rotate3)
            moves.push_back({{"op", "rotate3"}, {"index", move.index}});
        else
            moves.push_back({{"op", "shift_multiply"}});
    }
    emit({{"result", norm.result}, {"moves", moves}});
    return 0;
}

int run_invert_conj(const Options& opt) {
    const auto a = element_of(opt);
    const auto tau = arbor::inverting_conjugator(a);
    emit({{"conjugator", Json::parse(arbor::to_json(tau))}});
    return 0;
}

int run_iterate(const Options& opt) {
    const auto f = poly_of(opt.poly);
    emit({{"poly", arbor::iterate(f, require_n(opt), degree_budget(opt)).str()}});
    return 0;
}

int run_pcf(const Options& opt) {
    const auto orbit = arbor::detect_pcf(poly_of(opt.poly), opt.max_steps);
    if (!orbit)
        arbor::fail(arbor::errkind::not_pcf,
                    "no critical-orbit repetition within " + std::to_string(opt.max_steps) +
                        " steps");
    emit(orbit_record(*orbit));
    return 0;
}

int run_classify(const Options& opt) {
    const auto orbit = arbor::detect_pcf(poly_of(opt.poly), opt.max_steps);
    if (!orbit)
        arbor::fail(arbor::errkind::not_pcf,
                    "no critical-orbit repetition within " + std::to_string(opt.max_steps) +
                        " steps");
    const auto c = arbor::classify_overgroup(*orbit);
    Json rec = spec_record(c.spec);
    rec["L"] = c.tail;
    rec["O"] = c.period;
    rec["flags"] = c.flags;
    emit(rec);
    return 0;
}

int run_disc(const Options& opt) {
    if (opt.alpha.empty()) arbor::fail(arbor::errkind::invalid_argument, "--alpha is required");
    const auto report = arbor::discriminant(poly_of(opt.poly), arbor::parse_rational(opt.alpha),
                                            require_n(opt), degree_budget(opt));
    emit({{"value", rational_record(report.value)},
          {"square_part", rational_record(report.square_part)},
          {"potential_nonsquare", rational_record(report.potential_nonsquare)},
          {"is_square", report.is_square}});
    return 0;
}

int run_resultant(const Options& opt) {
    emit({{"resultant",
           arbor::format_rational(arbor::resultant(poly_of(opt.poly), poly_of(opt.poly2)))}});
    return 0;
}

int run_newton(const Options& opt) {
    if (opt.prime == 0) arbor::fail(arbor::errkind::invalid_argument, "--prime is required");
    Json segments = Json::array();
    for (const auto& s : arbor::newton_polygon(poly_of(opt.poly), opt.prime))
        segments.push_back({{"slope", arbor::format_rational(s.slope)}, {"length", s.length}});
    emit({{"segments", segments}});
    return 0;
}

int run_eisenstein(const Options& opt) {
    if (opt.prime == 0) arbor::fail(arbor::errkind::invalid_argument, "--prime is required");
    emit({{"eisenstein", arbor::eisenstein_after_shift(poly_of(opt.poly), opt.prime,
                                                       arbor::parse_rational(opt.shift))}});
    return 0;
}

int run_condition(const Options& opt) {
    if (opt.alpha.empty()) arbor::fail(arbor::errkind::invalid_argument, "--alpha is required");
    const auto w = arbor::condition_check(arbor::parse_rational(opt.alpha));
    emit({{"satisfied", w.satisfied},
          {"witness", Json{{"at3", w.at_three}, {"at2", w.at_two}}}});
    return 0;
}

int run_certificate(const Options& opt) {
    if (opt.alpha.empty()) arbor::fail(arbor::errkind::invalid_argument, "--alpha is required");
    const auto cert = arbor::irreducibility_certificate(
        poly_of(opt.poly), arbor::parse_rational(opt.alpha), require_n(opt), degree_budget(opt));
    if (!cert) {
        emit({{"certificate", nullptr}});
        return 0;
    }
    emit({{"prime", cert->prime},
          {"shift", arbor::format_rational(cert->shift)},
          {"n", cert->level}});
    return 0;
}

int run_verify_cmd(const Options& opt) {
    const auto results = arbor::run_verify(opt.suite);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << r.id << ": " << (r.detail.empty() ? "" : r.detail + ": ")
                  << (r.pass ? "PASS" : "FAIL") << "\n";
        std::fprintf(stderr, "%-28s %.2fs\n", r.id.c_str(), r.seconds);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for d-ary tree automorphism towers and rational dynamics"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", opt.d, "tree degree");
        sub->add_option("--n", opt.n, "tree depth / iterate level");
        sub->add_option("--m", opt.m, "tower level m");
        sub->add_option("--mp", opt.mp, "tower level m'");
        sub->add_option("--spec", opt.spec, "group spec, e.g. E:d=3,m=2 or Aut:d=3");
        sub->add_option("--poly", opt.poly, "coefficients, constant first: 1,0,-3,2");
        sub->add_option("--poly2", opt.poly2, "second polynomial");
        sub->add_option("--alpha", opt.alpha, "base point (rational)");
        sub->add_option("--prime", opt.prime, "prime");
        sub->add_option("--shift", opt.shift, "shift (rational)");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--budget", opt.budget,
                        "cap on enumeration sizes (default 10^6) and polynomial degrees "
                        "(default 27)")
            ->each([&opt](const std::string&) { opt.budget_given = true; });
        sub->add_flag("--tsv", opt.tsv, "tabular output");
        sub->add_option("--element", opt.element, "automorphism JSON");
        sub->add_option("--variant", opt.variant,
                        "sign variant: plain | m:<k> | upper:<k> | e:<m>,<mp> | f:<m>,<mp>");
        sub->add_option("--suite", opt.suite, "verify suite");
        sub->add_option("--leaf", opt.leaf, "leaf index");
        sub->add_option("--tuple", opt.tuple, "sign tuple, e.g. 1,-1,-1");
        sub->add_option("--count", opt.count, "number of samples");
        sub->add_option("--max-steps", opt.max_steps, "orbit detection budget");
        sub->add_option("--max-k", opt.max_k, "largest generating-set size to try");
        sub->add_option("--trials", opt.trials, "random trials per size");
        return sub;
    };

    struct Verb {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const std::vector<Verb> verbs = {
        {"sign", "sign of an automorphism under a chosen variant", run_sign},
        {"member", "tower membership test", run_member},
        {"order", "group order", run_order},
        {"enumerate", "list every member", run_enumerate},
        {"sample", "uniform random members", run_sample},
        {"orbit", "orbit of a leaf under the group", run_orbit},
        {"chief-series", "chief series of the materialized group", run_chief_series},
        {"rank", "smallest generating set found", run_rank},
        {"abelianization", "abelian invariants of the materialized group", run_abelianization},
        {"normalize-tuple", "normalize a sign tuple with a move log", run_normalize_tuple},
        {"invert-conj", "conjugator carrying an automorphism to its inverse", run_invert_conj},
        {"iterate", "n-th iterate of a polynomial", run_iterate},
        {"pcf", "critical-orbit tail and period", run_pcf},
        {"classify", "tower containing the splitting groups", run_classify},
        {"disc", "iterated discriminant report", run_disc},
        {"resultant", "resultant of two polynomials", run_resultant},
        {"newton", "Newton polygon at a prime", run_newton},
        {"eisenstein", "Eisenstein test after a shift", run_eisenstein},
        {"condition", "base-point valuation condition", run_condition},
        {"certificate", "Eisenstein irreducibility certificate for an iterate", run_certificate},
        {"verify", "run a verification suite", run_verify_cmd},
    };
    for (const auto& verb : verbs) add_common(app.add_subcommand(verb.name, verb.help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (const auto& verb : verbs)
            if (app.get_subcommand(verb.name)->parsed()) return verb.run(opt);
        return 1;
    } catch (const arbor::DomainError& e) {
        emit({{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
        return 2;
    } catch (const std::exception& e) {
        emit({{"error", {{"kind", "Internal"}, {"message", e.what()}}}});
        return 2;
    }
}
