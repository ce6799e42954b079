// Python bindings for the main operations. Exact rationals and big integers
// cross the boundary as strings (or Python ints where they always fit);
// automorphisms cross as a thin class around the C++ value.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "arbor/dynamics.hpp"
#include "arbor/errors.hpp"
#include "arbor/group_structure.hpp"
#include "arbor/overgroups.hpp"
#include "arbor/padic.hpp"
#include "arbor/signs.hpp"
#include "arbor/verify.hpp"

namespace py = pybind11;
using namespace arbor;

namespace {

py::object big_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

GroupSpec spec_of(const std::string& text) { return GroupSpec::parse(text); }

RationalPoly poly_of(const std::string& text) { return RationalPoly::parse(text); }

py::dict orbit_dict(const CriticalOrbit& orbit) {
    py::dict out;
    out["degree"] = orbit.degree;
    out["L"] = orbit.tail;
    out["O"] = orbit.period;
    py::list critical;
    for (const auto& c : orbit.critical) critical.append(format_rational(c));
    out["critical"] = critical;
    py::list iterates;
    for (const auto& level : orbit.iterates) {
        py::list values;
        for (const auto& v : level) values.append(format_rational(v));
        iterates.append(values);
    }
    out["orbit"] = iterates;
    return out;
}

CriticalOrbit orbit_of(const std::string& poly, int max_steps) {
    const auto orbit = detect_pcf(poly_of(poly), max_steps);
    if (!orbit) fail(errkind::not_pcf, "no critical-orbit repetition within the budget");
    return *orbit;
}

py::dict spec_dict(const GroupSpec& spec) {
    py::dict out;
    out["family"] = spec.family == GroupSpec::Family::E
                        ? "E"
                        : (spec.family == GroupSpec::Family::F ? "F" : "Aut");
    out["d"] = spec.degree;
    out["m"] = spec.family == GroupSpec::Family::Full ? py::object(py::none())
                                                      : py::object(py::int_(spec.m));
    out["mp"] = spec.mp ? py::object(py::int_(*spec.mp)) : py::object(py::none());
    out["spec"] = spec.str();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toolkit for d-ary tree automorphism towers and rational dynamics";

    py::register_exception<DomainError>(m, "DomainError");

    // Tree labeling.
    m.def(
        "leaf_index",
        [](const std::vector<int>& path, int d, int n) {
            return leaf_index(path, TreeShape{d, n});
        },
        py::arg("path"), py::arg("d"), py::arg("n"));
    m.def(
        "path_of_index",
        [](long long i, int d, int n) { return path_of_index(i, TreeShape{d, n}); },
        py::arg("i"), py::arg("d"), py::arg("n"));
    m.def(
        "same_subtree",
        [](long long i, long long j, int level, int d, int n) {
            return same_subtree(i, j, level, TreeShape{d, n});
        },
        py::arg("i"), py::arg("j"), py::arg("level"), py::arg("d"), py::arg("n"));

    // Automorphisms.
    py::class_<TreeAutomorphism>(m, "Automorphism")
        .def_static(
            "identity", [](int d, int n) { return TreeAutomorphism::identity({d, n}); },
            py::arg("d"), py::arg("n"))
        .def_static(
            "random",
            [](int d, int n, std::uint64_t seed) {
                return random_automorphism(TreeShape{d, n}, seed);
            },
            py::arg("d"), py::arg("n"), py::arg("seed"))
        .def_static("from_json", &automorphism_from_json, py::arg("text"))
        .def_property_readonly("degree", &TreeAutomorphism::degree)
        .def_property_readonly("depth", &TreeAutomorphism::depth)
        .def("compose", [](const TreeAutomorphism& a, const TreeAutomorphism& b) {
            return compose(a, b);
        })
        .def("__mul__", [](const TreeAutomorphism& a, const TreeAutomorphism& b) {
            return compose(a, b);
        })
        .def("inverse", [](const TreeAutomorphism& a) { return inverse(a); })
        .def("act", &act_on_leaf, py::arg("leaf"))
        .def("leaf_images",
             [](const TreeAutomorphism& a) { return leaf_permutation(a).images(); })
        .def("truncate", [](const TreeAutomorphism& a, int level) { return truncate(a, level); },
             py::arg("level"))
        .def("is_identity", &TreeAutomorphism::is_identity)
        .def("to_json", [](const TreeAutomorphism& a) { return to_json(a); })
        .def("__eq__", [](const TreeAutomorphism& a,
                          const TreeAutomorphism& b) { return a == b; })
        .def("__repr__", [](const TreeAutomorphism& a) { return to_json(a); });

    m.def(
        "from_leaf_images",
        [](const std::vector<int>& images, int d, int n) {
            return from_leaf_permutation(Permutation(images), TreeShape{d, n});
        },
        py::arg("images"), py::arg("d"), py::arg("n"));

    // Signs.
    m.def("sign", [](const TreeAutomorphism& a) { return sign(a); });
    m.def("sign_at", &sign_at, py::arg("a"), py::arg("level"));
    m.def("sign_below", &sign_below, py::arg("a"), py::arg("level"));
    m.def("sign_e", &sign_e, py::arg("a"), py::arg("m"), py::arg("mp"));
    m.def("sign_f", &sign_f, py::arg("a"), py::arg("m"), py::arg("mp"));

    // Tower groups.
    m.def(
        "is_member",
        [](const TreeAutomorphism& a, const std::string& spec) {
            return is_member(a, spec_of(spec));
        },
        py::arg("a"), py::arg("spec"));
    m.def(
        "order",
        [](const std::string& spec, int n) { return big_int(group_order(spec_of(spec), n)); },
        py::arg("spec"), py::arg("n"));
    m.def(
        "enumerate_members",
        [](const std::string& spec, int n, long long limit) {
            return enumerate_members(spec_of(spec), n, limit);
        },
        py::arg("spec"), py::arg("n"), py::arg("limit") = 1'000'000);
    m.def(
        "random_member",
        [](const std::string& spec, int n, std::uint64_t seed) {
            return random_member(spec_of(spec), n, seed);
        },
        py::arg("spec"), py::arg("n"), py::arg("seed"));
    m.def(
        "sample_members",
        [](const std::string& spec, int n, std::uint64_t seed, int count) {
            Rng rng(seed);
            std::vector<TreeAutomorphism> out;
            out.reserve(static_cast<std::size_t>(count));
            const auto parsed = spec_of(spec);
            for (int k = 0; k < count; ++k) out.push_back(random_member(parsed, n, rng));
            return out;
        },
        py::arg("spec"), py::arg("n"), py::arg("seed"), py::arg("count"));
    m.def(
        "leaf_orbit",
        [](const std::string& spec, int n, long long leaf, long long budget) {
            return leaf_orbit(spec_of(spec), n, leaf, budget);
        },
        py::arg("spec"), py::arg("n"), py::arg("leaf"), py::arg("budget") = 1'000'000);

    // Structure analysis.
    m.def(
        "chief_series",
        [](const std::string& spec, int n, long long budget) {
            const auto series = chief_series(materialize(spec_of(spec), n, budget));
            py::dict out;
            out["orders"] = series.orders;
            out["unique"] = series.unique;
            out["factors"] = series.factor_hints;
            return out;
        },
        py::arg("spec"), py::arg("n"), py::arg("budget") = 1'000'000);
    m.def(
        "abelian_invariants",
        [](const std::string& spec, int n, long long budget) {
            return abelian_invariants(materialize(spec_of(spec), n, budget));
        },
        py::arg("spec"), py::arg("n"), py::arg("budget") = 1'000'000);
    m.def(
        "rank",
        [](const std::string& spec, int n, int max_k, int trials, std::uint64_t seed,
           long long budget) -> py::object {
            const auto table = materialize(spec_of(spec), n, budget);
            for (int k = 1; k <= max_k; ++k)
                if (find_generating_set(table, k, trials, seed)) return py::int_(k);
            return py::none();
        },
        py::arg("spec"), py::arg("n"), py::arg("max_k") = 4, py::arg("trials") = 1000,
        py::arg("seed") = 1, py::arg("budget") = 1'000'000);
    m.def(
        "normalize_tuple",
        [](const std::vector<int>& tuple) {
            const auto norm = normalize_tuple(tuple);
            py::list moves;
            for (const auto& move : norm.moves) {
                py::dict rec;
                rec["op"] = move.kind == TupleMove::Kind::Rotate3 ? "rotate3" : "shift_multiply";
                if (move.kind == TupleMove::Kind::Rotate3) rec["index"] = move.index;
                moves.append(rec);
            }
            return py::make_tuple(norm.result, moves);
        },
        py::arg("tuple"));
    m.def("inverting_conjugator", &inverting_conjugator, py::arg("a"));
    m.def(
        "commutator_witness",
        [](const TreeAutomorphism& s, const std::string& spec, std::uint64_t seed) {
            return commutator_witness(s, spec_of(spec), seed);
        },
        py::arg("a"), py::arg("spec"), py::arg("seed") = 1);

    // Rational dynamics.
    m.def(
        "iterate_poly",
        [](const std::string& poly, int n, int degree_budget) {
            return iterate(poly_of(poly), n, degree_budget).str();
        },
        py::arg("poly"), py::arg("n"), py::arg("degree_budget") = kDefaultDegreeBudget);
    m.def(
        "critical_points",
        [](const std::string& poly) {
            py::list out;
            for (const auto& c : critical_points(poly_of(poly))) out.append(format_rational(c));
            return out;
        },
        py::arg("poly"));
    m.def(
        "detect_pcf",
        [](const std::string& poly, int max_steps) -> py::object {
            const auto orbit = detect_pcf(poly_of(poly), max_steps);
            if (!orbit) return py::none();
            return orbit_dict(*orbit);
        },
        py::arg("poly"), py::arg("max_steps") = 64);
    m.def(
        "classify",
        [](const std::string& poly, int max_steps) {
            const auto c = classify_overgroup(orbit_of(poly, max_steps));
            py::dict out = spec_dict(c.spec);
            out["L"] = c.tail;
            out["O"] = c.period;
            out["flags"] = c.flags;
            return out;
        },
        py::arg("poly"), py::arg("max_steps") = 64);
    m.def(
        "square_discriminant_level",
        [](const std::string& poly, int max_steps) {
            return square_discriminant_level(orbit_of(poly, max_steps));
        },
        py::arg("poly"), py::arg("max_steps") = 64);
    m.def(
        "discriminant",
        [](const std::string& poly, const std::string& alpha, int n, int degree_budget) {
            const auto report =
                discriminant(poly_of(poly), parse_rational(alpha), n, degree_budget);
            py::dict out;
            out["value"] = format_rational(report.value);
            out["square_part"] = format_rational(report.square_part);
            out["potential_nonsquare"] = format_rational(report.potential_nonsquare);
            out["is_square"] = report.is_square;
            return out;
        },
        py::arg("poly"), py::arg("alpha"), py::arg("n"),
        py::arg("degree_budget") = kDefaultDegreeBudget);
    m.def(
        "resultant",
        [](const std::string& p, const std::string& q) {
            return format_rational(resultant(poly_of(p), poly_of(q)));
        },
        py::arg("p"), py::arg("q"));
    m.def("kronecker_like", &kronecker_like, py::arg("d"));

    // p-adic checks.
    m.def(
        "valuation",
        [](const std::string& x, long long p) -> py::object {
            const auto v = valuation(parse_rational(x), p);
            if (!v) return py::none();
            return py::int_(*v);
        },
        py::arg("x"), py::arg("p"));
    m.def(
        "newton_polygon",
        [](const std::string& poly, long long p) {
            py::list out;
            for (const auto& s : newton_polygon(poly_of(poly), p))
                out.append(py::make_tuple(format_rational(s.slope), s.length));
            return out;
        },
        py::arg("poly"), py::arg("p"));
    m.def(
        "eisenstein_after_shift",
        [](const std::string& poly, long long p, const std::string& shift) {
            return eisenstein_after_shift(poly_of(poly), p, parse_rational(shift));
        },
        py::arg("poly"), py::arg("p"), py::arg("shift") = "0");
    m.def(
        "irreducibility_certificate",
        [](const std::string& poly, const std::string& alpha, int n,
           int degree_budget) -> py::object {
            const auto cert = irreducibility_certificate(poly_of(poly), parse_rational(alpha),
                                                         n, degree_budget);
            if (!cert) return py::none();
            py::dict out;
            out["prime"] = cert->prime;
            out["shift"] = format_rational(cert->shift);
            out["n"] = cert->level;
            return out;
        },
        py::arg("poly"), py::arg("alpha"), py::arg("n"),
        py::arg("degree_budget") = kDefaultDegreeBudget);
    m.def(
        "condition_check",
        [](const std::string& alpha) {
            const auto w = condition_check(parse_rational(alpha));
            py::dict out;
            out["satisfied"] = w.satisfied;
            out["at3"] = w.at_three;
            out["at2"] = w.at_two;
            return out;
        },
        py::arg("alpha"));

    // Verification.
    m.def(
        "run_verify",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : run_verify(suite)) {
                py::dict rec;
                rec["id"] = r.id;
                rec["detail"] = r.detail;
                rec["pass"] = r.pass;
                rec["seconds"] = r.seconds;
                out.append(rec);
            }
            return out;
        },
        py::arg("suite") = "all");
}
