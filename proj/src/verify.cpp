#include "arbor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "arbor/dynamics.hpp"
#include "arbor/errors.hpp"
#include "arbor/group_structure.hpp"
#include "arbor/overgroups.hpp"
#include "arbor/padic.hpp"
#include "arbor/signs.hpp"

namespace arbor {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    std::string id;
    std::vector<std::string> suites;
    std::function<void(CriterionResult&)> body;
};

void expect(CriterionResult& r, bool ok, const std::string& what) {
    if (!ok) {
        r.pass = false;
        r.detail += (r.detail.empty() ? "" : "; ") + ("FAILED " + what);
    }
}

void note(CriterionResult& r, const std::string& what) {
    r.detail += (r.detail.empty() ? "" : "; ") + what;
}

// --- C1: order reproduction by exhaustive filter ---------------------------

void run_c1(CriterionResult& r) {
    const auto start = Clock::now();
    const auto all32 = enumerate_all({3, 2}, 2000);
    long long count32 = 0;
    for (const auto& a : all32)
        if (sign_at(a, 2) == 1) ++count32;
    const Int expected32 = group_order(GroupSpec::parse("E:d=3,m=2"), 2);
    expect(r, static_cast<long long>(all32.size()) == 1296, "|Aut(T2(3))| == 1296");
    expect(r, Int(count32) == expected32, "sgn2 filter == order formula at (3,2)");
    expect(r, count32 == 648, "sgn2 filter count == 648");

    const auto spec_f = GroupSpec::parse("F:d=2,m=2,mp=1");
    const auto all22 = enumerate_all({2, 2}, 100);
    long long count22 = 0;
    for (const auto& a : all22)
        if (is_member(a, spec_f)) ++count22;
    const Int expected22 = group_order(spec_f, 2);
    expect(r, static_cast<long long>(all22.size()) == 8, "|Aut(T2(2))| == 8");
    expect(r, Int(count22) == expected22, "F(2,1) filter == order formula at (2,2)");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    expect(r, secs < 5.0, "runtime < 5 s");
    note(r, "E_2^2(3): enumerated " + std::to_string(count32) + " == formula " +
                expected32.str() + "; F_2^(2,1)(2): enumerated " + std::to_string(count22) +
                " == formula " + expected22.str() + " over " + std::to_string(all22.size()) +
                " elements");
}

// --- C2: order recursion matches enumeration everywhere enumerable ---------

void run_c2(CriterionResult& r) {
    const std::vector<std::string> specs = {"E:d=3,m=2", "E:d=3,m=1", "F:d=2,m=2,mp=1",
                                            "E:d=2,m=2,mp=1"};
    for (const auto& text : specs) {
        const auto spec = GroupSpec::parse(text);
        const Int dfact = factorial(spec.degree);
        for (int n = 1; n <= 3; ++n) {
            const Int formula = group_order(spec, n);
            if (n >= spec.m) {
                Int recursion = group_order(spec, n - 1);
                Int power = 1;
                for (int e = 0; e < spec.degree; ++e) power *= recursion;
                recursion = power * dfact / 2;
                expect(r, recursion == formula,
                       text + " n=" + std::to_string(n) + ": recursion == formula");
            }
            if (formula <= 20000) {
                const auto members = enumerate_members(spec, n, 20000);
                expect(r, Int(static_cast<long long>(members.size())) == formula,
                       text + " n=" + std::to_string(n) + ": enumerated == formula");
                for (const auto& a : members)
                    if (!is_member(a, spec)) {
                        expect(r, false, text + ": enumerated element fails membership");
                        break;
                    }
            }
        }
    }
    const Int pinned = group_order(GroupSpec::parse("E:d=3,m=2"), 3);
    expect(r, pinned == Int(816293376), "order(E:d=3,m=2, n=3) == 816293376");
    note(r, "order(E:d=3,m=2, n=3) = " + pinned.str());
}

// --- C3: the sign identity lemma, by parity --------------------------------

void run_c3(CriterionResult& r) {
    const std::vector<std::pair<int, int>> pairs = {{2, 1}, {3, 1}, {3, 2}};
    long long violations = 0;
    for (int d : {3, 2}) {
        Rng rng(0x5139a1u + static_cast<unsigned>(d));
        for (int t = 0; t < 10'000; ++t) {
            const auto a = random_automorphism({d, 4}, rng);
            for (const auto& [m, mp] : pairs) {
                const int se = sign_e(a, m, mp);
                const int sf = sign_f(a, m, mp);
                const int sm = sign_at(a, m);
                const int smp = sign_at(a, mp);
                if (se * sf != smp) ++violations;
                if (d % 2 == 1) {
                    if (se != sm) ++violations;
                    if (sf != sm * smp) ++violations;
                } else {
                    if (se != sm * smp) ++violations;
                    if (sf != sm) ++violations;
                }
            }
        }
    }
    expect(r, violations == 0, "sign identities hold");
    note(r, "violations = " + std::to_string(violations) +
                " over 2x10^4 elements x 3 level pairs");
}

// --- C4: recursive sign == permutation parity, and clearly faster ----------

void run_c4(CriterionResult& r) {
    for (const auto& a : enumerate_all({3, 2}, 2000))
        if (sign(a) != parity(leaf_permutation(a))) {
            expect(r, false, "exhaustive parity match at (3,2)");
            break;
        }
    std::vector<TreeAutomorphism> sample35;
    std::vector<TreeAutomorphism> sample26;
    {
        Rng rng(0xc4a11u);
        for (int t = 0; t < 1000; ++t) sample35.push_back(random_automorphism({3, 5}, rng));
        for (int t = 0; t < 1000; ++t) sample26.push_back(random_automorphism({2, 6}, rng));
    }
    for (const auto& a : sample35)
        if (sign(a) != parity(leaf_permutation(a))) {
            expect(r, false, "parity match at (3,5)");
            break;
        }
    for (const auto& a : sample26)
        if (sign(a) != parity(leaf_permutation(a))) {
            expect(r, false, "parity match at (2,6)");
            break;
        }

    volatile int sink = 0;
    // One untimed pass over both routes so neither side is measured cold.
    for (const auto& a : sample35) sink = sink + sign(a) + parity(leaf_permutation(a));
    const auto t0 = Clock::now();
    for (const auto& a : sample35) sink = sink + sign(a);
    const auto t1 = Clock::now();
    for (const auto& a : sample35) sink = sink + parity(leaf_permutation(a));
    const auto t2 = Clock::now();
    (void)sink;
    const double fast = std::chrono::duration<double>(t1 - t0).count();
    const double slow = std::chrono::duration<double>(t2 - t1).count();
    const double ratio = fast > 0 ? slow / fast : 1e9;
    expect(r, ratio >= 10.0, "recursive sign at least 10x faster than expansion at (3,5)");
    std::ostringstream os;
    os.precision(3);
    os << "speedup x" << ratio << " over 10^3 elements";
    note(r, os.str());
}

// --- C5: chief series of the 648-element tower group -----------------------

void run_c5(CriterionResult& r) {
    const auto start = Clock::now();
    const auto spec = GroupSpec::parse("E:d=3,m=2");
    const auto table = materialize(spec, 2, 1'000'000);
    const auto series = chief_series(table);
    const std::vector<long long> expected{1, 27, 108, 324, 648};
    expect(r, series.orders == expected, "orders == [1, 27, 108, 324, 648]");
    expect(r, series.unique, "chief series unique");

    // Second term must be exactly the bottom alternating tuples.
    std::vector<Permutation> alt;
    for (const auto& p : all_permutations(3))
        if (parity(p) == 1) alt.push_back(p);
    std::vector<int> m2;
    const TreeShape leaf{3, 0};
    for (const auto& a0 : alt)
        for (const auto& a1 : alt)
            for (const auto& a2 : alt) {
                std::vector<TreeAutomorphism> children;
                for (const auto& p : {a0, a1, a2})
                    children.emplace_back(p, std::vector<TreeAutomorphism>(
                                                 3, TreeAutomorphism::identity(leaf)));
                const TreeAutomorphism m(Permutation::identity(3), std::move(children));
                m2.push_back(table.index_of(leaf_permutation(m)));
            }
    std::sort(m2.begin(), m2.end());
    expect(r, series.subgroups.size() >= 2 && series.subgroups[1] == m2,
           "second term == bottom alternating tuples (order 27)");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    expect(r, secs < 300.0, "runtime < 5 min");
    std::string orders;
    for (long long o : series.orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
    std::string hints;
    for (const auto& h : series.factor_hints) hints += (hints.empty() ? "" : ",") + h;
    note(r, "chief series [" + orders + "] " + (series.unique ? "unique" : "non-unique") +
                "; factors " + hints);
}

// --- C6: rank two, exactly ---------------------------------------------------

void run_c6(CriterionResult& r) {
    const auto table = materialize(GroupSpec::parse("E:d=3,m=2"), 2, 1'000'000);
    const auto two = find_generating_set(table, 2, 1000, 0x9221u);
    expect(r, two.has_value(), "2-element generating set found within 10^3 trials");
    if (two)
        expect(r,
               static_cast<int>(subgroup_closure(table, *two).size()) == table.size(),
               "closure of the pair is the whole group");
    const auto one = find_generating_set(table, 1, 1000, 0x9222u);
    expect(r, !one.has_value(), "no single generator (non-cyclic)");
    note(r, "rank == 2");
}

// --- C7: abelianization of the full level-2 groups --------------------------

void run_c7(CriterionResult& r) {
    const auto inv3 = abelian_invariants(materialize(GroupSpec::parse("Aut:d=3"), 2, 5000));
    const auto inv2 = abelian_invariants(materialize(GroupSpec::parse("Aut:d=2"), 2, 5000));
    const std::vector<long long> expected{2, 2};
    expect(r, inv3 == expected, "Aut(T2(3)) invariants == [2,2]");
    expect(r, inv2 == expected, "Aut(T2(2)) invariants == [2,2]");
}

// --- C8: sign-tuple normalization, exhaustively -----------------------------

void run_c8(CriterionResult& r) {
    for (int d : {3, 5, 7}) {
        const long long cap = static_cast<long long>(d) * (1ll << d);
        std::vector<int> target(static_cast<std::size_t>(d), 1);
        target[0] = target[1] = -1;
        int checked = 0;
        for (long long mask = 1; mask < (1ll << d); ++mask) {
            std::vector<int> tuple(static_cast<std::size_t>(d), 1);
            int negatives = 0;
            for (int i = 0; i < d; ++i)
                if (mask & (1ll << i)) {
                    tuple[static_cast<std::size_t>(i)] = -1;
                    ++negatives;
                }
            if (negatives % 2 != 0 || negatives == 0) continue;
            ++checked;
            const auto norm = normalize_tuple(tuple);
            expect(r, norm.result == target, "d=" + std::to_string(d) + " reaches the target");
            expect(r, static_cast<long long>(norm.moves.size()) <= cap,
                   "d=" + std::to_string(d) + " within d*2^d moves");
            std::vector<int> replay = tuple;
            for (const auto& move : norm.moves) replay = apply_move(replay, move);
            expect(r, replay == norm.result, "d=" + std::to_string(d) + " move log replays");
            if (!r.pass) return;
        }
        note(r, "d=" + std::to_string(d) + ": " + std::to_string(checked) + " tuples");
    }
}

// --- C9: discriminant recursion against the resultant oracle ----------------

void run_c9(CriterionResult& r) {
    const auto f = RationalPoly::parse("1,0,-3,2");
    for (const auto& alpha : {Rational(-1), Rational(3), Rational(1, 2)}) {
        for (int n = 1; n <= 2; ++n) {
            const auto report = discriminant(f, alpha, n);
            const auto oracle =
                discriminant_resultant(iterate(f, n) - RationalPoly::constant(alpha));
            expect(r, report.value == oracle,
                   "recursion == resultant oracle at alpha=" + format_rational(alpha) +
                       ", n=" + std::to_string(n));
            const auto square_check = exact_sqrt(report.value / report.potential_nonsquare);
            expect(r, square_check.has_value(), "PNF soundness");
        }
    }
    expect(r, discriminant(f, Rational(-1), 1).value == Rational(-216), "disc(f+1) == -216");
    expect(r, discriminant(f, Rational(3), 1).value == Rational(-648), "disc(f-3) == -648");
    const Rational pinned(int_pow(Int(2), 36) * int_pow(Int(3), 22));
    const auto level2 = discriminant(f, Rational(3), 2);
    expect(r, level2.value == pinned, "disc(f^2-3) == 2^36 * 3^22");
    expect(r, level2.is_square, "disc(f^2-3) is a square");
    note(r, "disc(f^2-3) = " + format_rational(level2.value) + " = 2^36*3^22");
}

// --- C10: the classification router ------------------------------------------

void run_c10(CriterionResult& r) {
    const auto f = RationalPoly::parse("1,0,-3,2");
    const auto orbit_f = detect_pcf(f, 64);
    expect(r, orbit_f.has_value(), "2z^3-3z^2+1 detected as PCF");
    if (orbit_f) {
        expect(r, orbit_f->tail == 0 && orbit_f->period == 1, "(L,O) == (0,1)");
        const auto c = classify_overgroup(*orbit_f);
        expect(r,
               c.spec == GroupSpec{GroupSpec::Family::E, 3, 2, std::nullopt} &&
                   c.flags.empty(),
               "classified E:d=3,m=2 with no flags");
    }
    const auto square = detect_pcf(RationalPoly::parse("0,0,1"), 64);
    expect(r, square.has_value(), "z^2 detected as PCF");
    if (square) {
        const auto c = classify_overgroup(*square);
        expect(r, c.spec == GroupSpec{GroupSpec::Family::E, 2, 2, 1},
               "z^2 classified E:d=2,m=2,mp=1");
    }
    const auto shifted = detect_pcf(RationalPoly::parse("-2,0,1"), 64);
    expect(r, shifted.has_value(), "z^2-2 detected as PCF");
    if (shifted) {
        expect(r, shifted->tail == 2 && shifted->period == 1, "z^2-2 has (L,O) == (2,1)");
        const auto c = classify_overgroup(*shifted);
        expect(r, c.spec == GroupSpec{GroupSpec::Family::E, 2, 3, 2},
               "z^2-2 classified E:d=2,m=3,mp=2");
    }

    // Even degree with tail exactly 1 is representable only synthetically
    // (for z^2+c the sole preimage of c is 0, so a periodic c forces L=0).
    CriticalOrbit probe;
    probe.degree = 2;
    probe.critical = {Rational(0)};
    probe.tail = 1;
    probe.period = 1;
    bool uncovered_fired = false;
    try {
        classify_overgroup(probe);
    } catch (const DomainError& e) {
        uncovered_fired = e.kind() == std::string(errkind::uncovered_case);
    }
    expect(r, uncovered_fired, "even d with L=1 raises UncoveredCase");

    CriticalOrbit odd_tail;
    odd_tail.degree = 3;
    odd_tail.critical = {Rational(0), Rational(1)};
    odd_tail.tail = 2;
    odd_tail.period = 1;
    const auto c = classify_overgroup(odd_tail);
    expect(r, c.spec == GroupSpec{GroupSpec::Family::F, 3, 3, 1},
           "odd d, L=2, O=1 routes to F:d=3,m=3,mp=1");
    expect(r, !c.flags.empty(), "statement-vs-proof discrepancy flags fire for odd d, L>1");
    note(r, "flags: " + (c.flags.empty() ? "-" : c.flags.front() + ", ..."));
}

// --- C11: desk-scale necessary conditions for the cubic example --------------

void run_c11(CriterionResult& r) {
    const auto start = Clock::now();
    const auto f = RationalPoly::parse("1,0,-3,2");
    const auto witness = condition_check(Rational(3));
    expect(r, witness.satisfied, "condition holds at alpha=3");
    for (int n = 1; n <= 3; ++n) {
        const auto cert = irreducibility_certificate(f, Rational(3), n);
        expect(r, cert.has_value(), "Eisenstein certificate at n=" + std::to_string(n));
        if (cert)
            expect(r, eisenstein_after_shift(iterate(f, n) - RationalPoly::constant(Rational(3)),
                                             cert->prime, cert->shift),
                   "certificate validates at n=" + std::to_string(n));
    }
    expect(r, !discriminant(f, Rational(3), 1).is_square, "disc(f-3) is not a square");
    expect(r, discriminant(f, Rational(3), 2).is_square, "disc(f^2-3) is a square");
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    expect(r, secs < 30.0, "runtime < 30 s");
}

// --- C12: the ramification polygon -------------------------------------------

void run_c12(CriterionResult& r) {
    const auto f = RationalPoly::parse("1,0,-3,2");
    const auto segments = newton_polygon(f - RationalPoly::constant(Rational(3)), 2);
    const std::vector<PolygonSegment> expected{{Rational(-1, 2), 2}, {Rational(1), 1}};
    expect(r, segments == expected, "polygon of f-3 at 2 == [(-1/2, 2), (1, 1)]");
}

// --- C13: sampling coherence --------------------------------------------------

void run_c13(CriterionResult& r) {
    const auto spec = GroupSpec::parse("E:d=3,m=2");
    {
        Rng rng(0xe4421u);
        for (int t = 0; t < 10'000; ++t) {
            if (!is_member(random_member(spec, 4, rng), spec)) {
                expect(r, false, "uniform sample fails membership at n=4");
                break;
            }
        }
    }
    std::map<std::string, long long> counts;
    {
        Rng rng(0xe4422u);
        for (int t = 0; t < 64'800; ++t)
            ++counts[leaf_permutation(random_member(spec, 2, rng)).key()];
    }
    expect(r, counts.size() == 648, "all 648 elements sampled");
    long long worst = 0;
    for (const auto& [key, count] : counts) worst = std::max(worst, std::abs(count - 100));
    expect(r, worst <= 40, "per-element frequency within 100 +- 40");
    note(r, "worst deviation " + std::to_string(worst) + " of 40 allowed");
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all = {
        {"C1 order-reproduction", {"orders"}, run_c1},
        {"C2 order-recursion", {"orders"}, run_c2},
        {"C3 sign-identities", {"signs"}, run_c3},
        {"C4 sign-vs-parity", {"signs"}, run_c4},
        {"C5 chief-series", {"structure"}, run_c5},
        {"C6 rank", {"structure"}, run_c6},
        {"C7 abelianization", {"structure"}, run_c7},
        {"C8 tuple-normalization", {"structure"}, run_c8},
        {"C9 discriminant-recursion", {"dynamics"}, run_c9},
        {"C10 pcf-classification", {"dynamics"}, run_c10},
        {"C11 base-point-conditions", {"padic"}, run_c11},
        {"C12 newton-polygon", {"padic"}, run_c12},
        {"C13 sampling-coherence", {"orders"}, run_c13},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {"signs",    "orders", "structure",
                                                    "dynamics", "padic",  "all"};
    return suites;
}

std::vector<CriterionResult> run_verify(const std::string& suite) {
    if (std::find(verify_suites().begin(), verify_suites().end(), suite) ==
        verify_suites().end())
        fail(errkind::unknown_suite, "unknown suite '" + suite + "'");
    std::vector<CriterionResult> results;
    for (const auto& check : checks()) {
        if (suite != "all" &&
            std::find(check.suites.begin(), check.suites.end(), suite) == check.suites.end())
            continue;
        CriterionResult r;
        r.id = check.id;
        r.pass = true;
        const auto start = Clock::now();
        try {
            check.body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace arbor
