#include "arbor/group_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arbor/errors.hpp"
#include "arbor/signs.hpp"

namespace arbor {

GroupTable materialize(const GroupSpec& spec, int depth, long long limit) {
    const auto members = enumerate_members(spec, depth, limit);
    std::vector<Permutation> perms;
    perms.reserve(members.size());
    for (const auto& a : members) perms.push_back(leaf_permutation(a));
    return GroupTable::from_elements(std::move(perms));
}

namespace {

std::vector<char> member_mask(const GroupTable& g, const std::vector<int>& members) {
    std::vector<char> mask(static_cast<std::size_t>(g.size()), 0);
    for (int x : members) mask[static_cast<std::size_t>(x)] = 1;
    return mask;
}

/// Generators of the subgroup spanned by `members`, grown greedily.
std::vector<int> small_generating_subset(const GroupTable& g, const std::vector<int>& members) {
    std::vector<int> gens;
    std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
    covered[static_cast<std::size_t>(g.identity())] = 1;
    std::size_t covered_count = 1;
    for (int x : members) {
        if (covered[static_cast<std::size_t>(x)]) continue;
        gens.push_back(x);
        const auto closure = subgroup_closure(g, gens);
        for (int y : closure) covered[static_cast<std::size_t>(y)] = 1;
        covered_count = closure.size();
        if (covered_count == members.size()) break;
    }
    return gens;
}

/// Smallest normal subgroup containing the given generators: close under
/// the group operation, then under conjugation by the table's generators,
/// until stable. With probe >= 0, stops early once probe is inside.
std::vector<int> normal_closure_impl(const GroupTable& g, std::vector<int> gens, int probe,
                                     bool* probe_found) {
    auto members = subgroup_closure(g, gens);
    auto mask = member_mask(g, members);
    if (probe_found) *probe_found = probe >= 0 && mask[static_cast<std::size_t>(probe)];
    bool changed = true;
    while (changed) {
        if (probe_found && *probe_found) return members;
        changed = false;
        for (std::size_t i = 0; i < members.size() && !changed; ++i) {
            for (int gg : g.generators()) {
                const int c = g.conj(gg, members[i]);
                if (!mask[static_cast<std::size_t>(c)]) {
                    gens.push_back(c);
                    members = subgroup_closure(g, gens);
                    mask = member_mask(g, members);
                    if (probe_found)
                        *probe_found = probe >= 0 && mask[static_cast<std::size_t>(probe)];
                    changed = true;
                    break;
                }
            }
        }
    }
    return members;
}

}  // namespace

std::vector<int> normal_closure(const GroupTable& g, int element) {
    return normal_closure_impl(g, {element}, -1, nullptr);
}

std::vector<int> normal_closure_over(const GroupTable& g, const std::vector<int>& base,
                                     int element) {
    auto gens = small_generating_subset(g, base);
    gens.push_back(element);
    return normal_closure_impl(g, std::move(gens), -1, nullptr);
}

bool normal_closure_contains(const GroupTable& g, int element, int probe) {
    bool found = false;
    const auto members = normal_closure_impl(g, {element}, probe, &found);
    if (found) return true;
    return std::binary_search(members.begin(), members.end(), probe);
}

namespace {

/// All inclusion-minimal normal subgroups strictly above `base` (which must
/// be normal), from normal closures of class representatives outside it.
std::vector<std::vector<int>> minimal_normal_over(const GroupTable& g,
                                                  const std::vector<int>& base,
                                                  const std::vector<int>& class_reps) {
    const auto base_mask = member_mask(g, base);
    const auto base_gens = small_generating_subset(g, base);
    std::vector<std::vector<int>> candidates;
    for (int rep : class_reps) {
        if (base_mask[static_cast<std::size_t>(rep)]) continue;
        auto gens = base_gens;
        gens.push_back(rep);
        auto k = normal_closure_impl(g, std::move(gens), -1, nullptr);
        if (std::find(candidates.begin(), candidates.end(), k) == candidates.end())
            candidates.push_back(std::move(k));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    std::vector<std::vector<int>> minimal;
    for (const auto& k : candidates) {
        bool dominated = false;
        for (const auto& m : minimal) {
            if (m.size() < k.size() && std::includes(k.begin(), k.end(), m.begin(), m.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(k);
    }
    return minimal;
}

long long smallest_prime_factor(long long n) {
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

std::string factor_hint(const GroupTable& g, const std::vector<int>& lower,
                        const std::vector<int>& upper) {
    const auto lower_mask = member_mask(g, lower);
    const long long q = static_cast<long long>(upper.size() / lower.size());
    if (q == 1) return "trivial";

    // Coset representatives of lower in upper.
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> reps;
    for (int x : upper) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        reps.push_back(x);
        for (int n : lower) seen[static_cast<std::size_t>(g.mult(n, x))] = 1;
    }
    auto same_coset = [&](int a, int b) {
        return lower_mask[static_cast<std::size_t>(g.mult(a, g.inv(b)))] != 0;
    };
    bool abelian = true;
    for (std::size_t i = 0; i < reps.size() && abelian; ++i)
        for (std::size_t j = i + 1; j < reps.size() && abelian; ++j)
            abelian = same_coset(g.mult(reps[i], reps[j]), g.mult(reps[j], reps[i]));
    if (!abelian) return "nonabelian(" + std::to_string(q) + ")";

    const long long p = smallest_prime_factor(q);
    long long pk = 1;
    int k = 0;
    while (pk < q) {
        pk *= p;
        ++k;
    }
    bool elementary = pk == q;
    for (int r : reps) {
        if (!elementary) break;
        int power = g.identity();
        for (long long t = 0; t < p; ++t) power = g.mult(power, r);
        elementary = lower_mask[static_cast<std::size_t>(power)] != 0;
    }
    if (!elementary) return "abelian(" + std::to_string(q) + ")";
    return k == 1 ? "C" + std::to_string(p)
                  : "C" + std::to_string(p) + "^" + std::to_string(k);
}

}  // namespace

std::vector<std::vector<int>> minimal_normal_subgroups(const GroupTable& g) {
    return minimal_normal_over(g, {g.identity()}, conjugacy_class_reps(g));
}

ChiefSeries chief_series(const GroupTable& g) {
    const auto reps = conjugacy_class_reps(g);
    ChiefSeries out;
    out.unique = true;
    std::vector<int> current{g.identity()};
    out.subgroups.push_back(current);
    out.orders.push_back(1);
    while (static_cast<int>(current.size()) < g.size()) {
        auto minimal = minimal_normal_over(g, current, reps);
        if (minimal.empty())
            fail(errkind::invalid_argument, "no normal subgroup above the current term");
        if (minimal.size() != 1) out.unique = false;
        current = minimal.front();  // smallest, deterministic
        out.subgroups.push_back(current);
        out.orders.push_back(static_cast<long long>(current.size()));
    }
    for (std::size_t i = 0; i + 1 < out.subgroups.size(); ++i)
        out.factor_hints.push_back(factor_hint(g, out.subgroups[i], out.subgroups[i + 1]));
    return out;
}

std::optional<std::vector<int>> find_generating_set(const GroupTable& g, int k, int trials,
                                                    std::uint64_t seed) {
    if (k < 1) return g.size() == 1 ? std::make_optional(std::vector<int>{}) : std::nullopt;
    const auto generates = [&](const std::vector<int>& gens) {
        return static_cast<int>(subgroup_closure(g, gens).size()) == g.size();
    };
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<int> gens;
        gens.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            gens.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.size()))));
        if (generates(gens)) return gens;
    }
    // Deterministic fallback sweep over tuples ordered by cycle type, so a
    // failure is reproducible rather than a sampling accident.
    double tuple_count = 1;
    for (int i = 0; i < k; ++i) tuple_count *= g.size();
    if (tuple_count > 500'000) return std::nullopt;

    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    auto type_key = [&](int idx) {
        std::vector<int> lens;
        for (const auto& c : cycles(g.element(idx))) lens.push_back(static_cast<int>(c.size()));
        std::sort(lens.begin(), lens.end(), std::greater<>());
        return lens;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return type_key(a) > type_key(b); });
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        std::vector<int> gens;
        gens.reserve(static_cast<std::size_t>(k));
        for (int v : idx) gens.push_back(order[static_cast<std::size_t>(v)]);
        if (generates(gens)) return gens;
        int pos = k - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == g.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return std::nullopt;
}

std::vector<long long> abelian_invariants(const GroupTable& g) {
    // Commutator subgroup: the set of all commutators is conjugation-closed,
    // so its span is the normal subgroup [G,G].
    std::vector<char> comm_mask(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> comms;
    for (int i = 0; i < g.size(); ++i) {
        for (int j = 0; j < g.size(); ++j) {
            const int c = g.mult(g.mult(i, j), g.inv(g.mult(j, i)));
            if (!comm_mask[static_cast<std::size_t>(c)]) {
                comm_mask[static_cast<std::size_t>(c)] = 1;
                comms.push_back(c);
            }
        }
    }
    const auto derived = subgroup_closure(g, comms);
    const auto derived_mask = member_mask(g, derived);

    // Label cosets of [G,G]; the quotient is abelian of order q.
    std::vector<int> coset_id(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.size(); ++x) {
        if (coset_id[static_cast<std::size_t>(x)] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int n : derived) coset_id[static_cast<std::size_t>(g.mult(n, x))] = id;
    }
    const long long q = static_cast<long long>(reps.size());
    if (q == 1) return {};

    auto qmult = [&](int a, int b) {
        return coset_id[static_cast<std::size_t>(g.mult(reps[static_cast<std::size_t>(a)],
                                                        reps[static_cast<std::size_t>(b)]))];
    };
    const int qid = coset_id[static_cast<std::size_t>(g.identity())];
    std::vector<long long> elem_order(static_cast<std::size_t>(q), 0);
    for (int a = 0; a < q; ++a) {
        int x = a;
        long long n = 1;
        while (x != qid) {
            x = qmult(x, a);
            ++n;
        }
        elem_order[static_cast<std::size_t>(a)] = n;
    }

    // Per-prime partition from the counts of elements of order dividing p^i,
    // then invariant factors by aligning largest parts across primes.
    std::vector<long long> primes;
    {
        long long rem = q;
        for (long long p = 2; p * p <= rem; ++p) {
            if (rem % p == 0) {
                primes.push_back(p);
                while (rem % p == 0) rem /= p;
            }
        }
        if (rem > 1) primes.push_back(rem);
    }
    std::map<long long, std::vector<int>> partitions;
    for (long long p : primes) {
        std::vector<int> ge_count;  // ge_count[i] = #parts >= i+1
        long long prev = 1;
        for (long long pi = p;; pi *= p) {
            long long cnt = 0;
            for (long long o : elem_order)
                if (pi % o == 0) ++cnt;
            if (cnt == prev) break;
            long long ratio = cnt / prev;
            int k = 0;
            while (ratio > 1) {
                ratio /= p;
                ++k;
            }
            ge_count.push_back(k);
            prev = cnt;
        }
        int max_part = 0;
        for (int c : ge_count) max_part = std::max(max_part, c);
        std::vector<int> parts(static_cast<std::size_t>(max_part), 0);
        for (int c : ge_count)
            for (int j = 0; j < c; ++j) parts[static_cast<std::size_t>(j)] += 1;
        std::sort(parts.begin(), parts.end(), std::greater<>());
        partitions[p] = parts;
    }

    std::size_t factors = 0;
    for (const auto& [p, parts] : partitions) factors = std::max(factors, parts.size());
    std::vector<long long> invariants(factors, 1);
    for (const auto& [p, parts] : partitions) {
        for (std::size_t t = 0; t < parts.size(); ++t) {
            long long pk = 1;
            for (int e = 0; e < parts[t]; ++e) pk *= p;
            invariants[t] *= pk;  // t = 0 is the largest factor
        }
    }
    std::sort(invariants.begin(), invariants.end());
    return invariants;
}

std::vector<int> apply_move(const std::vector<int>& tuple, const TupleMove& move) {
    std::vector<int> out = tuple;
    const int d = static_cast<int>(tuple.size());
    if (move.kind == TupleMove::Kind::Rotate3) {
        const int i = move.index;
        const int a = out[static_cast<std::size_t>(i % d)];
        const int b = out[static_cast<std::size_t>((i + 1) % d)];
        const int c = out[static_cast<std::size_t>((i + 2) % d)];
        out[static_cast<std::size_t>(i % d)] = b;
        out[static_cast<std::size_t>((i + 1) % d)] = c;
        out[static_cast<std::size_t>((i + 2) % d)] = a;
    } else {
        // Multiply by the cyclic right-shift of the current tuple.
        for (int i = 0; i < d; ++i)
            out[static_cast<std::size_t>(i)] =
                tuple[static_cast<std::size_t>(i)] *
                tuple[static_cast<std::size_t>((i + d - 1) % d)];
    }
    return out;
}

TupleNormalization normalize_tuple(const std::vector<int>& tuple) {
    const int d = static_cast<int>(tuple.size());
    if (d < 3 || d % 2 == 0)
        fail(errkind::invalid_argument, "tuple length must be odd and >= 3");
    int product = 1;
    int negatives = 0;
    for (int v : tuple) {
        if (v != 1 && v != -1) fail(errkind::invalid_argument, "tuple entries must be +-1");
        product *= v;
        if (v == -1) ++negatives;
    }
    if (product == -1) fail(errkind::odd_parity, "tuple has an odd number of -1 entries");
    if (negatives == 0) fail(errkind::all_positive, "tuple is the identity");

    std::vector<int> target(static_cast<std::size_t>(d), 1);
    target[0] = target[1] = -1;

    const long long step_cap = static_cast<long long>(d) * (1ll << d);
    TupleNormalization out;
    std::vector<int> a = tuple;
    auto push = [&](const TupleMove& m) {
        a = apply_move(a, m);
        out.moves.push_back(m);
        if (static_cast<long long>(out.moves.size()) > step_cap)
            fail(errkind::invalid_argument, "normalization exceeded the step cap");
    };
    auto bubble_front = [&]() {
        // Rotate -1 entries to the front; the wrap-around triple handles a
        // trailing -1 with no (+1,-1) adjacency elsewhere.
        int count = 0;
        for (int v : a)
            if (v == -1) ++count;
        std::vector<int> b(static_cast<std::size_t>(d), 1);
        for (int i = 0; i < count; ++i) b[static_cast<std::size_t>(i)] = -1;
        while (a != b) {
            int pos = -1;
            for (int i = 0; i + 1 < d; ++i) {
                if (a[static_cast<std::size_t>(i)] == 1 &&
                    a[static_cast<std::size_t>(i + 1)] == -1) {
                    pos = i;
                    break;
                }
            }
            if (pos >= 0 && pos + 2 < d)
                push({TupleMove::Kind::Rotate3, pos});
            else
                push({TupleMove::Kind::Rotate3, d - 3});
        }
    };
    while (a != target) {
        bubble_front();
        if (a != target) push({TupleMove::Kind::ShiftMultiply, 0});
    }
    out.result = a;
    return out;
}

TreeAutomorphism inverting_conjugator(const TreeAutomorphism& a) {
    if (a.depth() == 0) return a;
    const int level = a.depth() - 1;
    const auto parts = split_at_level(a, level);
    const TreeAutomorphism top_conj = inverting_conjugator(parts.top);
    const Permutation p = leaf_permutation(parts.top);
    const Permutation t = leaf_permutation(top_conj);

    // Solve u_{p(j)} = c_{t(p(j))}^{-1} u_j c_j^{-1} around each orbit of p;
    // the closing condition is a conjugation equation solved by cycle
    // matching, which exists because every permutation is conjugate to its
    // inverse.
    const int points = p.degree();
    std::vector<Permutation> pieces;
    pieces.reserve(parts.hanging.size());
    for (const auto& h : parts.hanging)
        pieces.push_back(h.depth() == 0 ? Permutation::identity(a.degree()) : h.root());

    std::vector<Permutation> solved(static_cast<std::size_t>(points));
    std::vector<char> done(static_cast<std::size_t>(points), 0);
    for (int start = 0; start < points; ++start) {
        if (done[static_cast<std::size_t>(start)]) continue;
        std::vector<int> orbit{start};
        for (int j = p(start); j != start; j = p(j)) orbit.push_back(j);
        Permutation left = Permutation::identity(a.degree());
        Permutation right = Permutation::identity(a.degree());
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const int j = orbit[k];
            left = compose(inverse(pieces[static_cast<std::size_t>(t(p(j)))]), left);
            right = compose(right, inverse(pieces[static_cast<std::size_t>(j)]));
        }
        Permutation u = conjugating_map(inverse(right), left);
        solved[static_cast<std::size_t>(start)] = u;
        done[static_cast<std::size_t>(start)] = 1;
        for (std::size_t k = 0; k + 1 < orbit.size(); ++k) {
            const int j = orbit[k];
            u = compose(compose(inverse(pieces[static_cast<std::size_t>(t(p(j)))]), u),
                        inverse(pieces[static_cast<std::size_t>(j)]));
            solved[static_cast<std::size_t>(orbit[k + 1])] = u;
            done[static_cast<std::size_t>(orbit[k + 1])] = 1;
        }
    }

    std::vector<TreeAutomorphism> hanging;
    hanging.reserve(static_cast<std::size_t>(points));
    const TreeShape leaf_shape{a.degree(), 0};
    for (int j = 0; j < points; ++j)
        hanging.emplace_back(solved[static_cast<std::size_t>(j)],
                             std::vector<TreeAutomorphism>(
                                 static_cast<std::size_t>(a.degree()),
                                 TreeAutomorphism::identity(leaf_shape)));
    return join_at_level(top_conj, hanging);
}

TreeAutomorphism commutator_witness(const TreeAutomorphism& s, const GroupSpec& spec,
                                    std::uint64_t seed) {
    if (s.depth() < 2) fail(errkind::invalid_argument, "witness search needs depth >= 2");
    if (s.is_identity()) fail(errkind::invalid_argument, "witness search needs s != 1");
    if (!is_member(s, spec)) fail(errkind::invalid_argument, "s must be a member of the spec");

    const int d = s.degree();
    const long long positions = checked_pow_ll(d, s.depth() - 1);
    const TreeAutomorphism id_top = TreeAutomorphism::identity({d, s.depth() - 1});

    auto from_pieces = [&](const std::vector<Permutation>& pieces) {
        std::vector<TreeAutomorphism> hanging;
        hanging.reserve(pieces.size());
        for (const auto& piece : pieces)
            hanging.emplace_back(piece, std::vector<TreeAutomorphism>(
                                            static_cast<std::size_t>(d),
                                            TreeAutomorphism::identity({d, 0})));
        return join_at_level(id_top, hanging);
    };
    const auto s_inv = inverse(s);
    auto is_witness = [&](const TreeAutomorphism& c) {
        if (!is_member(c, spec)) return false;
        const auto k = compose(compose(s, c), compose(s_inv, inverse(c)));
        return !k.is_identity();
    };

    std::vector<Permutation> pieces(static_cast<std::size_t>(positions),
                                    Permutation::identity(d));
    // Single even cycle at one position.
    if (d >= 3) {
        for (long long i = 0; i < positions; ++i) {
            pieces[static_cast<std::size_t>(i)] = Permutation::from_cycle(d, {0, 1, 2});
            const auto c = from_pieces(pieces);
            pieces[static_cast<std::size_t>(i)] = Permutation::identity(d);
            if (is_witness(c)) return c;
        }
    }
    // A pair of transpositions, parity-balanced across two positions.
    const Permutation swap01 = Permutation::from_cycle(d, {0, 1});
    const long long pair_cap = 4096;
    long long tried = 0;
    for (long long i = 0; i < positions && tried < pair_cap; ++i) {
        for (long long j = i + 1; j < positions && tried < pair_cap; ++j, ++tried) {
            pieces[static_cast<std::size_t>(i)] = swap01;
            pieces[static_cast<std::size_t>(j)] = swap01;
            const auto c = from_pieces(pieces);
            pieces[static_cast<std::size_t>(i)] = Permutation::identity(d);
            pieces[static_cast<std::size_t>(j)] = Permutation::identity(d);
            if (is_witness(c)) return c;
        }
    }
    // Seeded random bottom tuples as a last resort.
    Rng rng(seed);
    for (int t = 0; t < 2000; ++t) {
        for (auto& piece : pieces) piece = Permutation(rng.permutation_images(d));
        const auto c = from_pieces(pieces);
        if (is_witness(c)) return c;
    }
    fail(errkind::no_witness, "no commuting witness found within the search budget");
}

}  // namespace arbor
