#include "arbor/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/errors.hpp"

namespace arbor {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n > 255) fail(errkind::too_large, "permutation degree above 255");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            fail(errkind::invalid_argument, "image table is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycle(int degree, const std::vector<int>& cycle) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int from = cycle[k];
        const int to = cycle[(k + 1) % cycle.size()];
        if (from < 0 || from >= degree) fail(errkind::out_of_range, "cycle point out of range");
        v[static_cast<std::size_t>(from)] = to;
    }
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Permutation::key() const {
    std::string s(images_.size(), '\0');
    for (std::size_t i = 0; i < images_.size(); ++i)
        s[i] = static_cast<char>(static_cast<unsigned char>(images_[i]));
    return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail(errkind::shape_mismatch, "permutation degrees differ");
    std::vector<int> v(static_cast<std::size_t>(a.degree()));
    for (int i = 0; i < a.degree(); ++i) v[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(static_cast<std::size_t>(p.degree()));
    for (int i = 0; i < p.degree(); ++i) v[static_cast<std::size_t>(p(i))] = i;
    return Permutation(std::move(v));
}

int parity(const Permutation& p) {
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    int transpositions = 0;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int length = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) {
            seen[static_cast<std::size_t>(i)] = true;
            continue;
        }
        std::vector<int> cycle;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation conjugating_map(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree()) fail(errkind::shape_mismatch, "permutation degrees differ");
    const auto cx = cycles(x);
    const auto cy = cycles(y);
    // Bucket cycles by length; pairing same-length cycles in least-element
    // order keeps the result deterministic.
    std::vector<std::vector<int>> by_len_x(static_cast<std::size_t>(x.degree()) + 1);
    std::vector<std::vector<int>> by_len_y(static_cast<std::size_t>(x.degree()) + 1);
    for (std::size_t i = 0; i < cx.size(); ++i) by_len_x[cx[i].size()].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < cy.size(); ++i) by_len_y[cy[i].size()].push_back(static_cast<int>(i));

    std::vector<int> images(static_cast<std::size_t>(x.degree()), -1);
    for (std::size_t len = 2; len < by_len_x.size(); ++len) {
        if (by_len_x[len].size() != by_len_y[len].size())
            fail(errkind::invalid_argument, "permutations are not conjugate");
        for (std::size_t k = 0; k < by_len_x[len].size(); ++k) {
            const auto& cyc_x = cx[static_cast<std::size_t>(by_len_x[len][k])];
            const auto& cyc_y = cy[static_cast<std::size_t>(by_len_y[len][k])];
            for (std::size_t t = 0; t < len; ++t)
                images[static_cast<std::size_t>(cyc_x[t])] = cyc_y[t];
        }
    }
    // Fixed points of x map onto fixed points of y in increasing order.
    std::vector<bool> used(static_cast<std::size_t>(x.degree()), false);
    for (int v : images)
        if (v >= 0) used[static_cast<std::size_t>(v)] = true;
    int next_free = 0;
    for (int i = 0; i < x.degree(); ++i) {
        if (images[static_cast<std::size_t>(i)] >= 0) continue;
        while (used[static_cast<std::size_t>(next_free)]) ++next_free;
        images[static_cast<std::size_t>(i)] = next_free;
        used[static_cast<std::size_t>(next_free)] = true;
    }
    return Permutation(std::move(images));
}

}  // namespace arbor
