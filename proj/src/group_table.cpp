#include "arbor/group_table.hpp"

#include <algorithm>
#include <deque>

#include "arbor/errors.hpp"

namespace arbor {

GroupTable GroupTable::from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) fail(errkind::invalid_argument, "a group table needs elements");
    GroupTable g;
    g.elements_ = std::move(elements);
    g.finish_build();
    return g;
}

GroupTable GroupTable::generated_by(const std::vector<Permutation>& generators,
                                    long long limit) {
    if (generators.empty()) fail(errkind::invalid_argument, "no generators");
    const int degree = generators.front().degree();
    GroupTable g;
    std::unordered_map<std::string, int> seen;
    std::deque<int> queue;
    auto add = [&](const Permutation& p) -> bool {
        auto [it, inserted] = seen.emplace(p.key(), static_cast<int>(g.elements_.size()));
        if (!inserted) return false;
        g.elements_.push_back(p);
        queue.push_back(it->second);
        if (static_cast<long long>(g.elements_.size()) > limit)
            fail(errkind::too_large, "generated group exceeds the element limit");
        return true;
    };
    add(Permutation::identity(degree));
    for (const auto& gen : generators) add(gen);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& gen : generators) add(compose(g.elements_[static_cast<std::size_t>(x)], gen));
    }
    g.finish_build();
    return g;
}

void GroupTable::finish_build() {
    index_.clear();
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i].key(), static_cast<int>(i)).second)
            fail(errkind::invalid_argument, "duplicate element in group table");
    }
    identity_ = index_of(Permutation::identity(elements_.front().degree()));
    if (identity_ < 0) fail(errkind::invalid_argument, "table is missing the identity");
    inverses_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const int j = index_of(inverse(elements_[i]));
        if (j < 0) fail(errkind::invalid_argument, "table is not closed under inverse");
        inverses_[i] = j;
    }
    // Greedy small generating set: grow whenever an element escapes the
    // closure so far.
    generators_.clear();
    std::vector<char> covered(elements_.size(), 0);
    covered[static_cast<std::size_t>(identity_)] = 1;
    std::size_t covered_count = 1;
    for (std::size_t i = 0; i < elements_.size() && covered_count < elements_.size(); ++i) {
        if (covered[i]) continue;
        generators_.push_back(static_cast<int>(i));
        const auto closure = subgroup_closure(*this, generators_);
        std::fill(covered.begin(), covered.end(), 0);
        for (int x : closure) covered[static_cast<std::size_t>(x)] = 1;
        covered_count = closure.size();
    }
}

int GroupTable::index_of(const Permutation& p) const {
    const auto it = index_.find(p.key());
    return it == index_.end() ? -1 : it->second;
}

int GroupTable::mult(int i, int j) const {
    const Permutation p = compose(elements_[static_cast<std::size_t>(i)],
                                  elements_[static_cast<std::size_t>(j)]);
    const int k = index_of(p);
    if (k < 0) fail(errkind::invalid_argument, "table is not closed under composition");
    return k;
}

std::vector<int> subgroup_closure(const GroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> members{g.identity()};
    in[static_cast<std::size_t>(g.identity())] = 1;
    std::deque<int> queue{g.identity()};
    auto add = [&](int x) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    for (int gen : gens) add(gen);
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int gen : gens) add(g.mult(x, gen));
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> conjugacy_class_of(const GroupTable& g, int x) {
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> members{x};
    in[static_cast<std::size_t>(x)] = 1;
    std::deque<int> queue{x};
    while (!queue.empty()) {
        const int y = queue.front();
        queue.pop_front();
        for (int gen : g.generators()) {
            const int z = g.conj(gen, y);
            if (!in[static_cast<std::size_t>(z)]) {
                in[static_cast<std::size_t>(z)] = 1;
                members.push_back(z);
                queue.push_back(z);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> conjugacy_class_reps(const GroupTable& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> reps;
    for (int i = 0; i < g.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        reps.push_back(i);
        for (int x : conjugacy_class_of(g, i)) seen[static_cast<std::size_t>(x)] = 1;
    }
    return reps;
}

}  // namespace arbor
