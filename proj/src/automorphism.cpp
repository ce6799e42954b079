#include "arbor/automorphism.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include "arbor/errors.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

// Flat vertex labels: the level-k vertex reached by branches l_1 (root),
// l_2, ..., l_k has index sum l_j d^(j-1), so v = l_1 + d * (vertex inside
// branch l_1) and the child of v along branch c sits at v + d^k * c.

long long TreeAutomorphism::level_offset(int level) const {
    long long vertices = 0;
    long long width = 1;
    for (int k = 0; k < level; ++k) {
        vertices += width;
        width *= degree_;
    }
    return vertices * degree_;
}

long long TreeAutomorphism::level_width(int level) const {
    long long width = 1;
    for (int k = 0; k < level; ++k) width *= degree_;
    return width;
}

int* TreeAutomorphism::slot(int level, long long vertex) {
    return table_.data() + level_offset(level) + vertex * degree_;
}

const int* TreeAutomorphism::slot(int level, long long vertex) const {
    return table_.data() + level_offset(level) + vertex * degree_;
}

std::span<const int> TreeAutomorphism::vertex_images(int level, long long vertex) const {
    if (level < 0 || level >= depth_ || vertex < 0 || vertex >= level_width(level))
        fail(errkind::out_of_range, "vertex out of range");
    return {slot(level, vertex), static_cast<std::size_t>(degree_)};
}

std::span<const int> TreeAutomorphism::level_images(int level) const {
    if (level < 0 || level >= depth_) fail(errkind::out_of_range, "level out of range");
    return {table_.data() + level_offset(level),
            static_cast<std::size_t>(level_width(level) * degree_)};
}

/// Internal backdoor for the free functions in this translation unit.
struct FlatAccess {
    static TreeAutomorphism make(int degree, int depth) {
        TreeAutomorphism a(degree, depth);
        a.table_.resize(static_cast<std::size_t>(a.level_offset(depth)));
        return a;
    }
    static std::vector<int>& table(TreeAutomorphism& a) { return a.table_; }
    static const std::vector<int>& table(const TreeAutomorphism& a) { return a.table_; }
    static int* slot(TreeAutomorphism& a, int level, long long vertex) {
        return a.slot(level, vertex);
    }
    static const int* slot(const TreeAutomorphism& a, int level, long long vertex) {
        return a.slot(level, vertex);
    }
    static long long offset(const TreeAutomorphism& a, int level) {
        return a.level_offset(level);
    }
};

TreeAutomorphism TreeAutomorphism::identity(const TreeShape& shape) {
    validate(shape);
    TreeAutomorphism a(shape.degree, shape.depth);
    a.table_.resize(static_cast<std::size_t>(a.level_offset(shape.depth)));
    for (std::size_t i = 0; i < a.table_.size(); ++i)
        a.table_[i] = static_cast<int>(i % static_cast<std::size_t>(shape.degree));
    return a;
}

TreeAutomorphism::TreeAutomorphism(const Permutation& root,
                                   const std::vector<TreeAutomorphism>& children)
    : degree_(root.degree()) {
    if (degree_ < 2) fail(errkind::invalid_argument, "root permutation degree must be >= 2");
    if (static_cast<int>(children.size()) != degree_)
        fail(errkind::shape_mismatch, "child count must equal the degree");
    const int child_depth = children.front().depth();
    for (const auto& c : children) {
        if (c.depth() != child_depth || (c.depth() > 0 && c.degree() != degree_))
            fail(errkind::shape_mismatch, "children must share degree and depth");
    }
    depth_ = child_depth + 1;
    table_.resize(static_cast<std::size_t>(level_offset(depth_)));
    std::copy(root.images().begin(), root.images().end(), table_.begin());
    for (int k = 1; k < depth_; ++k) {
        const long long width = level_width(k);
        for (long long v = 0; v < width; ++v) {
            const auto& child = children[static_cast<std::size_t>(v % degree_)];
            const int* src = child.slot(k - 1, v / degree_);
            std::copy(src, src + degree_, slot(k, v));
        }
    }
}

Permutation TreeAutomorphism::root() const {
    if (depth_ == 0) fail(errkind::out_of_range, "depth-0 value has no root permutation");
    return Permutation(std::vector<int>(table_.begin(), table_.begin() + degree_));
}

TreeAutomorphism TreeAutomorphism::child(int branch) const {
    if (depth_ == 0) fail(errkind::out_of_range, "depth-0 value has no children");
    if (branch < 0 || branch >= degree_) fail(errkind::out_of_range, "branch out of range");
    TreeAutomorphism out(degree_, depth_ - 1);
    out.table_.resize(static_cast<std::size_t>(out.level_offset(depth_ - 1)));
    for (int k = 0; k + 1 < depth_; ++k) {
        const long long width = out.level_width(k);
        for (long long w = 0; w < width; ++w) {
            const int* src = slot(k + 1, branch + degree_ * w);
            std::copy(src, src + degree_, out.slot(k, w));
        }
    }
    return out;
}

std::vector<TreeAutomorphism> TreeAutomorphism::children() const {
    std::vector<TreeAutomorphism> out;
    out.reserve(static_cast<std::size_t>(degree_));
    for (int c = 0; c < degree_; ++c) out.push_back(child(c));
    return out;
}

bool TreeAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i] != static_cast<int>(i % static_cast<std::size_t>(degree_))) return false;
    return true;
}

namespace {

struct VertexPair {
    int level;
    long long left;
    long long right;
};

}  // namespace

TreeAutomorphism compose(const TreeAutomorphism& a, const TreeAutomorphism& b) {
    if (a.depth() != b.depth() || (a.depth() > 0 && a.degree() != b.degree()))
        fail(errkind::shape_mismatch, "automorphism shapes differ");
    if (a.depth() == 0) return a;
    const int d = a.degree();
    TreeAutomorphism out(d, a.depth());
    out.table_.resize(a.table_.size());
    // Walk b-side vertices paired with their a-side counterparts: the branch
    // c below vb continues under the a-side branch b(vb)[c].
    std::vector<VertexPair> stack{{0, 0, 0}};  // left = vb, right = va
    while (!stack.empty()) {
        const auto [level, vb, va] = stack.back();
        stack.pop_back();
        const int* pb = b.slot(level, vb);
        const int* pa = a.slot(level, va);
        int* po = out.slot(level, vb);
        for (int c = 0; c < d; ++c) po[c] = pa[pb[c]];
        if (level + 1 < a.depth()) {
            const long long width = a.level_width(level);
            for (int c = 0; c < d; ++c)
                stack.push_back({level + 1, vb + width * c, va + width * pb[c]});
        }
    }
    return out;
}

TreeAutomorphism inverse(const TreeAutomorphism& a) {
    if (a.depth() == 0) return a;
    const int d = a.degree();
    TreeAutomorphism out(d, a.depth());
    out.table_.resize(a.table_.size());
    // The inverse's vertex i is the image of a's vertex v; branches map
    // through a(v).
    std::vector<VertexPair> stack{{0, 0, 0}};  // left = va, right = vi
    while (!stack.empty()) {
        const auto [level, va, vi] = stack.back();
        stack.pop_back();
        const int* pa = a.slot(level, va);
        int* po = out.slot(level, vi);
        for (int c = 0; c < d; ++c) po[pa[c]] = c;
        if (level + 1 < a.depth()) {
            const long long width = a.level_width(level);
            for (int c = 0; c < d; ++c)
                stack.push_back({level + 1, va + width * c, vi + width * pa[c]});
        }
    }
    return out;
}

namespace {

long long act_rec(const TreeAutomorphism& a, long long leaf) {
    const int d = a.degree();
    const int* table = FlatAccess::table(a).data();
    long long offset = 0;  // start of the current level's block
    long long vertex = 0;
    long long out = 0;
    long long width = 1;  // d^level
    for (int level = 0; level < a.depth(); ++level) {
        const int branch = static_cast<int>(leaf % d);
        leaf /= d;
        out += width * table[offset + vertex * d + branch];
        vertex += width * branch;
        offset += width * d;
        width *= d;
    }
    return out;
}

}  // namespace

long long act_on_leaf(const TreeAutomorphism& a, long long leaf) {
    if (leaf < 0 || leaf >= a.shape().leaf_count())
        fail(errkind::out_of_range, "leaf index out of range: " + std::to_string(leaf));
    return act_rec(a, leaf);
}

Permutation leaf_permutation(const TreeAutomorphism& a) {
    const long long leaves = a.shape().leaf_count();
    std::vector<int> images(static_cast<std::size_t>(leaves));
    for (long long i = 0; i < leaves; ++i)
        images[static_cast<std::size_t>(i)] = static_cast<int>(act_rec(a, i));
    return Permutation(std::move(images));
}

TreeAutomorphism from_leaf_permutation(const Permutation& p, const TreeShape& shape) {
    validate(shape);
    if (p.degree() != shape.leaf_count())
        fail(errkind::invalid_argument, "permutation degree does not equal the leaf count");
    if (shape.depth == 0) return TreeAutomorphism::identity(shape);

    const int d = shape.degree;
    std::vector<int> root_images(static_cast<std::size_t>(d), -1);
    for (int c = 0; c < d; ++c) root_images[static_cast<std::size_t>(c)] = p(c) % d;
    for (int i = 0; i < p.degree(); ++i) {
        if (p(i) % d != root_images[static_cast<std::size_t>(i % d)])
            fail(errkind::not_tree_respecting,
                 "level-1 subtree blocks are not permuted as sets");
    }
    const Permutation root{std::move(root_images)};

    const TreeShape child_shape{d, shape.depth - 1};
    const int sub_leaves = static_cast<int>(child_shape.leaf_count());
    std::vector<TreeAutomorphism> children;
    children.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        std::vector<int> images(static_cast<std::size_t>(sub_leaves));
        for (int j = 0; j < sub_leaves; ++j)
            images[static_cast<std::size_t>(j)] = (p(c + d * j) - root(c)) / d;
        children.push_back(from_leaf_permutation(Permutation(std::move(images)), child_shape));
    }
    return TreeAutomorphism(root, children);
}

TreeAutomorphism truncate(const TreeAutomorphism& a, int level) {
    if (level < 0 || level > a.depth())
        fail(errkind::out_of_range, "truncation level out of range: " + std::to_string(level));
    TreeAutomorphism out(a.degree(), level);
    out.table_.assign(a.table_.begin(), a.table_.begin() + a.level_offset(level));
    return out;
}

Decomposition split_at_level(const TreeAutomorphism& a, int level) {
    if (level < 0 || level > a.depth())
        fail(errkind::out_of_range, "split level out of range: " + std::to_string(level));
    Decomposition out;
    out.top = truncate(a, level);
    const long long count = a.level_width(level);
    out.hanging.reserve(static_cast<std::size_t>(count));
    // The subtree rooted at the level-`level` vertex j holds the whole-tree
    // vertices j + d^level * w of level `level` + k.
    for (long long j = 0; j < count; ++j) {
        TreeAutomorphism sub = FlatAccess::make(a.degree(), a.depth() - level);
        for (int k = 0; k + level < a.depth(); ++k) {
            const long long width = sub.level_width(k);
            for (long long w = 0; w < width; ++w) {
                const int* src = FlatAccess::slot(a, level + k, j + count * w);
                std::copy(src, src + a.degree(), FlatAccess::slot(sub, k, w));
            }
        }
        out.hanging.push_back(std::move(sub));
    }
    return out;
}

TreeAutomorphism join_at_level(const TreeAutomorphism& top,
                               const std::vector<TreeAutomorphism>& hanging) {
    const int level = top.depth();
    const long long count = top.level_width(level);
    if (static_cast<long long>(hanging.size()) != count)
        fail(errkind::shape_mismatch, "hanging count must be degree^level");
    const int sub_depth = hanging.front().depth();
    for (const auto& h : hanging)
        if (h.depth() != sub_depth || (h.depth() > 0 && h.degree() != top.degree()))
            fail(errkind::shape_mismatch, "hanging parts must share degree and depth");
    if (level == 0) return hanging.front();

    TreeAutomorphism out = FlatAccess::make(top.degree(), level + sub_depth);
    const auto& top_table = FlatAccess::table(top);
    std::copy(top_table.begin(), top_table.end(), FlatAccess::table(out).begin());
    for (int k = 0; k < sub_depth; ++k) {
        const long long width = hanging.front().level_width(k);
        for (long long j = 0; j < count; ++j)
            for (long long w = 0; w < width; ++w) {
                const int* src = FlatAccess::slot(hanging[static_cast<std::size_t>(j)], k, w);
                std::copy(src, src + out.degree(), FlatAccess::slot(out, level + k, j + count * w));
            }
    }
    return out;
}

TreeAutomorphism random_automorphism(const TreeShape& shape, Rng& rng) {
    validate(shape);
    TreeAutomorphism a = FlatAccess::make(shape.degree, shape.depth);
    // Depth-first fill, root first then branches in order, so the stream of
    // draws follows the documented order exactly.
    struct Frame {
        int level;
        long long vertex;
    };
    std::vector<Frame> stack;
    if (shape.depth > 0) stack.push_back({0, 0});
    while (!stack.empty()) {
        const auto [level, vertex] = stack.back();
        stack.pop_back();
        const auto images = rng.permutation_images(shape.degree);
        std::copy(images.begin(), images.end(), FlatAccess::slot(a, level, vertex));
        if (level + 1 < shape.depth) {
            const long long width = a.level_width(level);
            for (int c = shape.degree - 1; c >= 0; --c)
                stack.push_back({level + 1, vertex + width * c});
        }
    }
    return a;
}

TreeAutomorphism random_automorphism(const TreeShape& shape, std::uint64_t seed) {
    Rng rng(seed);
    return random_automorphism(shape, rng);
}

std::vector<TreeAutomorphism> enumerate_all(const TreeShape& shape, long long limit) {
    validate(shape);
    Int internal_vertices = 0;
    Int level = 1;
    for (int k = 0; k < shape.depth; ++k) {
        internal_vertices += level;
        level *= shape.degree;
    }
    Int order = 1;
    const Int dfact = factorial(shape.degree);
    for (Int k = 0; k < internal_vertices; ++k) order *= dfact;
    if (order > limit)
        fail(errkind::too_large, "group order " + order.str() + " exceeds the limit");

    if (shape.depth == 0) return {TreeAutomorphism::identity(shape)};
    const auto sub = enumerate_all({shape.degree, shape.depth - 1}, limit);
    const auto roots = all_permutations(shape.degree);
    std::vector<TreeAutomorphism> out;
    out.reserve(static_cast<std::size_t>(order.convert_to<long long>()));
    std::vector<std::size_t> odometer(static_cast<std::size_t>(shape.degree), 0);
    while (true) {
        std::vector<TreeAutomorphism> children;
        children.reserve(odometer.size());
        for (std::size_t c = 0; c < odometer.size(); ++c) children.push_back(sub[odometer[c]]);
        for (const auto& root : roots) out.emplace_back(root, children);
        std::size_t pos = 0;
        while (pos < odometer.size() && ++odometer[pos] == sub.size()) {
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) break;
    }
    return out;
}

namespace {

nlohmann::ordered_json to_json_tree(const TreeAutomorphism& a) {
    nlohmann::ordered_json node;
    node["perm"] = a.depth() == 0 ? std::vector<int>{} : a.root().images();
    auto& children = node["children"];
    children = nlohmann::ordered_json::array();
    if (a.depth() > 0)
        for (const auto& c : a.children()) children.push_back(to_json_tree(c));
    return node;
}

TreeAutomorphism from_json_tree(const nlohmann::json& node, int degree_hint) {
    if (!node.is_object() || !node.contains("perm") || !node.contains("children"))
        fail(errkind::parse_error, "automorphism record needs perm and children");
    const auto& perm = node["perm"];
    const auto& children = node["children"];
    if (!perm.is_array() || !children.is_array())
        fail(errkind::parse_error, "perm and children must be arrays");
    if (perm.empty()) {
        if (!children.empty()) fail(errkind::parse_error, "depth-0 record with children");
        return TreeAutomorphism::identity({degree_hint > 0 ? degree_hint : 2, 0});
    }
    const int d = static_cast<int>(perm.size());
    if (static_cast<int>(children.size()) != d)
        fail(errkind::parse_error, "child count must equal the root degree");
    std::vector<int> images;
    images.reserve(perm.size());
    for (const auto& v : perm) {
        if (!v.is_number_integer()) fail(errkind::parse_error, "perm entries must be integers");
        images.push_back(v.get<int>());
    }
    std::vector<TreeAutomorphism> sub;
    sub.reserve(children.size());
    for (const auto& c : children) sub.push_back(from_json_tree(c, d));
    return TreeAutomorphism(Permutation(std::move(images)), sub);
}

}  // namespace

std::string to_json(const TreeAutomorphism& a) { return to_json_tree(a).dump(); }

TreeAutomorphism automorphism_from_json(const std::string& text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errkind::parse_error, std::string("bad automorphism JSON: ") + e.what());
    }
    return from_json_tree(parsed, 0);
}

}  // namespace arbor
