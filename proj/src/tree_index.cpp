#include "arbor/tree_index.hpp"

#include <string>

#include "arbor/errors.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

void validate(const TreeShape& shape) {
    if (shape.degree < 2) fail(errkind::invalid_argument, "tree degree must be >= 2");
    if (shape.depth < 0) fail(errkind::invalid_argument, "tree depth must be >= 0");
}

long long TreeShape::leaf_count() const { return checked_pow_ll(degree, depth); }

long long TreeShape::vertex_count() const {
    long long total = 0;
    long long level = 1;
    for (int k = 0; k <= depth; ++k) {
        total += level;
        if (k < depth) level *= degree;
    }
    return total;
}

long long leaf_index(const VertexPath& path, const TreeShape& shape) {
    validate(shape);
    if (static_cast<int>(path.size()) != shape.depth)
        fail(errkind::invalid_argument,
             "path level " + std::to_string(path.size()) + " does not match depth " +
                 std::to_string(shape.depth));
    long long value = 0;
    for (int component : path) {
        if (component < 0 || component >= shape.degree)
            fail(errkind::out_of_range, "path component out of range: " + std::to_string(component));
        value = value * shape.degree + component;
    }
    return value;
}

VertexPath path_of_index(long long index, const TreeShape& shape) {
    validate(shape);
    if (index < 0 || index >= shape.leaf_count())
        fail(errkind::out_of_range, "leaf index out of range: " + std::to_string(index));
    VertexPath path(static_cast<std::size_t>(shape.depth));
    for (int k = shape.depth - 1; k >= 0; --k) {
        path[static_cast<std::size_t>(k)] = static_cast<int>(index % shape.degree);
        index /= shape.degree;
    }
    return path;
}

bool same_subtree(long long i, long long j, int level, const TreeShape& shape) {
    validate(shape);
    if (level < 0 || level > shape.depth)
        fail(errkind::out_of_range, "subtree level out of range: " + std::to_string(level));
    const long long leaves = shape.leaf_count();
    if (i < 0 || i >= leaves || j < 0 || j >= leaves)
        fail(errkind::out_of_range, "leaf index out of range");
    const long long block = checked_pow_ll(shape.degree, level);
    return i % block == j % block;
}

}  // namespace arbor
