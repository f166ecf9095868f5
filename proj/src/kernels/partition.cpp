#include "kernels/partition.hpp"

#include "l2k/errors.hpp"

#include <limits>
#include <numeric>

namespace l2k::detail {

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b)
{
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a < b)
        parent[b] = a;
    else if (b < a)
        parent[a] = b;
}

}  // namespace

RowPartition partition_rows(const ColumnSource& columns)
{
    const TracialAlgebra& alg = *columns.algebra();
    const std::size_t d = alg.dim();
    const std::size_t n = d * columns.target_rank();
    const std::size_t m = columns.column_count();
    if (n >= std::numeric_limits<std::uint32_t>::max() || m >= std::numeric_limits<std::uint32_t>::max())
        throw DepthTooLarge("realized map too large for 32-bit indexing");

    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    if (!alg.diagonal_coupling())
        for (std::size_t j = 0; j < columns.target_rank(); ++j)
            for (std::size_t s = 0; s < d; ++s)
                unite(parent, static_cast<std::uint32_t>(j * d + s), static_cast<std::uint32_t>(j * d + alg.coupling_class()[s]));

    std::vector<std::uint32_t> first_row(m, kNoBlock);
    std::vector<char> used(n, 0);
    SparseVec col;
    for (std::size_t c = 0; c < m; ++c) {
        columns.column(c, col);
        if (col.empty()) continue;
        first_row[c] = col.front().first;
        for (const auto& [r, v] : col) {
            used[r] = 1;
            unite(parent, col.front().first, r);
        }
    }

    RowPartition part;
    part.block_of_row.assign(n, kNoBlock);
    part.local_of_row.assign(n, 0);
    std::vector<std::uint32_t> block_of_root(n, kNoBlock);
    for (std::size_t r = 0; r < n; ++r)
        if (used[r]) block_of_root[find_root(parent, static_cast<std::uint32_t>(r))] = 0;
    std::uint32_t next = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const std::uint32_t root = find_root(parent, static_cast<std::uint32_t>(r));
        if (block_of_root[root] == kNoBlock) continue;
        if (root == r) block_of_root[root] = next++;  // roots are block minima
        const std::uint32_t b = block_of_root[root];
        if (b >= part.rows.size()) part.rows.resize(b + 1);
        part.block_of_row[r] = b;
        part.local_of_row[r] = static_cast<std::uint32_t>(part.rows[b].size());
        part.rows[b].push_back(static_cast<std::uint32_t>(r));
    }
    part.cols.resize(part.rows.size());
    for (std::size_t c = 0; c < m; ++c)
        if (first_row[c] != kNoBlock) part.cols[part.block_of_row[first_row[c]]].push_back(static_cast<std::uint32_t>(c));
    return part;
}

}  // namespace l2k::detail
