#pragma once

#include "l2k/dimension.hpp"

#include <cstdint>
#include <vector>

namespace l2k::detail {

inline constexpr std::uint32_t kNoBlock = UINT32_MAX;

/// Independent row blocks of a column source. Blocks are numbered by their
/// smallest row; rows and columns inside a block are in increasing order.
struct RowPartition {
    std::vector<std::uint32_t> block_of_row;  // kNoBlock for rows no column reaches
    std::vector<std::uint32_t> local_of_row;  // position inside its block
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::vector<std::uint32_t>> cols;
};

RowPartition partition_rows(const ColumnSource& columns);

}  // namespace l2k::detail
