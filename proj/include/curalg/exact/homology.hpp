#pragma once

#include <vector>

#include "curalg/error.hpp"
#include "curalg/exact/elimination.hpp"

namespace curalg {

/// dim of ker(out) / im(in) for  . --in--> C --out--> .  with dim C = dim.
inline std::size_t homology_dimension(int dim, const SparseMatQ& in, const SparseMatQ& out)
{
    if (in.rows() != dim || out.cols() != dim) throw DimensionError("homology_dimension: shapes do not meet");
    const std::size_t r = rank(in) + rank(out);
    if (r > static_cast<std::size_t>(dim)) throw Error("homology_dimension: maps do not compose to zero");
    return dim - r;
}

/// Rank of the map on homology given images of a cycle basis and the target boundary matrix.
inline std::size_t induced_rank(const std::vector<SparseVec>& cycle_images, const SparseMatQ& target_boundaries)
{
    auto cols = target_boundaries.column_vectors();
    const std::size_t base = rank(target_boundaries);
    cols.insert(cols.end(), cycle_images.begin(), cycle_images.end());
    return rank(SparseMatQ::from_columns(target_boundaries.rows(), cols)) - base;
}

} // namespace curalg
