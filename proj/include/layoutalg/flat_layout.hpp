#pragma once

// Flat (depth-1) layouts and their operation suite.

#include <cstddef>
#include <optional>
#include <vector>

#include "layoutalg/nested_tuple.hpp"

namespace layoutalg {

/// A flat layout `shape:stride` with positive shape entries and non-negative
/// strides of equal length.
class FlatLayout {
public:
    /// The empty layout `():()`.
    FlatLayout() = default;
    FlatLayout(IntVec shape, IntVec stride);

    [[nodiscard]] const IntVec& shape() const noexcept { return shape_; }
    [[nodiscard]] const IntVec& stride() const noexcept { return stride_; }

    [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
    [[nodiscard]] Int size() const { return product(shape_); }
    /// 1 + sum_i (s_i - 1) d_i.
    [[nodiscard]] Int cosize() const;

    friend bool operator==(const FlatLayout&, const FlatLayout&) = default;

private:
    IntVec shape_;
    IntVec stride_;
};

/// Coordinate function: dot product of the coordinate with the strides.
Int eval_coord(const FlatLayout& l, const Coordinate& c);
/// Layout function: eval_coord after colexicographic delinearization.
Int eval(const FlatLayout& l, Int x);

/// Keeps the listed modes (1-based indices, in the given order).
FlatLayout restrict(const FlatLayout& l, const std::vector<std::size_t>& idx);
/// Drops modes with shape entry 1.
FlatLayout squeeze(const FlatLayout& l);
/// Drops modes with stride 0.
FlatLayout filter_zeros(const FlatLayout& l);
/// Stable sort of the modes by (stride, shape).
FlatLayout sort(const FlatLayout& l);
/// Mode i of the result is mode sigma[i] of `l` (1-based one-line notation).
FlatLayout permute(const FlatLayout& l, const std::vector<std::size_t>& sigma);
/// Concatenation of shapes and strides.
FlatLayout concat_flat(const std::vector<FlatLayout>& ls);

/// The unique minimal-rank flat layout with the same layout function.
FlatLayout coalesce_flat(const FlatLayout& l);
/// No unit shape entries and s_i d_i != d_{i+1} for all adjacent modes.
bool is_coalesced_flat(const FlatLayout& l);

/// The layout function is a bijection onto [0, cosize).
bool is_compact(const FlatLayout& l);
/// Sorted modes satisfy d_i = 0 or s_i d_i | d_{i+1}.
bool is_tractable_flat(const FlatLayout& l);
/// Sorted squeezed modes have positive strides and s_i d_i | d_{i+1}.
bool is_complementable(const FlatLayout& l);
/// Complementable and s_m d_m | n for the last sorted squeezed mode.
bool is_n_complementable(const FlatLayout& l, Int n);

/// The (n-)complement: sorted, coalesced, and completing `a` to a compact
/// layout (of size n when given).  Throws `Error{NotComplementable}`.
FlatLayout complement_flat(const FlatLayout& a, std::optional<Int> n = std::nullopt);

}  // namespace layoutalg
