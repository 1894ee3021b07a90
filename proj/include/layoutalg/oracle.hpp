#pragma once

// Brute-force ground truth for the layout algebra.  Nothing here calls the
// algebraic engine: layout functions are materialized by direct enumeration.

#include <cstddef>
#include <vector>

#include "layoutalg/flat_layout.hpp"
#include "layoutalg/layout.hpp"

namespace layoutalg::oracle {

/// Default bound on the domain size of any materialized table.
inline constexpr Int kDefaultCap = 1'000'000;
/// Default bound on n for the exhaustive complement search.
inline constexpr Int kDefaultSearchCap = 4096;

/// values[x] = Φ_L(x) for 0 <= x < domain_size.
struct FunctionTable {
    Int domain_size = 0;
    std::vector<Int> values;
    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

/// Φ_L by odometer enumeration.  Throws `Error{CapExceeded}` above `cap`.
FunctionTable table_of(const Layout& l, Int cap = kDefaultCap);
FunctionTable table_of(const FlatLayout& l, Int cap = kDefaultCap);

/// Equal sizes and pointwise equal layout functions.
bool functions_equal(const Layout& a, const Layout& b, Int cap = kDefaultCap);

/// Each relative mode of `l` over `sbar` is a coalesced layout: an integer
/// mode `s:d` with s > 1 or `1:0`, or a flat mode of rank >= 2 with no unit
/// shapes and s_i d_i != d_{i+1}.
bool is_coalesced_over(const Layout& l, const NestedTuple& sbar);

/// Φ_C = Φ_B ∘ Φ_A, shape(C) refines shape(A), C coalesced over shape(A).
/// Throws `Error{ImageOutOfRange}` when Φ_A escapes [0, size(B)).
bool check_compose(const Layout& a, const Layout& b, const Layout& c, Int cap = kDefaultCap);

/// size(A) size(B) = n and the layout (A, B) is a bijection onto [0, n).
bool check_complement(const Layout& a, const Layout& b, Int n, Int cap = kDefaultCap);

/// Every sorted coalesced flat layout B of rank <= max_rank such that
/// check_complement(A, B, n) holds, found by pruned enumeration.
std::vector<FlatLayout> exhaustive_complement_search(const Layout& a, Int n, std::size_t max_rank,
                                                     Int cap = kDefaultSearchCap);

}  // namespace layoutalg::oracle
