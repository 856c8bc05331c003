#pragma once

// Maximum-volume simplices of finite point sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "johnsimplex/geometry.hpp"

namespace johnsimplex {

enum class MvsMethod { Exact, LocalSearch };

std::string to_string(MvsMethod method);

template <Scalar S>
struct MvsResult {
    Simplex<S> simplex;  // vertex_indices sorted ascending
    S volume;
    MvsMethod method = MvsMethod::Exact;
    std::size_t swap_count = 0;    // LocalSearch only
    std::vector<S> volume_trace;  // LocalSearch: volume after greedy start and after each swap
};

struct MvsOptions {
    /// mvs_exact refuses to enumerate more than this many (d+1)-subsets.
    std::uint64_t enum_cap = 2'000'000;
    /// Worker threads for enumeration; 0 picks hardware_concurrency.
    unsigned threads = 0;
    /// Float-mode local search: a swap must improve volume by this relative
    /// amount to be accepted.
    double swap_tolerance = 1e-12;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t combination_count(std::uint64_t n, std::uint64_t k);

/// Global maximum over all C(n, d+1) vertex subsets. Ties go to the
/// lexicographically smallest sorted index tuple. Throws DegeneratePointSet
/// when n < d+1 or X does not span R^d, EnumerationCapExceeded above the cap.
template <Scalar S>
MvsResult<S> mvs_exact(const PointSet<S>& points, const MvsOptions& options = {});

/// Greedy start (farthest pair, then repeatedly the point adding the most
/// volume) followed by best-improvement single-vertex swaps until no swap
/// increases the volume. The seed shuffles the scan order, which only
/// changes how ties are broken.
template <Scalar S>
MvsResult<S> mvs_local_search(const PointSet<S>& points, std::uint64_t seed, const MvsOptions& options = {});

template <Scalar S>
struct SlabViolation {
    std::size_t facet;
    std::size_t point;
    S excess;  // distance outside [-d, d+2] in facet coordinates
};

template <Scalar S>
struct LocalMaximalityReport {
    bool ok = true;
    std::optional<SlabViolation<S>> worst;
    std::vector<SlabBounds<S>> slabs;
};

/// Checks -d - tol <= a_i.(x - c) <= d + 2 + tol for every facet i and
/// point x. This holds iff no single-vertex swap to a point of X enlarges T.
template <Scalar S>
LocalMaximalityReport<S> verify_local_maximality(const Simplex<S>& simplex, const PointSet<S>& points,
                                                 double tol = 0.0);

extern template MvsResult<double> mvs_exact(const PointSet<double>&, const MvsOptions&);
extern template MvsResult<Rational> mvs_exact(const PointSet<Rational>&, const MvsOptions&);
extern template MvsResult<double> mvs_local_search(const PointSet<double>&, std::uint64_t, const MvsOptions&);
extern template MvsResult<Rational> mvs_local_search(const PointSet<Rational>&, std::uint64_t, const MvsOptions&);
extern template LocalMaximalityReport<double> verify_local_maximality(const Simplex<double>&,
                                                                      const PointSet<double>&, double);
extern template LocalMaximalityReport<Rational> verify_local_maximality(const Simplex<Rational>&,
                                                                        const PointSet<Rational>&, double);

}  // namespace johnsimplex
