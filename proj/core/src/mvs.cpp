#include "johnsimplex/mvs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "johnsimplex/matrix.hpp"

namespace johnsimplex {

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

std::string to_string(MvsMethod method) {
    return method == MvsMethod::Exact ? "exact" : "local_search";
}

std::uint64_t combination_count(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    UInt128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

void check_input(std::size_t n, std::size_t d) {
    if (n < d + 1) {
        throw DegeneratePointSet("need at least " + std::to_string(d + 1) + " points in R^" + std::to_string(d) +
                                 ", got " + std::to_string(n));
    }
}

// --- determinant kernels -------------------------------------------------
//
// Each kernel maps a sorted index tuple to a value proportional to the
// simplex volume (|det| of the edge matrix) and orders those values.

class FloatKernel {
public:
    using Value = double;

    explicit FloatKernel(const PointSet<double>& points) : points_(points), d_(points.dim()), work_(d_ * d_) {}

    double abs_det(std::span<const std::size_t> idx) {
        const auto& base = points_[idx[0]];
        for (std::size_t r = 0; r < d_; ++r) {
            const auto& p = points_[idx[r + 1]];
            for (std::size_t c = 0; c < d_; ++c) work_[r * d_ + c] = p[c] - base[c];
        }
        double det = 1.0;
        for (std::size_t k = 0; k < d_; ++k) {
            std::size_t piv = k;
            for (std::size_t r = k + 1; r < d_; ++r) {
                if (std::fabs(work_[r * d_ + k]) > std::fabs(work_[piv * d_ + k])) piv = r;
            }
            const double pv = work_[piv * d_ + k];
            if (pv == 0.0) return 0.0;
            if (piv != k) {
                for (std::size_t c = k; c < d_; ++c) std::swap(work_[piv * d_ + c], work_[k * d_ + c]);
            }
            det *= pv;
            for (std::size_t r = k + 1; r < d_; ++r) {
                const double f = work_[r * d_ + k] / pv;
                if (f == 0.0) continue;
                for (std::size_t c = k + 1; c < d_; ++c) work_[r * d_ + c] -= f * work_[k * d_ + c];
            }
        }
        return std::fabs(det);
    }

    // Float volumes within 1e-12 relative count as ties.
    static bool greater(double a, double b) { return a > b * (1.0 + 1e-12) && a > 0.0; }
    static bool positive(double a) { return a > 0.0; }

private:
    const PointSet<double>& points_;
    std::size_t d_;
    std::vector<double> work_;
};

// Integer coordinates of X scaled by the lcm of all denominators. Scaling
// by a positive constant preserves every volume comparison.
struct IntegerLattice {
    std::size_t dim = 0;
    std::vector<std::vector<mpz_class>> coords;

    explicit IntegerLattice(const PointSet<Rational>& points) : dim(points.dim()) {
        mpz_class lcm = 1;
        for (const auto& p : points) {
            for (std::size_t k = 0; k < dim; ++k) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p[k].get_den_mpz_t());
        }
        coords.reserve(points.size());
        for (const auto& p : points) {
            std::vector<mpz_class> row(dim);
            for (std::size_t k = 0; k < dim; ++k) row[k] = p[k].get_num() * (lcm / p[k].get_den());
            coords.push_back(std::move(row));
        }
    }

    // log2 of the Hadamard bound on any edge-matrix minor.
    double log2_hadamard() const {
        double sq = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            mpz_class lo = coords[0][k];
            mpz_class hi = coords[0][k];
            for (const auto& row : coords) {
                if (row[k] < lo) lo = row[k];
                if (row[k] > hi) hi = row[k];
            }
            const double range = mpz_class(hi - lo).get_d();
            sq += range * range;
        }
        return sq == 0 ? 0.0 : 0.5 * std::log2(sq) * static_cast<double>(dim);
    }
};

// Fraction-free Bareiss elimination over an integer type.
template <class Int>
Int bareiss_abs_det(std::vector<Int>& m, std::size_t d) {
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        if (m[k * d + k] == 0) {
            std::size_t r = k + 1;
            while (r < d && m[r * d + k] == 0) ++r;
            if (r == d) return Int(0);
            for (std::size_t c = k; c < d; ++c) std::swap(m[r * d + c], m[k * d + c]);
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            for (std::size_t j = k + 1; j < d; ++j) {
                m[i * d + j] = (m[k * d + k] * m[i * d + j] - m[i * d + k] * m[k * d + j]) / prev;
            }
        }
        prev = m[k * d + k];
    }
    Int det = m[(d - 1) * d + (d - 1)];
    return det < 0 ? Int(-det) : det;
}

class Int128Kernel {
public:
    using Value = Int128;

    explicit Int128Kernel(const IntegerLattice& lattice) : d_(lattice.dim), work_(d_ * d_) {
        coords_.reserve(lattice.coords.size());
        for (const auto& row : lattice.coords) {
            std::vector<std::int64_t> r(d_);
            for (std::size_t k = 0; k < d_; ++k) r[k] = row[k].get_si();
            coords_.push_back(std::move(r));
        }
    }

    static bool fits(const IntegerLattice& lattice) {
        for (const auto& row : lattice.coords) {
            for (const auto& v : row) {
                if (abs(v) > mpz_class("1000000000000")) return false;
            }
        }
        // Bareiss products are bounded by twice the square of the bound.
        return lattice.log2_hadamard() < 61.0;
    }

    Int128 abs_det(std::span<const std::size_t> idx) {
        const auto& base = coords_[idx[0]];
        for (std::size_t r = 0; r < d_; ++r) {
            const auto& p = coords_[idx[r + 1]];
            for (std::size_t c = 0; c < d_; ++c) work_[r * d_ + c] = static_cast<Int128>(p[c]) - base[c];
        }
        return bareiss_abs_det(work_, d_);
    }

    static bool greater(Int128 a, Int128 b) { return a > b; }
    static bool positive(Int128 a) { return a > 0; }

private:
    std::size_t d_;
    std::vector<std::vector<std::int64_t>> coords_;
    std::vector<Int128> work_;
};

class MpzKernel {
public:
    using Value = mpz_class;

    explicit MpzKernel(const IntegerLattice& lattice) : lattice_(lattice), d_(lattice.dim), work_(d_ * d_) {}

    mpz_class abs_det(std::span<const std::size_t> idx) {
        const auto& base = lattice_.coords[idx[0]];
        for (std::size_t r = 0; r < d_; ++r) {
            const auto& p = lattice_.coords[idx[r + 1]];
            for (std::size_t c = 0; c < d_; ++c) work_[r * d_ + c] = p[c] - base[c];
        }
        return bareiss_abs_det(work_, d_);
    }

    static bool greater(const mpz_class& a, const mpz_class& b) { return a > b; }
    static bool positive(const mpz_class& a) { return sgn(a) > 0; }

private:
    const IntegerLattice& lattice_;
    std::size_t d_;
    std::vector<mpz_class> work_;
};

// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <class Kernel>
struct Candidate {
    typename Kernel::Value value{};
    std::vector<std::size_t> indices;
    bool found = false;
};

// Worker `w` of `workers` evaluates every combination whose lexicographic
// rank is congruent to w. Each worker keeps its first maximum, so the
// merged result is the lexicographically smallest maximizer.
template <class Kernel, class Factory>
Candidate<Kernel> enumerate(std::size_t n, std::size_t k, unsigned workers, Factory make_kernel) {
    std::vector<Candidate<Kernel>> partial(workers);
    auto run = [&](unsigned w) {
        Kernel kernel = make_kernel();
        Candidate<Kernel>& best = partial[w];
        std::vector<std::size_t> combo(k);
        std::iota(combo.begin(), combo.end(), std::size_t{0});
        std::uint64_t rank = 0;
        do {
            if (rank++ % workers != w) continue;
            auto value = kernel.abs_det(combo);
            if (!best.found || Kernel::greater(value, best.value)) {
                best.value = std::move(value);
                best.indices = combo;
                best.found = true;
            }
        } while (next_combination(combo, n));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    Candidate<Kernel> best;
    for (auto& c : partial) {
        if (!c.found) continue;
        if (!best.found || Kernel::greater(c.value, best.value) ||
            (!Kernel::greater(best.value, c.value) && c.indices < best.indices)) {
            best = std::move(c);
        }
    }
    return best;
}

unsigned worker_count(const MvsOptions& options, std::uint64_t combos) {
    unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (combos < 20000) workers = 1;
    return workers;
}

template <Scalar S>
MvsResult<S> finish_exact(const PointSet<S>& points, const std::vector<std::size_t>& indices) {
    try {
        Simplex<S> simplex = Simplex<S>::from_indices(points, indices);
        S volume = simplex_volume(simplex);
        return MvsResult<S>{std::move(simplex), std::move(volume), MvsMethod::Exact, 0, {}};
    } catch (const DegenerateSimplex&) {
        throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(points.dim()));
    }
}

// Squared k-volume (up to a constant) of the simplex on `chosen`: Gram
// determinant of the edge vectors.
template <Scalar S>
S gram_volume(const PointSet<S>& points, const std::vector<std::size_t>& chosen) {
    const std::size_t k = chosen.size() - 1;
    const std::size_t d = points.dim();
    std::vector<Point<S>> edges;
    edges.reserve(k);
    for (std::size_t r = 1; r <= k; ++r) edges.push_back(points[chosen[r]] - points[chosen[0]]);
    Matrix<S> gram(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            S acc(0);
            for (std::size_t c = 0; c < d; ++c) acc += edges[a][c] * edges[b][c];
            gram(a, b) = acc;
            gram(b, a) = acc;
        }
    }
    return determinant(std::move(gram));
}

template <Scalar S>
bool strictly_greater(const S& a, const S& b, double tol) {
    if constexpr (is_exact_v<S>) {
        return a > b;
    } else {
        return a > b * (1.0 + tol) && a > 0.0;
    }
}

}  // namespace

template <Scalar S>
MvsResult<S> mvs_exact(const PointSet<S>& points, const MvsOptions& options) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    check_input(n, d);
    const std::uint64_t combos = combination_count(n, d + 1);
    if (combos > options.enum_cap) {
        throw EnumerationCapExceeded("exact MVS needs " + std::to_string(combos) + " subsets, cap is " +
                                     std::to_string(options.enum_cap) + "; use local search");
    }
    const unsigned workers = worker_count(options, combos);

    std::vector<std::size_t> best;
    if constexpr (is_exact_v<S>) {
        const IntegerLattice lattice(points);
        if (Int128Kernel::fits(lattice)) {
            auto c = enumerate<Int128Kernel>(n, d + 1, workers, [&] { return Int128Kernel(lattice); });
            if (!Int128Kernel::positive(c.value)) throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(d));
            best = std::move(c.indices);
        } else {
            auto c = enumerate<MpzKernel>(n, d + 1, workers, [&] { return MpzKernel(lattice); });
            if (!MpzKernel::positive(c.value)) throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(d));
            best = std::move(c.indices);
        }
    } else {
        auto c = enumerate<FloatKernel>(n, d + 1, workers, [&] { return FloatKernel(points); });
        if (!FloatKernel::positive(c.value)) throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(d));
        best = std::move(c.indices);
    }
    return finish_exact(points, best);
}

template <Scalar S>
MvsResult<S> mvs_local_search(const PointSet<S>& points, std::uint64_t seed, const MvsOptions& options) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    check_input(n, d);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    // farthest pair
    std::vector<std::size_t> chosen;
    {
        S best_dist(-1);
        std::size_t bi = 0, bj = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                const Point<S> diff = points[order[a]] - points[order[b]];
                const S dist = dot(diff, diff);
                if (dist > best_dist) {
                    best_dist = dist;
                    bi = order[a];
                    bj = order[b];
                }
            }
        }
        if (sign(best_dist) <= 0) throw DegeneratePointSet("all points coincide");
        chosen = {bi, bj};
    }

    // greedy growth
    while (chosen.size() < d + 1) {
        S best_gram(0);
        std::size_t best_point = n;
        for (std::size_t p : order) {
            if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
            chosen.push_back(p);
            const S g = gram_volume(points, chosen);
            chosen.pop_back();
            if (best_point == n ? sign(g) > 0 : strictly_greater(g, best_gram, options.swap_tolerance)) {
                best_gram = g;
                best_point = p;
            }
        }
        if (best_point == n) throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(d));
        chosen.push_back(best_point);
    }

    Simplex<S> current = [&] {
        try {
            return Simplex<S>::from_indices(points, chosen);
        } catch (const DegenerateSimplex&) {
            throw DegeneratePointSet("point set does not affinely span R^" + std::to_string(d));
        }
    }();

    MvsResult<S> result{current, simplex_volume(current), MvsMethod::LocalSearch, 0, {}};
    result.volume_trace.push_back(result.volume);

    // Replacing v_i by p scales the volume by |1 - a_i.(p - c)| / (d + 1).
    const S threshold(static_cast<long>(d + 1));
    const std::size_t max_swaps = is_exact_v<S> ? std::numeric_limits<std::size_t>::max() : 100000;
    while (result.swap_count < max_swaps) {
        const HalfspaceForm<S> form = halfspace_form(result.simplex);
        S best_score = threshold;
        std::size_t best_slot = d + 1;
        std::size_t best_point = n;
        for (std::size_t i = 0; i <= d; ++i) {
            for (std::size_t p : order) {
                const S score = abs_value(S(1 - form.facet_value(i, points[p])));
                if (strictly_greater(score, best_score, options.swap_tolerance)) {
                    best_score = score;
                    best_slot = i;
                    best_point = p;
                }
            }
        }
        if (best_point == n) break;
        std::vector<std::size_t> next = *result.simplex.vertex_indices();
        next[best_slot] = best_point;
        result.simplex = Simplex<S>::from_indices(points, next);
        result.volume = simplex_volume(result.simplex);
        result.volume_trace.push_back(result.volume);
        ++result.swap_count;
    }

    std::vector<std::size_t> sorted = *result.simplex.vertex_indices();
    std::sort(sorted.begin(), sorted.end());
    result.simplex = Simplex<S>::from_indices(points, sorted);
    return result;
}

template <Scalar S>
LocalMaximalityReport<S> verify_local_maximality(const Simplex<S>& simplex, const PointSet<S>& points, double tol) {
    if (points.dim() != simplex.dim()) throw DimensionMismatch("point set and simplex dimensions differ");
    if (tol < 0) throw InvalidArgument("tolerance must be nonnegative");
    const std::size_t d = simplex.dim();
    const HalfspaceForm<S> form = halfspace_form(simplex);
    const S lower(-static_cast<long>(d));
    const S upper(static_cast<long>(d + 2));
    const S slack = from_double<S>(tol);

    LocalMaximalityReport<S> report;
    report.slabs.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        SlabBounds<S> slab{S(0), S(0)};
        for (std::size_t j = 0; j < points.size(); ++j) {
            const S v = form.facet_value(i, points[j]);
            if (j == 0 || v < slab.min) slab.min = v;
            if (j == 0 || v > slab.max) slab.max = v;
            const S above = v - upper;
            const S below = lower - v;
            const S excess = above > below ? above : below;
            if (excess > slack) {
                report.ok = false;
                if (!report.worst || excess > report.worst->excess) report.worst = SlabViolation<S>{i, j, excess};
            }
        }
        report.slabs.push_back(slab);
    }
    return report;
}

template MvsResult<double> mvs_exact(const PointSet<double>&, const MvsOptions&);
template MvsResult<Rational> mvs_exact(const PointSet<Rational>&, const MvsOptions&);
template MvsResult<double> mvs_local_search(const PointSet<double>&, std::uint64_t, const MvsOptions&);
template MvsResult<Rational> mvs_local_search(const PointSet<Rational>&, std::uint64_t, const MvsOptions&);
template LocalMaximalityReport<double> verify_local_maximality(const Simplex<double>&, const PointSet<double>&,
                                                               double);
template LocalMaximalityReport<Rational> verify_local_maximality(const Simplex<Rational>&,
                                                                 const PointSet<Rational>&, double);

}  // namespace johnsimplex
