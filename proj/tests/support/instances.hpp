#pragma once

// Random instance generators and small conversion helpers shared by tests.

#include <cstdint>
#include <random>
#include <vector>

#include "johnsimplex/geometry.hpp"
#include "johnsimplex/linprog.hpp"
#include "oracles.hpp"

namespace testing_support {

using johnsimplex::LinearProgram;
using johnsimplex::Point;
using johnsimplex::PointSet;
using johnsimplex::Rational;

inline Rational small_rational(std::mt19937_64& rng, long max_abs, long max_den) {
    const long q = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
    const long span = max_abs * q;
    Rational r(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span, q);
    r.canonicalize();
    return r;
}

struct RandomLp {
    oracle::Vec c;
    oracle::Mat g;
    oracle::Vec h;
};

// m <= 4 variables, up to 12 constraints, entries p/q with |p/q| <= 5.
inline RandomLp random_lp(std::mt19937_64& rng) {
    RandomLp lp;
    const std::size_t m = 1 + rng() % 4;
    const std::size_t k = m + 1 + rng() % (12 - m);
    for (std::size_t j = 0; j < m; ++j) lp.c.push_back(small_rational(rng, 5, 3));
    // three in four programs get a planted feasible point
    const bool planted = rng() % 4 != 0;
    oracle::Vec z0;
    for (std::size_t j = 0; j < m; ++j) z0.push_back(small_rational(rng, 3, 2));
    for (std::size_t i = 0; i < k; ++i) {
        oracle::Vec row;
        Rational gz = 0;
        for (std::size_t j = 0; j < m; ++j) {
            row.push_back(small_rational(rng, 5, 3));
            gz += row.back() * z0[j];
        }
        lp.g.push_back(std::move(row));
        const Rational noise = small_rational(rng, 5, 3);
        lp.h.push_back(planted ? Rational(gz + abs(noise)) : noise);
    }
    return lp;
}

template <class S>
LinearProgram<S> to_program(const RandomLp& r) {
    LinearProgram<S> lp;
    lp.num_vars = r.c.size();
    for (const auto& v : r.c) lp.objective.push_back(S(v));
    for (std::size_t i = 0; i < r.g.size(); ++i) {
        std::vector<S> row;
        for (const auto& v : r.g[i]) row.push_back(S(v));
        lp.add_constraint(std::move(row), S(r.h[i]));
    }
    return lp;
}

template <>
inline LinearProgram<double> to_program<double>(const RandomLp& r) {
    LinearProgram<double> lp;
    lp.num_vars = r.c.size();
    for (const auto& v : r.c) lp.objective.push_back(v.get_d());
    for (std::size_t i = 0; i < r.g.size(); ++i) {
        std::vector<double> row;
        for (const auto& v : r.g[i]) row.push_back(v.get_d());
        lp.add_constraint(std::move(row), r.h[i].get_d());
    }
    return lp;
}

inline std::vector<oracle::Vec> to_vecs(const PointSet<Rational>& pts) {
    std::vector<oracle::Vec> out;
    for (const auto& p : pts) out.push_back(p.coords());
    return out;
}

inline std::vector<oracle::Vec> to_vecs(const std::vector<Point<Rational>>& pts) {
    std::vector<oracle::Vec> out;
    for (const auto& p : pts) out.push_back(p.coords());
    return out;
}

inline PointSet<double> to_double(const PointSet<Rational>& pts) {
    PointSet<double> out(pts.dim());
    for (const auto& p : pts) {
        std::vector<double> c;
        for (std::size_t k = 0; k < p.dim(); ++k) c.push_back(p[k].get_d());
        out.add(Point<double>(std::move(c)));
    }
    return out;
}

}  // namespace testing_support
