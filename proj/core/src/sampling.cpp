#include "johnsimplex/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace johnsimplex {
namespace {

// Distributions are written out by hand so samples do not depend on the
// standard library's distribution implementations.
class Source {
public:
    explicit Source(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    double exponential() {
        double u = uniform();
        while (u == 0.0) u = uniform();
        return -std::log(u);
    }

private:
    std::mt19937_64 engine_;
};

template <Scalar S>
S snap(double x, const SampleOptions& options) {
    if constexpr (is_exact_v<S>) {
        Rational r(static_cast<long>(std::llround(x * static_cast<double>(options.grid))), options.grid);
        r.canonicalize();
        return r;
    } else {
        (void)options;
        return x;
    }
}

std::vector<double> ball_point(Source& src, std::size_t d, double r_min) {
    std::vector<double> g(d);
    double norm = 0.0;
    while (norm == 0.0) {
        norm = 0.0;
        for (double& v : g) {
            v = src.normal();
            norm += v * v;
        }
        norm = std::sqrt(norm);
    }
    // radius density proportional to r^(d-1) on [r_min, 1]
    const double lo = std::pow(r_min, static_cast<double>(d));
    const double r = std::pow(src.uniform(lo, 1.0), 1.0 / static_cast<double>(d));
    for (double& v : g) v = v / norm * r;
    return g;
}

long perfect_square_root(std::size_t n) {
    const long r = std::lround(std::sqrt(static_cast<double>(n)));
    return static_cast<std::size_t>(r * r) == n ? r : -1;
}

}  // namespace

std::string to_string(Body body) {
    switch (body) {
    case Body::Square: return "square";
    case Body::Disk: return "disk";
    case Body::RegularSimplex: return "regular-simplex";
    case Body::Annulus: return "annulus";
    }
    return "unknown";
}

Body parse_body(std::string_view name) {
    if (name == "square") return Body::Square;
    if (name == "disk") return Body::Disk;
    if (name == "regular-simplex") return Body::RegularSimplex;
    if (name == "annulus") return Body::Annulus;
    throw InvalidArgument("unknown body '" + std::string(name) + "'");
}

template <Scalar S>
std::vector<Point<S>> regular_simplex_vertices(std::size_t d) {
    if (d == 0) throw InvalidArgument("dimension must be positive");
    if (d == 1) return {Point<S>{S(-1)}, Point<S>{S(1)}};
    if (d == 3) {
        return {Point<S>{S(1), S(1), S(1)}, Point<S>{S(1), S(-1), S(-1)}, Point<S>{S(-1), S(1), S(-1)},
                Point<S>{S(-1), S(-1), S(1)}};
    }
    // e_1..e_d together with t(1,...,1), t = (1 - sqrt(d+1))/d, then centered
    S t;
    if constexpr (is_exact_v<S>) {
        const long root = perfect_square_root(d + 1);
        if (root < 0) {
            throw InvalidArgument("regular simplex in dimension " + std::to_string(d) +
                                  " has irrational coordinates; use float mode");
        }
        t = Rational(1 - root, static_cast<long>(d));
        t.canonicalize();
    } else {
        t = (1.0 - std::sqrt(static_cast<double>(d + 1))) / static_cast<double>(d);
    }
    std::vector<Point<S>> vs;
    for (std::size_t i = 0; i < d; ++i) {
        Point<S> e(d);
        e[i] = S(1);
        vs.push_back(std::move(e));
    }
    vs.push_back(Point<S>(std::vector<S>(d, t)));
    const Point<S> c = centroid(std::span<const Point<S>>(vs));
    for (auto& v : vs) v -= c;
    return vs;
}

template <Scalar S>
PointSet<S> sample_body(Body body, std::size_t n, std::size_t d, std::uint64_t seed, const SampleOptions& options) {
    if (d == 0) throw InvalidArgument("dimension must be positive");
    if (n < d + 1) throw InvalidArgument("need at least d+1 = " + std::to_string(d + 1) + " points");
    if (options.grid <= 0) throw InvalidArgument("grid must be positive");
    if (body == Body::Annulus && d != 2) throw InvalidArgument("annulus is only defined for d = 2");

    Source src(seed);
    PointSet<S> out(d);
    auto add_double = [&](const std::vector<double>& x) {
        std::vector<S> coords;
        coords.reserve(d);
        for (double v : x) coords.push_back(snap<S>(v, options));
        out.add(Point<S>(std::move(coords)));
    };

    switch (body) {
    case Body::Square:
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> x(d);
            for (double& v : x) v = src.uniform(-1.0, 1.0);
            add_double(x);
        }
        break;
    case Body::Disk:
        for (std::size_t i = 0; i < n; ++i) add_double(ball_point(src, d, 0.0));
        break;
    case Body::Annulus:
        for (std::size_t i = 0; i < n; ++i) add_double(ball_point(src, d, 0.5));
        break;
    case Body::RegularSimplex: {
        const std::vector<Point<S>> vs = regular_simplex_vertices<S>(d);
        for (const auto& v : vs) out.add(v);
        for (std::size_t i = d + 1; i < n; ++i) {
            // uniform on the simplex: normalized exponentials as weights
            std::vector<double> w(d + 1);
            double total = 0.0;
            for (double& v : w) total += (v = src.exponential());
            std::vector<double> x(d, 0.0);
            for (std::size_t j = 0; j <= d; ++j) {
                for (std::size_t k = 0; k < d; ++k) x[k] += w[j] / total * to_double(vs[j][k]);
            }
            if constexpr (is_exact_v<S>) {
                // snap the weights rather than the point so it stays inside
                std::vector<Rational> lam(d + 1);
                Rational used(0);
                for (std::size_t j = 0; j < d; ++j) {
                    lam[j] = Rational(static_cast<long>(std::floor(w[j] / total * static_cast<double>(options.grid))),
                                      options.grid);
                    lam[j].canonicalize();
                    used += lam[j];
                }
                lam[d] = 1 - used;
                Point<S> p(d);
                for (std::size_t j = 0; j <= d; ++j) p += lam[j] * vs[j];
                out.add(std::move(p));
            } else {
                add_double(x);
            }
        }
        break;
    }
    }
    return out;
}

PointSet<Rational> random_rational_points(std::size_t n, std::size_t d, std::uint64_t seed, long max_abs,
                                          long max_den) {
    if (d == 0) throw InvalidArgument("dimension must be positive");
    if (max_abs <= 0 || max_den <= 0) throw InvalidArgument("coordinate bounds must be positive");
    std::mt19937_64 engine(seed);
    auto below = [&](std::uint64_t bound) { return static_cast<long>(engine() % bound); };
    PointSet<Rational> out(d);
    for (std::size_t i = 0; i < n; ++i) {
        Point<Rational> p(d);
        for (std::size_t k = 0; k < d; ++k) {
            const long q = 1 + below(static_cast<std::uint64_t>(max_den));
            const long span = max_abs * q;
            p[k] = Rational(below(static_cast<std::uint64_t>(2 * span + 1)) - span, q);
            p[k].canonicalize();
        }
        out.add(std::move(p));
    }
    return out;
}

template PointSet<double> sample_body(Body, std::size_t, std::size_t, std::uint64_t, const SampleOptions&);
template PointSet<Rational> sample_body(Body, std::size_t, std::size_t, std::uint64_t, const SampleOptions&);
template std::vector<Point<double>> regular_simplex_vertices(std::size_t);
template std::vector<Point<Rational>> regular_simplex_vertices(std::size_t);

}  // namespace johnsimplex
