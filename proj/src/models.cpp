#include "statespace/models.hpp"

#include <cmath>
#include <stdexcept>

namespace statespace {

namespace {

double norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double linf_sum(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] + b[i]));
    }
    return m;
}

// Exact square root of a nonnegative rational when it exists.
std::optional<Rational> rational_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    const BigInt ns = sqrt(num);
    const BigInt ds = sqrt(den);
    if (ns * ns != num || ds * ds != den) return std::nullopt;
    return Rational(ns, ds);
}

std::optional<Rational> exact_norm(const std::optional<Vec>& exact) {
    if (!exact) return std::nullopt;
    Rational sq = 0;
    for (const auto& x : *exact) sq += x * x;
    return rational_sqrt(sq);
}

}  // namespace

ModelPoint ModelPoint::of_exact(Vec coords) {
    std::vector<double> d;
    d.reserve(coords.size());
    for (const auto& x : coords) d.push_back(x.convert_to<double>());
    return {std::move(d), std::move(coords)};
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> random_ball_point(std::size_t dim, std::mt19937_64& rng,
                                      bool on_sphere) {
    while (true) {
        std::vector<double> v(dim);
        for (auto& x : v) x = 2.0 * uniform_unit(rng) - 1.0;
        const double r = norm(v);
        if (r > 1.0 || r < 1e-3) continue;
        if (on_sphere) {
            for (auto& x : v) x /= r;
        }
        return v;
    }
}

bool ball_distinguishable(const BallModel& model, const std::vector<ModelPoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : points) {
        if (p.coords.size() != model.dim) throw std::invalid_argument("dimension mismatch");
        if (std::abs(norm(p.coords) - 1.0) > model.tau) {
            throw std::invalid_argument("not an extreme point of the ball");
        }
    }
    if (points.size() == 1) return true;
    if (points.size() > 2) return false;
    return linf_sum(points[0].coords, points[1].coords) <= model.tau;
}

ModelDecomposition ball_decompose(const BallModel& model, const ModelPoint& p) {
    if (p.coords.size() != model.dim) throw std::invalid_argument("dimension mismatch");
    const double r = norm(p.coords);
    if (r > 1.0 + model.tau) throw std::invalid_argument("point not in the ball");

    std::vector<double> u(model.dim, 0.0);
    if (r == 0.0) {
        u[0] = 1.0;  // canonical axis for the center
    } else {
        for (std::size_t i = 0; i < model.dim; ++i) u[i] = p.coords[i] / r;
    }
    if (std::abs(r - 1.0) <= model.tau) {
        return {{ModelTerm{u, 1.0, Rational(1)}}};
    }
    std::vector<double> anti(u);
    for (auto& x : anti) x = -x;
    const double w1 = (1.0 + r) / 2.0;
    std::optional<Rational> ew1, ew2;
    if (const auto er = exact_norm(p.exact)) {
        ew1 = (Rational(1) + *er) / 2;
        ew2 = Rational(1) - *ew1;
    }
    return {{ModelTerm{u, w1, ew1}, ModelTerm{anti, 1.0 - w1, ew2}}};
}

namespace {

struct CylinderClassification {
    bool on_bottom = false;
    bool on_top = false;
    double radial = 0;  // |(x, y)|
};

CylinderClassification classify_extreme(const CylinderModel& model, const ModelPoint& p) {
    if (p.coords.size() != 3) throw std::invalid_argument("dimension mismatch");
    CylinderClassification c;
    c.radial = std::hypot(p.coords[0], p.coords[1]);
    c.on_bottom = std::abs(p.coords[2]) <= model.tau;
    c.on_top = std::abs(p.coords[2] - 1.0) <= model.tau;
    if ((!c.on_bottom && !c.on_top) || std::abs(c.radial - 1.0) > model.tau) {
        throw std::invalid_argument("not an extreme point of the cylinder");
    }
    return c;
}

}  // namespace

bool cylinder_distinguishable(const CylinderModel& model,
                              const std::vector<ModelPoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    std::vector<CylinderClassification> kinds;
    for (const auto& p : points) kinds.push_back(classify_extreme(model, p));
    if (points.size() == 1) return true;
    if (points.size() > 2) return false;
    if (kinds[0].on_top != kinds[1].on_top) return true;  // one per circle
    const double dx = points[0].coords[0] + points[1].coords[0];
    const double dy = points[0].coords[1] + points[1].coords[1];
    return std::max(std::abs(dx), std::abs(dy)) <= model.tau;
}

std::optional<ModelDecomposition> cylinder_decompose(const CylinderModel& model,
                                                     const ModelPoint& p) {
    if (p.coords.size() != 3) throw std::invalid_argument("dimension mismatch");
    const double x = p.coords[0], y = p.coords[1], z = p.coords[2];
    const double radial = std::hypot(x, y);
    if (radial > 1.0 + model.tau || z < -model.tau || z > 1.0 + model.tau) {
        throw std::invalid_argument("point not in the cylinder");
    }

    // Extreme points are their own decomposition.
    const bool near_bottom = std::abs(z) <= model.tau;
    const bool near_top = std::abs(z - 1.0) <= model.tau;
    if ((near_bottom || near_top) && std::abs(radial - 1.0) <= model.tau) {
        return ModelDecomposition{{ModelTerm{p.coords, 1.0, Rational(1)}}};
    }

    // Same-circle antipodal pair across the disk at height 0 or 1.
    if (near_bottom || near_top) {
        const double level = near_bottom ? 0.0 : 1.0;
        std::vector<double> dir{1.0, 0.0};
        if (radial > 0.0) dir = {x / radial, y / radial};
        std::optional<Rational> ew1, ew2;
        if (p.exact) {
            const Vec xy{(*p.exact)[0], (*p.exact)[1]};
            if (const auto er = exact_norm(xy)) {
                ew1 = (Rational(1) + *er) / 2;
                ew2 = Rational(1) - *ew1;
            }
        }
        const double w1 = (1.0 + radial) / 2.0;
        return ModelDecomposition{
            {ModelTerm{{dir[0], dir[1], level}, w1, ew1},
             ModelTerm{{-dir[0], -dir[1], level}, 1.0 - w1, ew2}}};
    }

    // Top-bottom pair: the z-coordinate forces the weights, the unit
    // endpoints come from intersecting two circles.
    const double h = z;
    std::optional<Rational> eh, e1h;
    if (p.exact) {
        eh = (*p.exact)[2];
        e1h = Rational(1) - *eh;
    }
    if (radial == 0.0) {
        if (std::abs(2.0 * h - 1.0) > model.tau) return std::nullopt;
        return ModelDecomposition{{ModelTerm{{1.0, 0.0, 1.0}, h, eh},
                                   ModelTerm{{-1.0, 0.0, 0.0}, 1.0 - h, e1h}}};
    }
    const double alpha = (radial * radial + 2.0 * h - 1.0) / (2.0 * h * radial);
    const double beta_sq = 1.0 - alpha * alpha;
    if (beta_sq < -model.tau) return std::nullopt;
    const double beta = std::sqrt(std::max(beta_sq, 0.0));
    const double qx = x / radial, qy = y / radial;
    const std::vector<double> top{alpha * qx - beta * qy, alpha * qy + beta * qx, 1.0};
    const std::vector<double> bottom{(x - h * top[0]) / (1.0 - h),
                                     (y - h * top[1]) / (1.0 - h), 0.0};
    return ModelDecomposition{{ModelTerm{top, h, eh}, ModelTerm{bottom, 1.0 - h, e1h}}};
}

namespace {

// Householder reflection sending u to v (unit vectors); linear, orthogonal,
// and it also sends -u to -v.
std::vector<double> reflect_to(const std::vector<double>& u, const std::vector<double>& v,
                               const std::vector<double>& x) {
    std::vector<double> n(u.size());
    double nn = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        n[i] = u[i] - v[i];
        nn += n[i] * n[i];
    }
    if (nn == 0.0) return x;
    double nx = 0;
    for (std::size_t i = 0; i < u.size(); ++i) nx += n[i] * x[i];
    std::vector<double> out(x);
    for (std::size_t i = 0; i < u.size(); ++i) out[i] -= 2.0 * nx / nn * n[i];
    return out;
}

double dist_inf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

CharacterizationReport characterization_report(const BallModel& model, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t samples = 200;
    CharacterizationReport report;
    bool ok1 = true, ok2 = true, ok3 = true;
    for (std::size_t i = 0; i < samples; ++i) {
        // Transitivity witness: a reflection carries one sampled extreme
        // point to another, staying on the sphere.
        const auto u = random_ball_point(model.dim, rng, true);
        const auto v = random_ball_point(model.dim, rng, true);
        const auto image = reflect_to(u, v, u);
        ok1 = ok1 && dist_inf(image, v) <= 1e-6 && std::abs(norm(image) - 1.0) <= 1e-6;
        // The same reflection carries the ordered antipodal pair (u, -u)
        // to (v, -v).
        std::vector<double> mu(u), mv(v);
        for (auto& c : mu) c = -c;
        for (auto& c : mv) c = -c;
        ok2 = ok2 && dist_inf(reflect_to(u, v, mu), mv) <= 1e-6;
        // Interior points decompose over an antipodal pair.
        const auto p = random_ball_point(model.dim, rng, false);
        const auto d = ball_decompose(model, ModelPoint::of(p));
        ok3 = ok3 && d.terms.size() <= 2;
        std::vector<double> recon(model.dim, 0.0);
        for (const auto& t : d.terms) {
            for (std::size_t c = 0; c < model.dim; ++c) recon[c] += t.weight * t.point[c];
        }
        ok3 = ok3 && dist_inf(recon, p) <= model.tau;
    }
    report.extreme_transitive = {ok1,
        "analytic: orthogonal maps act transitively on the sphere; sampled n=200"};
    report.pair_transitive = {ok2,
        "analytic: a reflection maps any antipodal pair to any other; sampled n=200"};
    report.two_decomposable = {ok3,
        "analytic: every point lies on a diameter; sampled n=200"};
    return report;
}

CharacterizationReport characterization_report(const CylinderModel& model,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t samples = 200;
    CharacterizationReport report;
    bool ok1 = true;
    for (std::size_t i = 0; i < samples; ++i) {
        // Transitivity witness: rotate in the (x,y) plane and flip the
        // height when the circles differ.
        const auto a = random_ball_point(2, rng, true);
        const auto b = random_ball_point(2, rng, true);
        const double za = rng() % 2 ? 1.0 : 0.0;
        const double zb = rng() % 2 ? 1.0 : 0.0;
        const double c = a[0] * b[0] + a[1] * b[1];
        const double s = a[0] * b[1] - a[1] * b[0];
        const std::vector<double> image{c * a[0] - s * a[1], s * a[0] + c * a[1],
                                        za == zb ? za : 1.0 - za};
        ok1 = ok1 && dist_inf(image, {b[0], b[1], zb}) <= 1e-6;
        (void)classify_extreme(model, ModelPoint::of(image));
    }
    report.extreme_transitive = {ok1,
        "analytic: axis rotations and the height flip act transitively on the two circles; sampled n=200"};
    // The angular offset of a top-bottom pair is preserved up to sign by
    // every automorphism, so aligned and anti-aligned pairs sit in
    // different orbits.
    const std::vector<ModelPoint> aligned{ModelPoint::of({1, 0, 1}), ModelPoint::of({1, 0, 0})};
    const std::vector<ModelPoint> anti{ModelPoint::of({1, 0, 1}), ModelPoint::of({-1, 0, 0})};
    const bool both_pairs = cylinder_distinguishable(model, aligned) &&
                            cylinder_distinguishable(model, anti);
    report.pair_transitive = {false,
        both_pairs ? "two distinguishable top-bottom pairs with angular offsets 0 and pi lie in distinct orbits"
                   : "internal inconsistency"};
    const ModelPoint witness = ModelPoint::of_exact({Rational(0), Rational(0), Rational(1, 4)});
    const bool decomposes = cylinder_decompose(model, witness).has_value();
    report.two_decomposable = {decomposes, decomposes
        ? "internal inconsistency"
        : "the point (0, 0, 1/4) admits no decomposition over the distinguishable families"};
    if (!decomposes) report.counterexample = witness.coords;
    return report;
}

}  // namespace statespace
