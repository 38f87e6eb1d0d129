#include "statespace/geometry.hpp"

#include <stdexcept>

namespace statespace {

AffineMap AffineMap::identity(std::size_t n) {
    return AffineMap{Matrix::identity(n), Vec(n, Rational(0))};
}

Hyperplane Hyperplane::make(Vec normal, Rational level) {
    for (auto& entry : normal) {
        if (entry != 0) {
            const Rational scale = entry;
            for (auto& e : normal) e /= scale;
            level /= scale;
            return Hyperplane{std::move(normal), std::move(level)};
        }
    }
    throw std::invalid_argument("hyperplane normal is zero");
}

std::size_t affine_rank(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    const std::size_t n = points.front().size();
    for (const auto& p : points) {
        if (p.size() != n) throw std::invalid_argument("dimension mismatch");
    }
    if (points.size() == 1) return 0;
    std::vector<Vec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(points[i] - points.front());
    }
    return rank(Matrix::from_rows(diffs));
}

bool is_affinely_independent(const std::vector<Point>& points) {
    return affine_rank(points) == points.size() - 1;
}

AffineMap affine_map_from_frame(const std::vector<Point>& frame,
                                const std::vector<Point>& images) {
    if (frame.empty() || frame.size() != images.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const std::size_t n = frame.front().size();
    if (frame.size() != n + 1) {
        throw std::invalid_argument("frame not affinely independent");
    }
    for (const auto& p : images) {
        if (p.size() != n) throw std::invalid_argument("dimension mismatch");
    }
    // Columns are the frame differences; invertibility of D is exactly
    // affine independence of a spanning frame.
    std::vector<Vec> frame_diffs, image_diffs;
    for (std::size_t i = 1; i <= n; ++i) {
        frame_diffs.push_back(frame[i] - frame[0]);
        image_diffs.push_back(images[i] - images[0]);
    }
    const Matrix d = Matrix::from_columns(frame_diffs);
    const auto d_inv = inverse(d);
    if (!d_inv) throw std::invalid_argument("frame not affinely independent");
    const Matrix linear = Matrix::from_columns(image_diffs) * *d_inv;
    const Vec translation = images[0] - linear * frame[0];
    return AffineMap{linear, translation};
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    return AffineMap{a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineMap invert(const AffineMap& a) {
    const auto inv = inverse(a.linear);
    if (!inv) throw std::invalid_argument("not invertible");
    const Vec t = *inv * a.translation;
    Vec neg(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) neg[i] = -t[i];
    return AffineMap{*inv, neg};
}

}  // namespace statespace
