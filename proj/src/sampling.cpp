#include "riccati3d/sampling.hpp"

#include <cmath>
#include <random>

namespace riccati3d {

double radical_inverse(std::uint64_t i, unsigned base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

HaltonSampler::HaltonSampler(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    shift_ = {u(rng), u(rng), u(rng)};
}

Vec3 HaltonSampler::unit(std::uint64_t index) const {
    auto wrap = [](double v) { return v - std::floor(v); };
    // Index 0 is the origin of every radical inverse; start at 1.
    const std::uint64_t i = index + 1;
    return {wrap(radical_inverse(i, 2) + shift_.x), wrap(radical_inverse(i, 3) + shift_.y),
            wrap(radical_inverse(i, 5) + shift_.z)};
}

std::vector<Point3> sample_points(const BoxDomain& domain, const Point3& lower, const Point3& upper, std::size_t n,
                                  std::uint64_t seed, const std::function<bool(const Point3&)>& accept,
                                  std::size_t max_tries) {
    for (int a = 0; a < 3; ++a) {
        if (!std::isfinite(lower[a]) || !std::isfinite(upper[a]) || !(lower[a] < upper[a])) {
            throw DomainError("sample_points needs a finite, nonempty box");
        }
    }
    if (max_tries == 0) max_tries = 2000 * n + 1000;
    const HaltonSampler halton(seed);
    std::vector<Point3> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < max_tries && out.size() < n; ++i) {
        const Vec3 t = halton.unit(i);
        const Point3 p{lower.x + t.x * (upper.x - lower.x), lower.y + t.y * (upper.y - lower.y),
                       lower.z + t.z * (upper.z - lower.z)};
        if (!domain.admits(p)) continue;
        if (accept && !accept(p)) continue;
        out.push_back(p);
    }
    if (out.size() < n) throw DomainError("sample_points: too few admissible points in the sampling box");
    return out;
}

std::vector<Point3> sample_points(const BoxDomain& domain, std::size_t n, std::uint64_t seed,
                                  const std::function<bool(const Point3&)>& accept, std::size_t max_tries) {
    return sample_points(domain, domain.lower(), domain.upper(), n, seed, accept, max_tries);
}

}  // namespace riccati3d
