#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "riccati3d/fields.hpp"

namespace riccati3d {

/// Radical inverse of i in the given base.
double radical_inverse(std::uint64_t i, unsigned base);

/// Halton sequence in bases 2, 3, 5 with a Cranley-Patterson shift drawn from `seed`.
class HaltonSampler {
public:
    explicit HaltonSampler(std::uint64_t seed);
    /// Point of the shifted unit cube.
    Vec3 unit(std::uint64_t index) const;

private:
    Vec3 shift_;
};

/// The first n points of the sequence, mapped into [lower, upper], that pass `accept`
/// (default: domain.admits). Throws DomainError when fewer than n points survive max_tries draws.
std::vector<Point3> sample_points(const BoxDomain& domain, std::size_t n, std::uint64_t seed,
                                  const std::function<bool(const Point3&)>& accept = {},
                                  std::size_t max_tries = 0);

/// Same, over an explicit box intersected with the domain.
std::vector<Point3> sample_points(const BoxDomain& domain, const Point3& lower, const Point3& upper, std::size_t n,
                                  std::uint64_t seed, const std::function<bool(const Point3&)>& accept = {},
                                  std::size_t max_tries = 0);

}  // namespace riccati3d
