#pragma once

#include "edcs/rng.hpp"

#include <cstdint>
#include <vector>

namespace edcs {

// Kappa-wise independent hash: a uniformly random polynomial of degree
// kappa-1 over F_q with q = 2^61 - 1, reduced modulo the output range. For
// kappa distinct inputs the outputs are jointly uniform on [0, range)^kappa
// up to the modulus-reduction bias (< kappa * range / q).
class KWiseHash {
public:
    static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

    // Throws if kappa < 1, range < 1, or range > q.
    KWiseHash(int kappa, std::uint64_t range, Rng& rng);

    std::uint64_t operator()(std::uint64_t x) const;

    int kappa() const { return static_cast<int>(coeffs_.size()); }
    std::uint64_t range() const { return range_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

private:
    std::uint64_t range_;
    std::vector<std::uint64_t> coeffs_; // coeffs_[0] + coeffs_[1] x + ...
};

} // namespace edcs
