#include "edcs/hashing.hpp"

#include <stdexcept>

namespace edcs {

namespace {

inline std::uint64_t reduce_mersenne(unsigned __int128 x) {
    std::uint64_t r = static_cast<std::uint64_t>(x & KWiseHash::kPrime) +
                      static_cast<std::uint64_t>(x >> 61);
    if (r >= KWiseHash::kPrime) r -= KWiseHash::kPrime;
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return reduce_mersenne(static_cast<unsigned __int128>(a) * b);
}

} // namespace

KWiseHash::KWiseHash(int kappa, std::uint64_t range, Rng& rng) : range_(range) {
    if (kappa < 1) throw std::invalid_argument("kwise_hash: kappa must be >= 1");
    if (range < 1) throw std::invalid_argument("kwise_hash: range must be >= 1");
    if (range > kPrime) throw std::invalid_argument("kwise_hash: range exceeds field size");
    coeffs_.resize(kappa);
    for (auto& c : coeffs_) c = rng.next_below(kPrime);
}

std::uint64_t KWiseHash::operator()(std::uint64_t x) const {
    x %= kPrime;
    std::uint64_t acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc = mulmod(acc, x);
        acc += coeffs_[i];
        if (acc >= kPrime) acc -= kPrime;
    }
    return acc % range_;
}

} // namespace edcs
