#include "kreg/sampling.hpp"

namespace kreg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 sampleRng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

Scalar randomScalar(std::mt19937_64& rng, long box) {
    std::uniform_int_distribution<long> dist(-box, box);
    const long re = dist(rng);
    const long im = dist(rng);
    return Scalar(mpq_class(re), mpq_class(im));
}

Vec randomElement(std::mt19937_64& rng, std::size_t dim, long box) {
    Vec v(dim);
    for (auto& s : v) s = randomScalar(rng, box);
    return v;
}

}  // namespace kreg
