#include "leodoppler/random.hpp"

namespace leodoppler {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGoldenGamma) ^ mix64((stream + 1) * 0xd1b54a32d192ed03ULL)) {}

StreamRng::result_type StreamRng::operator()() {
  state_ += kGoldenGamma;
  return mix64(state_);
}

double StreamRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

}  // namespace leodoppler
