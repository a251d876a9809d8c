#include "gramsteg/seed_stream.hpp"

namespace gramsteg {

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

}  // namespace gramsteg
