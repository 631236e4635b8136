#include "mpa/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace mpa {

std::string shortest(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return {buf.data(), end};
}

}  // namespace mpa
