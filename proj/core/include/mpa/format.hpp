#pragma once

#include <string>

namespace mpa {

/// Shortest decimal string that parses back to exactly `value`.
/// Non-finite values print as "nan", "inf" or "-inf".
std::string shortest(double value);

}  // namespace mpa
