#pragma once

#include <ostream>

#include "klforge/poly.hpp"
#include "klforge/symgroup.hpp"

namespace klforge {

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

}  // namespace klforge
