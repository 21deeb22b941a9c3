#pragma once

#include "qlab/qexp.hpp"
#include "qlab/tau.hpp"

namespace qlab {

/// True when 1 <= a, b <= p'-1, b - a in {0, +-2} and (a, b) is not
/// (1, 1) or (p'-1, p'-1).
bool valid_step(int a, int b, int p_prime);

/// Weight w(a, b, c) of three consecutive path sites.
/// Throws std::invalid_argument unless (a, b) and (b, c) are valid steps.
QExp weight(int a, int b, int c, const TauTable& tau);

} // namespace qlab
