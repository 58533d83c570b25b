#pragma once

// Lane abstraction shared by the scalar reference and the vector variants.
// Kernels are written once against these free functions; the double overloads
// are the reference semantics.

#include <algorithm>
#include <cmath>

namespace planicheck::kernels::lanes {

inline double sqrt(double x) { return std::sqrt(x); }
inline double max(double a, double b) { return a > b ? a : b; }
inline double min(double a, double b) { return a < b ? a : b; }
inline double abs(double x) { return std::fabs(x); }

inline bool lt(double a, double b) { return a < b; }
inline bool gt(double a, double b) { return a > b; }
inline bool le(double a, double b) { return a <= b; }
inline bool both(bool a, bool b) { return a && b; }
inline bool either(bool a, bool b) { return a || b; }
inline double select(bool m, double a, double b) { return m ? a : b; }
inline double as_unit(bool m) { return m ? 1.0 : 0.0; }

}  // namespace planicheck::kernels::lanes
