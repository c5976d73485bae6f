#pragma once

#include "mor/params.hpp"

namespace mor {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz), accurate to ~1e-14 absolute.
///
/// Evaluated from the Fourier representation w(z) = pi^{-1/2} int_0^inf exp(-t^2/4 + izt) dt
/// for |z| < 8 and from the Laplace continued fraction beyond; the lower half plane uses
/// w(z) = 2 exp(-z^2) - w(-z). Shares no code with the Doppler quadrature.
Complex faddeeva_w(Complex z);

} // namespace mor
