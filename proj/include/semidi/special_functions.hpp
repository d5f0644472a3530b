#ifndef SEMIDI_SPECIAL_FUNCTIONS_HPP
#define SEMIDI_SPECIAL_FUNCTIONS_HPP

namespace semidi {

// Error function via W. J. Cody's rational Chebyshev approximations
// (Math. Comp. 23, 1969, pp. 631-638; netlib specfun). Accurate to better
// than 1e-15 relative error over the real line.
double erf_cody(double x);

// Complement, computed without cancellation for large x.
double erfc_cody(double x);

}  // namespace semidi

#endif  // SEMIDI_SPECIAL_FUNCTIONS_HPP
