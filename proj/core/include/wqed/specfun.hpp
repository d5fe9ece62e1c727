// specfun.hpp — Real sine/cosine integral functions Si(x), Ci(x)

#pragma once

namespace wqed::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// Si(x) = integral of sin(t)/t from 0 to x. Odd in x; |Si| <= Si(pi).
// Throws std::domain_error for non-finite x.
double sine_integral(double x);

// Ci(x) = -integral of cos(t)/t from x to infinity, defined for x > 0 only.
// Throws std::domain_error for x <= 0 or non-finite x.
double cosine_integral(double x);

}  // namespace wqed::specfun
