#pragma once

#include "hulthen/errors.hpp"

namespace hulthen {

// Generalized Hulthen barrier in natural units (hbar = c = m = 1):
//
//   V(x) = V0 / (e^{a|x|} - q)
//
// i.e. the even two-branch form V0/(e^{-ax}-q) for x<0 and V0/(e^{ax}-q)
// for x>0.  Smooth, positive, peaked at x=0 with height V0/(1-q), decaying
// like V0 e^{-a|x|}.  Requiring 0 < q < 1 keeps the denominator positive
// for all finite x.
struct HulthenParams {
  double v0;  // strength, units of mc^2
  double a;   // inverse diffuseness, units of 1/length
  double q;   // shape / screening parameter, dimensionless

  HulthenParams(double v0, double a, double q);
};

// V(x).  Both branches coincide at x = 0, where V = v0/(1-q).
double evaluate(const HulthenParams& p, double x);

// Barrier height V(0) = v0/(1-q).
double barrier_peak(const HulthenParams& p);

// Smallest L > 0 with V(L) <= floor, in closed form L = ln(v0/floor + q)/a.
// Requires 0 < floor < barrier_peak(p).
double decay_cutoff(const HulthenParams& p, double floor);

}  // namespace hulthen
