#pragma once

#include "remezlab/intervals.hpp"
#include "remezlab/trigpoly.hpp"

namespace remezlab {

// The even trig polynomial equal pointwise to T_{2n}(cos(t/2)/cos(s/4)).
// Degree n by construction; attains the even-period bound at t = 0 with
// sublevel set [s/2, 2pi - s/2].
TrigPoly extremal_even(int n, double s);

// P(x) = T_n((2x + s)/(2 - s)): attains the classical bound at x = 1 with
// |P| <= 1 exactly on [-1, 1-s].
AlgPoly extremal_classical(int n, double s);

// Equality-case record for the even-period bound.
struct ExtremalWitness {
  TrigPoly poly;
  int n = 0;
  double s = 0.0;
  double bound = 0.0;         // NaN when only representable in log domain
  double attained_sup = 0.0;  // NaN when only representable in log domain
  double log_bound = 0.0;
  double log_sup = 0.0;
  double ratio = 0.0;  // exp(log_sup - log_bound)
  bool log_domain = false;
  CircleIntervalSet sublevel;
  double sublevel_measure = 0.0;
};

// Builds the witness and enforces its invariants: ratio within 1e-8 of 1 and
// sublevel measure within 1e-6 of 2pi - s. Throws WitnessFailure with
// diagnostics otherwise. Values beyond the double range are compared in log
// domain with the sup computed on the coefficient-normalized polynomial.
ExtremalWitness equality_witness(int n, double s);

}  // namespace remezlab
