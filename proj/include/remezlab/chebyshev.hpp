#pragma once

#include <string>

#include "remezlab/trigpoly.hpp"

namespace remezlab {

// Which of the paper-facing bounds is being evaluated. Domain constraints:
// EvenPeriod/OddPeriod s in (0,2pi), AllPeriod s in (0,pi),
// ClassicalAlgebraic s in (0,2), ClassicalExp s in (0,1].
enum class BoundKind { EvenPeriod, OddPeriod, AllPeriod, ClassicalAlgebraic, ClassicalExp };

std::string to_string(BoundKind kind);
BoundKind bound_kind_from_string(const std::string& name);  // throws DomainError
void check_bound_domain(BoundKind kind, double s);          // throws DomainError

// Chebyshev polynomial T_n. Three branches: cos(n arccos x) on [-1,1],
// the closed form ((x+sqrt(x^2-1))^n + (x-sqrt(x^2-1))^n)/2 for x > 1,
// and reflection for x < -1. Throws OverflowError instead of returning inf.
double cheb_T(int n, double x);

// log T_n(x) for x > 1, finite far beyond the double range of T_n itself.
double log_cheb_T(int n, double x);

// Power-basis coefficients of T_n from the three-term recurrence.
AlgPoly cheb_coeffs(int n);

// T_{2n}(sec(s/4)) and the displayed sec/tan identity form of the same value.
double bound_even(int n, double s);
double bound_even_identity(int n, double s);

// bound_even + 1/sqrt(2).
double bound_odd(int n, double s);

// The intermediate ((T_{4n}(sec(s/4)) + 1)/2)^{1/2} step of the odd proof,
// evaluated as displayed: (1/4 (u^{4n} + u^{-4n}) + 1/2)^{1/2}.
double odd_sqrt_step(int n, double s);

// T_{2n}(sec(s/2)); equals bound_even(n, 2s) by the same code path.
double bound_all(int n, double s);

// T_n((2+s)/(2-s)) and exp(min{5 n sqrt(s), 2 n^2 s}).
double bound_classical(int n, double s);
double bound_classical_exp(int n, double s);

double log_bound_even(int n, double s);
double log_bound_odd(int n, double s);
double log_bound_all(int n, double s);
double log_bound_classical(int n, double s);
double log_bound_classical_exp(int n, double s);

double bound_value(BoundKind kind, int n, double s);
double log_bound_value(BoundKind kind, int n, double s);

}  // namespace remezlab
