#pragma once

#include "antiplane/common.hpp"

namespace antiplane {

// Complete elliptic integral of the first kind K(k) by the AGM iteration.
double complete_elliptic_k(double k);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// Jacobi elliptic functions of real argument, modulus k in [0, 1].
JacobiTriple jacobi_sncndn(double u, double k);

// sn(w, k) for complex w via the imaginary-argument addition formula.
cplx jacobi_sn(cplx w, double k);

}  // namespace antiplane
