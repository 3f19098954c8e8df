#pragma once

#include "detmult/betti.hpp"
#include "detmult/degree_matrix.hpp"

namespace detmult {

enum class MultMethod { en, linkage, automatic };

// e(R/I) via the K-polynomial: divide N(z) by (1-z) exactly c times and
// evaluate the quotient at z = 1.  A nonzero remainder at any pass or a
// nonpositive result throws invariant_violation.
BigInt multiplicity_en(const DegreeMatrix& dm);

// e(R/I) via the basic-double-link recursion on the last column/row:
// e(A) = e(A') + u_{t+c-1,t} * e(B), with the principal-ideal (c = 1) and
// complete-intersection (t = 1) base cases.  Memoized per call on the
// canonicalized matrix.
BigInt multiplicity_linkage(const DegreeMatrix& dm);

// The mirror recursion on the first column/row:
// e(A) = e(A'') + u_{1,1} * e(C).
BigInt multiplicity_linkage_dual(const DegreeMatrix& dm);

// Equidegree closed form d^c * C(t+c-1, c).  Throws validation_error on
// nonpositive arguments.
BigInt multiplicity_pure(long long t, long long c, long long d);

// Dispatch; automatic runs both paths and requires agreement.
BigInt multiplicity(const DegreeMatrix& dm, MultMethod method = MultMethod::automatic);

} // namespace detmult
