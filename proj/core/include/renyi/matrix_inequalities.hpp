#pragma once

#include "renyi/bound_report.hpp"
#include "renyi/matrix.hpp"

namespace renyi {

// 0 <= tr(AB) <= tr(A) tr(B) for PSD A, B. Equality flag: either end tight.
BoundReport lemma2_check(const HermitianMatrix& a, const HermitianMatrix& b);

// n (det A det B)^(1/n) <= tr(AB) for PSD A, B of equal dimension n.
// Equality flag: B^(1/2) A B^(1/2) within eq_tol (relative max-norm) of c I.
BoundReport lemma3_check(const HermitianMatrix& a, const HermitianMatrix& b);

// tr(I - A^-1) <= ln det A <= tr(A - I) for PD A. Equality flag: A == I.
BoundReport lemma4_check(const HermitianMatrix& a);

}  // namespace renyi
