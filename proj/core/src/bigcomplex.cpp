#include "varkit/bigcomplex.hpp"

namespace varkit {

// sin(x + iy) = sin x cosh y + i cos x sinh y
BigComplex BigComplex::sin(const BigComplex& z) {
  mpfr_prec_t p = z.prec();
  BigFloat sx(p), cx(p), shy(p), chy(p);
  mpfr_sin_cos(sx.raw(), cx.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sinh_cosh(shy.raw(), chy.raw(), z.im().raw(), MPFR_RNDN);
  return BigComplex(sx * chy, cx * shy);
}

// cos(x + iy) = cos x cosh y - i sin x sinh y
BigComplex BigComplex::cos(const BigComplex& z) {
  mpfr_prec_t p = z.prec();
  BigFloat sx(p), cx(p), shy(p), chy(p);
  mpfr_sin_cos(sx.raw(), cx.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sinh_cosh(shy.raw(), chy.raw(), z.im().raw(), MPFR_RNDN);
  return BigComplex(cx * chy, -(sx * shy));
}

}  // namespace varkit
