#include "polyconvex/sos.hpp"

#include "polyconvex/calculus.hpp"

namespace polycvx {

Polynomial SosCertificate::sum() const {
  Polynomial s(target.arity());
  for (const auto& [w, q] : squares) {
    if (q.arity() != target.arity()) throw ArityMismatch("square arity differs from certificate target");
    s += (q * q) * w;
  }
  return s;
}

bool verify(const SosCertificate& cert) {
  for (const auto& sq : cert.squares) {
    if (sq.weight.sign() <= 0) return false;
  }
  return cert.sum() == cert.target;
}

Polynomial hessian_form(const Polynomial& p) { return quadratic_form(hessian(p)); }

bool verify(const SosConvexityCertificate& cert) {
  if (!(cert.hessian_form == hessian_form(cert.source))) return false;
  if (!(cert.cert.target == cert.hessian_form)) return false;
  return verify(cert.cert);
}

}  // namespace polycvx
