#include "polyconvex/certificates.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace polycvx {

namespace {

// Monomial a_i * b_j in `arity` variables.
Polynomial product(std::size_t arity, std::size_t a, std::size_t b) {
  Exponents e(arity, 0);
  e[a] += 1;
  e[b] += 1;
  return Polynomial::monomial(arity, std::move(e), Rational(1));
}

std::vector<std::size_t> range(std::size_t count, std::size_t offset) {
  std::vector<std::size_t> m(count);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

}  // namespace

SosCertificate residual_certificate(const BiquadraticForm& b) {
  const ReductionOutput out = construct_f(b);
  const std::size_t n = out.n;
  const std::size_t arity = 4 * n;
  const std::size_t xv = 0;
  const std::size_t yv = n;
  const std::size_t zx = 2 * n;
  const std::size_t zy = 3 * n;

  const auto base = range(2 * n, 0);
  SosCertificate cert{hessian_form(out.f) - quadratic_form(out.A, arity, base, range(n, zy)) -
                          quadratic_form(out.B, arity, base, range(n, zx)),
                      {}};
  const Rational nn(static_cast<long>(n * n));
  const Rational budget = nn * out.gamma;
  if (budget.is_zero()) return cert;

  // p1: each monomial 2c z_xk x_i y_j z_yl of 2 z_x^T C z_y is paired into
  // |c| (z_xk x_i + sign(c) y_j z_yl)^2, drawing |c| from two diagonal budgets.
  std::vector<Rational> left_x(n * n, budget);  // [k * n + i] for z_xk^2 x_i^2
  std::vector<Rational> left_y(n * n, budget);  // [l * n + j] for z_yl^2 y_j^2
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [e, c] : out.C(k, l).terms()) {
        std::size_t i = n;
        std::size_t j = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (e[xv + v] == 1) i = v;
          if (e[yv + v] == 1) j = v;
        }
        if (i == n || j == n) throw std::logic_error("coupling entry is not a combination of x_i y_j");
        const Rational beta = c.abs();
        Polynomial sq = product(arity, zx + k, xv + i);
        sq += Rational(c.sign()) * product(arity, yv + j, zy + l);
        cert.squares.push_back({beta, std::move(sq)});
        left_x[k * n + i] -= beta;
        left_y[l * n + j] -= beta;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& rx = left_x[k * n + i];
      const Rational& ry = left_y[k * n + i];
      if (rx.sign() < 0 || ry.sign() < 0) throw std::logic_error("diagonal budget overdrawn");
      if (rx.sign() > 0) cert.squares.push_back({rx, product(arity, zx + k, xv + i)});
      if (ry.sign() > 0) cert.squares.push_back({ry, product(arity, zy + k, yv + i)});
    }
  }

  // p2 and p3: n^2 gamma (3 sum (z_k x_k)^2 + 2 (sum z_k x_k)^2), in x and in y.
  for (auto [z, v] : {std::pair{zx, xv}, std::pair{zy, yv}}) {
    Polynomial total(arity);
    for (std::size_t k = 0; k < n; ++k) {
      Polynomial t = product(arity, z + k, v + k);
      total += t;
      cert.squares.push_back({Rational(3) * budget, std::move(t)});
    }
    cert.squares.push_back({Rational(2) * budget, std::move(total)});
  }
  return cert;
}

SosConvexityCertificate sos_convexity_certificate(const ReductionOutput& out, const SosCertificate& b_cert) {
  if (!(b_cert.target == out.b_poly)) throw std::invalid_argument("certificate target is not b");
  if (!verify(b_cert)) throw std::invalid_argument("certificate for b does not verify");
  const std::size_t n = out.n;
  const std::size_t arity = 4 * n;

  SosCertificate cert = residual_certificate(out.b);
  // z_y^T A(x) z_y = 2 b(x; z_y) and z_x^T B(y) z_x = 2 b(z_x; y).
  std::vector<std::size_t> to_zy = range(n, 0);
  for (std::size_t j = 0; j < n; ++j) to_zy.push_back(3 * n + j);
  std::vector<std::size_t> to_zx = range(n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) to_zx.push_back(n + j);
  for (const auto& sq : b_cert.squares) {
    const Rational w = Rational(2) * sq.weight;
    cert.squares.push_back({w, sq.poly.embed(arity, to_zy)});
    cert.squares.push_back({w, sq.poly.embed(arity, to_zx)});
  }
  Polynomial form = hessian_form(out.f);
  cert.target = form;
  return SosConvexityCertificate{out.f, std::move(form), std::move(cert)};
}

}  // namespace polycvx
