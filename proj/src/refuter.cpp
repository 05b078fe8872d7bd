#include "polyconvex/refuter.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "polyconvex/calculus.hpp"
#include "polyconvex/roots.hpp"

namespace polycvx {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::size_t structured_count(std::size_t n) { return 1 + 2 * n + n * (n - 1) + 2; }

RationalVector structured_point(std::size_t n, std::size_t index) {
  RationalVector v(n);
  if (index == 0) return v;
  index -= 1;
  if (index < 2 * n) {
    v[index / 2] = Rational(index % 2 == 0 ? 1 : -1);
    return v;
  }
  index -= 2 * n;
  if (index < n * (n - 1)) {
    // Pairs (i, j), i < j, each as e_i + e_j then e_i - e_j.
    std::size_t pair = index / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = n - 1 - i;
      if (pair < row) {
        v[i] = Rational(1);
        v[i + 1 + pair] = Rational(index % 2 == 0 ? 1 : -1);
        return v;
      }
      pair -= row;
    }
  }
  index -= n * (n - 1);
  const Rational s(index == 0 ? 1 : -1);
  std::fill(v.begin(), v.end(), s);
  return v;
}

unsigned worker_count(const SamplerConfig& cfg) {
  unsigned t = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  return std::clamp(t, 1U, 16U);
}

// Runs fn over indices [0, count) and returns the hit with the lowest index.
// Work is split into rounds of fixed-size blocks so that threads never
// decide which index wins.
template <class T, class Fn>
std::optional<T> first_hit(std::size_t count, unsigned threads, Fn fn) {
  constexpr std::size_t kBlock = 32;
  for (std::size_t round = 0; round < count; round += kBlock * threads) {
    std::vector<std::optional<T>> hits(threads);
    auto work = [&](unsigned t) {
      const std::size_t begin = round + t * kBlock;
      const std::size_t end = std::min(count, begin + kBlock);
      for (std::size_t i = begin; i < end; ++i) {
        if (auto r = fn(i)) {
          hits[t] = std::move(r);
          return;
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (auto& h : hits) {
      if (h) return h;
    }
  }
  return std::nullopt;
}

RationalMatrix evaluate_symmetric(const PolyMatrix& h, std::span<const Rational> point) {
  const std::size_t n = h.rows();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = h(i, j).evaluate(point);
      if (i != j) m(j, i) = m(i, j);
    }
  }
  return m;
}

RationalVector add_scaled(const RationalVector& x, const Rational& s, const RationalVector& d) {
  RationalVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * d[i];
  return out;
}

std::pair<RationalVector, RationalVector> sample_pair(const SamplerConfig& cfg, std::size_t n, std::size_t k) {
  const std::size_t s = structured_count(n);
  if (k < s * s) return {structured_point(n, k / s), structured_point(n, k % s)};
  const std::size_t r = k - s * s;
  return {sample_point(cfg, n, s + 2 * r), sample_point(cfg, n, s + 2 * r + 1)};
}

// Looks for t in (0, 1) with q(t) > max(q(0), q(1)).
std::optional<Rational> line_bump(const UniPoly& q) {
  if (q.degree() < 2) return std::nullopt;
  const Rational top = max(q.evaluate(Rational(0)), q.evaluate(Rational(1)));
  for (long den : {2L, 4L, 8L}) {
    for (long num = 1; num < den; num += 2) {
      const Rational t(num, den);
      if (q.evaluate(t) > top) return t;
    }
  }
  // Probe near the critical points of q inside (0, 1).
  const UniPoly dq = q.derivative();
  const UniPoly s = squarefree_part(dq);
  for (const auto& iv : isolate_real_roots(dq)) {
    if (iv.hi <= Rational(0) || iv.lo >= Rational(1)) continue;
    const RootInterval fine = refine_root(s, iv, Rational(Integer(1), Integer(4096)));
    for (const Rational& t : {fine.lo, fine.hi, (fine.lo + fine.hi) / Rational(2)}) {
      if (t > Rational(0) && t < Rational(1) && q.evaluate(t) > top) return t;
    }
  }
  return std::nullopt;
}

// Scales v by a positive factor and flips its sign so the first nonzero
// entry is positive, with coprime integer entries.
RationalVector normalized_direction(RationalVector v) {
  v = primitive_integer_vector(std::move(v));
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

}  // namespace

RationalVector sample_point(const SamplerConfig& cfg, std::size_t arity, std::size_t index) {
  if (index < structured_count(arity)) return structured_point(arity, index);
  std::uint64_t state = splitmix64(cfg.seed ^ splitmix64(index));
  RationalVector v(arity);
  const std::uint64_t dens = std::max<std::uint32_t>(1, cfg.denominator_bound);
  for (auto& x : v) {
    state = splitmix64(state);
    const long den = static_cast<long>(1 + state % dens);
    state = splitmix64(state);
    const long span = 2L * static_cast<long>(cfg.coordinate_bound) * den + 1;
    const long num = static_cast<long>(state % static_cast<std::uint64_t>(span)) -
                     static_cast<long>(cfg.coordinate_bound) * den;
    x = Rational(Integer(num), Integer(den));
  }
  return v;
}

PsdResult psd_test_exact(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("psd_test_exact: matrix is not symmetric");
  const std::size_t n = m.rows();
  RationalMatrix s = m;
  std::vector<RationalVector> basis(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = Rational(1);

  PsdResult result;
  std::optional<RationalVector> negative;
  for (std::size_t k = 0; k < n && !negative; ++k) {
    const Rational d = s(k, k);
    if (d.sign() < 0) {
      negative = basis[k];
      break;
    }
    if (d.is_zero()) {
      std::size_t j = k + 1;
      while (j < n && s(k, j).is_zero()) ++j;
      if (j == n) {
        result.transcript.pivots.push_back(d);
        result.transcript.kernel.push_back(basis[k]);
        continue;
      }
      // u = c*u_k - sign(s_kj)*u_j has value s_jj - 2c|s_kj|.
      const Rational off = s(k, j).abs();
      Rational c(1);
      if (s(j, j) >= Rational(2) * off) {
        const Rational ratio = s(j, j) / (Rational(2) * off);
        c = Rational(Integer(ratio.numerator() / ratio.denominator())) + Rational(1);
      }
      const Rational sj(s(k, j).sign());
      RationalVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = c * basis[k][i] - sj * basis[j][i];
      negative = std::move(v);
      break;
    }
    result.transcript.pivots.push_back(d);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (s(k, j).is_zero()) continue;
      const Rational f = s(k, j) / d;
      for (std::size_t i = 0; i < n; ++i) basis[j][i] -= f * basis[k][i];
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s(i, k).is_zero()) continue;
      const Rational f = s(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= f * s(k, j);
    }
  }

  if (!negative) {
    result.psd = true;
    result.transcript.basis = std::move(basis);
    return result;
  }

  // Prefer the simplest negative direction when one exists.
  auto try_vec = [&](RationalVector v) -> bool {
    const Rational val = m.quadratic_value(v);
    if (val.sign() >= 0) return false;
    result.direction = std::move(v);
    result.value = val;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n);
    e[i] = Rational(1);
    if (try_vec(e)) return result;
  }
  for (const int sign : {-1, 1}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        RationalVector e(n);
        e[i] = Rational(1);
        e[j] = Rational(sign);
        if (try_vec(e)) return result;
      }
    }
  }
  RationalVector v = normalized_direction(*negative);
  if (!try_vec(std::move(v))) throw std::logic_error("psd_test_exact: pivot direction failed to re-check");
  return result;
}

std::optional<Witness> refute_convexity(const Polynomial& p, const SamplerConfig& cfg) {
  if (p.degree() < 2) return std::nullopt;
  const PolyMatrix h = hessian(p);
  const std::size_t n = p.arity();
  return first_hit<Witness>(cfg.budget, worker_count(cfg), [&](std::size_t i) -> std::optional<Witness> {
    RationalVector a = sample_point(cfg, n, i);
    const PsdResult r = psd_test_exact(evaluate_symmetric(h, a));
    if (r.psd) return std::nullopt;
    return IndefiniteDirection{std::move(a), r.direction};
  });
}

std::optional<RationalVector> refute_nonnegativity(const Polynomial& p, const SamplerConfig& cfg) {
  const std::size_t n = p.arity();
  return first_hit<RationalVector>(cfg.budget, worker_count(cfg),
                                   [&](std::size_t i) -> std::optional<RationalVector> {
                                     RationalVector a = sample_point(cfg, n, i);
                                     if (p.evaluate(a).sign() < 0) return a;
                                     return std::nullopt;
                                   });
}

std::optional<Witness> refute_quasiconvexity(const Polynomial& p, const SamplerConfig& cfg) {
  if (p.degree() < 2) return std::nullopt;
  const std::size_t n = p.arity();
  if (p.is_homogeneous() && p.degree() % 2 == 0) {
    if (auto x = refute_nonnegativity(p, cfg)) {
      RationalVector neg = *x;
      for (auto& v : neg) v = -v;
      return SublevelTriple{*x, neg, Rational(Integer(1), Integer(2))};
    }
  }
  return first_hit<Witness>(cfg.budget, worker_count(cfg), [&](std::size_t k) -> std::optional<Witness> {
    auto [a, b] = sample_pair(cfg, n, k);
    if (a == b) return std::nullopt;
    RationalVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = b[i] - a[i];
    const auto t = line_bump(restrict_line(p, a, d));
    if (!t) return std::nullopt;
    return SublevelTriple{std::move(a), std::move(b), Rational(1) - *t};
  });
}

std::optional<Witness> refute_pseudoconvexity(const Polynomial& p, const SamplerConfig& cfg) {
  if (p.degree() < 2) return std::nullopt;
  const std::size_t n = p.arity();
  const PolyVector grad = gradient(p);
  const Rational half(Integer(1), Integer(2));
  return first_hit<Witness>(cfg.budget, worker_count(cfg), [&](std::size_t k) -> std::optional<Witness> {
    auto [x, w] = sample_pair(cfg, n, k);
    const Rational px = p.evaluate(x);
    const RationalVector g = grad.evaluate(x);
    const Rational gg = dot(g, g);
    std::vector<RationalVector> dirs;
    if (gg.is_zero()) {
      dirs.push_back(w);
    } else {
      const Rational gw = dot(g, w);
      dirs.push_back(add_scaled(w, -gw / gg, g));  // orthogonal to the gradient
      RationalVector up = w;
      if (gw.sign() < 0) {
        for (auto& v : up) v = -v;
      }
      dirs.push_back(std::move(up));
    }
    for (const auto& dir : dirs) {
      if (std::all_of(dir.begin(), dir.end(), [](const Rational& r) { return r.is_zero(); })) continue;
      const bool two_sided = gg.is_zero() || dot(g, dir).is_zero();
      for (const Rational& s : {Rational(1), half, Rational(2), Rational(Integer(1), Integer(8))}) {
        for (const int sign : {1, -1}) {
          if (sign < 0 && !two_sided) continue;
          RationalVector y = add_scaled(x, s * Rational(sign), dir);
          if (p.evaluate(y) < px) return PseudoViolation{x, std::move(y)};
        }
      }
    }
    return std::nullopt;
  });
}

GridOracleResult oracle_quasiconvex_grid(const Polynomial& p, const Rational& lo, const Rational& hi,
                                         const Rational& step) {
  const std::size_t n = p.arity();
  if (n > 2) throw std::invalid_argument("grid oracle supports at most two variables");
  if (step.sign() <= 0 || hi < lo) throw std::invalid_argument("grid oracle: empty grid");
  std::vector<Rational> axis;
  for (Rational t = lo; t <= hi; t += step) axis.push_back(t);

  std::vector<RationalVector> points;
  if (n == 1) {
    for (const auto& t : axis) points.push_back({t});
  } else {
    for (const auto& s : axis) {
      for (const auto& t : axis) points.push_back({s, t});
    }
  }
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto& pt : points) values.push_back(p.evaluate(pt));

  const Rational half(Integer(1), Integer(2));
  RationalVector mid(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t c = 0; c < n; ++c) mid[c] = (points[i][c] + points[j][c]) * half;
      if (p.evaluate(mid) > max(values[i], values[j])) {
        return {false, SublevelTriple{points[i], points[j], half}};
      }
    }
  }
  return {};
}

}  // namespace polycvx
