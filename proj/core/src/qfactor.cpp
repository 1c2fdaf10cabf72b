#include "singdef/qfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "singdef/errors.hpp"

namespace singdef {

namespace {

// ---- arithmetic over F_p, p < 2^31 ----

using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Quotient and remainder, b nonzero.
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) return {{}, a};
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = a[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

FpPoly fp_monic(FpPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
  FpPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  trim(r);
  return r;
}

FpPoly fp_powmod(FpPoly base, const Integer& exponent, const FpPoly& mod, std::uint64_t p) {
  FpPoly r{1};
  base = fp_divmod(base, mod, p).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_divmod(fp_mul(r, r, p), mod, p).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) r = fp_divmod(fp_mul(r, base, p), mod, p).second;
  }
  return r;
}

// s*a + t*b = 1 for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t inv = inv_mod(r0.front(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = s0;
  t = t0;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial, p odd.
std::vector<FpPoly> fp_factor(FpPoly f, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<std::pair<FpPoly, std::size_t>> by_degree;
  const FpPoly x{0, 1};
  FpPoly h = x;
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    FpPoly g = fp_gcd(f, fp_sub(h, x, p), p);
    if (g.size() > 1) {
      by_degree.emplace_back(g, d);
      f = fp_divmod(f, g, p).first;
      h = fp_divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) by_degree.emplace_back(f, f.size() - 1);

  std::vector<FpPoly> out;
  for (auto& [g, d] : by_degree) {
    std::vector<FpPoly> stack{g};
    while (!stack.empty()) {
      FpPoly u = stack.back();
      stack.pop_back();
      if (u.size() - 1 == d) {
        out.push_back(u);
        continue;
      }
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      while (true) {
        FpPoly a(u.size() - 1);
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (a.size() < 2) continue;
        FpPoly b = fp_sub(fp_powmod(a, e, u, p), FpPoly{1}, p);
        FpPoly split = fp_gcd(u, b, p);
        if (split.size() > 1 && split.size() < u.size()) {
          stack.push_back(fp_divmod(u, split, p).first);
          stack.push_back(split);
          break;
        }
      }
    }
  }
  return out;
}

// ---- integer polynomials modulo m ----

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly mod_reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly z_add(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> monic_divmod(ZPoly a, const ZPoly& b, const Integer& m) {
  a = mod_reduce(a, m);
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = a[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  return {mod_reduce(q, m), mod_reduce(a, m)};
}

ZPoly to_z(const FpPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

FpPoly to_fp(const ZPoly& a, std::uint64_t p) {
  FpPoly r;
  Integer pp(static_cast<unsigned long>(p));
  for (const auto& c : a) {
    Integer v;
    mpz_fdiv_r(v.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
    r.push_back(v.get_ui());
  }
  trim(r);
  return r;
}

// Lifts f = g*h (mod p), h monic, to a factorization modulo some p^k >= bound.
void hensel_lift(const ZPoly& f, ZPoly& g, ZPoly& h, std::uint64_t p, const Integer& bound,
                 Integer& modulus) {
  FpPoly sp, tp;
  fp_bezout(to_fp(g, p), to_fp(h, p), p, sp, tp);
  ZPoly s = to_z(sp), t = to_z(tp);
  Integer m(static_cast<unsigned long>(p));
  while (m < bound) {
    const Integer m2 = m * m;
    ZPoly e = mod_reduce(z_sub(f, z_mul(g, h)), m2);
    auto [q, r] = monic_divmod(z_mul(s, e), h, m2);
    ZPoly g2 = mod_reduce(z_add(z_add(g, z_mul(t, e)), z_mul(q, g)), m2);
    ZPoly h2 = mod_reduce(z_add(h, r), m2);
    ZPoly b = mod_reduce(z_sub(z_add(z_mul(s, g2), z_mul(t, h2)), ZPoly{Integer(1)}), m2);
    auto [c, d] = monic_divmod(z_mul(s, b), h2, m2);
    s = mod_reduce(z_sub(s, d), m2);
    t = mod_reduce(z_sub(z_sub(t, z_mul(t, b)), z_mul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  modulus = m;
}

// Lifts monic modular factors of f (leading coefficient lc) to modulus.
void lift_all(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
              const Integer& bound, std::vector<ZPoly>& out, Integer& modulus) {
  if (factors.size() == 1) {
    // f = lc * (monic factor); divide out lc modulo the modulus.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    out.push_back(mod_reduce(r, modulus));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  FpPoly gl{to_fp(ZPoly{f.back()}, p).front()};
  for (const auto& u : left) gl = fp_mul(gl, u, p);
  FpPoly hr{1};
  for (const auto& u : right) hr = fp_mul(hr, u, p);
  ZPoly g = to_z(gl), h = to_z(hr);
  Integer m;
  hensel_lift(f, g, h, p, bound, m);
  modulus = m;
  lift_all(g, left, p, bound, out, modulus);
  lift_all(h, right, p, bound, out, modulus);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  a = mod_reduce(a, m);
  const Integer half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  trim(a);
  return a;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(ZPoly a) {
  Integer c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

// Exact division over Z, or empty optional-like flag.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  ZPoly q(r.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = r[k + b.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = top / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = q;
  return true;
}

const std::uint64_t kPrimes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061,
                                 1063, 1069, 1087, 1091, 1093, 1097, 1103, 1109, 1117, 1123,
                                 1129, 1151, 1153, 1163, 1171, 1181, 1187, 1193, 1201, 1213};

constexpr std::size_t kMaxRecombination = 24;

// Factors a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  std::mt19937_64 rng(0x5eed);
  std::uint64_t best_p = 0;
  std::vector<FpPoly> best;
  std::size_t tried = 0;
  for (auto p : kPrimes) {
    FpPoly fp = to_fp(f, p);
    if (fp.size() != f.size()) continue;
    if (fp_gcd(fp, fp_derivative(fp, p), p).size() != 1) continue;
    auto factors = fp_factor(fp_monic(fp, p), p, rng);
    if (best.empty() || factors.size() < best.size()) {
      best = factors;
      best_p = p;
    }
    if (++tried == 5 || best.size() == 1) break;
  }
  if (best.empty()) throw ResourceLimitError("no suitable prime for modular factorization");
  if (best.size() == 1) return {f};
  if (best.size() > kMaxRecombination)
    throw ResourceLimitError("too many modular factors to recombine");

  // Coefficients of any factor are bounded by 2^deg * |f|_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = (root + 1) * abs(f.back()) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size());

  std::vector<ZPoly> lifted;
  Integer modulus;
  lift_all(f, best, best_p, bound, lifted, modulus);

  std::vector<ZPoly> found;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) idx.push_back(i);
    std::vector<bool> pick(idx.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    bool restart = false;
    do {
      ZPoly cand{f.back()};
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (pick[k]) cand = mod_reduce(z_mul(cand, lifted[idx[k]]), modulus);
      cand = primitive(symmetric(cand, modulus));
      ZPoly q;
      if (z_divides(f, cand, q)) {
        found.push_back(cand);
        f = primitive(q);
        for (std::size_t k = 0; k < idx.size(); ++k)
          if (pick[k]) used[idx[k]] = true;
        remaining -= size;
        restart = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (restart) --size;
  }
  if (f.size() > 1) found.push_back(f);
  return found;
}

QPoly to_q(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(x);
  return QPoly(std::move(c)).monic();
}

ZPoly to_primitive_z(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : a.coeffs()) {
    Rational v = c * l;
    r.push_back(v.get_num());
  }
  return primitive(r);
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = static_cast<std::size_t>(a.degree()) + 1; i-- > 0;)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

std::vector<std::pair<QPoly, unsigned>> factor_rational(const QPoly& f) {
  std::vector<std::pair<QPoly, unsigned>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree() == 1) {
      out.emplace_back(part, mult);
      continue;
    }
    for (const auto& z : factor_squarefree_z(to_primitive_z(part))) out.emplace_back(to_q(z), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_rational(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto factors = factor_rational(f);
  return factors.size() == 1 && factors.front().second == 1;
}

}  // namespace singdef
