#include "superpres/wn.hpp"

#include <stdexcept>

namespace superpres {

std::string to_string(const SLBasisElement& b) {
  switch (b.kind) {
  case SLKind::E: return "E_" + std::to_string(b.a);
  case SLKind::G: return "G^" + std::to_string(b.a) + "_" + std::to_string(b.b);
  case SLKind::F: return "F^" + std::to_string(b.a);
  }
  return "?";
}

SLElement sl_add(const SLElement& x, const SLElement& y, const Rational& c) {
  SLElement r = x;
  for (const auto& [b, v] : y) {
    Rational& slot = r[b];
    slot += c * v;
    if (is_zero(slot)) r.erase(b);
  }
  return r;
}

SLElement sl_basis_element(const SLBasisElement& b) { return {{b, Rational(1)}}; }

std::vector<SLBasisElement> sl1n_basis(int n) {
  std::vector<SLBasisElement> out;
  for (int a = 0; a < n; ++a) out.push_back({SLKind::E, a, 0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back({SLKind::G, a, b});
  for (int a = 0; a < n; ++a) out.push_back({SLKind::F, a, 0});
  return out;
}

SLElement sl_g(int n) {
  SLElement g;
  for (int a = 0; a < n; ++a) g[{SLKind::G, a, a}] = 1;
  return g;
}

namespace {

// Bracket of two basis elements following the A(n-1,0) relations, with the
// remaining orderings obtained by super-antisymmetry.
SLElement basis_bracket(const SLBasisElement& x, const SLBasisElement& y, int n) {
  using K = SLKind;
  auto delta = [](int i, int j) { return i == j ? 1 : 0; };
  SLElement r;
  auto add = [&](const SLBasisElement& b, int c) {
    if (c == 0) return;
    r = sl_add(r, sl_basis_element(b), Rational(c));
  };
  if (x.kind == K::G && y.kind == K::G) {
    if (delta(x.b, y.a)) add({K::G, x.a, y.b}, 1);
    if (delta(y.b, x.a)) add({K::G, y.a, x.b}, -1);
  } else if (x.kind == K::E && y.kind == K::F) {
    add({K::G, y.a, x.a}, -1);
    if (x.a == y.a) r = sl_add(r, sl_g(n));
  } else if (x.kind == K::F && y.kind == K::E) {
    return basis_bracket(y, x, n);  // both odd: symmetric
  } else if (x.kind == K::G && y.kind == K::F) {
    if (x.b == y.a) add({K::F, x.a, 0}, 1);
  } else if (x.kind == K::F && y.kind == K::G) {
    return sl_add({}, basis_bracket(y, x, n), Rational(-1));
  } else if (x.kind == K::G && y.kind == K::E) {
    if (y.a == x.a) add({K::E, x.b, 0}, -1);
  } else if (x.kind == K::E && y.kind == K::G) {
    return sl_add({}, basis_bracket(y, x, n), Rational(-1));
  }
  return r;  // [E,E] = [F,F] = 0
}

} // namespace

SLElement sl1n_bracket(const SLElement& x, const SLElement& y, int n) {
  SLElement r;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      if (bx.a >= n || by.a >= n || bx.b >= n || by.b >= n)
        throw std::invalid_argument("sl(1|n) index out of range");
      r = sl_add(r, basis_bracket(bx, by, n), cx * cy);
    }
  return r;
}

WElement psi(const SLElement& x, int n) {
  WElement w(n);
  for (const auto& [b, c] : x) {
    switch (b.kind) {
    case SLKind::E: w += WElement::k(n, {}, b.a).scaled(c); break;
    case SLKind::G: w += WElement::k(n, {b.a}, b.b).scaled(c); break;
    case SLKind::F: w += k_trace(n, b.a).scaled(c); break;
    }
  }
  return w;
}

} // namespace superpres
