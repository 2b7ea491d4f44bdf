#include "superpres/en_realization.hpp"

#include "superpres/parallel.hpp"
#include "superpres/relations.hpp"
#include "superpres/wn.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace superpres {

namespace {

int sign(int a, int b) { return (a & b) ? -1 : 1; }

int map_parity(const LevelMap& m) {
  for (const auto& [mono, op] : m)
    if (!op.is_zero()) return (*op.parity() + parity(mono) + 1) & 1;
  return 0;
}

int shifted_parity(const GrassmannElement& x) {
  const auto p = x.parity();
  return p ? (*p + 1) & 1 : 0;
}

LevelMap map_add(const LevelMap& a, const LevelMap& b, const Rational& c) {
  LevelMap out = a;
  for (const auto& [m, op] : b) {
    auto it = out.find(m);
    EndOp v = it == out.end() ? op.scaled(c) : it->second + op.scaled(c);
    if (v.is_zero())
      out.erase(m);
    else
      out[m] = std::move(v);
  }
  return out;
}

LevelMap map_scaled(const LevelMap& a, const Rational& c) {
  LevelMap out;
  if (is_zero(c)) return out;
  for (const auto& [m, op] : a) out.emplace(m, op.scaled(c));
  return out;
}

// [op, F](u) = [op, F(u)] - (-1)^{|op||F|} F(op u)
LevelMap bracket_0_m1(const EndOp& op, const LevelMap& F, int n) {
  const int s = sign(*op.parity(), map_parity(F));
  const Monomial top = Monomial(1) << n;
  std::vector<EndOp> values(top);
  parallel_for(top, [&](std::size_t u) {
    const auto m = static_cast<Monomial>(u);
    EndOp v(n);
    auto it = F.find(m);
    if (it != F.end()) v = end_supercommutator(op, it->second);
    const GrassmannElement moved = op.column(m);
    if (!moved.is_zero()) v = v - apply_level_map(F, moved).scaled(Rational(s));
    values[u] = std::move(v);
  });
  LevelMap out;
  for (Monomial m = 0; m < top; ++m)
    if (!values[m].is_zero()) out.emplace(m, std::move(values[m]));
  return out;
}

UElement with_level(int n, int level) {
  UElement z = UElement::zero(n);
  z.level = level;
  return z;
}

} // namespace

UElement UElement::zero(int n) {
  UElement z;
  z.n = n;
  z.up = GrassmannElement(n);
  z.op = EndOp(n);
  return z;
}

UElement UElement::level1(const GrassmannElement& x) {
  UElement z = zero(x.n());
  z.level = 1;
  z.up = x;
  return z;
}

UElement UElement::level0(const EndOp& op) {
  UElement z = zero(op.n());
  z.level = 0;
  z.op = op;
  return z;
}

UElement UElement::level_minus1(int n, LevelMap m) {
  UElement z = zero(n);
  z.level = -1;
  z.down = std::move(m);
  return z;
}

int UElement::parity() const {
  if (!level) return 0;
  switch (*level) {
    case 1: return shifted_parity(up);
    case 0: {
      const auto p = op.parity();
      if (!p) throw std::invalid_argument("inhomogeneous level-0 element");
      return *p;
    }
    case -1: return map_parity(down);
    case 2:
      for (const auto& [c, x, y] : up_pairs)
        if (!x.is_zero() && !y.is_zero()) return (shifted_parity(x) + shifted_parity(y)) & 1;
      return 0;
    case -2:
      for (const auto& [c, f, g] : down_pairs)
        if (!f.empty() && !g.empty()) return (map_parity(f) + map_parity(g)) & 1;
      return 0;
  }
  throw std::logic_error("unsupported level");
}

bool UElement::is_trivially_zero() const {
  if (!level) return true;
  switch (*level) {
    case 1: return up.is_zero();
    case 0: return op.is_zero();
    case -1: return down.empty();
    case 2: return up_pairs.empty();
    case -2: return down_pairs.empty();
  }
  return false;
}

UElement UElement::operator+(const UElement& o) const {
  if (!level) return o;
  if (!o.level) return *this;
  if (*level != *o.level) {
    if (o.is_trivially_zero()) return *this;
    if (is_trivially_zero()) return o;
    throw std::invalid_argument("adding elements of different levels");
  }
  UElement r = *this;
  switch (*level) {
    case 1: r.up += o.up; break;
    case 0: r.op += o.op; break;
    case -1: r.down = map_add(down, o.down, Rational(1)); break;
    case 2: r.up_pairs.insert(r.up_pairs.end(), o.up_pairs.begin(), o.up_pairs.end()); break;
    case -2: r.down_pairs.insert(r.down_pairs.end(), o.down_pairs.begin(), o.down_pairs.end()); break;
  }
  return r;
}

UElement UElement::scaled(const Rational& c) const {
  UElement r = *this;
  if (!level) return r;
  switch (*level) {
    case 1: r.up = up.scaled(c); break;
    case 0: r.op = op.scaled(c); break;
    case -1: r.down = map_scaled(down, c); break;
    case 2:
      for (auto& t : r.up_pairs) std::get<0>(t) *= c;
      break;
    case -2:
      for (auto& t : r.down_pairs) std::get<0>(t) *= c;
      break;
  }
  return r;
}

EndOp apply_level_map(const LevelMap& m, const GrassmannElement& x) {
  EndOp r(x.n());
  for (const auto& [mono, c] : x.terms()) {
    auto it = m.find(mono);
    if (it != m.end()) r += it->second.scaled(c);
  }
  return r;
}

UElement u_bracket(const UElement& x, const UElement& y) {
  const int n = x.n;
  if (!x.level || !y.level) return UElement::zero(n);
  const int lx = *x.level, ly = *y.level;
  const int total = lx + ly;
  if (x.is_trivially_zero() || y.is_trivially_zero()) {
    if (total < -2 || total > 2) return UElement::zero(n);
    return with_level(n, total);
  }
  const int px = x.parity(), py = y.parity();
  auto swapped = [&] { return u_bracket(y, x).scaled(Rational(-sign(px, py))); };

  if (lx == 0 && ly == 0) return UElement::level0(end_supercommutator(x.op, y.op));
  if (lx == 0 && ly == 1) return UElement::level1(x.op.apply(y.up));
  if (lx == -1 && ly == 1) return UElement::level0(apply_level_map(x.down, y.up));
  if (lx == 0 && ly == -1) return UElement::level_minus1(n, bracket_0_m1(x.op, y.down, n));
  if (lx == 1 && ly == 1) {
    UElement r = with_level(n, 2);
    r.up_pairs.emplace_back(Rational(1), x.up, y.up);
    return r;
  }
  if (lx == -1 && ly == -1) {
    UElement r = with_level(n, -2);
    r.down_pairs.emplace_back(Rational(1), x.down, y.down);
    return r;
  }
  if (lx == 0 && ly == 2) {
    // [g,[a,b]] = [[g,a],b] + (-1)^{|g||a|} [a,[g,b]]
    UElement r = with_level(n, 2);
    for (const auto& [c, a, b] : y.up_pairs) {
      r.up_pairs.emplace_back(c, x.op.apply(a), b);
      r.up_pairs.emplace_back(c * sign(px, shifted_parity(a)), a, x.op.apply(b));
    }
    return r;
  }
  if (lx == 0 && ly == -2) {
    UElement r = with_level(n, -2);
    for (const auto& [c, a, b] : y.down_pairs) {
      r.down_pairs.emplace_back(c, bracket_0_m1(x.op, a, n), b);
      r.down_pairs.emplace_back(c * sign(px, map_parity(a)), a, bracket_0_m1(x.op, b, n));
    }
    return r;
  }
  if (lx == -1 && ly == 2) {
    UElement r = with_level(n, 1);
    for (const auto& [c, a, b] : y.up_pairs) {
      const UElement A = UElement::level1(a), B = UElement::level1(b);
      const UElement t1 = u_bracket(u_bracket(x, A), B);
      const UElement t2 = u_bracket(A, u_bracket(x, B)).scaled(Rational(sign(px, shifted_parity(a))));
      r = r + (t1 + t2).scaled(c);
    }
    return r;
  }
  if (lx == 1 && ly == -2) {
    UElement r = with_level(n, -1);
    for (const auto& [c, a, b] : y.down_pairs) {
      const UElement A = UElement::level_minus1(n, a), B = UElement::level_minus1(n, b);
      const UElement t1 = u_bracket(u_bracket(x, A), B);
      const UElement t2 = u_bracket(A, u_bracket(x, B)).scaled(Rational(sign(px, map_parity(a))));
      r = r + (t1 + t2).scaled(c);
    }
    return r;
  }
  if ((lx == 1 && ly == 0) || (lx == 1 && ly == -1) || (lx == -1 && ly == 0) || (lx == 2 && ly == 0) ||
      (lx == -2 && ly == 0) || (lx == 2 && ly == -1) || (lx == -2 && ly == 1))
    return swapped();
  std::ostringstream os;
  os << "bracket of levels " << lx << " and " << ly << " is outside the supported range";
  throw std::invalid_argument(os.str());
}

LevelMap f_abc(int a, int b, int c, int n) {
  check_grassmann_rank(n);
  for (int i : {a, b, c})
    if (i < 0 || i >= n) throw std::invalid_argument("f_abc: index out of range");
  const std::array<std::array<int, 3>, 6> perms{{{a, b, c}, {b, c, a}, {c, a, b}, {b, a, c}, {a, c, b}, {c, b, a}}};
  const int sgn[6] = {1, 1, 1, -1, -1, -1};
  LevelMap out;
  for (Monomial m = 0; m < (Monomial(1) << n); ++m) {
    const GrassmannElement x = GrassmannElement::monomial(n, m);
    EndOp v(n);
    for (int k = 0; k < 6; ++k) {
      const auto& [p, q, s] = perms[k];
      const GrassmannElement y = contract(p, contract(q, x));
      if (y.is_zero()) continue;
      // 3 * (1/6) * sign
      v += end_compose(EndOp::left_mul(y), k_op(n, {}, s)).scaled(make_rational(sgn[k], 2));
    }
    const GrassmannElement z = contract(a, contract(b, contract(c, x)));
    if (!z.is_zero()) v += EndOp::left_mul(z).scaled(Rational(parity(m) ? -1 : 1));
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  return out;
}

std::map<GeneratorSymbol, UElement> en_generator_images(int n) {
  if (n < 4 || n > 8) throw std::invalid_argument("en_generator_images: n must lie in [4, 8]");
  using G = GeneratorSymbol;
  auto K = [n](std::vector<int> up, int low) { return k_op(n, up, low); };
  const EndOp L = EndOp::identity(n);
  const EndOp L0 = EndOp::left_mul(GrassmannElement::monomial(n, 1));
  EndOp euler(n), k0(n);
  for (int a = 0; a < n; ++a) {
    euler += K({a}, a);
    k0 += K({0, a}, a);
  }
  const int u = n - 3, v = n - 2, w = n - 1;

  std::map<G, UElement> img;
  img[G::e(0)] = UElement::level0(K({}, 0));
  for (int i = 1; i <= n - 1; ++i) {
    img[G::e(i)] = UElement::level0(K({i - 1}, i));
    img[G::f(i)] = UElement::level0(K({i}, i - 1));
    img[G::h(i)] = UElement::level0(K({i - 1}, i - 1) - K({i}, i));
  }
  img[G::e(n)] = UElement::level1(GrassmannElement::product(n, {u, v, w}));
  img[G::f(n)] = UElement::level_minus1(n, f_abc(u, v, w, n));
  img[G::h(0)] = UElement::level0(euler - L.scaled(Rational(3)) - K({0}, 0));
  img[G::h(n)] = UElement::level0(K({u}, u) + K({v}, v) + K({w}, w) - L);
  img[G::f0(0)] = UElement::level0(k0 - L0.scaled(Rational(3)));
  for (int i = 2; i <= n - 1; ++i) img[G::f0(i)] = UElement::level0(K({0, i - 1}, i - 1) - K({0, i}, i));
  img[G::f0(n)] = UElement::level0(K({0, u}, u) + K({0, v}, v) + K({0, w}, w) - L0);
  return img;
}

bool vanishes(const UElement& x) {
  if (!x.level || x.is_trivially_zero()) return true;
  const int n = x.n;
  switch (*x.level) {
    case 1: return x.up.is_zero();
    case 0: return x.op.is_zero();
    case -1: {
      for (const auto& [m, op] : x.down)
        if (!op.is_zero()) return false;
      return true;
    }
    case 2: {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int c = b + 1; c < n; ++c) {
            const UElement t = UElement::level_minus1(n, f_abc(a, b, c, n));
            if (!vanishes(u_bracket(t, x))) return false;
          }
      return true;
    }
    case -2: {
      // [y,[x,z]] for all monomials x, y: the level -1 element [x,z] is zero
      // iff all its values are.
      const Monomial top = Monomial(1) << n;
      std::vector<char> ok(top, 1);
      const UElement z = x;
      parallel_for(top, [&](std::size_t m) {
        const UElement e = UElement::level1(GrassmannElement::monomial(n, static_cast<Monomial>(m)));
        UElement r = with_level(n, -1);
        for (const auto& [c, f, g] : z.down_pairs) {
          // [e,[f,g]] = [[e,f],g] + (-1)^{|e||f|} [f,[e,g]], evaluated pointwise.
          const int pe = e.parity(), pf = map_parity(f), pg = map_parity(g);
          const EndOp ef = apply_level_map(f, e.up).scaled(Rational(-sign(pe, pf)));  // [e,f]
          const EndOp eg = apply_level_map(g, e.up).scaled(Rational(-sign(pe, pg)));  // [e,g]
          const int pef = (pe + pf) & 1, peg = (pe + pg) & 1;
          for (Monomial y = 0; y < top; ++y) {
            const GrassmannElement ym = GrassmannElement::monomial(n, y);
            // ([A,G])(y) = [A, G(y)] - (-1)^{|A||G|} G(A y)
            EndOp value(n);
            auto gy = g.find(y);
            if (!ef.is_zero()) {
              if (gy != g.end()) value += end_supercommutator(ef, gy->second);
              const GrassmannElement moved = ef.column(y);
              if (!moved.is_zero()) value = value - apply_level_map(g, moved).scaled(Rational(sign(pef, pg)));
            }
            // [F, B](y) = -(-1)^{|F||B|} [B, F](y)
            if (!eg.is_zero()) {
              EndOp bf(n);
              auto fy = f.find(y);
              if (fy != f.end()) bf += end_supercommutator(eg, fy->second);
              const GrassmannElement moved = eg.column(y);
              if (!moved.is_zero()) bf = bf - apply_level_map(f, moved).scaled(Rational(sign(peg, pf)));
              value += bf.scaled(Rational(-sign(pf, peg) * sign(pe, pf)));
            }
            if (!value.is_zero()) r.down = map_add(r.down, LevelMap{{y, value}}, c);
          }
        }
        if (!vanishes(r)) ok[m] = 0;
      });
      for (char c : ok)
        if (!c) return false;
      return true;
    }
  }
  throw std::logic_error("unsupported level");
}

IntMatrix recovered_eigenvalue_matrix(int n) {
  const auto img = en_generator_images(n);
  IntMatrix out(n + 1, std::vector<int>(n + 1, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      const UElement& e = img.at(GeneratorSymbol::e(b));
      const UElement he = u_bracket(img.at(GeneratorSymbol::h(a)), e);
      // Ratio from the first nonzero coefficient, then confirm.
      std::optional<Rational> lambda;
      if (*e.level == 1) {
        const auto& [m, c] = *e.up.terms().begin();
        lambda = he.up.coeff(m) / c;
      } else {
        const auto& [col, val] = *e.op.columns().begin();
        const auto& [m, c] = *val.terms().begin();
        lambda = he.op.column(col).coeff(m) / c;
      }
      if (!vanishes(he + e.scaled(-*lambda)) || lambda->get_den() != 1)
        throw std::logic_error("e_" + std::to_string(b) + " is not an eigenvector of ad h_" + std::to_string(a));
      out[a][b] = static_cast<int>(lambda->get_num().get_si());
    }
  return out;
}

Report verify_en_relations(int n) {
  if (n < 4 || n > 8) throw std::invalid_argument("verify_en_relations: n must lie in [4, 8]");
  Report report;
  report.title = "E" + std::to_string(n) + " realization";
  const CartanMatrix B = build_cartan(Series::E, n);
  const auto img = en_generator_images(n);

  // Parities of the images against the generator parities.
  std::string bad_parity;
  for (const auto& [g, x] : img)
    if (x.parity() != g.parity() && bad_parity.empty()) bad_parity = to_string(g);
  report.add("image parities", bad_parity.empty(), bad_parity);

  const IntMatrix lambda = recovered_eigenvalue_matrix(n);
  std::ostringstream os;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < lambda[i].size(); ++j) os << (j ? " " : "") << lambda[i][j];
  }
  report.add("eigenvalue matrix equals E_n Cartan matrix", lambda == B.entries, os.str());

  const auto chain = chevalley_assignment(n);
  std::string chain_failure;
  for (int a = 0; a <= n - 1; ++a) {
    if (!(to_endop(chain.at(GeneratorSymbol::e(a))) == img.at(GeneratorSymbol::e(a)).op))
      chain_failure = "e" + std::to_string(a);
    if (a >= 1 && !(to_endop(chain.at(GeneratorSymbol::f(a))) == img.at(GeneratorSymbol::f(a)).op))
      chain_failure = "f" + std::to_string(a);
  }
  report.add("A-chain matches W(n) operators", chain_failure.empty(), chain_failure);

  const auto relations = relation_set(B);
  std::vector<std::string> failures(relations.size());
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const UElement r = evaluate(relations[i], img, u_bracket, UElement::zero(n));
    if (!vanishes(r)) failures[i] = relations[i].label;
  }
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::string>> fam;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (!fam.count(relations[i].family)) order.push_back(relations[i].family);
    auto& [count, first] = fam[relations[i].family];
    ++count;
    if (!failures[i].empty() && first.empty()) first = failures[i] + " does not vanish";
  }
  for (const auto& f : order) {
    const auto& [count, first] = fam[f];
    report.add(f, first.empty(), first.empty() ? std::to_string(count) + " relations vanish" : first);
  }
  return report;
}

} // namespace superpres
