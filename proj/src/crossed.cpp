#include "pgroup/crossed.hpp"

#include <algorithm>

#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

std::string pair_text(const char* a, int x, const char* b, int y) {
  return std::string(a) + "=" + std::to_string(x) + ", " + b + "=" +
         std::to_string(y);
}

}  // namespace

std::optional<CrossedModuleViolation> validate_crossed_module(
    const CrossedModule& cm, uint64_t seed) {
  if (!cm.m || !cm.g || cm.mu.domain != cm.m || cm.mu.codomain != cm.g ||
      static_cast<int>(cm.mu.map.size()) != cm.m->order ||
      cm.action.acting != cm.g || cm.action.space != cm.m) {
    return CrossedModuleViolation{"shape", {-1, -1},
                                  "maps do not connect M and G"};
  }
  if (auto v = hom_violation(cm.mu, seed)) {
    return CrossedModuleViolation{
        "homomorphism", {(*v)[0], (*v)[1]},
        "mu is not a homomorphism at " + pair_text("x", (*v)[0], "y", (*v)[1])};
  }
  if (auto v = validate_action(cm.action, seed)) {
    return CrossedModuleViolation{"action", {v->witness[0], v->witness[1]},
                                  "G-action fails the " + v->law + " law"};
  }
  const GroupTable& m = *cm.m;
  const GroupTable& g = *cm.g;
  for (int a = 0; a < g.order; ++a) {
    for (int x = 0; x < m.order; ++x) {
      if (cm.mu.apply(cm.action.apply(a, x)) !=
          g.conj(a, cm.mu.apply(x))) {
        return CrossedModuleViolation{
            "equivariance", {a, x},
            "mu(^g m) != g mu(m) g^-1 at " + pair_text("g", a, "m", x)};
      }
    }
  }
  for (int x = 0; x < m.order; ++x) {
    int mux = cm.mu.apply(x);
    for (int y = 0; y < m.order; ++y) {
      if (cm.action.apply(mux, y) != m.conj(x, y)) {
        return CrossedModuleViolation{
            "peiffer", {x, y},
            "^{mu(m)} m' != m m' m^-1 at " + pair_text("m", x, "m'", y)};
      }
    }
  }
  return std::nullopt;
}

namespace {

CrossedModule checked(CrossedModule cm, const char* what) {
  if (auto v = validate_crossed_module(cm)) {
    throw InputError(std::string(what) + ": " + v->law + " violation (" +
                     v->detail + ")");
  }
  return cm;
}

}  // namespace

CrossedModule identity_crossed_module(GroupPtr g) {
  CrossedModule cm;
  cm.m = g;
  cm.g = g;
  cm.mu.domain = g;
  cm.mu.codomain = g;
  cm.mu.map.resize(g->order);
  for (int i = 0; i < g->order; ++i) cm.mu.map[i] = i;
  cm.action = conjugation_action(g);
  return checked(std::move(cm), "identity crossed module");
}

CrossedModule inclusion_crossed_module(const Subgroup& n) {
  SubgroupGroup sg = subgroup_to_group(n);
  GroupPtr g = n.ambient;
  CrossedModule cm;
  cm.m = sg.group;
  cm.g = g;
  cm.mu.domain = cm.m;
  cm.mu.codomain = g;
  cm.mu.map.assign(sg.to_ambient.begin(), sg.to_ambient.end());
  cm.action.acting = g;
  cm.action.space = cm.m;
  cm.action.perm.assign(g->order,
                        std::vector<int32_t>(cm.m->order));
  if (is_normal(n)) {
    for (int a = 0; a < g->order; ++a) {
      for (int x = 0; x < cm.m->order; ++x) {
        int conj = g->conj(a, sg.to_ambient[x]);
        auto it = std::lower_bound(sg.to_ambient.begin(), sg.to_ambient.end(),
                                   conj);
        cm.action.perm[a][x] =
            static_cast<int32_t>(it - sg.to_ambient.begin());
      }
    }
  } else {
    // Conjugation does not restrict to the subgroup, so no action can make
    // this a crossed module. Install the trivial action; validation then
    // reports the equivariance failure with a witness.
    for (int a = 0; a < g->order; ++a) {
      for (int x = 0; x < cm.m->order; ++x) cm.action.perm[a][x] = x;
    }
  }
  return cm;
}

CrossedModule trivial_crossed_module(GroupPtr m, GroupPtr g) {
  CrossedModule cm;
  cm.m = m;
  cm.g = g;
  cm.mu.domain = m;
  cm.mu.codomain = g;
  cm.mu.map.assign(m->order, 0);
  cm.action = trivial_action(g, m);
  return checked(std::move(cm), "trivial crossed module");
}

int PullbackResult::pair_index(int m, int n) const {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first == m && pairs[i].second == n) {
      return static_cast<int>(i);
    }
  }
  throw InputError("pair (" + std::to_string(m) + ", " + std::to_string(n) +
                   ") is not in the pullback");
}

PullbackResult pullback(const CrossedModule& mu, const CrossedModule& nu,
                        int order_cap) {
  if (mu.g != nu.g) {
    throw InputError("pullback requires crossed modules over the same group");
  }
  PullbackResult out;
  std::vector<int32_t> index(size_t(mu.m->order) * nu.m->order, -1);
  for (int a = 0; a < mu.m->order; ++a) {
    for (int b = 0; b < nu.m->order; ++b) {
      if (mu.mu.apply(a) == nu.mu.apply(b)) {
        index[size_t(a) * nu.m->order + b] =
            static_cast<int32_t>(out.pairs.size());
        out.pairs.emplace_back(a, b);
      }
    }
  }
  int k = static_cast<int>(out.pairs.size());
  if (k > order_cap) {
    throw ResourceError("pullback of order " + std::to_string(k) +
                        " exceeds the cap " + std::to_string(order_cap));
  }
  GroupTable t;
  t.name = "pullback(" + mu.m->name + ", " + nu.m->name + ")";
  t.order = k;
  t.mult.resize(size_t(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int a = mu.m->mul(out.pairs[i].first, out.pairs[j].first);
      int b = nu.m->mul(out.pairs[i].second, out.pairs[j].second);
      int32_t e = index[size_t(a) * nu.m->order + b];
      if (e < 0) throw InternalError("pullback is not closed");
      t.mult[size_t(i) * k + j] = e;
    }
  }
  out.k = make_group(std::move(t), 0, order_cap);
  out.pi1.domain = out.k;
  out.pi1.codomain = mu.m;
  out.pi2.domain = out.k;
  out.pi2.codomain = nu.m;
  for (auto [a, b] : out.pairs) {
    out.pi1.map.push_back(a);
    out.pi2.map.push_back(b);
  }
  if (hom_violation(out.pi1) || hom_violation(out.pi2)) {
    throw InternalError("pullback projection is not a homomorphism");
  }
  return out;
}

namespace {

struct SquareChecker {
  const CrossedSquare& s;
  uint64_t seed;
  const GroupTable &l, &m, &n, &g;

  explicit SquareChecker(const CrossedSquare& sq, uint64_t sd)
      : s(sq), seed(sd), l(*sq.l), m(*sq.m), n(*sq.n), g(*sq.g) {}

  // ^n l and ^m l act through the images in G.
  int act_l_by_n(int nn, int ll) const {
    return s.act_l.apply(s.nu.apply(nn), ll);
  }
  int act_l_by_m(int mm, int ll) const {
    return s.act_l.apply(s.mu.apply(mm), ll);
  }
  int act_m_by_n(int nn, int mm) const {
    return s.act_m.apply(s.nu.apply(nn), mm);
  }
  int act_n_by_m(int mm, int nn) const {
    return s.act_n.apply(s.mu.apply(mm), nn);
  }
};

}  // namespace

std::optional<CrossedSquareViolation> validate_crossed_square(
    const CrossedSquare& s, uint64_t seed) {
  if (!s.l || !s.m || !s.n || !s.g || s.alpha.domain != s.l ||
      s.alpha.codomain != s.m || s.beta.domain != s.l ||
      s.beta.codomain != s.n || s.mu.domain != s.m || s.mu.codomain != s.g ||
      s.nu.domain != s.n || s.nu.codomain != s.g ||
      static_cast<int>(s.h.size()) != s.m->order) {
    return CrossedSquareViolation{"shape", {-1, -1, -1},
                                  "maps do not form a square over G"};
  }
  for (const auto& row : s.h) {
    if (static_cast<int>(row.size()) != s.n->order) {
      return CrossedSquareViolation{"shape", {-1, -1, -1},
                                    "h matrix has the wrong shape"};
    }
    for (int32_t v : row) {
      if (v < 0 || v >= s.l->order) {
        return CrossedSquareViolation{"shape", {-1, -1, -1},
                                      "h value out of range"};
      }
    }
  }
  if (auto v = hom_violation(s.alpha, seed)) {
    return CrossedSquareViolation{"alpha-homomorphism", {(*v)[0], (*v)[1], -1},
                                  "alpha is not a homomorphism"};
  }
  if (auto v = hom_violation(s.beta, seed)) {
    return CrossedSquareViolation{"beta-homomorphism", {(*v)[0], (*v)[1], -1},
                                  "beta is not a homomorphism"};
  }

  SquareChecker c(s, seed);
  const GroupTable &l = c.l, &m = c.m, &n = c.n, &g = c.g;

  // The three vertical crossed modules (axiom (i) and the kappa composite).
  {
    CrossedModule mm{s.m, s.g, s.mu, s.act_m};
    if (auto v = validate_crossed_module(mm, seed)) {
      return CrossedSquareViolation{"mu-" + v->law,
                                    {v->witness[0], v->witness[1], -1},
                                    "mu: " + v->detail};
    }
    CrossedModule nn{s.n, s.g, s.nu, s.act_n};
    if (auto v = validate_crossed_module(nn, seed)) {
      return CrossedSquareViolation{"nu-" + v->law,
                                    {v->witness[0], v->witness[1], -1},
                                    "nu: " + v->detail};
    }
    CrossedModule ll{s.l, s.g, compose(s.mu, s.alpha), s.act_l};
    if (auto v = validate_crossed_module(ll, seed)) {
      return CrossedSquareViolation{"kappa-" + v->law,
                                    {v->witness[0], v->witness[1], -1},
                                    "kappa = mu alpha: " + v->detail};
    }
  }
  for (int x = 0; x < l.order; ++x) {
    if (s.mu.apply(s.alpha.apply(x)) != s.nu.apply(s.beta.apply(x))) {
      return CrossedSquareViolation{"square-commutes", {x, -1, -1},
                                    "mu alpha != nu beta"};
    }
  }
  for (int a = 0; a < g.order; ++a) {
    for (int x = 0; x < l.order; ++x) {
      if (s.alpha.apply(s.act_l.apply(a, x)) !=
          s.act_m.apply(a, s.alpha.apply(x))) {
        return CrossedSquareViolation{"alpha-equivariant", {a, x, -1},
                                      "alpha(^g l) != ^g alpha(l)"};
      }
      if (s.beta.apply(s.act_l.apply(a, x)) !=
          s.act_n.apply(a, s.beta.apply(x))) {
        return CrossedSquareViolation{"beta-equivariant", {a, x, -1},
                                      "beta(^g l) != ^g beta(l)"};
      }
    }
  }
  // (ii): alpha h(m,n) = m ^n m^-1 and beta h(m,n) = ^m n n^-1.
  for (int x = 0; x < m.order; ++x) {
    for (int y = 0; y < n.order; ++y) {
      int hx = s.h[x][y];
      if (s.alpha.apply(hx) != m.mul(x, m.inverse(c.act_m_by_n(y, x)))) {
        return CrossedSquareViolation{"h-alpha", {x, y, -1},
                                      "alpha h(m,n) != m ^n m^-1"};
      }
      if (s.beta.apply(hx) != n.mul(c.act_n_by_m(x, y), n.inverse(y))) {
        return CrossedSquareViolation{"h-beta", {x, y, -1},
                                      "beta h(m,n) != ^m n n^-1"};
      }
    }
  }
  // (iii): h(alpha l, n) = l ^n l^-1 and h(m, beta l) = ^m l l^-1.
  for (int x = 0; x < l.order; ++x) {
    int ax = s.alpha.apply(x);
    int bx = s.beta.apply(x);
    for (int y = 0; y < n.order; ++y) {
      if (s.h[ax][y] != l.mul(x, l.inverse(c.act_l_by_n(y, x)))) {
        return CrossedSquareViolation{"h-of-alpha", {x, y, -1},
                                      "h(alpha l, n) != l ^n l^-1"};
      }
    }
    for (int y = 0; y < m.order; ++y) {
      if (s.h[y][bx] != l.mul(c.act_l_by_m(y, x), l.inverse(x))) {
        return CrossedSquareViolation{"h-of-beta", {y, x, -1},
                                      "h(m, beta l) != ^m l l^-1"};
      }
    }
  }
  // (iv): both bilinearity laws.
  for (int x = 0; x < m.order; ++x) {
    for (int x2 = 0; x2 < m.order; ++x2) {
      for (int y = 0; y < n.order; ++y) {
        int lhs = s.h[m.mul(x, x2)][y];
        int rhs = l.mul(c.act_l_by_m(x, s.h[x2][y]), s.h[x][y]);
        if (lhs != rhs) {
          return CrossedSquareViolation{"h-left-bilinear", {x, x2, y},
                                        "h(mm',n) != ^m h(m',n) h(m,n)"};
        }
      }
    }
  }
  for (int x = 0; x < m.order; ++x) {
    for (int y = 0; y < n.order; ++y) {
      for (int y2 = 0; y2 < n.order; ++y2) {
        int lhs = s.h[x][n.mul(y, y2)];
        int rhs = l.mul(s.h[x][y], c.act_l_by_n(y, s.h[x][y2]));
        if (lhs != rhs) {
          return CrossedSquareViolation{"h-right-bilinear", {x, y, y2},
                                        "h(m,nn') != h(m,n) ^n h(m,n')"};
        }
      }
    }
  }
  // (v): h(^g m, ^g n) = ^g h(m, n).
  for (int a = 0; a < g.order; ++a) {
    for (int x = 0; x < m.order; ++x) {
      for (int y = 0; y < n.order; ++y) {
        if (s.h[s.act_m.apply(a, x)][s.act_n.apply(a, y)] !=
            s.act_l.apply(a, s.h[x][y])) {
          return CrossedSquareViolation{"h-equivariant", {a, x, y},
                                        "h(^g m, ^g n) != ^g h(m,n)"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pgroup
