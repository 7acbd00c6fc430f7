#include "pgroup/tensor.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pgroup/catalog.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/series.hpp"
#include "pgroup/todd_coxeter.hpp"

namespace pgroup {

namespace {

// Tensor relations use the left-normed commutator convention.
int comm_ltr(const GroupTable& g, int a, int b) {
  return g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
}

uint64_t splitmix(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Homomorphism identity_hom(GroupPtr g) {
  Homomorphism f;
  f.domain = g;
  f.codomain = g;
  f.map.resize(g->order);
  for (int i = 0; i < g->order; ++i) f.map[i] = i;
  return f;
}

// Letter order that prefers positive letters: 1, -1, 2, -2, ...
bool letter_less(int32_t a, int32_t b) {
  int64_t ka = int64_t(std::abs(a)) * 2 + (a < 0 ? 1 : 0);
  int64_t kb = int64_t(std::abs(b)) * 2 + (b < 0 ? 1 : 0);
  return ka < kb;
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      letter_less);
}

// Canonical representative of a cyclically reduced relator under rotation
// and inversion; rotations and the inverse word impose the same relation,
// so deduplicating by this form shrinks the instantiated presentation.
Word canonical_cyclic(const Word& w) {
  Word best = w;
  const Word inv = inverse_word(w);
  for (const Word* base : {&w, &inv}) {
    Word rot = *base;
    for (size_t i = 0; i < rot.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (word_less(rot, best)) best = rot;
    }
  }
  return best;
}

// Accumulates instantiated relators: free + cyclic reduction, canonical
// form, deduplication. Keeps deterministic (length, lex) order at the end.
struct RelatorSet {
  std::set<Word> seen;

  void add(Word lhs, const Word& rhs) {
    Word rel = concat_words(std::move(lhs), inverse_word(rhs));
    rel = cyclically_reduce(std::move(rel));
    if (rel.empty()) return;
    seen.insert(canonical_cyclic(rel));
  }

  std::vector<Word> take() {
    std::vector<Word> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) {
                       if (a.size() != b.size()) return a.size() < b.size();
                       return a < b;
                     });
    return out;
  }
};

// Generator numbering shared by the builders and the compute path: pair
// letters first (m, n with m, n != identity), then one brace letter per
// pullback element.
struct TensorSymbols {
  int m_order = 1;
  int n_order = 1;
  int brace_count = 0;

  int pair_letters() const { return (m_order - 1) * (n_order - 1); }
  int total() const { return pair_letters() + brace_count; }

  // 0 encodes a degenerate pair (identity in the tensor).
  int32_t pair_letter(int mi, int ni) const {
    if (mi == 0 || ni == 0) return 0;
    return (mi - 1) * (n_order - 1) + ni;
  }
  int32_t brace_letter(int ki) const { return pair_letters() + ki + 1; }

  Word pair_word(int mi, int ni) const {
    int32_t l = pair_letter(mi, ni);
    if (l == 0) return {};
    return {l};
  }
  void append_pair(Word& w, int mi, int ni) const {
    int32_t l = pair_letter(mi, ni);
    if (l != 0) w.push_back(l);
  }
  void append_pair_power(Word& w, int mi, int ni, long long e) const {
    int32_t l = pair_letter(mi, ni);
    if (l == 0 || e == 0) return;
    int32_t letter = e > 0 ? l : -l;
    long long count = e > 0 ? e : -e;
    for (long long i = 0; i < count; ++i) w.push_back(letter);
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(total());
    for (int mi = 1; mi < m_order; ++mi) {
      for (int ni = 1; ni < n_order; ++ni) {
        out.push_back("t" + std::to_string(mi) + "_" + std::to_string(ni));
      }
    }
    for (int ki = 0; ki < brace_count; ++ki) {
      out.push_back("k" + std::to_string(ki));
    }
    return out;
  }
};

void require_shared_base(const CrossedModule& mu, const CrossedModule& nu,
                         const char* who) {
  if (!mu.m || !mu.g || !nu.m || !nu.g || mu.g != nu.g) {
    throw InputError(std::string(who) +
                     " requires crossed modules over the same base group");
  }
}

// The two defining relation families shared by the plain and mod-q tensor:
//   mm' (x) n = (^m m' (x) ^m n)(m (x) n)
//   m (x) nn' = (m (x) n)(^n m (x) ^n n')
void add_pair_relations(RelatorSet& rels, const TensorSymbols& sym,
                        const CrossedModule& mu, const CrossedModule& nu) {
  const GroupTable& m = *mu.m;
  const GroupTable& n = *nu.m;
  for (int mi = 0; mi < m.order; ++mi) {
    for (int mj = 0; mj < m.order; ++mj) {
      int cm = m.conj(mi, mj);  // ^m m', equals the G-action by Peiffer
      for (int ni = 0; ni < n.order; ++ni) {
        Word lhs = sym.pair_word(m.mul(mi, mj), ni);
        Word rhs;
        sym.append_pair(rhs, cm, nu.action.apply(mu.mu.apply(mi), ni));
        sym.append_pair(rhs, mi, ni);
        rels.add(std::move(lhs), rhs);
      }
    }
  }
  for (int mi = 0; mi < m.order; ++mi) {
    for (int ni = 0; ni < n.order; ++ni) {
      int am = mu.action.apply(nu.mu.apply(ni), mi);  // ^n m
      for (int nj = 0; nj < n.order; ++nj) {
        Word lhs = sym.pair_word(mi, n.mul(ni, nj));
        Word rhs;
        sym.append_pair(rhs, mi, ni);
        sym.append_pair(rhs, am, n.conj(ni, nj));
        rels.add(std::move(lhs), rhs);
      }
    }
  }
}

// alpha(m (x) n) = m ^n m^-1 in M.
int alpha_of_pair(const CrossedModule& mu, const CrossedModule& nu, int mi,
                  int ni) {
  const GroupTable& m = *mu.m;
  return m.mul(mi, mu.action.apply(nu.mu.apply(ni), m.inverse(mi)));
}

// beta(m (x) n) = ^m n n^-1 in N.
int beta_of_pair(const CrossedModule& mu, const CrossedModule& nu, int mi,
                 int ni) {
  const GroupTable& n = *nu.m;
  return n.mul(nu.action.apply(mu.mu.apply(mi), ni), n.inverse(ni));
}

void check_generator_cap(int needed, int cap, const char* what) {
  if (needed > cap) {
    throw ResourceError(std::string(what) + " needs " +
                        std::to_string(needed) +
                        " generators, exceeding the cap " +
                        std::to_string(cap));
  }
}

Presentation finish_presentation(const TensorSymbols& sym, RelatorSet& rels) {
  Presentation p;
  p.generator_count = sym.total();
  p.relators = rels.take();
  p.generator_labels = sym.labels();
  if (p.generator_count > 0 && p.relators.empty()) {
    // Without relators the enumeration cannot terminate; the defining
    // families always leave at least one relator per generator, so this
    // would be an instantiation bug.
    throw InternalError("tensor instantiation produced no relators");
  }
  p.check();
  return p;
}

}  // namespace

Presentation build_tensor_presentation(const CrossedModule& mu,
                                       const CrossedModule& nu,
                                       const TensorCaps& caps) {
  require_shared_base(mu, nu, "build_tensor_presentation");
  TensorSymbols sym{mu.m->order, nu.m->order, 0};
  check_generator_cap(sym.total(), caps.generator_cap, "tensor presentation");
  RelatorSet rels;
  add_pair_relations(rels, sym, mu, nu);
  return finish_presentation(sym, rels);
}

Presentation build_q_tensor_presentation(const CrossedModule& mu,
                                         const CrossedModule& nu, int q,
                                         const PullbackResult& k,
                                         const TensorCaps& caps) {
  require_shared_base(mu, nu, "build_q_tensor_presentation");
  if (q < 1) throw InputError("q must be positive");
  const GroupTable& m = *mu.m;
  const GroupTable& n = *nu.m;
  const GroupTable& g = *mu.g;
  const GroupTable& kt = *k.k;
  TensorSymbols sym{m.order, n.order, kt.order};
  check_generator_cap(sym.total(), caps.generator_cap,
                      "mod-q tensor presentation");
  RelatorSet rels;
  add_pair_relations(rels, sym, mu, nu);

  // {k}(m (x) n){k}^-1 = ^{k^q} m (x) ^{k^q} n
  for (int ki = 0; ki < kt.order; ++ki) {
    int kq = kt.pow(ki, q);
    int gq = mu.mu.apply(k.pi1.apply(kq));  // the G-image of k^q
    for (int mi = 1; mi < m.order; ++mi) {
      int am = mu.action.apply(gq, mi);
      for (int ni = 1; ni < n.order; ++ni) {
        Word lhs{sym.brace_letter(ki), sym.pair_letter(mi, ni),
                 static_cast<int32_t>(-sym.brace_letter(ki))};
        Word rhs = sym.pair_word(am, nu.action.apply(gq, ni));
        rels.add(std::move(lhs), rhs);
      }
    }
  }

  // {kk'} = {k} prod_{i=1..q-1} (pi1 k^-1 (x) (^{k^{1-q+i}} pi2 k')^i) {k'};
  // the exponent i is applied after the action.
  for (int ki = 0; ki < kt.order; ++ki) {
    int m_part = m.inverse(k.pi1.apply(ki));
    int gk = mu.mu.apply(k.pi1.apply(ki));
    for (int kj = 0; kj < kt.order; ++kj) {
      int n_raw = k.pi2.apply(kj);
      Word lhs{sym.brace_letter(kt.mul(ki, kj))};
      Word rhs{sym.brace_letter(ki)};
      for (int i = 1; i <= q - 1; ++i) {
        int gpow = g.pow(gk, 1 - q + i);
        int acted = nu.action.apply(gpow, n_raw);
        sym.append_pair(rhs, m_part, n.pow(acted, i));
      }
      rhs.push_back(sym.brace_letter(kj));
      rels.add(std::move(lhs), rhs);
    }
  }

  // {k}{k'}{k}^-1{k'}^-1 = pi1 k^q (x) pi2 k'^q
  for (int ki = 0; ki < kt.order; ++ki) {
    int a = m.pow(k.pi1.apply(ki), q);
    for (int kj = 0; kj < kt.order; ++kj) {
      Word lhs{sym.brace_letter(ki), sym.brace_letter(kj),
               static_cast<int32_t>(-sym.brace_letter(ki)),
               static_cast<int32_t>(-sym.brace_letter(kj))};
      Word rhs = sym.pair_word(a, n.pow(k.pi2.apply(kj), q));
      rels.add(std::move(lhs), rhs);
    }
  }

  // {(m ^n m^-1, ^m n n^-1)} = (m (x) n)^q
  for (int mi = 0; mi < m.order; ++mi) {
    for (int ni = 0; ni < n.order; ++ni) {
      int a = alpha_of_pair(mu, nu, mi, ni);
      int b = beta_of_pair(mu, nu, mi, ni);
      Word lhs{sym.brace_letter(k.pair_index(a, b))};
      Word rhs;
      sym.append_pair_power(rhs, mi, ni, q);
      rels.add(std::move(lhs), rhs);
    }
  }
  return finish_presentation(sym, rels);
}

namespace {

// Extends a map given on generator images to the whole group along a BFS
// spanning tree; every element must be reachable, and the result must both
// agree with the prescribed generator targets and be a homomorphism
// (checked by the callers). targets[i] lives in `target`.
std::vector<int32_t> extend_from_generators(const GroupTable& t,
                                            const std::vector<int32_t>& gens,
                                            const std::vector<int32_t>& targets,
                                            const GroupTable& target) {
  std::vector<int32_t> phi(t.order, -1);
  phi[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int y = t.mul(x, gens[i]);
      if (phi[y] < 0) {
        phi[y] = target.mul(phi[x], targets[i]);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < t.order; ++x) {
    if (phi[x] < 0) {
      throw InternalError("tensor generators do not generate the result");
    }
  }
  return phi;
}

void require_generator_match(const std::vector<int32_t>& phi,
                             const std::vector<int32_t>& gens,
                             const std::vector<int32_t>& targets,
                             const char* what) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (phi[gens[i]] != targets[i]) {
      throw InternalError(std::string(what) +
                          " disagrees with its generator images (letter " +
                          std::to_string(i + 1) + ")");
    }
  }
}

// The flat generator element list in letter order: pair letters, then
// braces.
std::vector<int32_t> generator_elements(const TensorResult& t) {
  std::vector<int32_t> out;
  const int mo = t.left.m->order;
  const int no = t.right.m->order;
  out.reserve(size_t((mo - 1)) * (no - 1) + t.brace_map.size());
  for (int mi = 1; mi < mo; ++mi) {
    for (int ni = 1; ni < no; ++ni) out.push_back(t.gen_map[mi][ni]);
  }
  for (int32_t b : t.brace_map) out.push_back(b);
  return out;
}

TensorResult finish_tensor(const CrossedModule& mu, const CrossedModule& nu,
                           int q, PullbackResult pb, Presentation pres,
                           const TensorCaps& caps) {
  EnumeratedGroup eg;
  if (pres.generator_count == 0) {
    // Both defining families are degenerate (a trivial factor); the tensor
    // is the trivial group and the enumerator has nothing to do.
    eg.group = cyclic(1);
  } else {
    eg = enumerate_presentation(pres, caps.max_cosets, caps.order_cap);
  }

  TensorResult t;
  t.group = eg.group;
  t.q = q;
  t.left = mu;
  t.right = nu;
  t.k = std::move(pb);
  t.presentation = std::move(pres);

  const GroupTable& m = *mu.m;
  const GroupTable& n = *nu.m;
  const GroupTable& g = *mu.g;
  const GroupTable& tt = *t.group;

  TensorSymbols sym{m.order, n.order,
                    q > 0 ? static_cast<int>(t.k.pairs.size()) : 0};
  t.gen_map.assign(m.order, std::vector<int32_t>(n.order, 0));
  for (int mi = 1; mi < m.order; ++mi) {
    for (int ni = 1; ni < n.order; ++ni) {
      t.gen_map[mi][ni] = eg.generator_images[sym.pair_letter(mi, ni) - 1];
    }
  }
  if (q > 0) {
    t.brace_map.resize(t.k.pairs.size());
    for (size_t ki = 0; ki < t.k.pairs.size(); ++ki) {
      t.brace_map[ki] =
          eg.generator_images[sym.brace_letter(static_cast<int>(ki)) - 1];
    }
  }

  std::vector<int32_t> gens = generator_elements(t);

  // alpha and beta from their generator targets.
  std::vector<int32_t> alpha_targets, beta_targets;
  alpha_targets.reserve(gens.size());
  beta_targets.reserve(gens.size());
  for (int mi = 1; mi < m.order; ++mi) {
    for (int ni = 1; ni < n.order; ++ni) {
      alpha_targets.push_back(alpha_of_pair(mu, nu, mi, ni));
      beta_targets.push_back(beta_of_pair(mu, nu, mi, ni));
    }
  }
  for (size_t ki = 0; ki < t.brace_map.size(); ++ki) {
    alpha_targets.push_back(m.pow(t.k.pi1.apply(static_cast<int>(ki)), q));
    beta_targets.push_back(n.pow(t.k.pi2.apply(static_cast<int>(ki)), q));
  }
  t.alpha.domain = t.group;
  t.alpha.codomain = mu.m;
  t.alpha.map = extend_from_generators(tt, gens, alpha_targets, m);
  t.beta.domain = t.group;
  t.beta.codomain = nu.m;
  t.beta.map = extend_from_generators(tt, gens, beta_targets, n);
  require_generator_match(t.alpha.map, gens, alpha_targets, "alpha");
  require_generator_match(t.beta.map, gens, beta_targets, "beta");
  if (hom_violation(t.alpha, caps.seed)) {
    throw InternalError("alpha is not a homomorphism (instantiation bug)");
  }
  if (hom_violation(t.beta, caps.seed)) {
    throw InternalError("beta is not a homomorphism (instantiation bug)");
  }

  // G acts on generators by acting on both coordinates.
  std::vector<int32_t> pair_index;
  if (q > 0) {
    pair_index.assign(size_t(m.order) * n.order, -1);
    for (size_t i = 0; i < t.k.pairs.size(); ++i) {
      pair_index[size_t(t.k.pairs[i].first) * n.order + t.k.pairs[i].second] =
          static_cast<int32_t>(i);
    }
  }
  t.g_action.acting = mu.g;
  t.g_action.space = t.group;
  t.g_action.perm.resize(g.order);
  for (int a = 0; a < g.order; ++a) {
    std::vector<int32_t> targets;
    targets.reserve(gens.size());
    for (int mi = 1; mi < m.order; ++mi) {
      int am = mu.action.apply(a, mi);
      for (int ni = 1; ni < n.order; ++ni) {
        targets.push_back(t.gen_map[am][nu.action.apply(a, ni)]);
      }
    }
    for (size_t ki = 0; ki < t.brace_map.size(); ++ki) {
      int ma = mu.action.apply(a, t.k.pairs[ki].first);
      int na = nu.action.apply(a, t.k.pairs[ki].second);
      int32_t idx = pair_index[size_t(ma) * n.order + na];
      if (idx < 0) {
        throw InternalError("G-action leaves the pullback (instantiation bug)");
      }
      targets.push_back(t.brace_map[idx]);
    }
    t.g_action.perm[a] = extend_from_generators(tt, gens, targets, tt);
    require_generator_match(t.g_action.perm[a], gens, targets, "G-action");
  }
  if (auto v = validate_action(t.g_action, caps.seed)) {
    throw InternalError("G-action on the tensor fails the " + v->law +
                        " law (instantiation bug)");
  }

  if (auto v = validate_crossed_square(tensor_crossed_square(t), caps.seed)) {
    throw InternalError("tensor crossed square fails axiom " + v->axiom +
                        ": " + v->detail);
  }
  return t;
}

void require_valid_inputs(const CrossedModule& mu, const CrossedModule& nu,
                          uint64_t seed, const char* who) {
  require_shared_base(mu, nu, who);
  if (auto v = validate_crossed_module(mu, seed)) {
    throw InputError(std::string(who) + ": left crossed module fails the " +
                     v->law + " law (" + v->detail + ")");
  }
  if (auto v = validate_crossed_module(nu, seed)) {
    throw InputError(std::string(who) + ": right crossed module fails the " +
                     v->law + " law (" + v->detail + ")");
  }
}

void check_element_cap(const CrossedModule& mu, const CrossedModule& nu,
                       int cap, const char* who) {
  if (mu.m->order > cap || nu.m->order > cap) {
    throw ResourceError(std::string(who) + ": factor order " +
                        std::to_string(std::max(mu.m->order, nu.m->order)) +
                        " exceeds the element cap " + std::to_string(cap));
  }
}

}  // namespace

TensorResult compute_tensor(const CrossedModule& mu, const CrossedModule& nu,
                            const TensorCaps& caps) {
  require_valid_inputs(mu, nu, caps.seed, "compute_tensor");
  check_element_cap(mu, nu, caps.element_cap, "compute_tensor");
  Presentation pres = build_tensor_presentation(mu, nu, caps);
  return finish_tensor(mu, nu, 0, PullbackResult{}, std::move(pres), caps);
}

TensorResult compute_q_tensor(const CrossedModule& mu, const CrossedModule& nu,
                              int q, const TensorCaps& caps) {
  if (q < 1) throw InputError("compute_q_tensor: q must be positive");
  require_valid_inputs(mu, nu, caps.seed, "compute_q_tensor");
  check_element_cap(mu, nu, caps.q_element_cap, "compute_q_tensor");
  PullbackResult pb = pullback(mu, nu, caps.order_cap);
  Presentation pres = build_q_tensor_presentation(mu, nu, q, pb, caps);
  return finish_tensor(mu, nu, q, std::move(pb), std::move(pres), caps);
}

CrossedSquare tensor_crossed_square(const TensorResult& t) {
  CrossedSquare s;
  s.l = t.group;
  s.m = t.left.m;
  s.n = t.right.m;
  s.g = t.left.g;
  s.alpha = t.alpha;
  s.beta = t.beta;
  s.mu = t.left.mu;
  s.nu = t.right.mu;
  s.h = t.gen_map;
  s.act_l = t.g_action;
  s.act_m = t.left.action;
  s.act_n = t.right.action;
  return s;
}

std::optional<std::array<int, 2>> pairing_violation(const TensorResult& t,
                                                    uint64_t seed) {
  const GroupTable& tt = *t.group;
  auto bad = [&](int x, int y) {
    return comm_ltr(tt, x, y) !=
           t.gen_map[t.alpha.apply(x)][t.beta.apply(y)];
  };
  if (tt.order <= 4096) {
    for (int x = 0; x < tt.order; ++x) {
      for (int y = 0; y < tt.order; ++y) {
        if (bad(x, y)) return std::array<int, 2>{x, y};
      }
    }
    return std::nullopt;
  }
  uint64_t state = seed ^ 0x746e736f72ULL;
  for (int i = 0; i < 10000; ++i) {
    int x = static_cast<int>(splitmix(state) % tt.order);
    int y = static_cast<int>(splitmix(state) % tt.order);
    if (bad(x, y)) return std::array<int, 2>{x, y};
  }
  return std::nullopt;
}

namespace {

bool same_crossed_module(const CrossedModule& a, const CrossedModule& b) {
  return a.m == b.m && a.g == b.g && a.mu.map == b.mu.map &&
         a.action.perm == b.action.perm;
}

}  // namespace

NaturalMaps natural_maps(const TensorResult& plain,
                         const TensorResult& q_tensor) {
  if (plain.q != 0 || q_tensor.q <= 0) {
    throw InputError("natural_maps wants a plain tensor and a mod-q tensor");
  }
  if (!same_crossed_module(plain.left, q_tensor.left) ||
      !same_crossed_module(plain.right, q_tensor.right)) {
    throw InputError("natural_maps: the tensors have different inputs");
  }
  const GroupTable& m = *plain.left.m;
  if (m.order > 1 && m.prime != q_tensor.q) {
    throw InputError("natural_maps requires q equal to the prime of M");
  }
  int p = q_tensor.q;

  NaturalMaps out;
  // sigma on pair generators; the mod-q tensor satisfies all plain
  // relations, so this extends.
  std::vector<int32_t> gens = generator_elements(plain);
  std::vector<int32_t> targets;
  targets.reserve(gens.size());
  for (int mi = 1; mi < m.order; ++mi) {
    for (int ni = 1; ni < plain.right.m->order; ++ni) {
      targets.push_back(q_tensor.gen_map[mi][ni]);
    }
  }
  out.sigma.domain = plain.group;
  out.sigma.codomain = q_tensor.group;
  out.sigma.map =
      extend_from_generators(*plain.group, gens, targets, *q_tensor.group);
  require_generator_match(out.sigma.map, gens, targets, "sigma");
  if (hom_violation(out.sigma)) {
    throw InternalError("sigma is not a homomorphism (instantiation bug)");
  }

  // tau_n = image of M^{p^n} (x) N inside the plain tensor.
  long long pe = 1;
  for (int level = 1; level <= kSeriesTermBound; ++level) {
    pe *= p;
    Subgroup power = power_subgroup(full_subgroup(plain.left.m), pe);
    std::vector<int32_t> image_gens;
    for (int32_t mi : power.elems) {
      for (int ni = 0; ni < plain.right.m->order; ++ni) {
        image_gens.push_back(plain.gen_map[mi][ni]);
      }
    }
    Subgroup image = subgroup_closure(plain.group, image_gens);
    if (!is_normal(image)) {
      throw InternalError("tau image is not normal (instantiation bug)");
    }
    out.tau_images.push_back(image);
    if (power.order() == 1) break;
  }

  out.eta_image = image_of_subgroup(out.sigma, out.tau_images.front());
  if (!is_normal(out.eta_image)) {
    throw InternalError("eta image is not normal (instantiation bug)");
  }
  return out;
}

Homomorphism induced_hom(const TensorResult& dom, const TensorResult& target,
                         const Homomorphism& f1, const Homomorphism& f2,
                         const Homomorphism& phi) {
  if (dom.q != target.q) {
    throw InputError("induced_hom: tensors have different moduli");
  }
  if (f1.domain != dom.left.m || f1.codomain != target.left.m ||
      f2.domain != dom.right.m || f2.codomain != target.right.m ||
      phi.domain != dom.left.g || phi.codomain != target.left.g) {
    throw InputError("induced_hom: maps do not connect the tensor inputs");
  }
  for (const Homomorphism* f : {&f1, &f2, &phi}) {
    if (auto v = hom_violation(*f)) {
      throw InputError("induced_hom: input map is not a homomorphism at (" +
                       std::to_string((*v)[0]) + ", " +
                       std::to_string((*v)[1]) + ")");
    }
  }
  const GroupTable& gd = *dom.left.g;
  // Compatibility with the actions and both commuting squares.
  for (int h = 0; h < gd.order; ++h) {
    int ph = phi.apply(h);
    for (int a = 0; a < dom.left.m->order; ++a) {
      if (f1.apply(dom.left.action.apply(h, a)) !=
          target.left.action.apply(ph, f1.apply(a))) {
        throw InputError("induced_hom: f1 is not compatible with the actions");
      }
    }
    for (int c = 0; c < dom.right.m->order; ++c) {
      if (f2.apply(dom.right.action.apply(h, c)) !=
          target.right.action.apply(ph, f2.apply(c))) {
        throw InputError("induced_hom: f2 is not compatible with the actions");
      }
    }
  }
  for (int a = 0; a < dom.left.m->order; ++a) {
    if (target.left.mu.apply(f1.apply(a)) != phi.apply(dom.left.mu.apply(a))) {
      throw InputError("induced_hom: the mu square does not commute");
    }
  }
  for (int c = 0; c < dom.right.m->order; ++c) {
    if (target.right.mu.apply(f2.apply(c)) !=
        phi.apply(dom.right.mu.apply(c))) {
      throw InputError("induced_hom: the nu square does not commute");
    }
  }

  // Generator targets in the target tensor.
  const int no_t = target.right.m->order;
  std::vector<int32_t> target_pair_index;
  if (target.q > 0) {
    target_pair_index.assign(size_t(target.left.m->order) * no_t, -1);
    for (size_t i = 0; i < target.k.pairs.size(); ++i) {
      target_pair_index[size_t(target.k.pairs[i].first) * no_t +
                        target.k.pairs[i].second] = static_cast<int32_t>(i);
    }
  }
  std::vector<int32_t> gens = generator_elements(dom);
  std::vector<int32_t> targets;
  targets.reserve(gens.size());
  for (int mi = 1; mi < dom.left.m->order; ++mi) {
    for (int ni = 1; ni < dom.right.m->order; ++ni) {
      targets.push_back(target.gen_map[f1.apply(mi)][f2.apply(ni)]);
    }
  }
  for (size_t ki = 0; ki < dom.brace_map.size(); ++ki) {
    int a = f1.apply(dom.k.pairs[ki].first);
    int c = f2.apply(dom.k.pairs[ki].second);
    int32_t idx = target_pair_index[size_t(a) * no_t + c];
    if (idx < 0) {
      throw InternalError(
          "induced_hom: image pair leaves the target pullback");
    }
    targets.push_back(target.brace_map[idx]);
  }

  // Well-definedness: every instantiated relator of the domain evaluates
  // to the identity in the target.
  const GroupTable& tt = *target.group;
  for (const Word& rel : dom.presentation.relators) {
    int acc = 0;
    for (int32_t letter : rel) {
      int e = letter > 0 ? targets[letter - 1]
                         : tt.inverse(targets[-letter - 1]);
      acc = tt.mul(acc, e);
    }
    if (acc != 0) {
      throw InternalError(
          "induced_hom: a domain relator does not map to the identity");
    }
  }

  Homomorphism f;
  f.domain = dom.group;
  f.codomain = target.group;
  f.map = extend_from_generators(*dom.group, gens, targets, tt);
  require_generator_match(f.map, gens, targets, "induced map");
  if (hom_violation(f)) {
    throw InternalError("induced map is not a homomorphism");
  }
  // The derived squares of the cube: alpha_t F = f1 alpha_d and
  // beta_t F = f2 beta_d.
  for (int x = 0; x < dom.group->order; ++x) {
    if (target.alpha.apply(f.apply(x)) != f1.apply(dom.alpha.apply(x)) ||
        target.beta.apply(f.apply(x)) != f2.apply(dom.beta.apply(x))) {
      throw InternalError("induced map breaks the alpha/beta squares");
    }
  }
  return f;
}

NFoldResult n_fold_tensor(GroupPtr g, int n, int q, const TensorCaps& caps) {
  if (n < 2) throw InputError("n_fold_tensor needs n >= 2");
  NFoldResult out;
  CrossedModule right = identity_crossed_module(g);
  CrossedModule left = right;
  SeriesResult reference;
  bool check_images = q == 0 || (g->prime != 0 && q == g->prime);
  if (check_images) {
    reference = q == 0 ? lower_central_series(g) : lower_p_series(g, q);
  }
  for (int stage = 2; stage <= n; ++stage) {
    TensorResult t;
    try {
      t = q > 0 ? compute_q_tensor(left, right, q, caps)
                : compute_tensor(left, right, caps);
    } catch (const ResourceError& e) {
      out.complete = false;
      out.stop_reason = "stage " + std::to_string(stage) + ": " + e.what();
      return out;
    }
    // mu_{stage} = beta: x (x) g |-> [mu_{stage-1}(x), g] since nu = id.
    Homomorphism mu_stage = t.beta;
    if (check_images) {
      Subgroup image = hom_image(mu_stage);
      if (!subgroup_eq(image, reference.term_clamped(stage))) {
        throw InternalError(
            "n-fold tensor: image of mu_" + std::to_string(stage) +
            " differs from the series term (instantiation bug)");
      }
    }
    left = CrossedModule{t.group, g, mu_stage, t.g_action};
    out.stages.push_back(std::move(t));
    out.mu.push_back(std::move(mu_stage));
  }
  return out;
}

IteratedResult iterated_tensor(GroupPtr g, int n, int q,
                               const TensorCaps& caps) {
  if (n < 2) throw InputError("iterated_tensor needs n >= 2");
  IteratedResult out;
  GroupPtr cur = g;
  for (int stage = 2; stage <= n; ++stage) {
    CrossedModule id = identity_crossed_module(cur);
    TensorResult t;
    try {
      t = q > 0 ? compute_q_tensor(id, id, q, caps)
                : compute_tensor(id, id, caps);
    } catch (const ResourceError& e) {
      out.complete = false;
      out.stop_reason = "stage " + std::to_string(stage) + ": " + e.what();
      return out;
    }
    cur = t.group;
    if (g->prime != 0) {
      out.powerful.push_back(cur->order == 1 ||
                             (cur->prime == g->prime &&
                              is_powerful(cur, g->prime)));
    }
    out.stages.push_back(std::move(t));
  }
  return out;
}

ExactSequenceReport check_nfold_exact_sequence(GroupPtr h,
                                               const Subgroup& n_sub, int fold,
                                               int q, const TensorCaps& caps) {
  if (fold != 2) {
    throw InputError("check_nfold_exact_sequence supports fold = 2 only");
  }
  if (n_sub.ambient != h) {
    throw InputError("subgroup does not live in the given group");
  }
  if (!is_normal(n_sub)) {
    throw InputError("check_nfold_exact_sequence needs a normal subgroup");
  }
  if (q < 0) throw InputError("check_nfold_exact_sequence: q must be >= 0");
  ExactSequenceReport rep;
  rep.group_name = h->name;
  rep.fold = fold;
  rep.q = q;

  auto tens = [&](const CrossedModule& a, const CrossedModule& b) {
    return q > 0 ? compute_q_tensor(a, b, q, caps)
                 : compute_tensor(a, b, caps);
  };

  CrossedModule id_h = identity_crossed_module(h);
  TensorResult th = tens(id_h, id_h);
  rep.h_tensor_order = th.group->order;

  QuotientResult quot = quotient_group(h, n_sub);
  CrossedModule id_g = identity_crossed_module(quot.group);
  TensorResult tg = tens(id_g, id_g);
  rep.g_tensor_order = tg.group->order;

  Homomorphism d =
      induced_hom(th, tg, quot.projection, quot.projection, quot.projection);
  Subgroup kernel = hom_kernel(d);
  rep.kernel_order = kernel.order();

  // N_1 = image of N (x)^q H, N_2 = image of H (x)^q N, both mapped in by
  // the inclusion-induced homomorphisms.
  CrossedModule inc = inclusion_crossed_module(n_sub);
  Homomorphism inc_hom;
  inc_hom.domain = inc.m;
  inc_hom.codomain = h;
  inc_hom.map = inc.mu.map;
  Homomorphism idh = identity_hom(h);

  TensorResult tn1 = tens(inc, id_h);
  Homomorphism j1 = induced_hom(tn1, th, inc_hom, idh, idh);
  Subgroup n1 = hom_image(j1);
  rep.n1_order = n1.order();

  TensorResult tn2 = tens(id_h, inc);
  Homomorphism j2 = induced_hom(tn2, th, idh, inc_hom, idh);
  Subgroup n2 = hom_image(j2);
  rep.n2_order = n2.order();

  Subgroup prod = product_of_subgroups(n1, n2);
  rep.product_order = prod.order();
  rep.kernel_matches = subgroup_eq(kernel, prod);
  rep.order_law_holds =
      rep.h_tensor_order == rep.product_order * rep.g_tensor_order;
  return rep;
}

namespace {

std::string tensor_instance_name(const CrossedModule& m) {
  return m.m->name + " over " + m.g->name;
}

// Image of M^{p^e} (x) N inside a computed tensor.
Subgroup power_image(const TensorResult& t, long long pe) {
  Subgroup power = power_subgroup(full_subgroup(t.left.m), pe);
  std::vector<int32_t> gens;
  for (int32_t mi : power.elems) {
    for (int ni = 0; ni < t.right.m->order; ++ni) {
      gens.push_back(t.gen_map[mi][ni]);
    }
  }
  return subgroup_closure(t.group, gens);
}

}  // namespace

TheoremCOutcome check_theorem_c(const CrossedModule& m, int p,
                                const TensorCaps& caps) {
  if (auto v = validate_crossed_module(m, caps.seed)) {
    throw InputError("check_theorem_c: crossed module fails the " + v->law +
                     " law");
  }
  TheoremCOutcome out;
  std::string name = tensor_instance_name(m);
  bool hyp = p % 2 == 1 && m.m->prime == p && m.g->prime == p &&
             is_powerful(m.m, p) && is_powerfully_embedded(hom_image(m.mu), p);
  CrossedModule id_g = identity_crossed_module(m.g);

  try {
    TensorResult t = compute_tensor(m, id_g, caps);
    Subgroup tau1 = power_image(t, p);
    Subgroup gamma2 = lower_central_series(t.group).term_clamped(2);
    Subgroup tp = power_subgroup(full_subgroup(t.group), p);

    TheoremCheck powerful_check("c_plain_powerful", name, 0);
    powerful_check.hypothesis_holds = hyp;
    powerful_check.conclusion_holds =
        t.group->order == 1 || is_powerful(t.group, p);
    powerful_check.note = "|M (x) G| = " + std::to_string(t.group->order);
    out.checks.push_back(powerful_check);

    TheoremCheck gamma_check("c_gamma2", name, 0);
    gamma_check.hypothesis_holds = hyp;
    gamma_check.conclusion_holds = subgroup_leq(gamma2, tau1);
    gamma_check.note = "|gamma_2| = " + std::to_string(gamma2.order()) +
                       ", |M^p (x) G| = " + std::to_string(tau1.order());
    out.checks.push_back(gamma_check);

    TheoremCheck power_check("c_power_law", name, 0);
    power_check.hypothesis_holds = hyp;
    power_check.conclusion_holds = subgroup_leq(tau1, tp);
    power_check.note = "|(M (x) G)^p| = " + std::to_string(tp.order());
    out.checks.push_back(power_check);
  } catch (const ResourceError& e) {
    out.skipped.push_back(name + " (plain): " + e.what());
  }

  try {
    TensorResult tq = compute_q_tensor(m, id_g, p, caps);
    TheoremCheck q_check("c_q_powerful", name, 0);
    q_check.hypothesis_holds = hyp;
    q_check.conclusion_holds =
        tq.group->order == 1 || is_powerful(tq.group, p);
    q_check.note = "|M (x)^p G| = " + std::to_string(tq.group->order);
    out.checks.push_back(q_check);
  } catch (const ResourceError& e) {
    out.skipped.push_back(name + " (mod p): " + e.what());
  }
  return out;
}

TheoremCheck check_power_expansion(const CrossedModule& m, int p, int n,
                                   const TensorCaps& caps) {
  if (n < 0) throw InputError("check_power_expansion needs n >= 0");
  TheoremCheck check("power_expansion", tensor_instance_name(m), n);
  check.hypothesis_holds = p % 2 == 1 && m.m->prime == p &&
                           m.g->prime == p && is_powerful(m.m, p) &&
                           is_powerfully_embedded(hom_image(m.mu), p);

  CrossedModule id_g = identity_crossed_module(m.g);
  TensorResult t = compute_tensor(m, id_g, caps);
  const GroupTable& tt = *t.group;
  const GroupTable& mg = *m.m;
  const GroupTable& gg = *m.g;

  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  Subgroup domain = power_subgroup(full_subgroup(m.m), pn);
  Subgroup modulus = power_image(t, pn * p * p);  // M^{p^{n+2}} (x) G

  const long long r = p, texp = p;
  auto congruent = [&](int mi, int gi) {
    int c = comm_ltr(gg, m.mu.apply(mi), gi);  // [mu(m), g]
    int m_rest = mg.pow(mi, texp - r);
    int lhs = t.gen_map[mg.pow(mi, texp)][gi];
    int rhs = tt.pow(t.gen_map[mi][gi], r);
    rhs = tt.mul(rhs, t.gen_map[m_rest][gi]);
    rhs = tt.mul(rhs, tt.pow(t.gen_map[m_rest][c], r));
    rhs = tt.mul(rhs, tt.pow(t.gen_map[mi][c], r * (r - 1) / 2));
    int diff = tt.mul(lhs, tt.inverse(rhs));
    return std::binary_search(modulus.elems.begin(), modulus.elems.end(),
                              diff);
  };

  check.conclusion_holds = true;
  long long pairs = static_cast<long long>(domain.order()) * gg.order;
  if (pairs <= 10000) {
    for (int32_t mi : domain.elems) {
      for (int gi = 0; gi < gg.order && check.conclusion_holds; ++gi) {
        if (!congruent(mi, gi)) {
          check.conclusion_holds = false;
          check.witness = "m = " + std::to_string(mi) +
                          ", g = " + std::to_string(gi);
        }
      }
      if (!check.conclusion_holds) break;
    }
    check.note = "exhaustive over " + std::to_string(pairs) + " pairs";
  } else {
    uint64_t state = caps.seed ^ 0x706f776572ULL;
    for (int i = 0; i < 10000 && check.conclusion_holds; ++i) {
      int mi = domain.elems[splitmix(state) % domain.elems.size()];
      int gi = static_cast<int>(splitmix(state) % gg.order);
      if (!congruent(mi, gi)) {
        check.conclusion_holds = false;
        check.witness =
            "m = " + std::to_string(mi) + ", g = " + std::to_string(gi);
      }
    }
    check.note = "10000 seeded pairs";
  }
  return check;
}

TheoremCheck check_surjection_law(GroupPtr h, const Subgroup& n_sub, int p,
                                  int n, const TensorCaps& caps) {
  require_p_group(h, p, "check_surjection_law");
  if (n_sub.ambient != h) {
    throw InputError("subgroup does not live in the given group");
  }
  if (!is_normal(n_sub)) {
    throw InputError("check_surjection_law needs a normal subgroup");
  }
  TheoremCheck check("lambda_surjection", h->name, n);
  check.hypothesis_holds =
      subgroup_leq(n_sub, upper_central_series(h).term_clamped(n)) &&
      exponent_divides(n_sub, p);

  QuotientResult quot = quotient_group(h, n_sub);
  NFoldResult nf = n_fold_tensor(quot.group, n + 1, p, caps);
  if (!nf.complete) {
    throw ResourceError("check_surjection_law: " + nf.stop_reason);
  }
  long long tensor_order = nf.stages.back().group->order;
  long long lambda_order =
      lower_p_series(h, p).term_clamped(n + 1).order();
  check.conclusion_holds = tensor_order % lambda_order == 0;
  check.note = "|lambda_" + std::to_string(n + 1) +
               "(H)| = " + std::to_string(lambda_order) +
               ", |G tensor| = " + std::to_string(tensor_order);
  return check;
}

TheoremCheck check_frattini_surjection_law(GroupPtr h, const Subgroup& n_sub,
                                           int p, int n,
                                           const TensorCaps& caps) {
  require_p_group(h, p, "check_frattini_surjection_law");
  if (n_sub.ambient != h) {
    throw InputError("subgroup does not live in the given group");
  }
  if (!is_normal(n_sub)) {
    throw InputError("check_frattini_surjection_law needs a normal subgroup");
  }
  TheoremCheck check("frattini_surjection", h->name, n);
  check.hypothesis_holds = subgroup_leq(n_sub, script_F_n(h, p, n)) &&
                           exponent_divides(n_sub, p);

  QuotientResult quot = quotient_group(h, n_sub);
  IteratedResult it = iterated_tensor(quot.group, n + 1, p, caps);
  if (!it.complete) {
    throw ResourceError("check_frattini_surjection_law: " + it.stop_reason);
  }
  long long tensor_order = it.stages.back().group->order;
  long long psi_order = frattini_series(h, p).term_clamped(n + 1).order();
  check.conclusion_holds = tensor_order % psi_order == 0;
  check.note = "|Psi_" + std::to_string(n + 1) +
               "(H)| = " + std::to_string(psi_order) +
               ", |G tensor| = " + std::to_string(tensor_order);
  return check;
}

}  // namespace pgroup
