#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pgroup/crossed.hpp"
#include "pgroup/group.hpp"
#include "pgroup/powerful.hpp"
#include "pgroup/presentation.hpp"

namespace pgroup {

// Size gates for tensor construction. The element caps bound the factor
// orders before any presentation is built; max_cosets bounds the enumerator
// (and with it the order of the resolved tensor); order_cap bounds every
// materialized multiplication table.
struct TensorCaps {
  int element_cap = 32;      // per-factor order, plain tensor
  int q_element_cap = 16;    // per-factor order when q > 0
  int generator_cap = 1024;  // presentation generators
  int max_cosets = 65536;    // enumerator row slots
  int order_cap = 4096;      // materialized group order
  uint64_t seed = 0;         // feeds the structure validators
};

// A resolved tensor M (x) N over a common base G, plain (q = 0) or mod q.
// gen_map[m][n] is the element of `group` representing m (x) n; for q > 0
// brace_map[i] represents {k} for pullback element i of K = M x_G N.
struct TensorResult {
  GroupPtr group;
  int q = 0;  // 0 = plain
  CrossedModule left;   // mu: M -> G and the G-action on M
  CrossedModule right;  // nu: N -> G and the G-action on N
  PullbackResult k;     // populated only when q > 0
  Presentation presentation;  // the instantiated presentation that was solved
  std::vector<std::vector<int32_t>> gen_map;
  std::vector<int32_t> brace_map;
  Homomorphism alpha;  // group -> M, m (x) n |-> m ^n m^-1
  Homomorphism beta;   // group -> N, m (x) n |-> ^m n n^-1
  ActionByAutomorphisms g_action;  // G acting on the tensor

  int gen(int m, int n) const { return gen_map[m][n]; }
};

// Presentation with one generator per pair (m, n), m != 1 and n != 1
// (degenerate pairs are forced to the identity by the defining relations
// and are eliminated up front), and one relator per instance of
//   mm' (x) n = (^m m' (x) ^m n)(m (x) n)
//   m (x) nn' = (m (x) n)(^n m (x) ^n n')
// over all element triples. Relators are freely and cyclically reduced and
// deduplicated. Throws ResourceError when a cap is exceeded.
Presentation build_tensor_presentation(const CrossedModule& mu,
                                       const CrossedModule& nu,
                                       const TensorCaps& caps = {});

// The mod-q variant: adds one generator {k} per element of K = M x_G N and
// the four brace relation families
//   {k}(m (x) n){k}^-1 = ^{k^q} m (x) ^{k^q} n
//   {kk'} = {k} prod_{i=1..q-1}(pi1 k^-1 (x) (^{k^{1-q+i}} pi2 k')^i) {k'}
//   {k}{k'}{k}^-1{k'}^-1 = pi1 k^q (x) pi2 k'^q
//   {(m ^n m^-1, ^m n n^-1)} = (m (x) n)^q
// instantiated over all of K. The exponent i applies after the action.
Presentation build_q_tensor_presentation(const CrossedModule& mu,
                                         const CrossedModule& nu, int q,
                                         const PullbackResult& k,
                                         const TensorCaps& caps = {});

// Instantiates the presentation, resolves it with the coset enumerator and
// builds the structure maps. alpha, beta and the G-action are extended
// from their generator images and re-verified; any failure there signals
// an instantiation bug and raises InternalError. The assembled crossed
// square (h(m, n) = m (x) n) is validated before returning.
TensorResult compute_tensor(const CrossedModule& mu, const CrossedModule& nu,
                            const TensorCaps& caps = {});

// Mod-q tensor; q >= 1. K is materialized via pullback internally. The
// same structure maps are built with alpha({k}) = pi1(k)^q and
// beta({k}) = pi2(k)^q, and the same crossed-square validation runs.
TensorResult compute_q_tensor(const CrossedModule& mu, const CrossedModule& nu,
                              int q, const TensorCaps& caps = {});

// The crossed square carried by a tensor: L = tensor, alpha/beta as built,
// h = gen_map, all three actions through G.
CrossedSquare tensor_crossed_square(const TensorResult& t);

// First pair (l, l') with l l' l^-1 l'^-1 != alpha(l) (x) beta(l'), if any.
// Exhaustive when |tensor| <= 4096, otherwise >= 10^4 seeded pairs.
std::optional<std::array<int, 2>> pairing_violation(const TensorResult& t,
                                                    uint64_t seed = 0);

// sigma: plain tensor -> q-tensor sending m (x) n to m (x) n, plus the
// natural images inside the plain tensor: tau_images[i] is the image of
// M^{p^(i+1)} (x) N (the subgroup generated by gen_map over the power
// subgroup), and eta_image = sigma(tau_images[0]) inside the q-tensor.
// All images are verified normal; sigma is verified to be a homomorphism.
struct NaturalMaps {
  Homomorphism sigma;
  std::vector<Subgroup> tau_images;  // tau_images[i] = image of tau_{i+1}
  Subgroup eta_image;
};
NaturalMaps natural_maps(const TensorResult& plain,
                         const TensorResult& q_tensor);

// The homomorphism between two mod-q tensors induced by f1: M_d -> M_t,
// f2: N_d -> N_t over phi: G_d -> G_t. Checks the compatibility laws
// f(^h a) = ^{phi(h)} f(a) and both commuting squares exhaustively
// (InputError on failure), maps a (x) c to f1(a) (x) f2(c) and {k} to
// {(f1 pi1 k, f2 pi2 k)}, and proves well-definedness by evaluating every
// relator of the domain presentation in the target (InternalError if one
// survives). The derived squares alpha_t F = f1 alpha_d and
// beta_t F = f2 beta_d are re-verified.
Homomorphism induced_hom(const TensorResult& dom, const TensorResult& target,
                         const Homomorphism& f1, const Homomorphism& f2,
                         const Homomorphism& phi);

// G^{(x) k+1} = G^{(x) k} (x) G with mu_{k+1}(x (x) g) = [mu_k(x), g],
// realized by tensoring the crossed module (T_k, mu_k) with the identity
// module of G; mu_{k+1} is then the beta of the new stage. stages[i] holds
// G^{(x) i+2} and mu[i] the matching map to G. The image of mu_k is
// asserted equal to gamma_k(G) (plain) resp. lambda_k(G) (q = p);
// a mismatch is an InternalError. A cap ending the recursion early
// returns the completed prefix with complete = false and the reason.
struct NFoldResult {
  std::vector<TensorResult> stages;
  std::vector<Homomorphism> mu;
  bool complete = true;
  std::string stop_reason;
};
NFoldResult n_fold_tensor(GroupPtr g, int n, int q = 0,
                          const TensorCaps& caps = {});

// G_{(x) 2} = G (x) G, G_{(x) k+1} = G_{(x) k} (x) G_{(x) k}, with identity
// crossed modules at every stage. When g is a p-group the powerfulness
// predicate is evaluated on every completed stage.
struct IteratedResult {
  std::vector<TensorResult> stages;
  std::vector<bool> powerful;
  bool complete = true;
  std::string stop_reason;
};
IteratedResult iterated_tensor(GroupPtr g, int n, int q = 0,
                               const TensorCaps& caps = {});

// Exactness of  N_1 N_2 -> H (x)^q H -> G (x)^q G -> 1  for G = H/N at
// fold 2: d is induced by the quotient maps, N_1 and N_2 are the images of
// N (x)^q H and H (x)^q N under the inclusion-induced maps, and the report
// records kernel(d) = N_1 N_2 as sets plus the order law
// |H (x)^q H| = |N_1 N_2| * |G (x)^q G|.
struct ExactSequenceReport {
  std::string group_name;
  int fold = 2;
  int q = 0;
  long long h_tensor_order = 0;
  long long g_tensor_order = 0;
  long long n1_order = 0;
  long long n2_order = 0;
  long long product_order = 0;
  long long kernel_order = 0;
  bool kernel_matches = false;
  bool order_law_holds = false;

  bool ok() const { return kernel_matches && order_law_holds; }
};
ExactSequenceReport check_nfold_exact_sequence(GroupPtr h,
                                               const Subgroup& n_sub, int fold,
                                               int q,
                                               const TensorCaps& caps = {});

// Powerful-tensor checks for a crossed module mu: M -> G.  The hypothesis
// asks for p odd, M powerful and mu(M) powerfully embedded in G:
//   c_plain_powerful   M (x) G is powerful
//   c_gamma2           gamma_2(M (x) G) <= image of M^p (x) G
//   c_power_law        image of M^p (x) G <= (M (x) G)^p
//   c_q_powerful       M (x)^p G is powerful
// Aspects whose inputs exceed the caps are reported in `skipped` instead
// of being checked.
struct TheoremCOutcome {
  std::vector<TheoremCheck> checks;
  std::vector<std::string> skipped;
};
TheoremCOutcome check_theorem_c(const CrossedModule& m, int p,
                                const TensorCaps& caps = {});

// Power-expansion congruence: for m in M^{p^n}, g in G and r = t = p,
//   m^t (x) g  ==  (m (x) g)^r (m^{t-r} (x) g)
//                  (m^{t-r} (x) [mu(m), g])^r (m (x) [mu(m), g])^C(r,2)
// holds modulo the image of M^{p^{n+2}} (x) G. Checked for every pair when
// the domain is small, otherwise on >= 10^4 seeded pairs. Requires p odd,
// M powerful and mu(M) powerfully embedded for the hypothesis to hold.
TheoremCheck check_power_expansion(const CrossedModule& m, int p, int n,
                                   const TensorCaps& caps = {});

// Surjection law G^{(x)^p_{n+1}} ->> lambda_{n+1}(H) for G = H/N with
// N <= Z_n(H) of exponent p: checks that |lambda_{n+1}(H)| divides
// |G^{(x)^p_{n+1}}| (the n-fold mod-p tensor of the quotient).
TheoremCheck check_surjection_law(GroupPtr h, const Subgroup& n_sub, int p,
                                  int n = 1, const TensorCaps& caps = {});

// Frattini-series variant: for N <= script_F_n(H) of exponent p the
// iterated mod-p tensor of G = H/N surjects onto Psi_{n+1}(H); checks the
// order divisibility |Psi_{n+1}(H)| divides |G_{(x)^p_{n+1}}|.
TheoremCheck check_frattini_surjection_law(GroupPtr h, const Subgroup& n_sub,
                                           int p, int n = 1,
                                           const TensorCaps& caps = {});

}  // namespace pgroup
