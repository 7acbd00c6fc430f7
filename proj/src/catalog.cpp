#include "pgroup/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pgroup/errors.hpp"

namespace pgroup {

namespace {

GroupTable blank(const std::string& name, int order) {
  GroupTable t;
  t.name = name;
  t.order = order;
  t.mult.resize(size_t(order) * order);
  return t;
}

void require_prime(int p, const char* who) {
  if (p < 2 || prime_power_base(p) != p)
    throw InputError(std::string(who) + ": parameter must be a prime, got " +
                     std::to_string(p));
}

void require_odd_prime(int p, const char* who) {
  require_prime(p, who);
  if (p == 2)
    throw InputError(std::string(who) + ": requires an odd prime");
}

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) throw InputError("cyclic: order must be >= 1");
  GroupTable t = blank("cyclic(" + std::to_string(n) + ")", n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mult[size_t(i) * n + j] = (i + j) % n;
  return make_group(std::move(t));
}

GroupPtr elementary_abelian(int p, int k) {
  require_prime(p, "elementary_abelian");
  if (k < 1) throw InputError("elementary_abelian: rank must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > kDefaultOrderCap)
      throw ResourceError("elementary_abelian: order exceeds cap");
  }
  GroupTable t = blank("elementary_abelian(" + std::to_string(p) + "," +
                           std::to_string(k) + ")",
                       int(n));
  // add digit vectors componentwise
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int x = i, y = j, out = 0, place = 1;
      for (int d = 0; d < k; ++d) {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t.mult[size_t(i) * n + j] = out;
    }
  return make_group(std::move(t));
}

GroupPtr heisenberg(int p) {
  require_odd_prime(p, "heisenberg");
  const int n = p * p * p;
  GroupTable t = blank("heisenberg(" + std::to_string(p) + ")", n);
  auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t.mult[size_t(idx(a, b, c)) * n + idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return make_group(std::move(t));
}

GroupPtr extraspecial_exp_p2(int p) {
  require_prime(p, "extraspecial_exp_p2");
  const int pp = p * p, n = pp * p;
  GroupTable t = blank("extraspecial_exp_p2(" + std::to_string(p) + ")", n);
  // a^i b^j * a^k b^l = a^(i + k*(1+p)^j) b^(j+l); (1+p)^j taken mod p^2.
  std::vector<int> unit_pow(p);
  unit_pow[0] = 1;
  for (int j = 1; j < p; ++j) unit_pow[j] = (unit_pow[j - 1] * (1 + p)) % pp;
  auto idx = [&](int i, int j) { return i * p + j; };
  for (int i = 0; i < pp; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < pp; ++k)
        for (int l = 0; l < p; ++l)
          t.mult[size_t(idx(i, j)) * n + idx(k, l)] =
              idx((i + k * unit_pow[j]) % pp, (j + l) % p);
  return make_group(std::move(t));
}

GroupPtr dihedral(int n) {
  if (n < 4 || n % 2 != 0)
    throw InputError("dihedral: order must be even and >= 4");
  const int m = n / 2;
  GroupTable t = blank("dihedral(" + std::to_string(n) + ")", n);
  auto idx = [&](int i, int j) { return i + m * j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
          int rot = j == 0 ? (i + k) % m : ((i - k) % m + m) % m;
          t.mult[size_t(idx(i, j)) * n + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return make_group(std::move(t));
}

GroupPtr quaternion8() {
  GroupTable t = blank("quaternion(8)", 8);
  auto idx = [](int i, int j) { return i + 4 * j; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // a^i b^j a^k b^l: b a^k = a^-k b, and b^2 = a^2.
          int rot = j == 0 ? (i + k) % 4 : ((i - k) % 4 + 4) % 4;
          int bexp = j + l;
          if (bexp >= 2) {
            bexp -= 2;
            rot = (rot + 2) % 4;
          }
          t.mult[size_t(idx(i, j)) * 8 + idx(k, l)] = idx(rot, bexp);
        }
  return make_group(std::move(t));
}

GroupPtr semidihedral16() {
  GroupTable t = blank("semidihedral(16)", 16);
  auto idx = [](int i, int j) { return i + 8 * j; };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 2; ++l) {
          // s r^k = r^(3k) s
          int rot = j == 0 ? (i + k) % 8 : (i + 3 * k) % 8;
          t.mult[size_t(idx(i, j)) * 16 + idx(k, l)] = idx(rot, (j + l) % 2);
        }
  return make_group(std::move(t));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, int order_cap) {
  long long n = 1LL * a->order * b->order;
  if (n > order_cap) throw ResourceError("direct_product: order exceeds cap");
  GroupTable t = blank("direct_product(" + a->name + "," + b->name + ")",
                       int(n));
  const int nb = b->order;
  for (int x = 0; x < a->order; ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < a->order; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t.mult[size_t(x * nb + y) * n + (x2 * nb + y2)] =
              a->mul(x, x2) * nb + b->mul(y, y2);
  return make_group(std::move(t));
}

GroupPtr semidirect_product(GroupPtr n, GroupPtr h,
                            const ActionByAutomorphisms& act, int order_cap) {
  if (act.acting.get() != h.get() || act.space.get() != n.get())
    throw InputError("semidirect_product: action must be of h on n");
  if (auto v = validate_action(act)) {
    std::ostringstream os;
    os << "semidirect_product: invalid action (" << v->law << " at "
       << v->witness[0] << "," << v->witness[1] << "," << v->witness[2] << ")";
    throw InputError(os.str());
  }
  long long ord = 1LL * n->order * h->order;
  if (ord > order_cap)
    throw ResourceError("semidirect_product: order exceeds cap");
  GroupTable t =
      blank("semidirect(" + n->name + "," + h->name + ")", int(ord));
  const int nh = h->order;
  for (int x = 0; x < n->order; ++x)
    for (int y = 0; y < nh; ++y)
      for (int x2 = 0; x2 < n->order; ++x2)
        for (int y2 = 0; y2 < nh; ++y2)
          t.mult[size_t(x * nh + y) * ord + (x2 * nh + y2)] =
              n->mul(x, act.apply(y, x2)) * nh + h->mul(y, y2);
  return make_group(std::move(t));
}

// ---------------------------------------------------------------------------
// Spec parsing.
// ---------------------------------------------------------------------------

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;
  int order_cap;

  explicit SpecParser(const std::string& str, int cap) : s(str), order_cap(cap) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw InputError("group spec: expected integer in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
  }

  std::vector<int> int_args() {
    std::vector<int> args;
    if (!eat('(')) throw InputError("group spec: expected '(' in '" + s + "'");
    args.push_back(integer());
    while (eat(',')) args.push_back(integer());
    if (!eat(')')) throw InputError("group spec: expected ')' in '" + s + "'");
    return args;
  }

  GroupPtr parse() {
    GroupPtr g = parse_one();
    skip_ws();
    if (pos != s.size())
      throw InputError("group spec: trailing input in '" + s + "'");
    return g;
  }

  GroupPtr parse_one() {
    std::string name = ident();
    if (name.empty())
      throw InputError("group spec: expected constructor name in '" + s + "'");
    std::string lower;
    for (char c : name) lower += char(std::tolower((unsigned char)c));

    // Compact aliases: a letter tag followed by digits ("c9", "d8", "q8",
    // "sd16", "heisenberg3").
    auto split_alias = [&](const std::string& tag) -> std::optional<int> {
      if (lower.size() <= tag.size() || lower.compare(0, tag.size(), tag) != 0)
        return std::nullopt;
      for (size_t i = tag.size(); i < lower.size(); ++i)
        if (!std::isdigit((unsigned char)lower[i])) return std::nullopt;
      return std::stoi(lower.substr(tag.size()));
    };

    if (lower == "cyclic") return cyclic(int_args_1());
    if (lower == "elementary_abelian" || lower == "ea") {
      auto a = int_args();
      if (a.size() != 2)
        throw InputError("elementary_abelian expects (p,k)");
      return elementary_abelian(a[0], a[1]);
    }
    if (lower == "heisenberg") return heisenberg(int_args_1());
    if (lower == "extraspecial_exp_p2") return extraspecial_exp_p2(int_args_1());
    if (lower == "dihedral") return dihedral(int_args_1());
    if (lower == "quaternion") {
      int n = int_args_1();
      if (n != 8) throw InputError("quaternion: only order 8 is provided");
      return quaternion8();
    }
    if (lower == "semidihedral") {
      int n = int_args_1();
      if (n != 16) throw InputError("semidihedral: only order 16 is provided");
      return semidihedral16();
    }
    if (lower == "direct_product") {
      if (!eat('(')) throw InputError("direct_product: expected '('");
      GroupPtr a = parse_one();
      if (!eat(',')) throw InputError("direct_product: expected ','");
      GroupPtr b = parse_one();
      while (eat(',')) {  // allow n-ary products for convenience
        GroupPtr c = parse_one();
        b = direct_product(b, c, order_cap);
      }
      if (!eat(')')) throw InputError("direct_product: expected ')'");
      return direct_product(a, b, order_cap);
    }
    if (auto v = split_alias("heisenberg")) return heisenberg(*v);
    if (auto v = split_alias("sd")) {
      if (*v != 16) throw InputError("semidihedral: only order 16 is provided");
      return semidihedral16();
    }
    if (auto v = split_alias("c")) return cyclic(*v);
    if (auto v = split_alias("d")) return dihedral(*v);
    if (auto v = split_alias("q")) {
      if (*v != 8) throw InputError("quaternion: only order 8 is provided");
      return quaternion8();
    }
    throw InputError("group spec: unknown constructor '" + name + "'");
  }

  int int_args_1() {
    auto a = int_args();
    if (a.size() != 1)
      throw InputError("group spec: constructor expects one argument");
    return a[0];
  }
};

}  // namespace

GroupPtr parse_group_spec(const std::string& spec, int order_cap) {
  SpecParser p(spec, order_cap);
  return p.parse();
}

}  // namespace pgroup
