#include "pgroup/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "pgroup/errors.hpp"

namespace pgroup {

Word reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (int32_t l : w) {
    if (l == 0) throw InputError("word letter 0 is not a generator");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclically_reduce(Word w) {
  w = reduce(std::move(w));
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + lo, w.begin() + hi);
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void Presentation::check() const {
  if (generator_count < 0) throw InputError("negative generator count");
  if (!generator_labels.empty() &&
      static_cast<int>(generator_labels.size()) != generator_count) {
    throw InputError("generator label list does not match generator count");
  }
  for (const Word& r : relators) {
    if (r.empty()) throw InputError("empty relator");
    for (int32_t l : r) {
      if (l == 0 || std::abs(l) > generator_count) {
        throw InputError("relator letter out of range: " + std::to_string(l) +
                         " with " + std::to_string(generator_count) +
                         " generators");
      }
    }
  }
}

std::string Presentation::label(int gen_1based) const {
  if (gen_1based < 1 || gen_1based > generator_count) {
    throw InputError("generator index out of range");
  }
  if (!generator_labels.empty()) return generator_labels[gen_1based - 1];
  return "g" + std::to_string(gen_1based);
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
  void expect(char c) {
    char got = take();
    if (got != c) {
      throw InputError(std::string("presentation syntax: expected '") + c +
                       "' at position " + std::to_string(pos) + " of \"" + s +
                       "\"");
    }
  }
  bool try_take(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_space();
    size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                           s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
    }
    if (start == pos) {
      throw InputError("presentation syntax: expected generator name at "
                       "position " +
                       std::to_string(pos) + " of \"" + s + "\"");
    }
    return s.substr(start, pos - start);
  }
  long integer() {
    skip_space();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
      throw InputError("presentation syntax: expected integer exponent at "
                       "position " +
                       std::to_string(pos) + " of \"" + s + "\"");
    }
    return std::stol(s.substr(start, pos - start));
  }
};

Word power_word(const Word& base, long e) {
  Word body = base;
  if (e < 0) {
    body = inverse_word(body);
    e = -e;
  }
  Word out;
  out.reserve(body.size() * static_cast<size_t>(e));
  for (long i = 0; i < e; ++i) out.insert(out.end(), body.begin(), body.end());
  return out;
}

struct RelatorParser {
  Lexer& lex;
  const std::vector<std::string>& labels;

  int gen_index(const std::string& name) const {
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == name) return static_cast<int>(i) + 1;
    }
    throw InputError("presentation references unknown generator \"" + name +
                     "\"");
  }

  Word parse_word() {
    Word out = parse_factor();
    while (lex.try_take('*')) {
      Word f = parse_factor();
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  }

  Word parse_factor() {
    Word base = parse_primary();
    if (lex.try_take('^')) {
      long e = lex.integer();
      if (e > 4096 || e < -4096) {
        throw InputError("relator exponent out of range");
      }
      return power_word(base, e);
    }
    return base;
  }

  Word parse_primary() {
    if (lex.try_take('(')) {
      Word inner = parse_word();
      lex.expect(')');
      return inner;
    }
    return Word{static_cast<int32_t>(gen_index(lex.ident()))};
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Lexer lex(text);
  lex.expect('<');
  Presentation p;
  p.generator_labels.push_back(lex.ident());
  while (lex.try_take(',')) p.generator_labels.push_back(lex.ident());
  for (size_t i = 0; i < p.generator_labels.size(); ++i) {
    for (size_t j = i + 1; j < p.generator_labels.size(); ++j) {
      if (p.generator_labels[i] == p.generator_labels[j]) {
        throw InputError("duplicate generator name \"" +
                         p.generator_labels[i] + "\"");
      }
    }
  }
  p.generator_count = static_cast<int>(p.generator_labels.size());
  lex.expect('|');
  if (lex.peek() != '>') {
    RelatorParser rp{lex, p.generator_labels};
    do {
      Word r = rp.parse_word();
      if (reduce(r).empty()) {
        throw InputError("relator reduces to the empty word");
      }
      p.relators.push_back(std::move(r));
    } while (lex.try_take(','));
  }
  lex.expect('>');
  if (lex.peek() != '\0') {
    throw InputError("presentation syntax: trailing characters after '>'");
  }
  p.check();
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << '<';
  for (int g = 1; g <= p.generator_count; ++g) {
    if (g > 1) os << ',';
    os << p.label(g);
  }
  os << " | ";
  for (size_t ri = 0; ri < p.relators.size(); ++ri) {
    if (ri > 0) os << ", ";
    const Word& w = p.relators[ri];
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      long run = static_cast<long>(j - i);
      long e = w[i] > 0 ? run : -run;
      if (!first) os << '*';
      os << p.label(std::abs(w[i]));
      if (e != 1) os << '^' << e;
      first = false;
      i = j;
    }
  }
  os << '>';
  return os.str();
}

namespace {

Word comm_word(int32_t a, int32_t b) { return Word{-a, -b, a, b}; }

Presentation cyclic_presentation(int n) {
  Presentation p;
  p.generator_count = 1;
  p.generator_labels = {"a"};
  p.relators = {power_word({1}, n)};
  return p;
}

Presentation elementary_abelian_presentation(int prime, int k) {
  Presentation p;
  p.generator_count = k;
  for (int i = 1; i <= k; ++i) p.generator_labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= k; ++i) p.relators.push_back(power_word({i}, prime));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) p.relators.push_back(comm_word(i, j));
  return p;
}

Presentation heisenberg_presentation(int prime) {
  // x = (1,0,0), y = (0,1,0), z = (0,0,1); [x,y] = z, z central.
  Presentation p;
  p.generator_count = 3;
  p.generator_labels = {"x", "y", "z"};
  p.relators.push_back(power_word({1}, prime));
  p.relators.push_back(power_word({2}, prime));
  p.relators.push_back(power_word({3}, prime));
  p.relators.push_back(concat_words(comm_word(1, 2), {-3}));
  p.relators.push_back(comm_word(1, 3));
  p.relators.push_back(comm_word(2, 3));
  return p;
}

Presentation extraspecial_exp_p2_presentation(int prime) {
  // <a,b | a^(p^2), b^p, b^-1 a b a^-(1+p)>
  Presentation p;
  p.generator_count = 2;
  p.generator_labels = {"a", "b"};
  p.relators.push_back(power_word({1}, prime * prime));
  p.relators.push_back(power_word({2}, prime));
  p.relators.push_back(
      concat_words({-2, 1, 2}, power_word({-1}, prime + 1)));
  return p;
}

Presentation dihedral_presentation(int n) {
  // n = 2m; <r,s | r^m, s^2, s*r*s*r>
  Presentation p;
  p.generator_count = 2;
  p.generator_labels = {"r", "s"};
  p.relators.push_back(power_word({1}, n / 2));
  p.relators.push_back({2, 2});
  p.relators.push_back({2, 1, 2, 1});
  return p;
}

Presentation quaternion8_presentation() {
  // <a,b | a^4, a^2 b^-2, b^-1 a b a>
  Presentation p;
  p.generator_count = 2;
  p.generator_labels = {"a", "b"};
  p.relators.push_back({1, 1, 1, 1});
  p.relators.push_back({1, 1, -2, -2});
  p.relators.push_back({-2, 1, 2, 1});
  return p;
}

Presentation semidihedral16_presentation() {
  // <r,s | r^8, s^2, s^-1 r s r^-3>
  Presentation p;
  p.generator_count = 2;
  p.generator_labels = {"r", "s"};
  p.relators.push_back(power_word({1}, 8));
  p.relators.push_back({2, 2});
  p.relators.push_back({-2, 1, 2, -1, -1, -1});
  return p;
}

}  // namespace

std::vector<ReferencePresentation> reference_presentations() {
  std::vector<ReferencePresentation> out;
  for (int n : {2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 81}) {
    out.push_back({"cyclic(" + std::to_string(n) + ")", cyclic_presentation(n)});
  }
  for (auto [prime, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    out.push_back({"elementary_abelian(" + std::to_string(prime) + "," +
                       std::to_string(k) + ")",
                   elementary_abelian_presentation(prime, k)});
  }
  for (int prime : {3, 5}) {
    out.push_back({"heisenberg(" + std::to_string(prime) + ")",
                   heisenberg_presentation(prime)});
    out.push_back({"extraspecial_exp_p2(" + std::to_string(prime) + ")",
                   extraspecial_exp_p2_presentation(prime)});
  }
  for (int n : {8, 16, 32}) {
    out.push_back({"dihedral(" + std::to_string(n) + ")",
                   dihedral_presentation(n)});
  }
  out.push_back({"quaternion(8)", quaternion8_presentation()});
  out.push_back({"semidihedral(16)", semidihedral16_presentation()});
  for (auto& rp : out) rp.presentation.check();
  return out;
}

}  // namespace pgroup
