#include "rsf/parse.hpp"

#include <algorithm>
#include <cctype>

#include "rsf/error.hpp"

namespace rsf {

namespace {

struct Token {
  enum class Kind { Int, Ident, Op, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Int, s.substr(i, j - i), i});
      i = j;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, std::string(1, c), i});
      ++i;
    } else {
      throw_parse("syntax error", "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

// Splits p = lead * prod (1 - s_i m_i)^k_i with s_i = +-1.
struct Peeled {
  Term lead;
  std::vector<std::pair<Monomial, int>> factors;  // (m, +1) for 1 - m, (m, -1) for 1 + m
};

Peeled peel_binomials(const Poly& p) {
  if (p.is_zero()) throw_precondition("division by zero", "zero divisor");
  int lo = p.min_nonz_degree();
  const Term* lead = nullptr;
  for (const Term& t : p.terms()) {
    if (t.mono.nonz_degree() != lo) continue;
    if (lead) throw_parse("denominator not a product of binomials", p.to_string());
    lead = &t;
  }
  Peeled out{*lead, {}};
  Poly q = p.mul_term(lead->mono.inverse(), 1 / lead->coef);
  Poly one(1);
  while (q != one) {
    std::vector<Monomial> cands;
    for (const Term& t : q.terms())
      if (!t.mono.is_one()) cands.push_back(t.mono);
    std::stable_sort(cands.begin(), cands.end(), [](const Monomial& a, const Monomial& b) {
      return a.nonz_degree() < b.nonz_degree();
    });
    bool found = false;
    for (const Monomial& m : cands) {
      if (m.nonz_degree() <= 0) break;
      if (auto r = q.div_one_minus(m)) {
        out.factors.emplace_back(m, 1);
        q = std::move(*r);
        found = true;
        break;
      }
      if (auto r = q.try_divide(one + Poly::monomial(m))) {
        out.factors.emplace_back(m, -1);
        q = std::move(*r);
        found = true;
        break;
      }
    }
    if (!found) throw_parse("denominator not a product of binomials", p.to_string());
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  NiceRational parse() {
    NiceRational r = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Kind::Op && peek().text == op) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw_parse("syntax error", what + " at position " + std::to_string(peek().pos));
  }

  NiceRational expr() {
    bool neg = accept("-");
    if (!neg) accept("+");
    NiceRational r = term();
    if (neg) r = -r;
    for (;;) {
      if (accept("+"))
        r += term();
      else if (accept("-"))
        r -= term();
      else
        return r;
    }
  }

  NiceRational term() {
    NiceRational r = factor();
    for (;;) {
      if (accept("*"))
        r *= factor();
      else if (accept("/"))
        r = divide(r, factor());
      else
        return r;
    }
  }

  NiceRational factor() {
    NiceRational base = atom();
    if (!accept("^")) return base;
    bool neg = accept("-");
    if (peek().kind != Token::Kind::Int) fail("expected integer exponent");
    long e = std::stol(peek().text);
    ++i_;
    if (e > 10000) fail("exponent too large");
    NiceRational r = 1;
    for (long k = 0; k < e; ++k) r *= base;
    return neg ? divide(1, r) : r;
  }

  NiceRational atom() {
    const Token& t = peek();
    if (accept("(")) {
      NiceRational r = expr();
      if (!accept(")")) fail("expected ')'");
      return r;
    }
    if (t.kind == Token::Kind::Int) {
      ++i_;
      return NiceRational(Poly(Rational(mpz_class(t.text))));
    }
    if (t.kind == Token::Kind::Ident) {
      ++i_;
      return NiceRational(Poly::var(VarId::named(t.text)));
    }
    fail(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  static NiceRational divide(const NiceRational& a, const NiceRational& b) {
    Peeled pb = peel_binomials(b.num());
    Poly num = b.expanded_den().mul_term(pb.lead.mono.inverse(), 1 / pb.lead.coef);
    std::vector<std::pair<Monomial, int>> den;
    for (const auto& [m, s] : pb.factors) {
      if (s > 0) {
        den.emplace_back(m, 1);
      } else {
        // 1/(1+m) = (1-m)/(1-m^2)
        den.emplace_back(m.pow(2), 1);
        num = num.mul_one_minus(m);
      }
    }
    return a * NiceRational::over_binomials(std::move(num), den);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw_parse("syntax error", "expected integer in " + what + ": '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string::npos ? std::string::npos : k - start)));
    if (k == std::string::npos) return out;
    start = k + 1;
  }
}

}  // namespace

NiceRational parse_expr(const std::string& text) { return Parser(text).parse(); }

ModuleSpec parse_module(const std::string& text, int d) {
  ModuleSpec w;
  w.d = d;
  for (std::string s : split(text, '+')) {
    if (s.empty()) throw_parse("syntax error", "empty summand in module '" + text + "'");
    int k = 1;
    std::size_t star = s.find('*');
    if (star != std::string::npos) {
      k = to_int(trim(s.substr(0, star)), "module multiplicity");
      s = trim(s.substr(star + 1));
    }
    if (!s.empty() && s.front() == '(') {
      if (s.back() != ')') throw_parse("syntax error", "unbalanced parentheses in module '" + text + "'");
      s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<int> parts;
    if (!s.empty())
      for (const std::string& p : split(s, ',')) parts.push_back(to_int(p, "partition"));
    w.summands.emplace_back(Partition(parts), k);
  }
  return w;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::vector<int> out;
  for (const std::string& p : split(trim(s), ' '))
    if (!p.empty()) out.push_back(to_int(p, "list"));
  if (out.empty()) throw_parse("syntax error", "empty integer list");
  return out;
}

std::vector<VarId> parse_var_list(const std::string& text) {
  std::vector<VarId> out;
  for (const std::string& p : split(text, ',')) {
    if (p.empty() || p[0] < 'a' || p[0] > 'z') throw_parse("syntax error", "bad variable name '" + p + "'");
    for (char c : p)
      if (!((c >= 'a' && c <= 'z') || std::isdigit(static_cast<unsigned char>(c))))
        throw_parse("syntax error", "bad variable name '" + p + "'");
    out.push_back(VarId::named(p));
  }
  return out;
}

}  // namespace rsf
