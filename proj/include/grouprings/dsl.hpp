#pragma once

#include "grouprings/families.hpp"

#include <memory>
#include <sstream>

namespace gring {

struct parse_error : std::runtime_error {
  size_t offset;
  std::string expected;
  parse_error(std::string msg, size_t off, std::string exp)
      : std::runtime_error(std::move(msg)), offset(off), expected(std::move(exp)) {}
};

/// Group-expression AST: parametric constructors, named atoms, and binary
/// direct products written `x`.
struct GroupExpr {
  enum class Kind { Atom, Call, Product } kind = Kind::Atom;
  std::string head;                   // atom or constructor name
  std::vector<long long> args;        // Call arguments
  std::shared_ptr<GroupExpr> lhs, rhs; // Product children
};

using ExprPtr = std::shared_ptr<GroupExpr>;

namespace detail {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

inline bool ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

} // namespace detail

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : lx_{text} {}

  ExprPtr parse() {
    ExprPtr e = parse_product();
    if (!lx_.eof()) throw parse_error("trailing input", lx_.pos, "end of input");
    return e;
  }

private:
  detail::Lexer lx_;

  ExprPtr parse_product() {
    ExprPtr left = parse_atom();
    while (true) {
      lx_.skip_ws();
      // the product operator: a lone 'x' or '*'; after a complete atom a
      // leading 'x' of an identifier is the operator
      if (lx_.pos < lx_.text.size() && (lx_.text[lx_.pos] == 'x' || lx_.text[lx_.pos] == '*')) {
        ++lx_.pos;
        ExprPtr right = parse_atom();
        auto prod = std::make_shared<GroupExpr>();
        prod->kind = GroupExpr::Kind::Product;
        prod->lhs = left;
        prod->rhs = right;
        left = prod;
        continue;
      }
      break;
    }
    return left;
  }

  ExprPtr parse_atom() {
    lx_.skip_ws();
    size_t start = lx_.pos;
    if (lx_.pos >= lx_.text.size())
      throw parse_error("unexpected end of input", lx_.pos, "group expression");
    if (lx_.text[lx_.pos] == '(') {
      ++lx_.pos;
      ExprPtr e = parse_product();
      expect(')');
      return e;
    }
    if (!detail::ident_char(lx_.text[lx_.pos]))
      throw parse_error("unexpected character '" + std::string(1, lx_.text[lx_.pos]) + "'",
                        lx_.pos, "identifier or '('");
    std::string name;
    while (lx_.pos < lx_.text.size() && detail::ident_char(lx_.text[lx_.pos]))
      name += lx_.text[lx_.pos++];
    auto e = std::make_shared<GroupExpr>();
    lx_.skip_ws();
    if (lx_.pos < lx_.text.size() && lx_.text[lx_.pos] == '(') {
      ++lx_.pos;
      e->kind = GroupExpr::Kind::Call;
      e->head = name;
      while (true) {
        e->args.push_back(parse_int());
        lx_.skip_ws();
        if (lx_.pos < lx_.text.size() && lx_.text[lx_.pos] == ',') { ++lx_.pos; continue; }
        break;
      }
      expect(')');
      validate_call(*e, start);
      return e;
    }
    e->kind = GroupExpr::Kind::Atom;
    e->head = name;
    validate_atom(*e, start);
    return e;
  }

  long long parse_int() {
    lx_.skip_ws();
    size_t start = lx_.pos;
    bool neg = false;
    if (lx_.pos < lx_.text.size() && lx_.text[lx_.pos] == '-') { neg = true; ++lx_.pos; }
    if (lx_.pos >= lx_.text.size() || !isdigit((unsigned char)lx_.text[lx_.pos]))
      throw parse_error("expected integer", start, "integer literal");
    long long v = 0;
    while (lx_.pos < lx_.text.size() && isdigit((unsigned char)lx_.text[lx_.pos])) {
      v = v * 10 + (lx_.text[lx_.pos] - '0');
      if (v > 1'000'000'000LL) throw parse_error("integer too large", start, "smaller integer");
      ++lx_.pos;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    lx_.skip_ws();
    if (lx_.pos >= lx_.text.size() || lx_.text[lx_.pos] != c)
      throw parse_error("expected '" + std::string(1, c) + "'", lx_.pos, std::string(1, c));
    ++lx_.pos;
  }

  static bool is_pow2_ge8(long long v) {
    if (v < 8) return false;
    while (v % 2 == 0) v /= 2;
    return v == 1;
  }

  void validate_call(const GroupExpr& e, size_t off) {
    auto need = [&](size_t k) {
      if (e.args.size() != k)
        throw parse_error(e.head + " takes " + std::to_string(k) + " argument(s)", off,
                          "argument list");
    };
    if (e.head == "C") { need(1); if (e.args[0] < 1) throw parse_error("C(n): n >= 1", off, "n >= 1"); }
    else if (e.head == "D") {
      need(1);
      if (e.args[0] < 4 || e.args[0] % 2)
        throw parse_error("D(n): order must be even and >= 4", off, "even n >= 4");
    } else if (e.head == "Q") {
      need(1);
      if (!is_pow2_ge8(e.args[0]))
        throw parse_error("Q(n): order must be a power of 2 and >= 8", off, "2^k >= 8");
    } else if (e.head == "S" || e.head == "A") {
      need(1);
      if (e.args[0] < 1 || e.args[0] > 5)
        throw parse_error(e.head + "(n): n in 1..5", off, "n in 1..5");
    } else if (e.head == "G") {
      need(3);
      if (!detail::is_prime(e.args[0]) || e.args[1] < 2 || e.args[2] < 1)
        throw parse_error("G(p,m,n): p prime, m >= 2, n >= 1", off, "valid parameters");
    } else if (e.head == "MC") {
      need(3);
      long long m = e.args[0], k = e.args[1], r = e.args[2];
      if (m < 2 || k < 2) throw parse_error("MC(m,q^k,r): orders >= 2", off, "valid orders");
      // q^k must be a prime power
      long long q = k;
      long long pr = 0;
      for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) { pr = d; break; }
      if (pr == 0) pr = q;
      while (q % pr == 0) q /= pr;
      if (q != 1) throw parse_error("MC(m,q^k,r): second argument must be a prime power", off,
                                    "prime power");
      long long rk = 1 % m, rr = ((r % m) + m) % m;
      for (long long i = 0; i < e.args[1]; ++i) rk = rk * rr % m;
      if (rk != 1 % m)
        throw parse_error("MC(m,q^k,r): r^(q^k) != 1 mod m", off, "valid action exponent");
    } else if (e.head == "SL2") {
      need(1);
      if (e.args[0] != 2 && e.args[0] != 3 && e.args[0] != 5)
        throw parse_error("SL2(q): q in {2,3,5}", off, "q in {2,3,5}");
    } else {
      throw parse_error("unknown constructor '" + e.head + "'", off,
                        "C, D, Q, S, A, G, MC, SL2 or a named atom");
    }
  }

  void validate_atom(const GroupExpr& e, size_t off) {
    static const char* names[] = {"BJ4", "BJ5", "BJ8", "BJ9", "SG32_11",
                                  "SG32_12", "SG64_135", "Q8xQ8"};
    for (auto* n : names)
      if (e.head == n) return;
    throw parse_error("unknown atom '" + e.head + "'", off,
                      "BJ4, BJ5, BJ8, BJ9, SG32_11, SG32_12, SG64_135, Q8xQ8");
  }
};

inline ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

inline std::string print_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom: return e.head;
    case GroupExpr::Kind::Call: {
      std::string s = e.head + "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.args[i]);
      }
      return s + ")";
    }
    default: {
      auto wrap = [](const GroupExpr& c) {
        std::string s = print_expr(c);
        return c.kind == GroupExpr::Kind::Product ? "(" + s + ")" : s;
      };
      return wrap(*e.lhs) + " x " + wrap(*e.rhs);
    }
  }
}

inline GroupPtr build_group(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Product:
      return direct_product(build_group(*e.lhs), build_group(*e.rhs));
    case GroupExpr::Kind::Atom: {
      if (e.head == "BJ4") return bj4();
      if (e.head == "BJ5") return bj5();
      if (e.head == "BJ8") return bj8();
      if (e.head == "BJ9") return bj9();
      if (e.head == "SG32_11") return sg32_11();
      if (e.head == "SG32_12") return sg32_12();
      if (e.head == "SG64_135") return sg64_135();
      if (e.head == "Q8xQ8") return q8xq8();
      throw group_error("unknown atom " + e.head);
    }
    default: {
      if (e.head == "C") return cyclic((int)e.args[0]);
      if (e.head == "D") return dihedral((int)e.args[0]);
      if (e.head == "Q") return generalized_quaternion((int)e.args[0]);
      if (e.head == "S") return symmetric((int)e.args[0]);
      if (e.head == "A") return alternating((int)e.args[0]);
      if (e.head == "G") return gpmn((int)e.args[0], (int)e.args[1], (int)e.args[2]);
      if (e.head == "MC") return metacyclic(e.args[0], e.args[1], e.args[2]);
      if (e.head == "SL2") return sl2((int)e.args[0]);
      throw group_error("unknown constructor " + e.head);
    }
  }
}

} // namespace gring
