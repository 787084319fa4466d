#include "hv/expr.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "hv/format.hpp"

namespace hv {

namespace {

// Rank-agnostic intermediate: words of symbols with coefficients.
struct Poly {
  int rank = -1;  // -1: zero of undetermined rank
  std::map<std::vector<BasisSymbol>, Rational> terms;

  void add(const Poly& o, const Rational& scale, std::size_t at) {
    if (o.rank < 0) return;
    if (rank >= 0 && rank != o.rank)
      throw ParseError("cannot add terms of rank " + std::to_string(rank) + " and " + std::to_string(o.rank), at);
    rank = o.rank;
    for (const auto& [w, c] : o.terms) {
      auto [it, inserted] = terms.try_emplace(w, c * scale);
      if (!inserted) {
        it->second += c * scale;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
  }
};

Poly tensor_product(const Poly& a, const Poly& b, std::size_t at) {
  if (a.rank < 0 || b.rank < 0) {
    Poly z;
    if (a.rank >= 0 && b.rank >= 0) z.rank = a.rank + b.rank;
    return z;
  }
  Poly out;
  out.rank = a.rank + b.rank;
  if (out.rank > 3) throw ParseError("tensors of rank above 3 are not supported", at);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      auto w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto [it, inserted] = out.terms.try_emplace(w, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const ConfigPtr& config) : src_(src), config_(config) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (src_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  bool at_digit() {
    skip_ws();
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  Rational unsigned_rational() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == begin) fail("expected digits");
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected denominator digits");
    }
    try {
      return Rational::parse(src_.substr(begin, pos_ - begin));
    } catch (const ArithmeticError&) {
      pos_ = begin;
      fail("zero denominator");
    }
  }

  Rational signed_rational() {
    const bool neg = accept('-');
    Rational r = unsigned_rational();
    return neg ? -r : r;
  }

  Poly symbol(const BasisSymbol& s, std::size_t at) {
    try {
      validate_symbol(*config_, s);
    } catch (const UsageError& e) {
      throw ParseError(e.what(), at);
    }
    Poly p;
    p.rank = 1;
    p.terms.emplace(std::vector<BasisSymbol>{s}, Rational(1));
    return p;
  }

  Poly factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept_word("wedge")) {
      expect('(');
      Poly a = expr();
      expect(',');
      Poly b = expr();
      expect(')');
      if ((a.rank >= 0 && a.rank != 1) || (b.rank >= 0 && b.rank != 1))
        throw ParseError("wedge takes two algebra elements", at);
      Poly out = tensor_product(a, b, at);
      out.add(tensor_product(b, a, at), Rational(-1), at);
      if (out.rank < 0) out.rank = 2;
      return out;
    }
    if (accept_word("C_LI")) return symbol(BasisSymbol::CLI(), at);
    if (accept_word("C_L")) return symbol(BasisSymbol::CL(), at);
    if (accept_word("C_I")) return symbol(BasisSymbol::CI(), at);
    for (char kind : {'L', 'I'}) {
      if (accept_word(std::string_view(&kind, 1))) {
        expect('(');
        const std::size_t idx_at = pos_;
        Rational x = signed_rational();
        expect(')');
        skip_ws();
        return symbol(kind == 'L' ? BasisSymbol::L(x) : BasisSymbol::I(x), idx_at);
      }
    }
    if (accept('(')) {
      Poly p = expr();
      expect(')');
      return p;
    }
    fail("expected L(..), I(..), C_L, C_I, C_LI, wedge(..) or '('");
  }

  Poly product() {
    Poly p = factor();
    while (accept('@')) {
      const std::size_t at = pos_;
      p = tensor_product(p, factor(), at);
    }
    return p;
  }

  Poly term() {
    if (at_digit()) {
      const std::size_t at = pos_;
      Rational coeff = unsigned_rational();
      if (accept('*')) {
        Poly p = product();
        Poly out;
        out.add(p, coeff, at);
        if (coeff.is_zero()) out.rank = p.rank;
        return out;
      }
      if (!coeff.is_zero()) throw ParseError("bare scalar " + coeff.str() + " is not an algebra element", at);
      return Poly{};
    }
    return product();
  }

  Poly expr() {
    Poly sum;
    Rational sign(1);
    if (accept('-')) sign = Rational(-1);
    else accept('+');
    std::size_t at = pos_;
    sum.add(term(), sign, at);
    for (;;) {
      if (accept('+')) sign = Rational(1);
      else if (accept('-')) sign = Rational(-1);
      else break;
      at = pos_;
      sum.add(term(), sign, at);
    }
    return sum;
  }

  std::string_view src_;
  ConfigPtr config_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
Combination<SymbolTuple<N>> to_tensor(const Poly& p, const ConfigPtr& cfg) {
  Combination<SymbolTuple<N>> out(cfg);
  for (const auto& [w, c] : p.terms) {
    SymbolTuple<N> key;
    for (std::size_t i = 0; i < N; ++i) key[i] = w[i];
    out.add_term(key, c);
  }
  return out;
}

Poly parse_poly(std::string_view src, const ConfigPtr& config) {
  if (!config) throw UsageError("parsing needs an algebra configuration");
  return Parser(src, config).parse_all();
}

}  // namespace

ParsedValue parse_element(std::string_view src, const ConfigPtr& config) {
  const Poly p = parse_poly(src, config);
  switch (p.rank) {
    case 2: return to_tensor<2>(p, config);
    case 3: return to_tensor<3>(p, config);
    default: {
      Element e(config);
      for (const auto& [w, c] : p.terms) e.add_term(w[0], c);
      return e;
    }
  }
}

namespace {

template <class T>
T expect_rank(std::string_view src, const ConfigPtr& config, int rank, const char* what) {
  const Poly p = parse_poly(src, config);
  if (p.rank >= 0 && p.rank != rank)
    throw ParseError(std::string("expected ") + what + ", got a value of rank " + std::to_string(p.rank), 0);
  const ParsedValue v = parse_element(src, config);
  if (p.rank < 0) return T(config);
  return std::get<T>(v);
}

}  // namespace

Element parse_algebra_element(std::string_view src, const ConfigPtr& config) {
  return expect_rank<Element>(src, config, 1, "an algebra element");
}

Tensor2 parse_tensor2(std::string_view src, const ConfigPtr& config) {
  return expect_rank<Tensor2>(src, config, 2, "a tensor of rank 2");
}

Tensor3 parse_tensor3(std::string_view src, const ConfigPtr& config) {
  return expect_rank<Tensor3>(src, config, 3, "a tensor of rank 3");
}

BasisSymbol parse_symbol(std::string_view src, const ConfigPtr& config) {
  const Element e = parse_algebra_element(src, config);
  if (e.size() != 1 || e.begin()->second != Rational(1)) throw ParseError("expected a single basis symbol", 0);
  return e.begin()->first;
}

std::string format_value(const ParsedValue& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

}  // namespace hv
