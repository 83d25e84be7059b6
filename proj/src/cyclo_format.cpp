#include <cctype>
#include <ostream>

#include "p8cryst/cyclo.hpp"

namespace p8 {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const CyclotomicField& field, const Bindings& bindings)
      : text_(text), field_(field), bindings_(bindings) {}

  CycloNum parse() {
    CycloNum v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw CycloError("parse error at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  CycloNum expr() {
    CycloNum acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  CycloNum term() {
    CycloNum acc = unary();
    for (;;) {
      if (accept('*'))
        acc *= unary();
      else if (accept('/'))
        acc /= unary();
      else
        return acc;
    }
  }

  CycloNum unary() {
    if (accept('-')) return -unary();
    return power();
  }

  CycloNum power() {
    CycloNum base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 1000000) fail("exponent too large");
    }
    return base.pow(negative ? -e : e);
  }

  CycloNum atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CycloNum v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return CycloNum(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))), field_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "conj") {
        expect('(');
        CycloNum v = expr();
        expect(')');
        return v.conj();
      }
      if (auto it = bindings_.find(name); it != bindings_.end()) {
        if (&it->second.field() != &field_) fail("binding has a different conductor");
        return it->second;
      }
      return symbol(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  CycloNum symbol(std::string_view name) {
    int order = 0;
    if (name == "w")
      order = 3;
    else if (name == "i")
      order = 4;
    else if (name == "e8")
      order = 8;
    else if (name == "e9")
      order = 9;
    else if (name == "z")
      order = field_.conductor();
    else
      fail("unknown symbol '" + std::string(name) + "'");
    if (field_.conductor() % order != 0)
      fail("symbol '" + std::string(name) + "' is not in Q(zeta_" +
           std::to_string(field_.conductor()) + ")");
    return root_of_unity(order, 1, field_);
  }

  std::string_view text_;
  const CyclotomicField& field_;
  const Bindings& bindings_;
  std::size_t pos_ = 0;
};

void append_term(std::string& out, const mpq_class& coeff, const std::string& name) {
  const bool negative = coeff < 0;
  const mpq_class mag = abs(coeff);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (name == "1") {
    out += mag.get_str();
  } else if (mag == 1) {
    out += name;
  } else {
    out += mag.get_str();
    out += '*';
    out += name;
  }
}

}  // namespace

CycloNum parse_cyclo(std::string_view text, const CyclotomicField& field, const Bindings& bindings) {
  return Parser(text, field, bindings).parse();
}

std::string to_string(const CycloNum& x) {
  std::string out;
  const auto& field = x.field();
  if (field.has_symbolic_names()) {
    const auto coords = x.tensor_coordinates();
    for (int j = 0; j < field.degree(); ++j)
      if (coords[j] != 0) append_term(out, coords[j], field.tensor_name(j));
  } else {
    for (int k = 0; k < field.degree(); ++k) {
      const mpq_class c = x.coeff(k);
      if (c == 0) continue;
      append_term(out, c, k == 0 ? "1" : (k == 1 ? "z" : "z^" + std::to_string(k)));
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << to_string(x); }

}  // namespace p8
