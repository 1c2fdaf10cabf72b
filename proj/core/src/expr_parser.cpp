#include "singdef/expr_parser.hpp"

#include <cctype>
#include <limits>

#include "singdef/errors.hpp"

namespace singdef {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return maybe_power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, rational());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return maybe_power(Polynomial::variable(ring_, *index));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial maybe_power(Polynomial base) {
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    Integer e = integer();
    if (e < 1) {
      pos_ = start;
      fail("exponent must be positive");
    }
    if (e >= Integer(1) << 31) {
      pos_ = start;
      fail("exponent too large");
    }
    const auto exponent = static_cast<std::uint32_t>(e.get_ui());
    if (base.size() == 1) {
      // Single term: raise exponents directly instead of repeated squaring.
      const auto& [m, c] = base.terms().front();
      Monomial out(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        const std::uint64_t v = std::uint64_t{m[i]} * exponent;
        if (v > std::numeric_limits<std::uint32_t>::max()) {
          pos_ = start;
          fail("exponent too large");
        }
        out.set(i, static_cast<std::uint32_t>(v));
      }
      Rational coeff;
      mpz_pow_ui(coeff.get_num_mpz_t(), c.get_num_mpz_t(), exponent);
      mpz_pow_ui(coeff.get_den_mpz_t(), c.get_den_mpz_t(), exponent);
      return Polynomial::monomial(ring_, out, coeff);
    }
    return base.pow(exponent);
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    Integer num = integer();
    if (!accept('/')) return Rational(num);
    skip_space();
    const std::size_t den_pos = pos_;
    Integer den = integer();
    if (den == 0) {
      pos_ = den_pos;
      fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

void render_monomial(std::string& out, const Monomial& m, const Ring& ring) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.name(i);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

Polynomial parse_polynomial(const ExprSource& source) {
  return parse_polynomial(source.text, Ring::make(source.declared_vars));
}

std::string render_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.is_one()) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += to_string(magnitude);
      out += '*';
    }
    render_monomial(out, m, *p.ring());
  }
  return out;
}

RingPtr threefold_ring() {
  static const RingPtr ring = Ring::make({"x", "y", "z", "w"});
  return ring;
}

RingPtr curve_ring() {
  static const RingPtr ring = Ring::make({"z", "w"});
  return ring;
}

}  // namespace singdef
