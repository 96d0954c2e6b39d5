#include "kirwan/symbolic.hpp"

#include <cctype>
#include <sstream>

#include "kirwan/errors.hpp"

namespace kirwan {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [s, e] : b) out[s] += e;
  return out;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial out = m;
  for (const auto& [s, e] : d) {
    out[s] -= e;
    if (out[s] == 0) out.erase(s);
  }
  return out;
}

int degree_in(const Monomial& m, const std::vector<std::string>& symbols) {
  int deg = 0;
  for (const auto& s : symbols) {
    auto it = m.find(s);
    if (it != m.end()) deg += it->second;
  }
  return deg;
}

DivisorClass add(DivisorClass a, const DivisorClass& b, int sign = 1) {
  for (const auto& [d, n] : b) {
    a[d] += sign * n;
    if (a[d] == 0) a.erase(d);
  }
  return a;
}

template <typename Rewrite>
SymPoly rewrite_terms(const SymPoly& p, Rewrite rewrite) {
  SymPoly out;
  for (const auto& [m, c] : p.terms()) out = out + SymPoly(rewrite(m), c);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  SymPoly parse() {
    SymPoly out = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail() const { throw SchemaError("bad polynomial: " + s_); }

  SymPoly expr() {
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    SymPoly out = term();
    if (neg) out = -out;
    while (true) {
      if (eat('+')) {
        out = out + term();
      } else if (eat('-')) {
        out = out - term();
      } else {
        return out;
      }
    }
  }

  SymPoly term() {
    SymPoly out = factor();
    while (eat('*')) out = out * factor();
    return out;
  }

  SymPoly factor() {
    SymPoly base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t p0 = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (p0 == pos_) fail();
    SymPoly out(1);
    for (int i = std::stoi(s_.substr(p0, pos_ - p0)); i > 0; --i) out = out * base;
    return out;
  }

  SymPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (eat('(')) {
      SymPoly inner = expr();
      if (!eat(')')) fail();
      return inner;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return SymPoly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail();
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return SymPoly::symbol(s_.substr(start, pos_ - start));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial monomial(std::initializer_list<std::string> symbols) {
  Monomial m;
  for (const auto& s : symbols) ++m[s];
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : m) {
    if (!out.empty()) out += "*";
    out += s;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (const auto& [s, e] : d) {
    auto it = m.find(s);
    if (it == m.end() || it->second < e) return false;
  }
  return true;
}

SymPoly::SymPoly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

SymPoly::SymPoly(const Monomial& m, const Rational& c) { add_term(m, c); }

SymPoly SymPoly::parse(const std::string& text) { return Parser(text).parse(); }

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = terms_[m];
  slot += c;
  slot.canonicalize();
  if (slot == 0) terms_.erase(m);
}

SymPoly SymPoly::operator-() const {
  SymPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  SymPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

std::optional<SymPoly> SymPoly::divide(const Monomial& m) const {
  SymPoly out;
  for (const auto& [mt, c] : terms_) {
    if (!divides(m, mt)) return std::nullopt;
    out.add_term(quotient(mt, m), c);
  }
  return out;
}

SymPoly SymPoly::substitute(const std::map<std::string, SymPoly>& values) const {
  SymPoly out;
  for (const auto& [m, c] : terms_) {
    SymPoly term(c);
    for (const auto& [s, e] : m) {
      auto it = values.find(s);
      SymPoly base = it == values.end() ? SymPoly(Monomial{{s, 1}}) : it->second;
      for (int i = 0; i < e; ++i) term = term * base;
    }
    out = out + term;
  }
  return out;
}

int SymPoly::min_degree(const std::vector<std::string>& symbols) const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = degree_in(m, symbols);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

SymPoly SymPoly::homogeneous_part(const std::vector<std::string>& symbols, int degree) const {
  SymPoly out;
  for (const auto& [m, c] : terms_)
    if (degree_in(m, symbols) == degree) out.add_term(m, c);
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << rational_string(mag);
    } else {
      if (mag != 1) os << rational_string(mag) << "*";
      os << kirwan::to_string(m);
    }
  }
  return os.str();
}

SymPoly sym(const std::string& name) { return SymPoly::symbol(name); }

SymPoly apply_rules(const SymPoly& p, const std::vector<SubstitutionRule>& rules) {
  return rewrite_terms(p, [&](Monomial m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rules) {
        if (divides(r.lhs, m)) {
          m = multiply(quotient(m, r.lhs), monomial({r.section, r.target}));
          changed = true;
        }
      }
    }
    return m;
  });
}

SymPoly unapply_rules(const SymPoly& p, const std::vector<SubstitutionRule>& rules) {
  return rewrite_terms(p, [&](Monomial m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : rules) {
        Monomial rhs = monomial({r.section, r.target});
        if (divides(rhs, m)) {
          m = multiply(quotient(m, rhs), r.lhs);
          changed = true;
        }
      }
    }
    return m;
  });
}

DivisorClass DivisorLedger::class_of(const Monomial& m) const {
  DivisorClass out;
  for (const auto& [s, e] : m) {
    auto it = symbol_class.find(s);
    if (it == symbol_class.end()) throw PreconditionError("symbol without a divisor class: " + s);
    for (int i = 0; i < e; ++i) out = add(out, it->second);
  }
  return out;
}

bool DivisorLedger::rule_consistent(const SubstitutionRule& r) const {
  return class_of(r.lhs) == class_of(monomial({r.section, r.target}));
}

bool BlowupChart::degree_consistent() const {
  for (const auto& p : patches)
    for (const auto& r : p.rules) {
      if (r.section != p.section || !ledger.rule_consistent(r)) return false;
    }
  return true;
}

bool ElementaryChart::degree_consistent() const {
  for (const auto& r : rules) {
    if (!ledger.rule_consistent(r)) return false;
  }
  return true;
}

std::string to_string(const SymMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < 2; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < 4; ++c) out += (c == 0 ? "" : ", ") + m[r][c].to_string();
    out += "]";
  }
  return out + "]";
}

SymMatrix to_sym_matrix(const CovecMatrix<RatFunc>& b) {
  SymMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c)
      for (std::size_t k = 0; k < 3; ++k) {
        if (!b(r, c)[k].is_polynomial()) throw PreconditionError("matrix entry is not polynomial in t");
        const UPoly& coeff = b(r, c)[k].num();
        for (int p = 0; p <= coeff.degree(); ++p) {
          if (coeff.coeff(p) == 0) continue;
          Monomial m{{"x" + std::to_string(k), 1}};
          if (p > 0) m["t"] = p;
          out[r][c] = out[r][c] + SymPoly(m, coeff.coeff(p));
        }
      }
  return out;
}

SymMatrix proper_transform_matrix(const SymMatrix& bt, const BlowupChart& chart) {
  if (chart.patches.empty()) return bt;
  if (chart.row_patch.size() != 2) throw PreconditionError("chart must assign a patch to each row");
  SymMatrix out;
  for (std::size_t r = 0; r < 2; ++r) {
    const ChartPatch& patch = chart.patches.at(chart.row_patch[r]);
    const Monomial section{{patch.section, 1}};
    for (std::size_t c = 0; c < 4; ++c) {
      auto divided = apply_rules(bt[r][c], patch.rules).divide(section);
      if (!divided) {
        throw PreconditionError("row " + std::to_string(r) + " is not divisible by " + patch.section +
                                " in this chart: " + bt[r][c].to_string());
      }
      out[r][c] = *divided;
      if (unapply_rules(SymPoly(section) * out[r][c], patch.rules) != bt[r][c]) {
        throw PreconditionError("chart substitution is not invertible on " + bt[r][c].to_string());
      }
    }
  }
  return out;
}

SymMatrix elementary_transform_matrix(const SymMatrix& bz, const ElementaryChart& chart) {
  SymMatrix out;
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& section = chart.column_section[c];
    for (std::size_t r = 0; r < 2; ++r) {
      if (!section) {
        out[r][c] = bz[r][c];
        continue;
      }
      const Monomial s{{*section, 1}};
      auto divided = apply_rules(bz[r][c], chart.rules).divide(s);
      if (!divided) {
        throw PreconditionError("column " + std::to_string(c) + " is not divisible by " + *section + ": " +
                                bz[r][c].to_string());
      }
      out[r][c] = *divided;
      if (unapply_rules(SymPoly(s) * out[r][c], chart.rules) != bz[r][c]) {
        throw PreconditionError("elementary transform is not invertible on " + bz[r][c].to_string());
      }
    }
  }
  return out;
}

}  // namespace kirwan
