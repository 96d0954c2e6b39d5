#ifndef KIRWAN_SYMBOLIC_HPP
#define KIRWAN_SYMBOLIC_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kirwan/pencil.hpp"
#include "kirwan/scalar.hpp"

namespace kirwan {

/// Product of named symbols with positive exponents.
using Monomial = std::map<std::string, int>;

Monomial monomial(std::initializer_list<std::string> symbols);
std::string to_string(const Monomial& m);
bool divides(const Monomial& d, const Monomial& m);

/// Sparse polynomial over Q in named symbols.
class SymPoly {
 public:
  SymPoly() = default;
  SymPoly(int c) : SymPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SymPoly(const Rational& c);               // NOLINT(google-explicit-constructor)
  SymPoly(const Monomial& m, const Rational& c = 1);
  static SymPoly symbol(const std::string& name) { return SymPoly(Monomial{{name, 1}}); }
  /// Parses sums of products such as "t*a*x0 - 2*x1^2 + 1/2*u0".
  static SymPoly parse(const std::string& text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SymPoly operator-() const;
  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + (-b); }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
  SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
  SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  /// Exact division by a monomial; nullopt if some term is not divisible.
  std::optional<SymPoly> divide(const Monomial& m) const;
  /// Replaces every symbol from the map by a polynomial.
  SymPoly substitute(const std::map<std::string, SymPoly>& values) const;
  /// Total degree of each term in the given symbols, lowest first.
  int min_degree(const std::vector<std::string>& symbols) const;
  /// Sum of the terms of the given total degree in the symbols.
  SymPoly homogeneous_part(const std::vector<std::string>& symbols, int degree) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const SymPoly& p) { return p.is_zero(); }
SymPoly sym(const std::string& name);

/// lhs = section * target, e.g. t*x0 = s*u0.
struct SubstitutionRule {
  Monomial lhs;
  std::string section;
  std::string target;
};

/// Monomial rewriting with the rules, applied until no rule matches.
SymPoly apply_rules(const SymPoly& p, const std::vector<SubstitutionRule>& rules);
/// The inverse rewriting section*target -> lhs.
SymPoly unapply_rules(const SymPoly& p, const std::vector<SubstitutionRule>& rules);

/// Divisor classes as integer combinations of named basis divisors.
using DivisorClass = std::map<std::string, int>;

/// Named symbols with the classes of the line bundles they are sections of,
/// plus named relations such as D ~ H - F.
struct DivisorLedger {
  std::map<std::string, DivisorClass> symbol_class;
  std::map<std::string, DivisorClass> divisor_relation;

  DivisorClass class_of(const Monomial& m) const;
  /// Every rule has matching classes on both sides; throws on unknown symbols.
  bool rule_consistent(const SubstitutionRule& r) const;
};

/// One affine patch of a blow-up: a section symbol and its rules.
struct ChartPatch {
  std::string section;
  std::vector<SubstitutionRule> rules;
};

/// Symbolic blow-up chart. Row i of a 2x4 matrix is handled by patch
/// row_patch[i]; an empty patch list is the identity chart.
struct BlowupChart {
  std::vector<ChartPatch> patches;
  std::vector<std::size_t> row_patch;
  DivisorLedger ledger;

  bool degree_consistent() const;
};

/// Column modification chart: column j is divided by column_section[j] after
/// rewriting with the rules.
struct ElementaryChart {
  std::vector<SubstitutionRule> rules;
  std::array<std::optional<std::string>, 4> column_section;
  DivisorLedger ledger;

  bool degree_consistent() const;
};

using SymMatrix = std::array<std::array<SymPoly, 4>, 2>;

std::string to_string(const SymMatrix& m);

/// Writes a covector matrix with t-polynomial coefficients in the symbols
/// t, x0, x1, x2. Throws PreconditionError on a non-polynomial entry.
SymMatrix to_sym_matrix(const CovecMatrix<RatFunc>& b);

/// Substitutes the chart and divides row i by its section symbol. Throws
/// PreconditionError if some row is not divisible. The result satisfies
/// unapply(section_i * result_i) == row_i of the input.
SymMatrix proper_transform_matrix(const SymMatrix& bt, const BlowupChart& chart);

/// Rewrites with the rules and divides the designated columns by their
/// sections; the result times diag(sections) unrewrites to the input.
SymMatrix elementary_transform_matrix(const SymMatrix& bz, const ElementaryChart& chart);

}  // namespace kirwan

#endif
