#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace planicheck::logic {

enum class Op { Atom, Not, And, Or, Xor, Implies, Iff };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable expression tree. Binary nodes use lhs and rhs, Not uses lhs.
struct Formula {
  Op op;
  std::string atom;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

FormulaPtr atom(std::string name);
FormulaPtr negate(FormulaPtr f);
FormulaPtr binary(Op op, FormulaPtr lhs, FormulaPtr rhs);

bool same_tree(const Formula& a, const Formula& b);

/// Syntax error; token is the 1-based index of the offending token (one past
/// the last token for unexpected end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t token, const std::string& what);
  std::size_t token() const { return token_; }

 private:
  std::size_t token_;
};

/// Grammar, loosest first: <->, ->, | and ^, &, !. Binary operators are left
/// associative. Atoms are identifiers [A-Za-z_][A-Za-z0-9_]*.
FormulaPtr parse_formula(std::string_view text);

/// Prints with the fewest parentheses that parse back to the same tree.
std::string print(const Formula& f);

using Assignment = std::map<std::string, bool>;

bool eval(const Formula& f, const Assignment& values);

/// Sorted, without duplicates.
std::vector<std::string> atoms(const Formula& f);

constexpr std::size_t kMaxAtoms = 20;

class AtomBudgetExceeded : public std::invalid_argument {
 public:
  explicit AtomBudgetExceeded(std::size_t count);
};

struct Equivalence {
  bool equivalent = true;
  std::vector<std::string> atoms;
  std::size_t rows = 0;        // all assignments
  std::size_t satisfying = 0;  // rows satisfying the constraint
  std::optional<Assignment> witness;
};

/// Truth-table comparison over the union of atoms of all given formulas.
/// The witness is the first differing row in binary order (first atom is the
/// most significant bit, false before true).
Equivalence equivalent(const Formula& f1, const Formula& f2, const Formula* constraint = nullptr,
                       const std::vector<std::string>& extra_atoms = {});

enum class Disjunction { Inclusive, Exclusive };

const char* to_string(Disjunction d);

struct ProblemScheme {
  std::string t, p, q, r;
  Disjunction kind;
  FormulaPtr generating_1;  // t & p -> r
  FormulaPtr generating_2;  // t & q -> r
  FormulaPtr combined;      // t & (p | q) -> r, or with ^
  FormulaPtr inverse;       // t & r -> p | q, or with ^
};

class SchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SchemeError on repeated atoms and std::logic_error if the combined
/// form is not equivalent to the generating pair.
ProblemScheme compose_scheme(const std::string& t, const std::string& p, const std::string& q,
                             const std::string& r, Disjunction kind);

struct EquivalenceCheck {
  std::string name;
  std::string lhs, rhs;
  std::optional<std::string> constraint;
  Equivalence result;
};

/// Runs one check over the fixed atom set {p, q, r, t}.
EquivalenceCheck check_equivalence(std::string name, const std::string& lhs, const std::string& rhs,
                                   std::optional<std::string> constraint);

/// The disjunctive composition identities and the mutual-exclusion reductions
/// they rely on: six checks over {p, q, r, t}.
std::vector<EquivalenceCheck> composition_identities();

}  // namespace planicheck::logic
