#include "planicheck/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace planicheck::logic {

FormulaPtr atom(std::string name) {
  return std::make_shared<const Formula>(Formula{Op::Atom, std::move(name), nullptr, nullptr});
}

FormulaPtr negate(FormulaPtr f) {
  return std::make_shared<const Formula>(Formula{Op::Not, {}, std::move(f), nullptr});
}

FormulaPtr binary(Op op, FormulaPtr lhs, FormulaPtr rhs) {
  if (op == Op::Atom || op == Op::Not) throw std::invalid_argument("binary() needs a binary connective");
  return std::make_shared<const Formula>(Formula{op, {}, std::move(lhs), std::move(rhs)});
}

bool same_tree(const Formula& a, const Formula& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case Op::Atom: return a.atom == b.atom;
    case Op::Not: return same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

ParseError::ParseError(std::size_t token, const std::string& what)
    : std::runtime_error("syntax error at token " + std::to_string(token) + ": " + what), token_(token) {}

namespace {

enum class Tok { Ident, Not, And, Or, Xor, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, "<->"});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Implies, "->"});
      i += 2;
      continue;
    }
    switch (ch) {
      case '!': out.push_back({Tok::Not, "!"}); break;
      case '&': out.push_back({Tok::And, "&"}); break;
      case '|': out.push_back({Tok::Or, "|"}); break;
      case '^': out.push_back({Tok::Xor, "^"}); break;
      case '(': out.push_back({Tok::LParen, "("}); break;
      case ')': out.push_back({Tok::RParen, ")"}); break;
      default:
        throw ParseError(out.size() + 1, "unexpected character '" + std::string(1, ch) + "'");
    }
    ++i;
  }
  out.push_back({Tok::End, "end of input"});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = iff();
    if (peek() != Tok::End) fail("unexpected '" + toks_[pos_].text + "'");
    return f;
  }

 private:
  Tok peek() const { return toks_[pos_].kind; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  FormulaPtr iff() {
    FormulaPtr f = implies();
    while (peek() == Tok::Iff) {
      ++pos_;
      f = binary(Op::Iff, f, implies());
    }
    return f;
  }

  FormulaPtr implies() {
    FormulaPtr f = disjunction();
    while (peek() == Tok::Implies) {
      ++pos_;
      f = binary(Op::Implies, f, disjunction());
    }
    return f;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (peek() == Tok::Or || peek() == Tok::Xor) {
      const Op op = peek() == Tok::Or ? Op::Or : Op::Xor;
      ++pos_;
      f = binary(op, f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (peek() == Tok::And) {
      ++pos_;
      f = binary(Op::And, f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    switch (peek()) {
      case Tok::Not:
        ++pos_;
        return negate(unary());
      case Tok::Ident:
        return atom(toks_[pos_++].text);
      case Tok::LParen: {
        ++pos_;
        FormulaPtr f = iff();
        if (peek() != Tok::RParen) fail("expected ')'");
        ++pos_;
        return f;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + toks_[pos_].text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or:
    case Op::Xor: return 3;
    case Op::And: return 4;
    case Op::Not: return 5;
    case Op::Atom: return 6;
  }
  return 0;
}

const char* symbol(Op op) {
  switch (op) {
    case Op::And: return " & ";
    case Op::Or: return " | ";
    case Op::Xor: return " ^ ";
    case Op::Implies: return " -> ";
    case Op::Iff: return " <-> ";
    default: return "";
  }
}

void print_into(const Formula& f, std::string& out) {
  if (f.op == Op::Atom) {
    out += f.atom;
    return;
  }
  auto child = [&out](const Formula& c, bool wrap) {
    if (wrap) out += '(';
    print_into(c, out);
    if (wrap) out += ')';
  };
  if (f.op == Op::Not) {
    out += '!';
    child(*f.lhs, precedence(f.lhs->op) < precedence(Op::Not));
    return;
  }
  const int p = precedence(f.op);
  // left associative: the right operand needs parentheses at equal precedence
  child(*f.lhs, precedence(f.lhs->op) < p);
  out += symbol(f.op);
  child(*f.rhs, precedence(f.rhs->op) <= p);
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (f.op == Op::Atom) {
    out.insert(f.atom);
    return;
  }
  collect(*f.lhs, out);
  if (f.rhs) collect(*f.rhs, out);
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

bool eval(const Formula& f, const Assignment& values) {
  switch (f.op) {
    case Op::Atom: {
      const auto it = values.find(f.atom);
      if (it == values.end()) throw std::invalid_argument("no value for atom '" + f.atom + "'");
      return it->second;
    }
    case Op::Not: return !eval(*f.lhs, values);
    case Op::And: return eval(*f.lhs, values) && eval(*f.rhs, values);
    case Op::Or: return eval(*f.lhs, values) || eval(*f.rhs, values);
    case Op::Xor: return eval(*f.lhs, values) != eval(*f.rhs, values);
    case Op::Implies: return !eval(*f.lhs, values) || eval(*f.rhs, values);
    case Op::Iff: return eval(*f.lhs, values) == eval(*f.rhs, values);
  }
  return false;
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> s;
  collect(f, s);
  return {s.begin(), s.end()};
}

AtomBudgetExceeded::AtomBudgetExceeded(std::size_t count)
    : std::invalid_argument("truth table over " + std::to_string(count) + " atoms exceeds the budget of " +
                            std::to_string(kMaxAtoms)) {}

Equivalence equivalent(const Formula& f1, const Formula& f2, const Formula* constraint,
                       const std::vector<std::string>& extra_atoms) {
  std::set<std::string> names(extra_atoms.begin(), extra_atoms.end());
  collect(f1, names);
  collect(f2, names);
  if (constraint) collect(*constraint, names);
  if (names.size() > kMaxAtoms) throw AtomBudgetExceeded(names.size());

  Equivalence r;
  r.atoms.assign(names.begin(), names.end());
  const std::size_t n = r.atoms.size();
  r.rows = std::size_t{1} << n;
  Assignment row;
  for (std::size_t bits = 0; bits < r.rows; ++bits) {
    for (std::size_t k = 0; k < n; ++k) row[r.atoms[k]] = (bits >> (n - 1 - k)) & 1u;
    if (constraint && !eval(*constraint, row)) continue;
    ++r.satisfying;
    if (eval(f1, row) != eval(f2, row) && r.equivalent) {
      r.equivalent = false;
      r.witness = row;
    }
  }
  return r;
}

const char* to_string(Disjunction d) { return d == Disjunction::Inclusive ? "inclusive" : "exclusive"; }

ProblemScheme compose_scheme(const std::string& t, const std::string& p, const std::string& q,
                             const std::string& r, Disjunction kind) {
  const std::set<std::string> distinct{t, p, q, r};
  if (distinct.size() != 4) throw SchemeError("scheme atoms t, p, q, r must be distinct");
  for (const auto& name : distinct) {
    const FormulaPtr f = parse_formula(name);
    if (f->op != Op::Atom) throw SchemeError("'" + name + "' is not an atom name");
  }

  const FormulaPtr ft = atom(t), fp = atom(p), fq = atom(q), fr = atom(r);
  const Op dis = kind == Disjunction::Inclusive ? Op::Or : Op::Xor;
  ProblemScheme s{t, p, q, r, kind};
  s.generating_1 = binary(Op::Implies, binary(Op::And, ft, fp), fr);
  s.generating_2 = binary(Op::Implies, binary(Op::And, ft, fq), fr);
  s.combined = binary(Op::Implies, binary(Op::And, ft, binary(dis, fp, fq)), fr);
  s.inverse = binary(Op::Implies, binary(Op::And, ft, fr), binary(dis, fp, fq));

  const FormulaPtr pair = binary(Op::And, s.generating_1, s.generating_2);
  const FormulaPtr exclusive = negate(binary(Op::And, fp, fq));
  const Equivalence e =
      equivalent(*pair, *s.combined, kind == Disjunction::Exclusive ? exclusive.get() : nullptr);
  if (!e.equivalent) throw std::logic_error("combined scheme is not equivalent to its generating problems");
  return s;
}

EquivalenceCheck check_equivalence(std::string name, const std::string& lhs, const std::string& rhs,
                                   std::optional<std::string> constraint) {
  static const std::vector<std::string> kAtoms{"p", "q", "r", "t"};
  const FormulaPtr l = parse_formula(lhs);
  const FormulaPtr r = parse_formula(rhs);
  FormulaPtr c;
  if (constraint) c = parse_formula(*constraint);
  EquivalenceCheck out{std::move(name), lhs, rhs, std::move(constraint)};
  out.result = equivalent(*l, *r, c.get(), kAtoms);
  return out;
}

std::vector<EquivalenceCheck> composition_identities() {
  const std::string exclusive = "!(p & q)";
  std::vector<EquivalenceCheck> out;
  out.push_back(check_equivalence("inclusive-composition", "(t & p -> r) & (t & q -> r)", "t & (p | q) -> r",
                                  std::nullopt));
  out.push_back(check_equivalence("exclusive-composition", "(t & (p & !q) -> r) & (t & (!p & q) -> r)",
                                  "t & (p ^ q) -> r", std::nullopt));
  out.push_back(check_equivalence("exclusive-reduction-p", "p & !q", "p", exclusive));
  out.push_back(check_equivalence("exclusive-reduction-q", "!p & q", "q", exclusive));
  out.push_back(check_equivalence("negated-xor-expansion", "!(p ^ q)", "(p | !q) & (!p | q)", exclusive));
  out.push_back(check_equivalence("negated-xor-neither", "(p | !q) & (!p | q)", "!p & !q", exclusive));
  return out;
}

}  // namespace planicheck::logic
