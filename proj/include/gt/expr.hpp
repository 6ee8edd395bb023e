#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gt/group.hpp"
#include "gt/perm.hpp"

namespace gt {

// Expression language driving the CLI:
//   expr    := NAT | PERMLIT | IDENT | IDENT '(' [expr (',' expr)*] ')'
//   PERMLIT := '[' NAT (WS NAT)* ']'
// Identifiers admit letters, digits, '_', '-', '.', '/' and an optional
// trailing '?', so builtin names, bare words, and file paths all lex.

class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& expecting)
      : Error("syntax error at offset " + std::to_string(offset) +
              " expecting " + expecting),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

struct Expr {
  enum class Kind { nat, permlit, ident, call };
  Kind kind = Kind::nat;
  std::uint64_t nat = 0;
  Perm perm;                // permlit
  std::string name;         // ident and call
  std::vector<Expr> args;   // call
  std::size_t offset = 0;   // byte offset in the source, for diagnostics
};

// Parses exactly one expression covering the whole input.
Expr parse_expr(const std::string& input);

// Canonical text form; parsing it reproduces the same tree.
std::string print_expr(const Expr& e);

// Static checks before evaluation: every call names a known builtin with the
// right arity, argument shapes match where they are statically known, perm
// literals are permutations, and bare identifiers appear only where a file
// path is expected. Throws Error.
void analyze_expr(const Expr& e);

struct SylowSummary {
  std::size_t prime, order, conjugate_count, index_in_group, index_in_normalizer;
};

struct VerdictSummary {
  bool simple;
  std::optional<std::size_t> witness_order;
  std::string method;
};

struct Value {
  enum class Kind {
    nat, boolean, perm, permlist, group, subgroup, subgrouplist,
    intlist, intlistlist, sylow, verdict
  };
  Kind kind = Kind::nat;
  std::uint64_t nat = 0;
  bool boolean = false;
  Perm perm;
  std::vector<Perm> perms;
  GroupPtr group;
  std::optional<Subgroup> subgroup;
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> ints;
  std::vector<std::vector<u32>> intlists;
  std::optional<SylowSummary> sylow;
  std::optional<VerdictSummary> verdict;
};

struct EvalContext {
  // Constructions whose resulting order exceeds this are refused.
  std::size_t max_order = kOrderCap;
  // True once the user explicitly raised the limits (GT_MAX_ORDER or
  // --force-large); required for sym(7) even though 5040 fits the default cap.
  bool raised = false;

  bool allows(std::size_t order) const { return order <= max_order; }
};

Value eval_expr(const Expr& e, const EvalContext& ctx);

// Deterministic one-line rendering, documented in the README.
std::string print_value(const Value& v);

// parse + analyze + eval + print.
std::string eval_line(const std::string& input, const EvalContext& ctx);

}  // namespace gt
