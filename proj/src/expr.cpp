#include "gt/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "gt/action.hpp"
#include "gt/groupio.hpp"
#include "gt/simple.hpp"
#include "gt/sylow.hpp"

namespace gt {

namespace {

struct Token {
  enum class Kind { nat, ident, lparen, rparen, lbracket, rbracket, comma, end };
  Kind kind;
  std::string text;
  std::uint64_t value = 0;
  std::size_t offset = 0;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == '/';
}

std::vector<Token> lex(const std::string& in) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < in.size()) {
    char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') { out.push_back({Token::Kind::lparen, "(", 0, i++}); continue; }
    if (c == ')') { out.push_back({Token::Kind::rparen, ")", 0, i++}); continue; }
    if (c == '[') { out.push_back({Token::Kind::lbracket, "[", 0, i++}); continue; }
    if (c == ']') { out.push_back({Token::Kind::rbracket, "]", 0, i++}); continue; }
    if (c == ',') { out.push_back({Token::Kind::comma, ",", 0, i++}); continue; }
    if (is_ident_char(c)) {
      std::size_t start = i;
      while (i < in.size() && is_ident_char(in[i])) ++i;
      bool questioned = i < in.size() && in[i] == '?';
      if (questioned) ++i;
      std::string text = in.substr(start, i - start);
      bool digits = !questioned &&
                    std::all_of(text.begin(), text.end(),
                                [](char d) { return d >= '0' && d <= '9'; });
      if (digits) {
        if (text.size() > 15)
          throw ParseError(start, "a smaller number (at most 15 digits)");
        out.push_back({Token::Kind::nat, text, std::stoull(text), start});
      } else {
        out.push_back({Token::Kind::ident, std::move(text), 0, start});
      }
      continue;
    }
    throw ParseError(i, std::string("a token, not '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", 0, in.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Expr parse() {
    Expr e = expression();
    if (peek().kind != Token::Kind::end)
      throw ParseError(peek().offset, "end of input");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  Expr expression() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::nat: {
        advance();
        Expr e;
        e.kind = Expr::Kind::nat;
        e.nat = t.value;
        e.offset = t.offset;
        return e;
      }
      case Token::Kind::lbracket:
        return permlit();
      case Token::Kind::ident: {
        advance();
        Expr e;
        e.name = t.text;
        e.offset = t.offset;
        if (peek().kind != Token::Kind::lparen) {
          e.kind = Expr::Kind::ident;
          return e;
        }
        advance();
        e.kind = Expr::Kind::call;
        if (peek().kind == Token::Kind::rparen) {
          advance();
          return e;
        }
        while (true) {
          e.args.push_back(expression());
          if (peek().kind == Token::Kind::comma) {
            advance();
            continue;
          }
          if (peek().kind == Token::Kind::rparen) {
            advance();
            return e;
          }
          throw ParseError(peek().offset, ") or ,");
        }
      }
      default:
        throw ParseError(t.offset, "an expression");
    }
  }

  Expr permlit() {
    Expr e;
    e.kind = Expr::Kind::permlit;
    e.offset = peek().offset;
    advance();  // '['
    if (peek().kind != Token::Kind::nat)
      throw ParseError(peek().offset, "a number");
    while (peek().kind == Token::Kind::nat) {
      const Token& t = advance();
      if (t.value > 0xFFFFFFFFull)
        throw ParseError(t.offset, "a permutation entry that fits 32 bits");
      e.perm.push_back(static_cast<u32>(t.value));
    }
    if (peek().kind != Token::Kind::rbracket)
      throw ParseError(peek().offset, "a number or ]");
    advance();
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Shapes for static checking. grouplike accepts both groups and subgroups;
// listlike accepts any list-valued expression.
enum class Shape {
  nat, boolean, perm, permlist, group, subgroup, subgrouplist,
  intlist, intlistlist, sylow, verdict, path, grouplike, listlike
};

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::nat: return "a number";
    case Shape::boolean: return "a boolean";
    case Shape::perm: return "a permutation";
    case Shape::permlist: return "a permutation list";
    case Shape::group: return "a group";
    case Shape::subgroup: return "a subgroup";
    case Shape::subgrouplist: return "a subgroup list";
    case Shape::intlist: return "a list of numbers";
    case Shape::intlistlist: return "a list of element sets";
    case Shape::sylow: return "a Sylow report";
    case Shape::verdict: return "a verdict";
    case Shape::path: return "a file path";
    case Shape::grouplike: return "a group or subgroup";
    case Shape::listlike: return "a list";
  }
  return "?";
}

struct BuiltinSig {
  std::vector<Shape> args;
  Shape ret;
};

const std::map<std::string, BuiltinSig>& builtins() {
  static const std::map<std::string, BuiltinSig> table = {
      {"sym", {{Shape::nat}, Shape::group}},
      {"alt", {{Shape::nat}, Shape::subgroup}},
      {"cyclic", {{Shape::nat}, Shape::group}},
      {"dihedral", {{Shape::nat}, Shape::group}},
      {"prod", {{Shape::grouplike, Shape::grouplike}, Shape::group}},
      {"quotient", {{Shape::subgroup}, Shape::group}},
      {"center", {{Shape::grouplike}, Shape::subgroup}},
      {"sylow", {{Shape::grouplike, Shape::nat}, Shape::subgroup}},
      {"sylowreport", {{Shape::grouplike, Shape::nat}, Shape::sylow}},
      {"normalizer", {{Shape::subgroup}, Shape::subgroup}},
      {"conjssub", {{Shape::subgroup}, Shape::subgrouplist}},
      {"orbit", {{Shape::grouplike, Shape::nat}, Shape::intlist}},
      {"stabilizer", {{Shape::grouplike, Shape::nat}, Shape::subgroup}},
      {"order", {{Shape::grouplike}, Shape::nat}},
      {"index", {{Shape::subgroup}, Shape::nat}},
      {"classes", {{Shape::grouplike}, Shape::intlistlist}},
      {"lens", {{Shape::listlike}, Shape::intlist}},
      {"parity", {{Shape::perm}, Shape::nat}},
      {"translist", {{Shape::perm}, Shape::permlist}},
      {"compose", {{Shape::perm, Shape::perm}, Shape::perm}},
      {"invert", {{Shape::perm}, Shape::perm}},
      {"simple?", {{Shape::grouplike}, Shape::verdict}},
      {"normalsub", {{Shape::grouplike}, Shape::subgroup}},
      {"load", {{Shape::path}, Shape::group}},
      {"save", {{Shape::grouplike, Shape::path}, Shape::boolean}},
  };
  return table;
}

bool shape_accepts(Shape slot, Shape got) {
  if (slot == got) return true;
  if (slot == Shape::grouplike) return got == Shape::group || got == Shape::subgroup;
  if (slot == Shape::listlike)
    return got == Shape::permlist || got == Shape::subgrouplist ||
           got == Shape::intlistlist || got == Shape::intlist;
  return false;
}

void analyze(const Expr& e, const Expr* parent_call, std::size_t arg_pos);

void analyze_call(const Expr& e) {
  auto it = builtins().find(e.name);
  if (it == builtins().end()) throw Error("unknown builtin '" + e.name + "'");
  const BuiltinSig& sig = it->second;
  if (e.args.size() != sig.args.size())
    throw Error(e.name + ": expected " + std::to_string(sig.args.size()) +
                (sig.args.size() == 1 ? " argument" : " arguments") + ", got " +
                std::to_string(e.args.size()));
  for (std::size_t i = 0; i < e.args.size(); ++i) analyze(e.args[i], &e, i);
}

void analyze(const Expr& e, const Expr* parent_call, std::size_t arg_pos) {
  Shape slot = parent_call ? builtins().at(parent_call->name).args[arg_pos]
                           : Shape::verdict;  // top level: anything goes
  auto complain = [&](Shape got) {
    throw Error(parent_call->name + ": argument " + std::to_string(arg_pos + 1) +
                ": expected " + shape_name(slot) + ", got " + shape_name(got));
  };
  switch (e.kind) {
    case Expr::Kind::nat:
      if (parent_call && !shape_accepts(slot, Shape::nat)) complain(Shape::nat);
      return;
    case Expr::Kind::permlit:
      if (!is_perm(e.perm))
        throw Error("not a permutation: " + perm_display(e.perm));
      if (parent_call && !shape_accepts(slot, Shape::perm)) complain(Shape::perm);
      return;
    case Expr::Kind::ident:
      if (!parent_call || slot != Shape::path)
        throw Error("unknown identifier '" + e.name + "'");
      return;
    case Expr::Kind::call: {
      analyze_call(e);
      if (parent_call) {
        Shape got = builtins().at(e.name).ret;
        if (slot == Shape::path)
          throw Error(parent_call->name + ": argument " + std::to_string(arg_pos + 1) +
                      ": expected a file path");
        if (!shape_accepts(slot, got)) complain(got);
      }
      return;
    }
  }
}

std::string brace_set(const std::vector<u32>& xs) {
  std::string s = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(xs[k]);
  }
  s += '}';
  return s;
}

struct Evaluator {
  const EvalContext& ctx;

  Value nat_value(std::uint64_t n) const {
    Value v;
    v.kind = Value::Kind::nat;
    v.nat = n;
    return v;
  }

  std::uint64_t as_nat(const std::string& name, std::size_t pos, const Value& v) const {
    if (v.kind != Value::Kind::nat)
      throw Error(name + ": argument " + std::to_string(pos + 1) + ": expected a number");
    return v.nat;
  }

  const Perm& as_perm(const std::string& name, std::size_t pos, const Value& v) const {
    if (v.kind != Value::Kind::perm)
      throw Error(name + ": argument " + std::to_string(pos + 1) +
                  ": expected a permutation");
    return v.perm;
  }

  GroupPtr as_group(const std::string& name, std::size_t pos, const Value& v) const {
    if (v.kind == Value::Kind::group) return v.group;
    if (v.kind == Value::Kind::subgroup) return v.subgroup->group_ptr();
    throw Error(name + ": argument " + std::to_string(pos + 1) +
                ": expected a group or subgroup");
  }

  const Subgroup& as_subgroup(const std::string& name, std::size_t pos, const Value& v) const {
    if (v.kind != Value::Kind::subgroup)
      throw Error(name + ": argument " + std::to_string(pos + 1) + ": expected a subgroup");
    return *v.subgroup;
  }

  void require_order(std::size_t order) const {
    if (!ctx.allows(order))
      throw Error("order " + std::to_string(order) +
                  " exceeds the allowed maximum of " + std::to_string(ctx.max_order) +
                  " (raise GT_MAX_ORDER or pass --force-large)");
  }

  std::size_t sym_gate(const std::string& name, std::uint64_t n) const {
    if (n > 7) throw Error(name + "(" + std::to_string(n) + ") is not buildable; 8! rows exceed any cap");
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    if (n == 7 && !ctx.raised)
      throw Error("sym(7) has order 5040; raise GT_MAX_ORDER or pass --force-large");
    require_order(fact);
    return fact;
  }

  Value subgroup_value(Subgroup s) const {
    Value v;
    v.kind = Value::Kind::subgroup;
    v.subgroup = std::move(s);
    return v;
  }

  Value group_value(GroupPtr g) const {
    Value v;
    v.kind = Value::Kind::group;
    v.group = std::move(g);
    return v;
  }

  Value eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::nat:
        return nat_value(e.nat);
      case Expr::Kind::permlit: {
        if (!is_perm(e.perm)) throw Error("not a permutation: " + perm_display(e.perm));
        Value v;
        v.kind = Value::Kind::perm;
        v.perm = e.perm;
        return v;
      }
      case Expr::Kind::ident:
        throw Error("unknown identifier '" + e.name + "'");
      case Expr::Kind::call:
        return call(e);
    }
    throw Error("unreachable expression kind");
  }

  Value call(const Expr& e) const {
    const std::string& f = e.name;

    // load/save take their path argument unevaluated
    if (f == "load") {
      const Expr& a = e.args.at(0);
      if (a.kind != Expr::Kind::ident) throw Error("load: expected a file path");
      GroupPtr g = load_group_file(a.name, /*force=*/true);
      require_order(g->order());
      return group_value(std::move(g));
    }
    if (f == "save") {
      Value gv = eval(e.args.at(0));
      GroupPtr g = as_group(f, 0, gv);
      const Expr& a = e.args.at(1);
      if (a.kind != Expr::Kind::ident) throw Error("save: expected a file path");
      save_group_file(a.name, *g);
      Value v;
      v.kind = Value::Kind::boolean;
      v.boolean = true;
      return v;
    }

    std::vector<Value> args;
    args.reserve(e.args.size());
    for (const Expr& a : e.args) args.push_back(eval(a));

    if (f == "sym") {
      std::uint64_t n = as_nat(f, 0, args[0]);
      if (n == 0) throw Error("sym: n must be at least 1");
      sym_gate(f, n);
      return group_value(sym_group(n, n == 7));
    }
    if (f == "alt") {
      std::uint64_t n = as_nat(f, 0, args[0]);
      if (n == 0) throw Error("alt: n must be at least 1");
      sym_gate(f, n);
      return subgroup_value(alt_group(n, n == 7));
    }
    if (f == "cyclic") {
      std::uint64_t n = as_nat(f, 0, args[0]);
      require_order(n);
      return group_value(cyclic_group(n, /*force=*/true));
    }
    if (f == "dihedral") {
      std::uint64_t n = as_nat(f, 0, args[0]);
      require_order(2 * n);
      return group_value(dihedral_group(n, /*force=*/true));
    }
    if (f == "prod") {
      GroupPtr a = as_group(f, 0, args[0]);
      GroupPtr b = as_group(f, 1, args[1]);
      require_order(a->order() * b->order());
      return group_value(direct_product(*a, *b, /*force=*/true));
    }
    if (f == "quotient") return group_value(quotient_group(as_subgroup(f, 0, args[0])));
    if (f == "center") return subgroup_value(center(as_group(f, 0, args[0])));
    if (f == "sylow") {
      GroupPtr g = as_group(f, 0, args[0]);
      return subgroup_value(sylow_subgroup(std::move(g), as_nat(f, 1, args[1])));
    }
    if (f == "sylowreport") {
      GroupPtr g = as_group(f, 0, args[0]);
      SylowReport r = sylow_report(std::move(g), as_nat(f, 1, args[1]));
      Value v;
      v.kind = Value::Kind::sylow;
      v.sylow = SylowSummary{r.prime, r.sylow.order(), r.conjugate_count,
                             r.index_in_group, r.index_in_normalizer};
      return v;
    }
    if (f == "normalizer") return subgroup_value(normalizer(as_subgroup(f, 0, args[0])));
    if (f == "conjssub") {
      Value v;
      v.kind = Value::Kind::subgrouplist;
      v.subgroups = subgroup_conjugates(as_subgroup(f, 0, args[0]));
      return v;
    }
    if (f == "orbit" || f == "stabilizer") {
      GroupPtr g = as_group(f, 0, args[0]);
      std::uint64_t k = as_nat(f, 1, args[1]);
      if (k >= g->order())
        throw Error(f + ": element index " + std::to_string(k) +
                    " is out of range for order " + std::to_string(g->order()));
      if (f == "orbit") {
        Value v;
        v.kind = Value::Kind::intlist;
        for (u32 x : conjugacy_class_of(static_cast<u32>(k), *g)) v.ints.push_back(x);
        return v;
      }
      std::vector<u32> members;
      for (u32 x = 0; x < g->order(); ++x)
        if (g->op(x, static_cast<u32>(k)) == g->op(static_cast<u32>(k), x))
          members.push_back(x);
      return subgroup_value(subgroup_from_elements(std::move(members), std::move(g)));
    }
    if (f == "order") {
      if (args[0].kind == Value::Kind::subgroup) return nat_value(args[0].subgroup->order());
      return nat_value(as_group(f, 0, args[0])->order());
    }
    if (f == "index") return nat_value(as_subgroup(f, 0, args[0]).index_in_parent());
    if (f == "classes") {
      GroupPtr g = as_group(f, 0, args[0]);
      Value v;
      v.kind = Value::Kind::intlistlist;
      v.intlists = conjugacy_classes(*g);
      return v;
    }
    if (f == "lens") {
      Value v;
      v.kind = Value::Kind::intlist;
      const Value& a = args[0];
      if (a.kind == Value::Kind::intlistlist)
        for (const auto& c : a.intlists) v.ints.push_back(c.size());
      else if (a.kind == Value::Kind::subgrouplist)
        for (const auto& s : a.subgroups) v.ints.push_back(s.order());
      else if (a.kind == Value::Kind::permlist)
        for (const auto& p : a.perms) v.ints.push_back(p.size());
      else if (a.kind == Value::Kind::intlist)
        v.ints.push_back(a.ints.size());
      else
        throw Error("lens: argument 1: expected a list");
      return v;
    }
    if (f == "parity") return nat_value(parity(as_perm(f, 0, args[0])));
    if (f == "translist") {
      Value v;
      v.kind = Value::Kind::permlist;
      v.perms = transposition_factors(as_perm(f, 0, args[0]));
      return v;
    }
    if (f == "compose") {
      const Perm& x = as_perm(f, 0, args[0]);
      const Perm& y = as_perm(f, 1, args[1]);
      if (x.size() != y.size())
        throw Error("compose: argument 2: length " + std::to_string(y.size()) +
                    " does not match length " + std::to_string(x.size()));
      Value v;
      v.kind = Value::Kind::perm;
      v.perm = compose_perm(x, y);
      return v;
    }
    if (f == "invert") {
      Value v;
      v.kind = Value::Kind::perm;
      v.perm = inverse_perm(as_perm(f, 0, args[0]));
      return v;
    }
    if (f == "simple?") {
      SimplicityVerdict sv = check_simple(as_group(f, 0, args[0]));
      Value v;
      v.kind = Value::Kind::verdict;
      v.verdict = VerdictSummary{
          sv.simple,
          sv.witness ? std::optional<std::size_t>(sv.witness->order()) : std::nullopt,
          sv.method};
      return v;
    }
    if (f == "normalsub")
      return subgroup_value(normal_subgroup_witness(as_group(f, 0, args[0])).subgroup);

    throw Error("unknown builtin '" + f + "'");
  }
};

}  // namespace

Expr parse_expr(const std::string& input) { return Parser(lex(input)).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::nat:
      return std::to_string(e.nat);
    case Expr::Kind::permlit:
      return perm_display(e.perm);
    case Expr::Kind::ident:
      return e.name;
    case Expr::Kind::call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += print_expr(e.args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

void analyze_expr(const Expr& e) { analyze(e, nullptr, 0); }

Value eval_expr(const Expr& e, const EvalContext& ctx) {
  return Evaluator{ctx}.eval(e);
}

std::string print_value(const Value& v) {
  switch (v.kind) {
    case Value::Kind::nat:
      return std::to_string(v.nat);
    case Value::Kind::boolean:
      return v.boolean ? "true" : "false";
    case Value::Kind::perm:
      return perm_display(v.perm);
    case Value::Kind::permlist: {
      std::string s = "(";
      for (std::size_t i = 0; i < v.perms.size(); ++i) {
        if (i) s += ' ';
        s += perm_display(v.perms[i]);
      }
      return s + ")";
    }
    case Value::Kind::group:
      return "group order=" + std::to_string(v.group->order());
    case Value::Kind::subgroup:
      return "subgroup order=" + std::to_string(v.subgroup->order()) +
             " index=" + std::to_string(v.subgroup->index_in_parent()) +
             " elems=" + brace_set(v.subgroup->indices());
    case Value::Kind::subgrouplist: {
      std::string s = "(";
      for (std::size_t i = 0; i < v.subgroups.size(); ++i) {
        if (i) s += ' ';
        s += brace_set(v.subgroups[i].indices());
      }
      return s + ")";
    }
    case Value::Kind::intlist: {
      std::string s = "(";
      for (std::size_t i = 0; i < v.ints.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v.ints[i]);
      }
      return s + ")";
    }
    case Value::Kind::intlistlist: {
      std::string s = "(";
      for (std::size_t i = 0; i < v.intlists.size(); ++i) {
        if (i) s += ' ';
        s += brace_set(v.intlists[i]);
      }
      return s + ")";
    }
    case Value::Kind::sylow:
      return "p=" + std::to_string(v.sylow->prime) +
             " order=" + std::to_string(v.sylow->order) +
             " np=" + std::to_string(v.sylow->conjugate_count) +
             " index=" + std::to_string(v.sylow->index_in_group) +
             " nindex=" + std::to_string(v.sylow->index_in_normalizer);
    case Value::Kind::verdict: {
      if (v.verdict->simple) return "simple";
      std::string s = "not-simple";
      if (v.verdict->witness_order)
        s += " witness-order=" + std::to_string(*v.verdict->witness_order);
      s += " method=" + v.verdict->method;
      return s;
    }
  }
  return "?";
}

std::string eval_line(const std::string& input, const EvalContext& ctx) {
  Expr e = parse_expr(input);
  analyze_expr(e);
  return print_value(eval_expr(e, ctx));
}

}  // namespace gt
