#include "gt/groupio.hpp"

#include <fstream>
#include <sstream>

namespace gt {

namespace {

std::string next_token(std::istream& is, const char* what) {
  std::string tok;
  if (!(is >> tok)) throw Error(std::string("group file ends before the ") + what);
  return tok;
}

std::size_t parse_nat(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw Error(std::string("expected a number for the ") + what + ", got '" + tok + "'");
  if (tok.size() > 9) throw Error(std::string("number too large for the ") + what);
  return std::stoull(tok);
}

void expect_keyword(std::istream& is, const char* kw) {
  std::string tok = next_token(is, kw);
  if (tok != kw)
    throw Error(std::string("expected '") + kw + "', got '" + tok + "'");
}

}  // namespace

void write_group(std::ostream& os, const Group& g) {
  const std::size_t n = g.order();
  os << "GROUPFILE 1\n";
  os << "order " << n << "\n";
  os << "elems";
  for (std::size_t i = 0; i < n; ++i) os << ' ' << g.label(static_cast<u32>(i));
  os << "\ntable\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << g.op(static_cast<u32>(i), static_cast<u32>(j));
    }
    os << '\n';
  }
}

std::string group_to_string(const Group& g) {
  std::ostringstream ss;
  write_group(ss, g);
  return ss.str();
}

GroupPtr read_group(std::istream& is, bool force) {
  std::string magic = next_token(is, "header");
  if (magic != "GROUPFILE") throw Error("not a group file: expected GROUPFILE, got '" + magic + "'");
  std::string version = next_token(is, "version");
  if (version != "1") throw Error("unsupported group file version '" + version + "'");
  expect_keyword(is, "order");
  std::size_t n = parse_nat(next_token(is, "order"), "order");
  if (n == 0) throw Error("group file declares order 0");
  expect_keyword(is, "elems");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = next_token(is, "element list");
  expect_keyword(is, "table");
  std::vector<u32> table(n * n);
  for (std::size_t k = 0; k < n * n; ++k)
    table[k] = static_cast<u32>(parse_nat(next_token(is, "table"), "table"));
  std::string extra;
  if (is >> extra) throw Error("trailing content in group file: '" + extra + "'");
  return Group::make(std::move(labels), std::move(table), force);
}

GroupPtr load_group_file(const std::string& path, bool force) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_group(f, force);
}

void save_group_file(const std::string& path, const Group& g) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  write_group(f, g);
  f.flush();
  if (!f) throw Error("write to '" + path + "' failed");
}

void write_action(std::ostream& os, const GroupAction& a, const std::string& group_ref) {
  os << "ACTIONFILE 1\n";
  os << "group " << group_ref << "\n";
  os << "domain";
  for (const std::string& d : a.domain()) os << ' ' << d;
  os << '\n';
  const std::size_t n = a.group().order();
  const std::size_t m = a.domain_size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < m; ++s) {
      if (s) os << ' ';
      os << a.act(static_cast<u32>(x), static_cast<u32>(s));
    }
    os << '\n';
  }
}

ParsedAction read_action(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("empty action file");
  {
    std::istringstream ls(line);
    std::string magic, version, extra;
    if (!(ls >> magic >> version) || magic != "ACTIONFILE" || version != "1" || (ls >> extra))
      throw Error("not an action file: bad header line '" + line + "'");
  }
  if (!std::getline(is, line)) throw Error("action file ends before the group line");
  ParsedAction out;
  {
    std::istringstream ls(line);
    std::string kw, extra;
    if (!(ls >> kw >> out.group_ref) || kw != "group" || (ls >> extra))
      throw Error("bad group line in action file: '" + line + "'");
  }
  if (!std::getline(is, line)) throw Error("action file ends before the domain line");
  {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw != "domain")
      throw Error("bad domain line in action file: '" + line + "'");
    std::string tok;
    while (ls >> tok) out.domain.push_back(tok);
  }
  if (out.domain.empty()) throw Error("action file domain is empty");
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<u32> row;
    std::string tok;
    while (ls >> tok) row.push_back(static_cast<u32>(parse_nat(tok, "action table")));
    if (row.empty()) continue;  // blank line
    if (row.size() != out.domain.size())
      throw Error("action row has " + std::to_string(row.size()) + " entries, expected " +
                  std::to_string(out.domain.size()));
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty()) throw Error("action file has no table rows");
  return out;
}

GroupAction bind_action(const ParsedAction& parsed, GroupPtr g) {
  if (parsed.rows.size() != g->order())
    throw Error("action file has " + std::to_string(parsed.rows.size()) +
                " rows but the group has order " + std::to_string(g->order()));
  std::vector<u32> flat;
  flat.reserve(parsed.rows.size() * parsed.domain.size());
  for (const auto& r : parsed.rows) flat.insert(flat.end(), r.begin(), r.end());
  std::vector<std::string> domain = parsed.domain;
  return GroupAction::make(std::move(g), std::move(domain), std::move(flat));
}

}  // namespace gt
