#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gt/expr.hpp"
#include "gt/groupio.hpp"
#include "gt/simple.hpp"

namespace {

gt::EvalContext make_context(bool force_large) {
  gt::EvalContext ctx;
  if (const char* env = std::getenv("GT_MAX_ORDER")) {
    std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw gt::Error("GT_MAX_ORDER must be a number, got '" + s + "'");
    ctx.max_order = std::stoull(s);
    ctx.raised = true;
  }
  if (force_large) {
    ctx.max_order = static_cast<std::size_t>(-1);
    ctx.raised = true;
  }
  return ctx;
}

int run_eval(const std::string& expr, bool force_large) {
  gt::EvalContext ctx = make_context(force_large);
  std::cout << gt::eval_line(expr, ctx) << "\n";
  return 0;
}

int run_repl(bool force_large) {
  gt::EvalContext ctx = make_context(force_large);
  const bool tty = isatty(fileno(stdin)) != 0;
  std::string line;
  while (true) {
    if (tty) std::cout << "gt> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(a, b - a + 1);
    if (trimmed == ":quit") break;
    try {
      std::cout << gt::eval_line(trimmed, ctx) << "\n";
    } catch (const gt::TheoremViolation& e) {
      std::cerr << "theorem violation: " << e.what() << "\n";
      return 2;
    } catch (const gt::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

int run_classify(bool force_large) {
  make_context(force_large);  // validates GT_MAX_ORDER even though the sweep stays small
  for (const gt::SweepLine& line : gt::classify_under_60()) {
    std::cout << "n=" << line.order << " group=" << line.name
              << " witness-order=" << line.witness_order
              << " method=" << line.method << "\n";
  }
  return 0;
}

int run_fmt(const std::string& path, bool in_place, bool force_large) {
  gt::EvalContext ctx = make_context(force_large);
  gt::GroupPtr g = gt::load_group_file(path, /*force=*/true);
  if (!ctx.allows(g->order()))
    throw gt::Error("order " + std::to_string(g->order()) +
                    " exceeds the allowed maximum of " + std::to_string(ctx.max_order) +
                    " (raise GT_MAX_ORDER or pass --force-large)");
  if (in_place)
    gt::save_group_file(path, *g);
  else
    std::cout << gt::group_to_string(*g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group theory calculator"};
  app.require_subcommand(1);
  bool force_large = false;
  app.add_flag("--force-large", force_large, "lift the order cap (default 5040)");

  std::string expr;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("expr", expr, "expression to evaluate")->required();

  CLI::App* repl_cmd = app.add_subcommand("repl", "read expressions line by line");

  CLI::App* classify_cmd =
      app.add_subcommand("classify-under-60", "witness non-simplicity for the corpus");

  std::string fmt_path;
  bool in_place = false;
  CLI::App* fmt_cmd = app.add_subcommand("fmt", "normalize a group file");
  fmt_cmd->add_option("file", fmt_path, "group file to normalize")->required();
  fmt_cmd->add_flag("-i,--in-place", in_place, "rewrite the file instead of printing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval_cmd) return run_eval(expr, force_large);
    if (*repl_cmd) return run_repl(force_large);
    if (*classify_cmd) return run_classify(force_large);
    if (*fmt_cmd) return run_fmt(fmt_path, in_place, force_large);
  } catch (const gt::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const gt::Error& e) {
    std::cerr << "gt: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
