#pragma once

// Command-line front end.  Kept in a header so the golden tests can drive
// run_cli() in-process; tools/ru4_main.cpp is a thin wrapper.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ru4/cli_impl.hpp"

namespace ru4 {

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact algebra of cyclic codes of odd length over Z4+uZ4"};
  app.name("ru4");

  cli::Options opt;
  if (const char* env = std::getenv("RU4_MAX_ENUM")) {
    try {
      opt.max_enum = std::stoull(env);
    } catch (...) {
      err << "RU4_MAX_ENUM is not a number\n";
      return 2;
    }
  }

  std::function<void(std::ostream&)> action;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.json, "emit JSON (sorted keys, stable bytes)");
    cmd->add_flag("--paper-style", opt.paper_style, "print 3 as -1 in polynomial output");
  };

  // ---- factor ----
  auto* factor_cmd = app.add_subcommand("factor", "factor x^n-1 into basic irreducibles");
  factor_cmd->add_option("-n", opt.n, "odd length")->required();
  factor_cmd->add_option("--ring", opt.ring, "f2 | z4 | r")->default_val("z4");
  add_common(factor_cmd);
  factor_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_factor(opt, o); }; });

  // ---- lift ----
  auto* lift_cmd = app.add_subcommand("lift", "Hensel lift of an irreducible F2 divisor of x^n-1");
  lift_cmd->add_option("-g", opt.g_text, "F2 polynomial, e.g. \"x^3+x+1\"")->required();
  lift_cmd->add_option("--ring", opt.ring, "z4 | r")->default_val("z4");
  add_common(lift_cmd);
  lift_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_lift(opt, o); }; });

  // ---- galois ----
  auto* galois_cmd = app.add_subcommand("galois", "GR(R,r) power table of xi");
  galois_cmd->add_option("--galois-r", opt.galois_r, "extension degree r")->required();
  galois_cmd->add_option("--modulus", opt.modulus_text, "basic primitive modulus over R");
  add_common(galois_cmd);
  galois_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_galois(opt, o); }; });

  // ---- roots ----
  auto* roots_cmd = app.add_subcommand("roots", "n-th roots of unity in GR(R,r)");
  roots_cmd->add_option("-n", opt.n, "odd length")->required();
  roots_cmd->add_option("--galois-r", opt.galois_r, "extension degree (default ord_n(2))");
  roots_cmd->add_option("--modulus", opt.modulus_text, "basic primitive modulus over R");
  add_common(roots_cmd);
  roots_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_roots(opt, o); }; });

  // ---- minpoly ----
  auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial of xi^i over R");
  minpoly_cmd->add_option("-n", opt.n, "odd length (root order)")->required();
  minpoly_cmd->add_option("-i", opt.exponent, "exponent i")->required();
  minpoly_cmd->add_option("--galois-r", opt.galois_r, "extension degree (default ord_n(2))");
  minpoly_cmd->add_option("--modulus", opt.modulus_text, "basic primitive modulus over R");
  add_common(minpoly_cmd);
  minpoly_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_minpoly(opt, o); }; });

  // ---- poly ----
  auto* poly_cmd = app.add_subcommand("poly", "parse and reprint a polynomial");
  poly_cmd->add_option("-g", opt.g_text, "polynomial text")->required();
  poly_cmd->add_option("--ring", opt.ring, "f2 | z4 | r")->default_val("r");
  add_common(poly_cmd);
  poly_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_poly(opt, o); }; });

  // ---- code ----
  auto* code_cmd = app.add_subcommand("code", "cyclic codes over R");
  code_cmd->require_subcommand(1);
  auto add_code_opts = [&](CLI::App* cmd, bool need_g) {
    cmd->add_option("-n", opt.n, "odd length")->required();
    auto* g = cmd->add_option("-g", opt.g_text, "generator g over Z4/R");
    if (need_g) g->required();
    cmd->add_option("-p", opt.p_text, "u-part p of the first generator");
    cmd->add_option("-a", opt.a_text, "torsion generator a (second generator ua)");
    cmd->add_option("--max-enum", opt.max_enum, "max codewords materialized (default 2^24)");
    add_common(cmd);
  };

  auto* analyze_cmd = code_cmd->add_subcommand("analyze", "canonical form, size, freeness, dH");
  add_code_opts(analyze_cmd, true);
  analyze_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_analyze(opt, o); }; });

  auto* dist_cmd = code_cmd->add_subcommand("distance", "exact minimum distance");
  add_code_opts(dist_cmd, true);
  dist_cmd->add_option("--metric", opt.metric, "hamming | lee")->default_val("hamming");
  dist_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_distance(opt, o); }; });

  auto* dual_cmd = code_cmd->add_subcommand("dual", "dual code descriptor");
  add_code_opts(dual_cmd, true);
  dual_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_dual(opt, o); }; });

  auto* idem_cmd = code_cmd->add_subcommand("idempotent", "idempotent generator of <g>, g | x^n-1");
  add_code_opts(idem_cmd, true);
  idem_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_idempotent(opt, o); }; });

  auto* gray_cmd = code_cmd->add_subcommand("gray", "Gray image summary");
  add_code_opts(gray_cmd, true);
  gray_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_gray(opt, o); }; });

  auto* enum_cmd = code_cmd->add_subcommand("enumerate", "all cyclic codes of length n");
  enum_cmd->add_option("-n", opt.n, "odd length")->required();
  enum_cmd->add_flag("--count-only", opt.count_only, "print only the count 7^m");
  enum_cmd->add_option("--max-enum", opt.max_enum, "max codewords materialized");
  add_common(enum_cmd);
  enum_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_enumerate(opt, o); }; });

  auto* bch_cmd = code_cmd->add_subcommand("bch", "BCH-style bound from consecutive roots");
  add_code_opts(bch_cmd, true);
  bch_cmd->add_option("--galois-r", opt.galois_r, "extension degree (default ord_n(2))");
  bch_cmd->add_option("--modulus", opt.modulus_text, "basic primitive modulus over R");
  bch_cmd->callback([&] { action = [&](std::ostream& o) { cli::cmd_bch(opt, o); }; });

  app.require_subcommand(1);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string prog = "ru4";
  argv.push_back(prog.data());
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    action(out);
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ru4
