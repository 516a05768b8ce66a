#include "walkmat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>

#include "walkmat/chebyshev.hpp"
#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/report.hpp"
#include "walkmat/verify.hpp"
#include "walkmat/walk.hpp"

namespace walkmat::cli {

namespace {

using nlohmann::json;

// Failure of a user-supplied input; mapped to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<std::size_t> n;
  std::size_t from = 4;
  std::size_t to = 12;
  std::string input;
  std::string format;
  std::string partition;
  bool json = false;
  bool hat = false;
  bool mod2 = false;
  bool main_count = false;
  bool timing = false;
  std::uint64_t seed = 42;
  std::size_t count = 1000;
  double tol = 1e-8;
  unsigned threads = 0;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

json matrix_json(const BigMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (const auto& x : m.row(i)) r.push_back(x.get_str());
    rows.push_back(std::move(r));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Graph load_graph(const Config& c, std::istream& in) {
  if (c.n) return build_dynkin_d(*c.n);
  if (c.input.empty()) throw InputError("either --n or --input is required");
  const std::string text = slurp(c.input, in);
  if (c.format == "graph6") return parse_graph6(text);
  if (c.format == "" || c.format == "edges") return parse_edge_list(text);
  throw InputError("graph input format must be 'edges' or 'graph6'");
}

BigMatrix load_matrix(const Config& c, std::istream& in) {
  if (c.input.empty()) throw InputError("--input is required");
  return parse_matrix(slurp(c.input, in));
}

int cmd_gen_dn(const Config& c, std::ostream& out) {
  if (!c.n) throw InputError("--n is required");
  const Graph g = build_dynkin_d(*c.n);
  const std::string fmt = c.format.empty() ? "edges" : c.format;
  if (fmt == "edges")
    out << emit_edge_list(g);
  else if (fmt == "graph6")
    out << emit_graph6(g) << '\n';
  else if (fmt == "matrix")
    write_matrix(out, adjacency_matrix(g));
  else
    throw InputError("--format must be edges, graph6 or matrix");
  return kExitOk;
}

int cmd_walk(const Config& c, std::istream& in, std::ostream& out) {
  if (c.main_count) {
    const Graph g = load_graph(c, in);
    const std::size_t exact = main_eigenvalue_count_exact(g);
    const std::size_t numeric = main_eigenvalue_count_numeric(g, c.tol);
    if (c.json)
      out << json{{"n", g.order()}, {"exact", exact}, {"numeric", numeric}, {"agree", exact == numeric}}.dump()
          << '\n';
    else
      out << "main eigenvalues: exact " << exact << ", numeric " << numeric << '\n';
    return exact == numeric ? kExitOk : kExitCheckFailed;
  }
  BigMatrix w;
  if (!c.n && c.format == "matrix") {
    w = walk_matrix(load_matrix(c, in));
  } else {
    w = walk_matrix(adjacency_matrix(load_graph(c, in)));
  }
  if (c.hat) w = truncate_walk(w);
  if (c.json)
    out << matrix_json(w).dump() << '\n';
  else
    write_matrix(out, w);
  return kExitOk;
}

int cmd_snf(const Config& c, std::istream& in, std::ostream& out) {
  const BigMatrix m = load_matrix(c, in);
  const SnfResult r = smith_normal_form(m);
  const bool ok = snf_certificate_holds(m, r);
  if (c.json) {
    out << json{{"diag", to_decimal(r.diag)},
                {"certificate", ok},
                {"left", matrix_json(r.left)},
                {"right", matrix_json(r.right)}}
               .dump()
        << '\n';
  } else {
    for (std::size_t i = 0; i < r.diag.size(); ++i) out << (i ? " " : "") << r.diag[i].get_str();
    out << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_rank(const Config& c, std::istream& in, std::ostream& out) {
  const BigMatrix m = load_matrix(c, in);
  const std::size_t r = c.mod2 ? rank_mod2(m) : rank_rational(m);
  if (c.json)
    out << json{{"rank", r}, {"field", c.mod2 ? "GF(2)" : "Q"}}.dump() << '\n';
  else
    out << r << '\n';
  return kExitOk;
}

int cmd_divisor(const Config& c, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(c, in);
  Partition p = c.partition.empty()
                    ? (c.n ? dynkin_partition(*c.n) : Partition::discrete(g.order()))
                    : parse_partition(g.order(), c.partition);
  const DivisorData d = divisor_of_partition(g, p);
  if (c.json)
    out << json{{"characteristic", matrix_json(d.characteristic)}, {"divisor", matrix_json(d.divisor)}}.dump()
        << '\n';
  else
    write_matrix(out, d.divisor);
  return kExitOk;
}

int cmd_cheb(const Config& c, std::ostream& out) {
  if (c.n) {
    const int n = static_cast<int>(*c.n);
    const IntPolynomial t = chebyshev_t(n);
    const IntPolynomial u = chebyshev_u(n);
    json j{{"n", n}, {"T", t.to_string()}, {"U", u.to_string()}, {"disc_T", nullptr},
           {"predicted_disc_T", nullptr}, {"pass", true}};
    bool ok = true;
    if (n >= 1) {
      const BigInt d = discriminant(t);
      BigInt predicted, nn;
      mpz_ui_pow_ui(predicted.get_mpz_t(), 2, static_cast<unsigned long>((n - 1) * (n - 1)));
      mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
      predicted *= nn;
      ok = d == predicted;
      j["disc_T"] = d.get_str();
      j["predicted_disc_T"] = predicted.get_str();
      j["pass"] = ok;
    }
    if (c.json) {
      out << j.dump(2) << '\n';
    } else {
      out << "T_" << n << " = " << t.to_string() << '\n' << "U_" << n << " = " << u.to_string() << '\n';
      if (n >= 1)
        out << "disc T_" << n << " = " << j["disc_T"].get<std::string>() << " (expected "
            << j["predicted_disc_T"].get<std::string>() << ") " << (ok ? "ok" : "MISMATCH") << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (c.from < 1 || c.from > c.to) throw InputError("cheb range must satisfy 1 <= from <= to");
  std::vector<IdentityCheck> checks;
  for (std::size_t mm = c.from; mm <= c.to; ++mm) {
    const int m = static_cast<int>(mm);
    checks.push_back(check_root_difference_product(m));
    for (const auto& x : check_cos_products(m)) checks.push_back(x);
    if (m >= 2) checks.push_back(check_sin_product(m));
    checks.push_back(check_cos_sum(2.0, -1.0, std::numbers::pi / 8.0, m));
    checks.push_back(check_cos_sum(1.0, 0.0, std::numbers::pi / 3.0, m));
  }
  bool ok = true;
  json a = json::array();
  for (const auto& x : checks) {
    ok = ok && x.pass;
    a.push_back(to_json(x));
  }
  if (c.json) {
    out << a.dump(2) << '\n';
  } else {
    for (const auto& x : checks) {
      std::ostringstream res;
      res << std::scientific << std::setprecision(2) << x.residual;
      out << std::left << std::setw(26) << x.name << std::right << std::setw(4) << x.param << "  "
          << std::setw(9) << res.str() << "  " << (x.pass ? "pass" : "FAIL") << '\n';
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Config& c, std::ostream& out) {
  VerifyOptions opts;
  opts.threads = c.threads;
  const auto reports = verify_dynkin_range(c.from, c.to, opts);
  if (c.json)
    out << to_json(reports, c.timing).dump(2) << '\n';
  else
    out << format_table(reports, c.timing);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_corpus(const Config& c, std::ostream& out) {
  const std::size_t n_max = c.n.value_or(16);
  const auto res = verify_rank2_corpus(c.count, n_max, c.seed, c.to);
  if (c.json) {
    out << to_json(res).dump(2) << '\n';
  } else {
    out << "random graphs checked: " << res.random_checked << '\n'
        << "D_n graphs checked:    " << res.dynkin_checked << '\n'
        << "violations:            " << res.violations.size() << '\n';
    for (const auto& v : res.violations)
      out << "  " << v.graph6 << " n=" << v.n << " rank2=" << v.rank2 << " bound=" << v.bound << '\n';
  }
  return res.violations.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{
      "walkmat: exact walk matrices, Smith normal forms and main-eigenvalue counts.\n"
      "Big integers are written as decimal strings in JSON output."};
  app.name("walkmat");
  app.require_subcommand(1, 1);

  auto add_n = [&](CLI::App* s, const char* help) { return s->add_option("--n", c.n, help); };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", c.input, "input file, or - for standard input");
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", c.json, "emit JSON"); };

  auto* gen = app.add_subcommand("gen-dn", "emit the graph D_n");
  add_n(gen, "order n >= 4")->required();
  gen->add_option("--format", c.format, "edges | graph6 | matrix")
      ->check(CLI::IsMember({"edges", "graph6", "matrix"}));

  auto* walk = app.add_subcommand("walk", "walk matrix of D_n, a graph, or a square matrix");
  add_n(walk, "use D_n");
  add_input(walk);
  walk->add_option("--format", c.format, "input format: edges | graph6 | matrix")
      ->check(CLI::IsMember({"edges", "graph6", "matrix"}));
  walk->add_flag("--hat", c.hat, "drop the first row and last column");
  walk->add_flag("--main", c.main_count, "count main eigenvalues (exact and numeric)");
  walk->add_option("--tol", c.tol, "numeric eigenvalue grouping tolerance")->check(CLI::PositiveNumber);
  add_json(walk);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  add_input(snf);
  add_json(snf);

  auto* rank = app.add_subcommand("rank", "rank over Q (or GF(2) with --mod2)");
  add_input(rank);
  rank->add_flag("--mod2", c.mod2, "rank over GF(2)");
  add_json(rank);

  auto* divisor = app.add_subcommand("divisor", "divisor matrix of an equitable partition");
  add_n(divisor, "use D_n with the partition {1,2},{3},...,{n}");
  add_input(divisor);
  divisor->add_option("--format", c.format, "input format: edges | graph6")
      ->check(CLI::IsMember({"edges", "graph6"}));
  divisor->add_option("--partition", c.partition, "cells separated by ';', e.g. \"1,4;2,3\"");
  add_json(divisor);

  auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials and trigonometric identity checks");
  add_n(cheb, "print T_n, U_n and check disc T_n");
  cheb->add_option("--from", c.from, "first m of the identity checks");
  cheb->add_option("--to", c.to, "last m of the identity checks");
  add_json(cheb);

  auto* verify = app.add_subcommand("verify", "run every D_n check over a range of n");
  verify->add_option("--from", c.from, "first n (>= 4)");
  verify->add_option("--to", c.to, "last n");
  verify->add_option("--threads", c.threads, "worker threads (0: all cores)");
  verify->add_flag("--timing", c.timing, "include per-n wall time");
  add_json(verify);

  auto* corpus = app.add_subcommand("corpus", "GF(2) walk-rank bound on a seeded random corpus");
  corpus->add_option("--count", c.count, "number of random graphs")->check(CLI::PositiveNumber);
  add_n(corpus, "maximum order of the random graphs (default 16)");
  corpus->add_option("--seed", c.seed, "LCG seed");
  corpus->add_option("--to", c.to, "also check D_4..D_to (default: the --n value)");
  add_json(corpus);

  bool corpus_to_given = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    corpus_to_given = corpus->count("--to") > 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen_dn(c, out);
    if (*walk) return cmd_walk(c, in, out);
    if (*snf) return cmd_snf(c, in, out);
    if (*rank) return cmd_rank(c, in, out);
    if (*divisor) return cmd_divisor(c, in, out);
    if (*cheb) return cmd_cheb(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*corpus) {
      if (!corpus_to_given) c.to = 0;
      return cmd_corpus(c, out);
    }
  } catch (const InputError& e) {
    err << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "walkmat: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotEquitable& e) {
    err << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "walkmat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "walkmat: error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace walkmat::cli
