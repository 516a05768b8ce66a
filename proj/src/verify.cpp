#include "walkmat/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);

double angle(std::size_t n, std::size_t k) {
  return static_cast<double>(2 * k - 1) * kPi / (2.0 * static_cast<double>(n - 1));
}

void require_dynkin_order(std::size_t n) {
  if (n < 4) throw InvalidParameter("D_n checks require n >= 4, got " + std::to_string(n));
}

struct LogDet {
  double log_abs = 0.0;
  int sign = 0;
};

LogDet log_det(const Eigen::MatrixXd& m) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::MatrixXd& f = lu.matrixLU();
  LogDet d{0.0, static_cast<int>(lu.permutationP().determinant())};
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const double u = f(i, i);
    if (u == 0.0) return {-INFINITY, 0};
    if (u < 0) d.sign = -d.sign;
    d.log_abs += std::log(std::abs(u));
  }
  return d;
}

Eigen::MatrixXd to_double(const BigMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

BigInt pow2(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

}  // namespace

EigData closed_form_eigdata(std::size_t n) {
  require_dynkin_order(n);
  const auto m = static_cast<Eigen::Index>(n - 1);
  EigData d;
  d.n = n;
  d.lambdas.resize(m);
  d.xis.resize(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const double th = angle(n, static_cast<std::size_t>(k) + 1);
    d.lambdas(k) = 2.0 * std::cos(th);
    for (Eigen::Index i = 0; i < m; ++i) d.xis(i, k) = std::cos(static_cast<double>(i) * th);
  }
  return d;
}

double verify_eig_residuals(std::size_t n) {
  const EigData d = closed_form_eigdata(n);
  const DivisorData div = divisor_of_partition(build_dynkin_d(n), dynkin_partition(n));
  const Eigen::MatrixXd bt = to_double(div.divisor).transpose();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < d.xis.cols(); ++k) {
    const Eigen::VectorXd r = bt * d.xis.col(k) - d.lambdas(k) * d.xis.col(k);
    worst = std::max(worst, r.lpNorm<Eigen::Infinity>());
  }
  return worst;
}

FordetCheck verify_fordet(std::size_t n) {
  const EigData d = closed_form_eigdata(n);
  const Eigen::MatrixXd& m = d.xis;
  const double half = static_cast<double>(n - 1) / 2.0;

  Eigen::MatrixXd expected = Eigen::MatrixXd::Identity(m.rows(), m.cols()) * half;
  expected(0, 0) = static_cast<double>(n - 1);
  FordetCheck c;
  c.gram_residual = (m * m.transpose() - expected).cwiseAbs().maxCoeff();

  const LogDet ld = log_det(m);
  c.log_abs_det = ld.log_abs;
  c.det_sign = ld.sign;
  const double closed = -0.5 * static_cast<double>(n - 2) * kLn2 +
                        0.5 * static_cast<double>(n - 1) * std::log(static_cast<double>(n - 1));
  c.logdet_residual = std::abs(ld.log_abs - closed);
  c.pass = c.gram_residual < kGramTolerance && c.logdet_residual < kLogTolerance;
  return c;
}

EtxiCheck verify_etxi(std::size_t n) {
  const EigData d = closed_form_eigdata(n);
  const double nd = static_cast<double>(n);
  EtxiCheck c;
  c.sums.resize(n - 1);
  double log_sum = 0.0;
  int sign = 1;
  for (std::size_t j = 1; j <= n - 1; ++j) {
    const double s = d.xis.col(static_cast<Eigen::Index>(j - 1)).sum();
    c.sums[j - 1] = s;
    const double a = angle(n, j);
    const double closed =
        std::sin(0.5 * (nd - 1) * a) * std::cos(0.5 * (nd - 2) * a) / std::sin(0.5 * a);
    c.closed_form_residual = std::max(c.closed_form_residual, std::abs(s - closed));
    if (std::abs(s) < kVanishThreshold) {
      c.vanishing.push_back(j);
      sign = 0;
    } else {
      log_sum += std::log(std::abs(s));
      if (s < 0) sign = -sign;
    }
  }
  c.product_sign = sign;

  const bool closed_ok = c.closed_form_residual < kGramTolerance;
  if (n % 4 != 0) {
    const double exponent = 1.0 - static_cast<double>((n + 1) / 2);
    c.case_exponent = n % 4 == 2 ? 1.0 - nd / 2.0 : 0.5 - nd / 2.0;
    c.log_residual = std::abs(log_sum - exponent * kLn2);
    c.pass = closed_ok && c.vanishing.empty() && *c.log_residual < kLogTolerance &&
             std::abs(*c.case_exponent - exponent) < 1e-12;
  } else {
    c.pass = closed_ok && c.vanishing.size() == 1 && c.vanishing.front() == n / 2;
  }
  return c;
}

RelwaCheck verify_relwa(const BigMatrix& m, double tol) {
  if (!m.square() || m.rows() == 0) throw DimensionError("verify_relwa: matrix must be square");
  const auto size = static_cast<Eigen::Index>(m.rows());
  const Eigen::MatrixXd mt = to_double(m).transpose();
  Eigen::EigenSolver<Eigen::MatrixXd> es(mt);
  if (es.info() != Eigen::Success) throw NumericFailure("verify_relwa: eigensolver failed");

  Eigen::VectorXd lambdas(size);
  Eigen::MatrixXd xis(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    const auto lam = es.eigenvalues()(j);
    if (std::abs(lam.imag()) > 1e-8 * std::max(1.0, std::abs(lam)))
      throw NotApplicable("verify_relwa: M has a non-real eigenvalue");
    lambdas(j) = lam.real();
    Eigen::VectorXd v = es.eigenvectors().col(j).real();
    xis.col(j) = v / v.norm();
  }
  std::vector<double> sorted(lambdas.data(), lambdas.data() + size);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 1; j < sorted.size(); ++j)
    if (sorted[j] - sorted[j - 1] < kRelwaGap)
      throw NotApplicable("verify_relwa: eigenvalues are not pairwise distinct");

  const BigMatrix w = walk_matrix(m);
  RelwaCheck c;
  c.det_exact = det_bareiss(w);
  c.rank_exact = rank_rational(w);

  double log_abs = 0.0;
  int sign = 1;
  for (Eigen::Index j = 0; j < size; ++j)
    for (Eigen::Index k = 0; k < j; ++k) {
      const double diff = lambdas(j) - lambdas(k);
      if (diff < 0) sign = -sign;
      log_abs += std::log(std::abs(diff));
    }
  bool vanished = false;
  for (Eigen::Index j = 0; j < size; ++j) {
    const double s = xis.col(j).sum();
    if (std::abs(s) < kRelwaProjectionThreshold) {
      vanished = true;
      continue;
    }
    ++c.numeric_nonvanishing;
    if (s < 0) sign = -sign;
    log_abs += std::log(std::abs(s));
  }
  const LogDet dx = log_det(xis);
  if (dx.sign == 0) throw NotApplicable("verify_relwa: eigenvectors are dependent");
  sign *= dx.sign;
  log_abs -= dx.log_abs;

  if (vanished) {
    c.det_numeric = 0.0;
    c.det_relation = sgn(c.det_exact) == 0;
  } else {
    c.det_numeric = sign * std::exp(log_abs);
    if (sgn(c.det_exact) != 0) {
      long exp2 = 0;
      const double mant = mpz_get_d_2exp(&exp2, c.det_exact.get_mpz_t());
      const double exact_log = std::log(std::abs(mant)) + static_cast<double>(exp2) * kLn2;
      c.log_residual = std::abs(log_abs - exact_log);
      c.det_relation = *c.log_residual < tol && sign == sgn(c.det_exact);
    }
  }
  c.rank_relation = c.numeric_nonvanishing == c.rank_exact;
  c.pass = c.det_relation && c.rank_relation;
  return c;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

VerifyReport verify_dynkin(std::size_t n, const VerifyOptions& opts) {
  require_dynkin_order(n);
  const auto started = std::chrono::steady_clock::now();
  VerifyReport r;
  r.n = n;
  const bool four_divides = n % 4 == 0;

  const Graph g = build_dynkin_d(n);
  const WalkPair wp = walk_pair(g);
  const DivisorData div = divisor_of_partition(g, dynkin_partition(n));
  const BigMatrix walk_b = walk_matrix(div.divisor);

  r.checks["hat_is_quotient_walk"] = wp.hat == walk_b;
  r.checks["twin_rows"] = std::equal(wp.walk.row(0).begin(), wp.walk.row(0).end(),
                                     wp.walk.row(1).begin());

  r.det_hat = det_bareiss(wp.hat);
  r.det_hat_sign = sgn(r.det_hat);
  r.rank_hat = rank_rational(wp.hat);
  r.rank_walk = rank_rational(wp.walk);
  r.predicted_rank_walk = four_divides ? n - 2 : n - 1;
  r.predicted_rank_hat = four_divides ? n - 2 : n - 1;
  if (four_divides) {
    r.checks["hat_det"] = sgn(r.det_hat) == 0;
  } else {
    r.predicted_det_magnitude = pow2(n / 2 - 1);
    r.checks["hat_det"] = abs(r.det_hat) == *r.predicted_det_magnitude;
  }
  r.checks["hat_rank"] = r.rank_hat == r.predicted_rank_hat;
  r.checks["walk_rank"] = r.rank_walk == r.predicted_rank_walk;

  const SnfResult snf_w = smith_normal_form(wp.walk);
  r.snf_diag = snf_w.diag;
  r.checks["snf_certificate"] = snf_certificate_holds(wp.walk, snf_w);
  r.checks["snf_rank"] = snf_w.rank() == r.rank_walk;
  if (!four_divides) {
    BigVector pattern;
    pattern.insert(pattern.end(), (n + 1) / 2, BigInt(1));
    pattern.insert(pattern.end(), n / 2 - 1, BigInt(2));
    pattern.emplace_back(0);
    r.checks["snf_pattern"] = pattern == r.snf_diag;
    r.predicted_snf = std::move(pattern);
  }

  BigMatrix padded(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) padded(i + 1, j) = wp.hat(i, j);
  const SnfResult snf_pad = smith_normal_form(padded);
  r.checks["padded_snf_match"] = snf_pad.diag == snf_w.diag && snf_certificate_holds(padded, snf_pad);

  const SnfResult snf_hat = smith_normal_form(wp.hat);
  r.checks["hat_snf_prefix"] =
      std::equal(snf_hat.diag.begin(), snf_hat.diag.end(), snf_w.diag.begin()) &&
      sgn(snf_w.diag.back()) == 0 && snf_certificate_holds(wp.hat, snf_hat);

  r.rank2 = rank_mod2(wp.walk);
  r.rank2_bound = (n + 1) / 2;
  r.checks["rank2_bound"] = r.rank2 <= r.rank2_bound;

  r.main_exact = r.rank_walk;
  r.main_numeric = main_eigenvalue_count_numeric(g, opts.main_count_tolerance);
  r.checks["main_count_agrees"] = r.main_numeric == r.main_exact;

  r.eigen_residual = verify_eig_residuals(n);
  r.checks["eigvec_residual"] = r.eigen_residual < opts.eig_tolerance;
  r.fordet = verify_fordet(n);
  r.checks["eigvec_det"] = r.fordet.pass;
  r.etxi = verify_etxi(n);
  r.checks["eigvec_sums"] = r.etxi.pass;

  if (n <= opts.relwa_max_n) {
    r.relwa = verify_relwa(div.divisor);
    r.checks["det_formula"] = r.relwa->pass && r.relwa->det_exact == r.det_hat &&
                              r.relwa->rank_exact == r.rank_hat;
  }

  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

std::vector<VerifyReport> verify_dynkin_range(std::size_t n_from, std::size_t n_to,
                                              const VerifyOptions& opts) {
  if (n_from < 4 || n_from > n_to)
    throw InvalidParameter("verify range must satisfy 4 <= from <= to");
  const std::size_t count = n_to - n_from + 1;
  std::vector<VerifyReport> out(count);

  unsigned workers = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  // largest n first: the SNF cost grows steeply with n
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < count;) {
      const std::size_t slot = count - 1 - idx;
      try {
        out[slot] = verify_dynkin(n_from + slot, opts);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

Graph random_graph(std::size_t n, CorpusEngine& rng) {
  Graph g(n);
  for (std::size_t j = 2; j <= n; ++j)
    for (std::size_t i = 1; i < j; ++i)
      if (rng() >> 63) g.add_edge(i, j);
  return g;
}

Graph random_corpus_graph(std::size_t n_max, CorpusEngine& rng) {
  if (n_max == 0) throw InvalidParameter("n_max must be positive");
  const std::size_t n = 1 + static_cast<std::size_t>((rng() >> 32) % n_max);
  return random_graph(n, rng);
}

Rank2CorpusResult verify_rank2_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed,
                                      std::size_t dynkin_max) {
  if (count == 0 || n_max == 0) throw InvalidParameter("corpus needs count >= 1 and n_max >= 1");
  if (dynkin_max == 0) dynkin_max = n_max;
  Rank2CorpusResult res;
  auto check = [&](const Graph& g) {
    const std::size_t r2 = rank_mod2(walk_matrix(adjacency_matrix(g)));
    const std::size_t bound = (g.order() + 1) / 2;
    if (r2 > bound) res.violations.push_back({emit_graph6(g), g.order(), r2, bound});
  };
  CorpusEngine rng(seed);
  for (std::size_t i = 0; i < count; ++i, ++res.random_checked) check(random_corpus_graph(n_max, rng));
  for (std::size_t n = 4; n <= dynkin_max; ++n, ++res.dynkin_checked) check(build_dynkin_d(n));
  return res;
}

}  // namespace walkmat
