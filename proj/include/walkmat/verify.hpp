#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "walkmat/bigmatrix.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

/// Closed-form eigenpairs of the transposed divisor matrix of D_n:
/// lambda_k = 2cos((2k-1)pi/(2(n-1))), xi_k(i) = cos((2k-1)(i-1)pi/(2(n-1))).
struct EigData {
  std::size_t n = 0;
  Eigen::VectorXd lambdas;  // n-1 values, strictly decreasing
  Eigen::MatrixXd xis;      // column k-1 holds xi_k
};

EigData closed_form_eigdata(std::size_t n);

// max_k ||B^T xi_k - lambda_k xi_k||_inf with B from the D_n partition.
double verify_eig_residuals(std::size_t n);

struct FordetCheck {
  bool pass = false;
  double gram_residual = 0.0;    // max |(M M^T - diag(n-1, (n-1)/2, ...))_{ij}|
  double logdet_residual = 0.0;  // |log|det M| - log(closed form)|
  double log_abs_det = 0.0;
  int det_sign = 0;
};

inline constexpr double kGramTolerance = 1e-9;
inline constexpr double kLogTolerance = 1e-8;
inline constexpr double kVanishThreshold = 1e-10;

FordetCheck verify_fordet(std::size_t n);

struct EtxiCheck {
  bool pass = false;
  std::vector<double> sums;           // e^T xi_j, j = 1..n-1
  std::vector<std::size_t> vanishing;  // 1-based j with |e^T xi_j| < 1e-10
  double closed_form_residual = 0.0;  // max |e^T xi_j - sine/cosine closed form|
  // Set when 4 does not divide n.
  std::optional<double> log_residual;
  // log2 of the predicted |prod e^T xi_j|: 1-n/2 (n = 2 mod 4), 1/2-n/2 (n odd).
  std::optional<double> case_exponent;
  int product_sign = 0;
};

EtxiCheck verify_etxi(std::size_t n);

struct RelwaCheck {
  bool pass = false;
  bool det_relation = false;
  bool rank_relation = false;
  BigInt det_exact;
  double det_numeric = 0.0;  // signed; 0 when a factor e^T xi_j vanishes
  // |log|numeric| - log|exact||, set only when det_exact != 0
  std::optional<double> log_residual;
  std::size_t rank_exact = 0;
  std::size_t numeric_nonvanishing = 0;
};

inline constexpr double kRelwaProjectionThreshold = 1e-8;
inline constexpr double kRelwaGap = 1e-8;

// Compares det W(M) and rank W(M) against eigen-data of M^T. Throws
// NotApplicable unless M^T has real, pairwise distinct (gap >= 1e-8) eigenvalues.
RelwaCheck verify_relwa(const BigMatrix& m, double tol = 1e-7);

struct VerifyReport {
  std::size_t n = 0;
  BigInt det_hat;
  int det_hat_sign = 0;
  std::optional<BigInt> predicted_det_magnitude;  // absent when 4 | n
  std::size_t rank_walk = 0;
  std::size_t rank_hat = 0;
  std::size_t predicted_rank_walk = 0;
  std::size_t predicted_rank_hat = 0;
  BigVector snf_diag;
  std::optional<BigVector> predicted_snf;  // absent when 4 | n
  std::size_t rank2 = 0;
  std::size_t rank2_bound = 0;
  std::size_t main_exact = 0;
  std::size_t main_numeric = 0;
  double eigen_residual = 0.0;
  FordetCheck fordet;
  EtxiCheck etxi;
  std::optional<RelwaCheck> relwa;  // evaluated for n <= relwa_max_n
  std::map<std::string, bool> checks;
  double elapsed_ms = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t relwa_max_n = 64;
  double eig_tolerance = 1e-9;
  double main_count_tolerance = 1e-8;
};

VerifyReport verify_dynkin(std::size_t n, const VerifyOptions& opts = {});

// One report per n in [n_from, n_to], ordered by n regardless of scheduling.
std::vector<VerifyReport> verify_dynkin_range(std::size_t n_from, std::size_t n_to,
                                              const VerifyOptions& opts = {});

// 64-bit LCG (Knuth's MMIX constants, modulus 2^64). Only the high bits of
// each state are consumed, so corpora are identical on every platform.
using CorpusEngine =
    std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

// Erdos-Renyi G(n, 1/2): one engine draw per vertex pair, edge iff top bit set.
Graph random_graph(std::size_t n, CorpusEngine& rng);
// Order uniform in [1, n_max] from the top 32 bits, then random_graph.
Graph random_corpus_graph(std::size_t n_max, CorpusEngine& rng);

struct Rank2Violation {
  std::string graph6;
  std::size_t n = 0;
  std::size_t rank2 = 0;
  std::size_t bound = 0;
};

struct Rank2CorpusResult {
  std::size_t random_checked = 0;
  std::size_t dynkin_checked = 0;
  std::vector<Rank2Violation> violations;
};

// count seeded random graphs with n <= n_max, then D_4..D_{dynkin_max}
// (dynkin_max = 0 means n_max).
Rank2CorpusResult verify_rank2_corpus(std::size_t count, std::size_t n_max, std::uint64_t seed,
                                      std::size_t dynkin_max = 0);

}  // namespace walkmat
