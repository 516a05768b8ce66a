#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/verify.hpp"
#include "walkmat/walk.hpp"

using namespace walkmat;

namespace {

BigMatrix walk_of_dn(std::size_t n) { return walk_matrix(adjacency_matrix(build_dynkin_d(n))); }

// Entries uniform in [lo, hi] from the corpus engine's high bits.
BigMatrix random_matrix(CorpusEngine& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  BigMatrix m(rows, cols);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = lo + static_cast<long>((rng() >> 32) % span);
  return m;
}

const BigMatrix kHatD5{{1, 1, 3, 4}, {1, 3, 4, 10}, {1, 2, 4, 6}, {1, 1, 2, 4}};

}  // namespace

TEST_CASE("det_bareiss fixtures") {
  CHECK(abs(det_bareiss(kHatD5)) == 2);
  CHECK(det_bareiss(kHatD5) == oracle::det_leibniz(kHatD5));
  CHECK(det_bareiss(BigMatrix::identity(3)) == 1);
  CHECK(det_bareiss(BigMatrix{{1, 1}, {1, 3}}) == 2);
  CHECK(det_bareiss(BigMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_bareiss(BigMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_bareiss(BigMatrix(2, 3)), DimensionError);
}

TEST_CASE("det_bareiss agrees with Leibniz expansion") {
  CorpusEngine rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + (rng() >> 32) % 6;
    const BigMatrix m = random_matrix(rng, n, n, -3, 3);
    CHECK(det_bareiss(m) == oracle::det_leibniz(m));
  }
}

TEST_CASE("rank_rational fixtures") {
  CHECK(rank_rational(walk_of_dn(8)) == 6);
  CHECK(rank_rational(walk_of_dn(5)) == 4);
  CHECK(rank_rational(BigMatrix::zero(3, 4)) == 0);
  CHECK(rank_rational(BigMatrix(0, 3)) == 0);
}

TEST_CASE("rank_rational agrees with Gauss-Jordan over Q") {
  CorpusEngine rng(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + (rng() >> 32) % 6;
    const std::size_t c = 1 + (rng() >> 32) % 6;
    // narrow entries produce plenty of rank deficiency
    const BigMatrix m = random_matrix(rng, r, c, -1, 1);
    CHECK(rank_rational(m) == oracle::rank_rational_q(m));
  }
}

TEST_CASE("rank_mod2 fixtures and span oracle") {
  CHECK(rank_mod2(walk_of_dn(5)) <= 3);
  CHECK(rank_mod2(BigMatrix::identity(7)) == 7);
  BigMatrix all_ones(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) all_ones(i, j) = 1;
  CHECK(rank_mod2(all_ones) == 1);
  CHECK(rank_mod2(BigMatrix{{2, 4}, {6, -8}}) == 0);

  CorpusEngine rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + (rng() >> 32) % 8;
    const std::size_t c = 1 + (rng() >> 32) % 8;
    const BigMatrix m = random_matrix(rng, r, c, -5, 5);
    CHECK(rank_mod2(m) == oracle::rank_mod2_span(m));
    CHECK(rank_mod2(m) <= rank_rational(m));
  }
  // wider than one machine word
  CHECK(rank_mod2(BigMatrix::identity(130)) == 130);
}

TEST_CASE("Smith normal form fixtures") {
  const BigMatrix w5 = walk_of_dn(5);
  const SnfResult r5 = smith_normal_form(w5);
  CHECK(to_decimal(r5.diag) == std::vector<std::string>{"1", "1", "1", "2", "0"});
  CHECK(snf_certificate_holds(w5, r5));

  const BigMatrix w6 = walk_of_dn(6);
  const SnfResult r6 = smith_normal_form(w6);
  CHECK(to_decimal(r6.diag) == std::vector<std::string>{"1", "1", "1", "2", "2", "0"});
  CHECK(snf_certificate_holds(w6, r6));

  const BigMatrix d46{{4, 0}, {0, 6}};
  const SnfResult rd = smith_normal_form(d46);
  // d_1 = gcd of entries, d_1 d_2 = |det|
  const BigInt d1 = minor_gcd_oracle(d46, 1);
  const BigInt d12 = minor_gcd_oracle(d46, 2);
  CHECK(d1 == 2);
  CHECK(d12 == 24);
  CHECK(rd.diag == BigVector{d1, d12 / d1});
  CHECK(rd.diag == BigVector{2, 12});
}

TEST_CASE("Smith normal form of rectangular and degenerate inputs") {
  const BigMatrix wide{{2, 4, 4}, {-6, 6, 12}};
  const SnfResult r = smith_normal_form(wide);
  CHECK(r.diag == BigVector{2, 6});
  CHECK(snf_certificate_holds(wide, r));

  const SnfResult z = smith_normal_form(BigMatrix::zero(3, 2));
  CHECK(z.diag == BigVector{0, 0});
  CHECK(snf_certificate_holds(BigMatrix::zero(3, 2), z));

  const BigMatrix neg{{-3}};
  CHECK(smith_normal_form(neg).diag == BigVector{3});
}

TEST_CASE("certificate check rejects tampered results") {
  const BigMatrix w5 = walk_of_dn(5);
  SnfResult r = smith_normal_form(w5);
  SnfResult bad = r;
  bad.diag[3] = 4;
  CHECK_FALSE(snf_certificate_holds(w5, bad));
  bad = r;
  bad.left(0, 0) += 1;
  CHECK_FALSE(snf_certificate_holds(w5, bad));
  bad = r;
  std::swap(bad.diag[0], bad.diag[4]);
  CHECK_FALSE(snf_certificate_holds(w5, bad));
}

TEST_CASE("minor_gcd_oracle fixtures") {
  CHECK(minor_gcd_oracle(walk_of_dn(5), 4) == 2);
  CHECK(minor_gcd_oracle(BigMatrix::identity(3), 2) == 1);
  CHECK(minor_gcd_oracle(walk_of_dn(8), 7) == 0);
  CHECK_THROWS_AS(minor_gcd_oracle(BigMatrix::identity(3), 4), DimensionError);
}

TEST_CASE("SNF properties on a random corpus") {
  CorpusEngine rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + (rng() >> 32) % 6;
    const std::size_t c = 1 + (rng() >> 32) % 6;
    const BigMatrix m = random_matrix(rng, r, c, -9, 9);
    const SnfResult s = smith_normal_form(m);
    REQUIRE(snf_certificate_holds(m, s));
    CHECK(s.rank() == rank_rational(m));
    if (r == c && sgn(det_bareiss(m)) != 0) CHECK(abs(det_bareiss(m)) == s.leading_product(r));
    for (std::size_t k = 1; k <= std::min(r, c); ++k)
      CHECK(s.leading_product(k) == minor_gcd_oracle(m, k));
  }
}

TEST_CASE("matrix products") {
  const BigMatrix a = adjacency_matrix(build_dynkin_d(5));
  CHECK(mat_vec(a, ones(5)) == BigVector{1, 1, 3, 2, 1});
  CHECK(mat_mul(kHatD5, BigMatrix::identity(4)) == kHatD5);
  CHECK_THROWS_AS(mat_mul(BigMatrix(2, 3), BigMatrix(2, 3)), DimensionError);
  const BigVector v3(3);
  CHECK_THROWS_AS(mat_vec(BigMatrix(2, 2), v3), DimensionError);

  // C B and A C computed entry by entry from the graph, independently of mat_mul
  const Graph g6 = build_dynkin_d(6);
  const DivisorData d = divisor_of_partition(g6, dynkin_partition(6));
  const BigMatrix cb = mat_mul(d.characteristic, d.divisor);
  for (std::size_t v = 1; v <= 6; ++v)
    for (std::size_t j = 0; j < 5; ++j) {
      long neighbours_in_cell = 0;
      for (std::size_t u = 1; u <= 6; ++u)
        if (g6.has_edge(u, v) && (u <= 2 ? 0 : u - 2) == j) ++neighbours_in_cell;
      CHECK(cb(v - 1, j) == neighbours_in_cell);
    }
  CHECK(cb == mat_mul(adjacency_matrix(g6), d.characteristic));
}

TEST_CASE("matrix text format") {
  const std::string text = "2 3\n1 -2 3\n40000000000000000000000000 0 -1\n";
  const BigMatrix m = parse_matrix(text);
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == BigInt("40000000000000000000000000"));
  CHECK(format_matrix(m) == text);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1\n1 2\n"), ParseError);
  try {
    parse_matrix("1 2\n5 7q\n");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
}
