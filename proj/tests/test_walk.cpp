#include "doctest.h"

#include "oracles.hpp"
#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/jacobi.hpp"
#include "walkmat/verify.hpp"
#include "walkmat/walk.hpp"

using namespace walkmat;

namespace {

const BigMatrix kWalkD5{{1, 1, 3, 4, 10},
                        {1, 1, 3, 4, 10},
                        {1, 3, 4, 10, 14},
                        {1, 2, 4, 6, 14},
                        {1, 1, 2, 4, 6}};
const BigMatrix kHatD5{{1, 1, 3, 4}, {1, 3, 4, 10}, {1, 2, 4, 6}, {1, 1, 2, 4}};

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("published D_5 walk matrices") {
  const WalkPair p = walk_pair(build_dynkin_d(5));
  CHECK(p.walk == kWalkD5);
  CHECK(p.hat == kHatD5);
  CHECK(hat_walk_matrix(build_dynkin_d(5)) == kHatD5);
}

TEST_CASE("walk matrix agrees with walk enumeration") {
  CHECK(walk_matrix(adjacency_matrix(build_dynkin_d(7))) ==
        oracle::walk_matrix_by_enumeration(build_dynkin_d(7)));
  CorpusEngine rng(9);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_corpus_graph(7, rng);
    CHECK(walk_matrix(adjacency_matrix(g)) == oracle::walk_matrix_by_enumeration(g));
  }
}

TEST_CASE("walk matrix edge cases") {
  const BigMatrix w = walk_matrix(BigMatrix::zero(3, 3));
  CHECK(w == BigMatrix{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(walk_matrix(BigMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(hat_walk_matrix(Graph(1)), DimensionError);
}

TEST_CASE("walk matrix of the divisor matrix is the truncated walk matrix") {
  const DivisorData d5 = divisor_of_partition(build_dynkin_d(5), dynkin_partition(5));
  CHECK(walk_matrix(d5.divisor) == kHatD5);
  for (std::size_t n = 4; n <= 64; ++n) {
    const Graph g = build_dynkin_d(n);
    const DivisorData d = divisor_of_partition(g, dynkin_partition(n));
    CHECK(hat_walk_matrix(g) == walk_matrix(d.divisor));
  }
}

TEST_CASE("D_4 and D_7 truncated walk matrices") {
  const BigMatrix h4 = hat_walk_matrix(build_dynkin_d(4));
  CHECK(h4.rows() == 3);
  CHECK(rank_rational(h4) == 2);
  CHECK(abs(det_bareiss(hat_walk_matrix(build_dynkin_d(7)))) == 4);
}

TEST_CASE("twin rows and rank equality on D_n") {
  for (std::size_t n = 4; n <= 64; ++n) {
    const WalkPair p = walk_pair(build_dynkin_d(n));
    CHECK(std::equal(p.walk.row(0).begin(), p.walk.row(0).end(), p.walk.row(1).begin()));
    CHECK(rank_rational(p.walk) == rank_rational(p.hat));
  }
}

TEST_CASE("walk entries exceed machine words at n = 64") {
  const BigMatrix w = walk_matrix(adjacency_matrix(build_dynkin_d(64)));
  CHECK(w(2, 63).get_str().size() > 19);
}

TEST_CASE("exact main eigenvalue counts") {
  CHECK(main_eigenvalue_count_exact(build_dynkin_d(5)) == 4);
  CHECK(main_eigenvalue_count_exact(build_dynkin_d(8)) == 6);
  CHECK(main_eigenvalue_count_exact(complete(3)) == 1);
  CHECK(main_eigenvalue_count_exact(Graph(1)) == 1);
}

TEST_CASE("numeric main eigenvalue counts") {
  CHECK(main_eigenvalue_count_numeric(build_dynkin_d(5), 1e-9) == 4);
  CHECK(main_eigenvalue_count_numeric(complete(4), 1e-9) == 1);
  CHECK(main_eigenvalue_count_numeric(build_dynkin_d(12), 1e-9) == 10);
  CHECK_THROWS_AS(main_eigenvalue_count_numeric(complete(3), 0.0), InvalidParameter);
  // edgeless: the single eigenvalue 0 with eigenspace containing e
  CHECK(main_eigenvalue_count_numeric(Graph(5)) == 1);
}

TEST_CASE("numeric count matches exact count") {
  for (std::size_t n = 4; n <= 24; ++n) {
    const Graph g = build_dynkin_d(n);
    CHECK(main_eigenvalue_count_numeric(g) == main_eigenvalue_count_exact(g));
  }
  CorpusEngine rng(2024);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_corpus_graph(16, rng);
    CHECK_MESSAGE(main_eigenvalue_count_numeric(g) == main_eigenvalue_count_exact(g), emit_graph6(g));
  }
}

TEST_CASE("Jacobi eigensolver") {
  Eigen::MatrixXd a(3, 3);
  a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  const SymmetricEigen e = jacobi_eigen(a);
  const double r2 = std::sqrt(2.0);
  CHECK(e.values(0) == doctest::Approx(2 - r2).epsilon(1e-12));
  CHECK(e.values(1) == doctest::Approx(2).epsilon(1e-12));
  CHECK(e.values(2) == doctest::Approx(2 + r2).epsilon(1e-12));
  CHECK((a * e.vectors - e.vectors * e.values.asDiagonal()).norm() < 1e-12);
  CHECK((e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-12);

  Eigen::MatrixXd nonsym(2, 2);
  nonsym << 0, 1, 2, 0;
  CHECK_THROWS_AS(jacobi_eigen(nonsym), InvalidParameter);
  CHECK_THROWS_AS(jacobi_eigen(Eigen::MatrixXd(2, 3)), DimensionError);
  JacobiOptions tight;
  tight.max_sweeps = 0;
  CHECK_THROWS_AS(jacobi_eigen(a, tight), NumericFailure);
}
