#include <doctest.h>

#include <algorithm>

#include "cospec/families.hpp"
#include "cospec/spectral.hpp"
#include "helpers.hpp"

using namespace cospec;
using namespace cospec::testing;

TEST_CASE("sym_eig basics") {
  Spectrum s = sym_eig(k2().adjacency_matrix());
  CHECK(s.values[0] == doctest::Approx(-1.0));
  CHECK(s.values[1] == doctest::Approx(1.0));

  Spectrum id5 = sym_eig(Matrix::Identity(5, 5));
  for (double v : id5.values) CHECK(v == doctest::Approx(1.0));

  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(sym_eig(bad), NonSymmetric);
}

TEST_CASE("bipartite spectra are symmetric about zero") {
  for (const char* name : {"Q4", "HOFFMAN"}) {
    Spectrum s = sym_eig(example(name).graph.adjacency_matrix());
    auto negated = s.values;
    for (double& v : negated) v = -v;
    std::sort(negated.begin(), negated.end());
    CHECK(s.max_abs_dev({negated}) < 1e-9);
  }
}

TEST_CASE("sym_eig_full reconstructs the input") {
  std::mt19937 rng(3);
  Matrix m = random_symmetric(rng, 12, 2.0);
  EigenSystem es = sym_eig_full(m);
  CHECK(max_abs_diff(es.vectors.transpose() * es.vectors, Matrix::Identity(12, 12)) < 1e-10);
  Vector w(12);
  for (int i = 0; i < 12; ++i) w(i) = es.spectrum.values[i];
  Matrix rebuilt = es.vectors * w.asDiagonal() * es.vectors.transpose();
  CHECK(max_abs_diff(rebuilt, m) / m.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("cospectral checks") {
  auto r = cospectral(build_G4(1, 3).graph, build_G5(1, 3).graph, 1e-8);
  CHECK(r.equal);
  CHECK(r.max_dev < 1e-8);

  auto sizes = cospectral(k2(), path3(), 1e-3);
  CHECK_FALSE(sizes.equal);
  CHECK(std::isinf(sizes.max_dev));

  CHECK(cospectral(example("G1").graph, example("G2").graph, 1e-8).equal);
}

TEST_CASE("closed-form family spectrum") {
  Spectrum n1 = closed_form_spectrum_G45(1);
  std::vector<double> expect{-3, -2, -2, -2, -2, -1, -1, -1, -1, -1,
                             1,  1,  1,  1,  1,  2,  2,  2,  2,  3};
  CHECK(n1.values == expect);

  CHECK(n1.max_abs_dev(sym_eig(build_G4(1, 3).graph.adjacency_matrix())) < 1e-8);

  Spectrum n2 = closed_form_spectrum_G45(2);
  CHECK(n2.size() == 28);
  CHECK(n2.max_abs_dev(sym_eig(build_G5(2, 4).graph.adjacency_matrix())) < 1e-8);

  Spectrum n3 = closed_form_spectrum_G45(3);
  CHECK(n3.size() == 36);
  CHECK(n3.max_abs_dev(sym_eig(build_G4(3, 5).graph.adjacency_matrix())) < 1e-8);

  CHECK_THROWS_AS(closed_form_spectrum_G45(0), BadParams);
}

TEST_CASE("ground state energy") {
  Graph q4 = example("Q4").graph;
  CHECK(ground_state_energy(q4, 0.0) == doctest::Approx(q4.order() / 2.0));

  CHECK(ground_state_energy(k2(), 0.5) ==
        doctest::Approx(0.5 * (1.0 + std::sqrt(3.0))).epsilon(1e-12));

  const double e4 = ground_state_energy(build_G4(1, 3).graph, 0.1);
  const double e5 = ground_state_energy(build_G5(1, 3).graph, 0.1);
  CHECK(std::abs(e4 - e5) < 1e-10);

  const double p4 = ground_state_energy_product(build_G4(1, 3).graph, 0.1);
  const double p5 = ground_state_energy_product(build_G5(1, 3).graph, 0.1);
  CHECK(std::abs(p4 - p5) < 1e-10);

  CHECK_THROWS_AS(ground_state_energy(k2(), -0.1), NegativeCoupling);
}

TEST_CASE("spectrum is invariant under relabeling") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(rng, 13, 0.3);
    Graph h = g.permuted(random_permutation(rng, 13));
    CHECK(sym_eig(g.adjacency_matrix()).max_abs_dev(sym_eig(h.adjacency_matrix())) < 1e-9);
  }
}

TEST_CASE("trace identities") {
  std::mt19937 rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = random_graph(rng, 12, 0.4);
    Spectrum s = sym_eig(g.adjacency_matrix());
    double sum = 0.0, sq = 0.0;
    for (double v : s.values) {
      sum += v;
      sq += v * v;
    }
    CHECK(std::abs(sum) < 1e-9);
    if (g.edge_count() > 0)
      CHECK(std::abs(sq - 2.0 * g.edge_count()) / (2.0 * g.edge_count()) < 1e-6);
  }
}
