#include <doctest.h>

#include <cmath>

#include "cospec/families.hpp"
#include "cospec/walk.hpp"
#include "helpers.hpp"

using namespace cospec;
using namespace cospec::testing;

namespace {

ComplexVector unit_at(int n, int k) {
  ComplexVector v = ComplexVector::Zero(n);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("ctqw basics") {
  AmplitudeVector trivial = ctqw(Matrix::Zero(1, 1), 2.7, unit_at(1, 0));
  CHECK(std::abs(trivial.entries(0) - std::complex<double>(1, 0)) < 1e-14);

  const double t = 1.234;
  AmplitudeVector k2walk = ctqw(k2().adjacency_matrix(), t, unit_at(2, 0));
  CHECK(std::abs(k2walk.entries(0).real() - std::cos(t)) < 1e-12);
  CHECK(std::abs(k2walk.entries(0).imag()) < 1e-12);

  AmplitudeVector q4walk = ctqw(example("Q4").graph.adjacency_matrix(), 1.0, unit_at(16, 0));
  CHECK(std::abs(q4walk.entries.norm() - 1.0) < 1e-10);

  Matrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(ctqw(bad, 1.0, unit_at(2, 0)), NonSymmetric);
  CHECK_THROWS_AS(ctqw(k2().adjacency_matrix(), 1.0, 2.0 * unit_at(2, 0)),
                  UnnormalizedInput);
}

TEST_CASE("ctqw unitarity and time composition") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int rep = 0; rep < 100; ++rep) {
    Matrix h = random_symmetric(rng, 8, 1.5);
    ComplexVector psi = unit_at(8, rep % 8);
    const double s = time(rng), t = time(rng);
    AmplitudeVector once = ctqw(h, s + t, psi);
    CHECK(std::abs(once.entries.norm() - 1.0) < 1e-10);
    AmplitudeVector twice = ctqw(h, s, ctqw(h, t, psi).entries);
    CHECK((once.entries - twice.entries).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("time grid") {
  TimeGrid g{0.0, 1.0, 0.25};
  CHECK(g.times() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS((TimeGrid{0, 1, 0}.times()), BadParams);
}

TEST_CASE("stratum probabilities") {
  auto table = stratum_probabilities(k2(), 0, TimeGrid{0, 0, 1});
  CHECK(table.probabilities(0, 0) == doctest::Approx(1.0));
  CHECK(table.probabilities(0, 1) == doctest::Approx(0.0));

  // closed partition: quotient-space and full-space walks agree
  auto q4 = stratum_probabilities(example("Q4").graph, 0,
                                  TimeGrid{std::acos(-1.0) / 2, std::acos(-1.0) / 2, 1});
  CHECK(q4.partition_closed);
  CHECK(q4.dual_path_gap < 1e-8);

  // probability masses sum to one at every grid point
  auto g1 = stratum_probabilities(example("G1").graph, 0, TimeGrid{0, 5, 0.5});
  for (int i = 0; i < g1.probabilities.rows(); ++i)
    CHECK(g1.probabilities.row(i).sum() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fixture pair traces differ under the reference bases") {
  ExampleFixture g1 = example("G1"), g2 = example("G2");
  auto t1 = stratum_probabilities(g1.graph, g1.canonical_strata, g1.origin, TimeGrid{0, 10, 0.1});
  auto t2 = stratum_probabilities(g2.graph, g2.canonical_strata, g2.origin, TimeGrid{0, 10, 0.1});
  CHECK(max_abs_diff(t1.probabilities, t2.probabilities) > 1e-3);
}

TEST_CASE("fermion space") {
  FermionSpace sp(6, 3);
  CHECK(sp.dim() == 20);
  CHECK(sp.subset(0) == std::vector<int>{0, 1, 2});
  CHECK(sp.index_of({3, 4, 5}) == 19);

  // hop signs: occupied sites strictly between source and target flip parity
  CHECK(FermionSpace::hop_sign({0, 1}, 1, 5) == 1);
  CHECK(FermionSpace::hop_sign({0, 1}, 0, 5) == -1);
  CHECK(FermionSpace::hop_sign({0, 3, 7}, 0, 5) == -1);
  CHECK(FermionSpace::hop_sign({0, 3, 7}, 7, 5) == 1);

  CHECK_THROWS_AS(FermionSpace(4, 0), BadParticleCount);
  CHECK_THROWS_AS(FermionSpace(4, 5), BadParticleCount);
  CHECK_THROWS_AS(FermionSpace(40, 10), CapExceeded);
}

TEST_CASE("fermion hop operator") {
  // one particle: exactly the adjacency matrix, loops included
  for (const auto& g : {example("G1").graph, build_T4(1, 3).graph}) {
    Matrix h = Matrix(fermion_hop_operator(g, 1));
    CHECK(max_abs_diff(h, g.adjacency_matrix()) == 0.0);
  }

  // fully occupied K2 is Pauli-blocked
  Matrix blocked = Matrix(fermion_hop_operator(k2(), 2));
  CHECK(blocked.rows() == 1);
  CHECK(blocked(0, 0) == 0.0);

  // antisymmetric sector operator stays symmetric
  Matrix h2 = Matrix(fermion_hop_operator(example("G1").graph, 2));
  CHECK(max_abs_diff(h2, h2.transpose()) == 0.0);
}

TEST_CASE("fermionic basis vectors") {
  FamilyInstance g4 = build_G4(1, 3);
  Matrix basis = g45_fermionic_vectors(g4);
  CHECK(basis.rows() == 20);
  CHECK(basis(0, 0) == 1.0);
  for (int j : g4.blocks.blocks[1]) CHECK(basis(j, 1) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(max_abs_diff(basis.transpose() * basis, Matrix::Identity(8, 8)) < 1e-12);

  FamilyInstance big = build_G4(2, 4);  // C(28,2) = 378 two-particle states
  Matrix basis2 = g45_fermionic_vectors(big);
  CHECK(basis2.rows() == 378);
  CHECK(max_abs_diff(basis2.transpose() * basis2, Matrix::Identity(8, 8)) < 1e-12);
  for (int c = 0; c < 8; ++c) CHECK(std::abs(basis2.col(c).norm() - 1.0) < 1e-12);
}

TEST_CASE("single-particle fermionic quotient equals the block quotient") {
  for (FamilyTag tag : {FamilyTag::G4, FamilyTag::G5, FamilyTag::T4, FamilyTag::T5}) {
    FamilyInstance inst = build_family(tag, 1, 3);
    auto fq = fermionic_quotient(inst);
    auto bq = quotient(inst.graph, inst.blocks);
    INFO(to_string(tag));
    CHECK(max_abs_diff(fq.matrix, bq.matrix) <= 1e-12);
    CHECK(fq.residual <= 1e-10);
    CHECK(max_abs_diff(fq.matrix, reference_fermionic_quotient(tag, 1, 3)) <= 1e-10);
  }
}

TEST_CASE("reference 8x8 matrices: distinguishing entries") {
  Matrix g4 = reference_fermionic_quotient(FamilyTag::G4, 1, 3);
  CHECK(g4(0, 1) == doctest::Approx(std::sqrt(3.0)));
  CHECK(g4(2, 3) == doctest::Approx(2.0));  // b-1
  Matrix g5 = reference_fermionic_quotient(FamilyTag::G5, 1, 3);
  CHECK(g5(1, 2) == 1.0);
  CHECK(g5(1, 3) == 1.0);
  CHECK(g4(1, 4) == 1.0);
  CHECK(g5(1, 4) == 0.0);
  Matrix t4 = reference_fermionic_quotient(FamilyTag::T4, 1, 3);
  CHECK(t4(1, 1) == 1.0);
  CHECK((g4 - g5).cwiseAbs().maxCoeff() >= 1.0);
  Matrix t5 = reference_fermionic_quotient(FamilyTag::T5, 1, 3);
  CHECK((t4 - t5).cwiseAbs().maxCoeff() >= 1.0);
}

TEST_CASE("two-particle projection: honest behavior of the 8-vector span") {
  // For a >= 2 the span is NOT closed: the walk leaks through the second
  // a-cloud, the projected column 7 vanishes, and the residual is sqrt(b/a).
  FamilyInstance g4 = build_G4(2, 4);
  auto fq = fermionic_quotient(g4);
  Matrix reference = reference_fermionic_quotient(FamilyTag::G4, 2, 4);

  Matrix expected = reference;
  expected(4, 7) = expected(7, 4) = 0.0;
  CHECK(max_abs_diff(fq.matrix, expected) < 1e-10);
  CHECK(fq.residual == doctest::Approx(std::sqrt(4.0 / 2.0)).epsilon(1e-10));
}

TEST_CASE("walk verdicts") {
  auto fermionic = walk_verdict_fermionic(build_G4(1, 3), build_G5(1, 3));
  CHECK(fermionic.outcome == WalkOutcome::Distinguished);
  CHECK(fermionic.witness.kind == "fermionic-entry");
  CHECK(fermionic.witness.gap >= 1.0);

  ExampleFixture q4 = example("Q4"), hoff = example("HOFFMAN");
  auto quot = walk_verdict_quotient(q4.graph, q4.canonical_strata, hoff.graph,
                                    hoff.canonical_strata);
  CHECK(quot.outcome == WalkOutcome::Inconclusive);
  auto traces = walk_verdict_traces(q4.graph, q4.canonical_strata, q4.origin, hoff.graph,
                                    hoff.canonical_strata, hoff.origin, TimeGrid{0, 10, 0.1});
  CHECK(traces.outcome == WalkOutcome::Inconclusive);

  auto self = walk_verdict_quotient(q4.graph, q4.canonical_strata, q4.graph,
                                    q4.canonical_strata);
  CHECK(self.outcome == WalkOutcome::Inconclusive);

  ExampleFixture g1 = example("G1"), g2 = example("G2");
  auto sect4 = walk_verdict_quotient(g1.graph, g1.canonical_strata, g2.graph,
                                     g2.canonical_strata);
  CHECK(sect4.outcome == WalkOutcome::Distinguished);
  CHECK(sect4.witness.row == 1);
  CHECK(sect4.witness.col == 1);
  CHECK(sect4.witness.gap == doctest::Approx(2.0));
}
