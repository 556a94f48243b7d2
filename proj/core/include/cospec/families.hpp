#pragma once

#include <array>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

enum class FamilyTag { G4, G5, T4, T5 };

std::string to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& s);

/// A scalable-family instance on 2a+6b vertices. blocks holds the eight
/// canonical groups (a-cloud, six b-strata, a-cloud) in the order used by
/// the 8x8 stratification-basis matrices; vertices are numbered block by
/// block, so block k is a contiguous index range.
struct FamilyInstance {
  Graph graph;
  VertexPartition blocks;
  int a = 0;
  int b = 0;
  FamilyTag tag = FamilyTag::G4;
};

/// The b x b bridge matrix B: unit corners, all-ones borders, J-I core;
/// (b-1)-regular, and B^2 = (b-2) J + I.
Matrix build_B(int b);

FamilyInstance build_G4(int a, int b);
FamilyInstance build_G5(int a, int b);
FamilyInstance build_T4(int a, int b);
FamilyInstance build_T5(int a, int b);
FamilyInstance build_family(FamilyTag tag, int a, int b);

/// Block order of the Schur-reduction display as positions into
/// FamilyInstance::blocks. The two stored relabelings differ by this
/// fixed permutation: G4 -> {0,2,1,3,4,6,7,5}, G5 -> {0,1,2,3,5,6,4,7}.
/// Groups {0,1} and {6,7} are eliminated in the entropy experiment;
/// {2,3} vs {4,5} is the bipartition.
std::array<int, 8> schur_block_order(FamilyTag tag);

/// Bundled worked-example pair member, loaded from the fixture data files.
struct ExampleFixture {
  Graph graph;
  int origin = 0;                   // 0-based
  VertexPartition canonical_strata; // the reference basis blocks
  Matrix reference_quotient;
  std::string pair_id;
};

ExampleFixture example(const std::string& name);
std::vector<std::string> example_names();
/// The six bundled pairs as (first, second) fixture names.
std::vector<std::pair<std::string, std::string>> example_pairs();

/// Fixture location: $COSPEC_DATA_DIR if set, else the compiled-in path.
std::string data_dir();

}  // namespace cospec
