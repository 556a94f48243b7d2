#include "cospec/families.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "cospec/io.hpp"

namespace cospec {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G4: return "G4";
    case FamilyTag::G5: return "G5";
    case FamilyTag::T4: return "T4";
    case FamilyTag::T5: return "T5";
  }
  return "?";
}

FamilyTag family_tag_from_string(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "G4") return FamilyTag::G4;
  if (u == "G5") return FamilyTag::G5;
  if (u == "T4") return FamilyTag::T4;
  if (u == "T5") return FamilyTag::T5;
  throw UnknownName("unknown family '" + s + "'");
}

Matrix build_B(int b) {
  if (b < 3) throw SizeTooSmall("build_B requires b >= 3");
  Matrix B = Matrix::Zero(b, b);
  B(0, 0) = B(b - 1, b - 1) = 1;
  for (int j = 1; j < b - 1; ++j) {
    B(0, j) = B(j, 0) = 1;
    B(b - 1, j) = B(j, b - 1) = 1;
    for (int i = 1; i < b - 1; ++i)
      if (i != j) B(i, j) = 1;
  }
  return B;
}

namespace {

struct Builder {
  int a, b;
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;

  Builder(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 3) throw BadParams("family parameters require a >= 1, b >= 3");
    int at = 0;
    for (int sz : {a, b, b, b, b, b, b, a}) {
      std::vector<int> blk(sz);
      for (int i = 0; i < sz; ++i) blk[i] = at++;
      blocks.push_back(std::move(blk));
    }
  }

  void complete(int x, int y) {
    for (int u : blocks[x])
      for (int v : blocks[y]) edges.emplace_back(u, v);
  }
  void matching(int x, int y) {
    for (int i = 0; i < b; ++i) edges.emplace_back(blocks[x][i], blocks[y][i]);
  }
  void pattern(int x, int y, const Matrix& p) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j)
        if (p(i, j) != 0.0) {
          int u = blocks[x][i], v = blocks[y][j];
          if (u == v)
            loops.push_back(u);
          else if (u < v)
            edges.emplace_back(u, v);
        }
  }
  void loop_block(int x) {
    for (int v : blocks[x]) loops.push_back(v);
  }

  FamilyInstance finish(FamilyTag tag, const std::string& name) {
    FamilyInstance inst;
    inst.graph = Graph::with_loops(2 * a + 6 * b, edges, loops, name);
    inst.blocks.blocks = blocks;
    inst.a = a;
    inst.b = b;
    inst.tag = tag;
    return inst;
  }
};

std::string family_name(const char* tag, int a, int b) {
  return std::string(tag) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

FamilyInstance build_G4(int a, int b) {
  Builder f(a, b);
  Matrix B = build_B(b);
  f.complete(0, 1);
  f.matching(1, 2);
  f.matching(1, 4);
  f.pattern(2, 3, B);
  f.matching(3, 6);
  f.matching(4, 5);
  f.complete(4, 7);
  f.pattern(5, 6, B);
  return f.finish(FamilyTag::G4, family_name("G4", a, b));
}

FamilyInstance build_G5(int a, int b) {
  Builder f(a, b);
  Matrix B = build_B(b);
  f.complete(0, 1);
  f.matching(1, 2);
  f.matching(1, 3);
  f.pattern(2, 5, B);
  f.pattern(3, 6, B);
  f.matching(4, 5);
  f.matching(4, 6);
  f.complete(4, 7);
  return f.finish(FamilyTag::G5, family_name("G5", a, b));
}

FamilyInstance build_T4(int a, int b) {
  Builder f(a, b);
  Matrix B = build_B(b);
  f.loop_block(1);
  f.loop_block(3);
  f.loop_block(4);
  f.loop_block(6);
  f.complete(0, 4);
  f.complete(1, 7);
  f.matching(1, 5);
  f.matching(2, 4);
  f.pattern(2, 6, B);
  f.pattern(3, 5, B);
  return f.finish(FamilyTag::T4, family_name("T4", a, b));
}

FamilyInstance build_T5(int a, int b) {
  Builder f(a, b);
  Matrix B = build_B(b);
  f.pattern(2, 2, B);
  f.pattern(3, 3, B);
  f.pattern(5, 5, B);
  f.pattern(6, 6, B);
  f.complete(0, 4);
  f.complete(1, 7);
  f.matching(1, 5);
  f.matching(1, 6);
  f.matching(2, 4);
  f.matching(3, 4);
  return f.finish(FamilyTag::T5, family_name("T5", a, b));
}

FamilyInstance build_family(FamilyTag tag, int a, int b) {
  switch (tag) {
    case FamilyTag::G4: return build_G4(a, b);
    case FamilyTag::G5: return build_G5(a, b);
    case FamilyTag::T4: return build_T4(a, b);
    case FamilyTag::T5: return build_T5(a, b);
  }
  throw BadParams("bad family tag");
}

std::array<int, 8> schur_block_order(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G4: return {0, 2, 1, 3, 4, 6, 7, 5};
    case FamilyTag::G5: return {0, 1, 2, 3, 5, 6, 4, 7};
    default:
      throw BadParams("schur_block_order is defined for G4/G5 only");
  }
}

std::string data_dir() {
  if (const char* env = std::getenv("COSPEC_DATA_DIR")) return env;
#ifdef COSPEC_DEFAULT_DATA_DIR
  return COSPEC_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

nlohmann::json load_manifest() {
  const std::string path = data_dir() + "/fixtures/manifest.json";
  return nlohmann::json::parse(read_file(path));
}

}  // namespace

std::vector<std::string> example_names() {
  const auto manifest = load_manifest();
  std::vector<std::string> names;
  for (const auto& [key, value] : manifest.items()) names.push_back(key);
  return names;
}

std::vector<std::pair<std::string, std::string>> example_pairs() {
  const auto manifest = load_manifest();
  std::map<std::string, std::vector<std::string>> by_pair;
  for (const auto& [key, value] : manifest.items())
    by_pair[value.at("pair").get<std::string>()].push_back(key);
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [pair_id, members] : by_pair) {
    if (members.size() != 2) throw ParseError("pair " + pair_id + " is not a pair");
    out.emplace_back(members[0], members[1]);
  }
  return out;
}

ExampleFixture example(const std::string& name) {
  std::string key;
  for (char c : name) key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto manifest = load_manifest();
  if (!manifest.contains(key)) throw UnknownName("unknown example '" + name + "'");
  const auto& entry = manifest.at(key);

  ExampleFixture fx;
  fx.graph = read_graph_json_file(data_dir() + "/fixtures/" +
                                  entry.at("file").get<std::string>());
  const int base = entry.value("index_base", 0);
  fx.origin = entry.at("origin").get<int>() - base;
  for (const auto& blk : entry.at("strata")) {
    std::vector<int> b;
    for (const auto& v : blk) b.push_back(v.get<int>() - base);
    fx.canonical_strata.blocks.push_back(std::move(b));
  }
  const auto& q = entry.at("quotient");
  const int k = static_cast<int>(q.size());
  fx.reference_quotient = Matrix::Zero(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) fx.reference_quotient(i, j) = q[i][j].get<double>();
  fx.pair_id = entry.at("pair").get<std::string>();
  return fx;
}

}  // namespace cospec
