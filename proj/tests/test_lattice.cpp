// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "paramcat/lattice.hpp"

using namespace paramcat;

namespace {

// Three-level chain bot < 1 < top with the four-object entailment graph.
const char* kChainSpec = R"(
# three-level chain
[elements]
bot
1
top *
[leq]
bot 1
1 top
[objects]
A
B
C
D
[hom]
A A top
A B top
A C 1
A D top
B A bot
B B top
B C bot
B D 1
C A bot
C B bot
C C top
C D top
D A bot
D B bot
D C bot
D D top
)";

MeetSemilattice chain3() {
  return MeetSemilattice::from_leq({"bot", "1", "top"}, 2, {{0, 1}, {1, 2}});
}

}  // namespace

TEST_CASE("the chain lattice validates") {
  auto l = chain3();
  CHECK(l.validate().empty());
  CHECK(l.meet(1, 2) == 1);
  CHECK(l.meet(0, 2) == 0);
  CHECK(l.meet(1, 1) == 1);

  auto single = MeetSemilattice::from_leq({"only"}, 0, {});
  CHECK(single.validate().empty());
}

TEST_CASE("meet table and order derivation agree") {
  auto from_order = chain3();
  // bot/1/top meet table, row-major.
  std::vector<std::size_t> table{0, 0, 0, 0, 1, 1, 0, 1, 2};
  auto from_table = MeetSemilattice::from_meet({"bot", "1", "top"}, 2, table);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(from_order.meet(a, b) == from_table.meet(a, b));
      CHECK(from_order.leq(a, b) == from_table.leq(a, b));
    }
  CHECK(from_table.validate().empty());
}

TEST_CASE("a broken meet table is reported with a witness") {
  std::vector<std::size_t> table{0, 0, 0, 0, 1, 0, 0, 0, 2};  // 1^top = bot
  auto broken = MeetSemilattice::from_meet({"bot", "1", "top"}, 2, table);
  auto violations = broken.validate();
  REQUIRE_FALSE(violations.empty());
  bool found = std::any_of(
      violations.begin(), violations.end(), [](const std::string& v) {
        return v.find("meet not greatest lower bound") != std::string::npos &&
               v.find("(1, top)") != std::string::npos;
      });
  CHECK(found);
}

TEST_CASE("enrichment axioms hold for the four-object graph") {
  auto spec = parse_lattice_spec(kChainSpec);
  CHECK(spec.lattice.validate().empty());
  CHECK(validate_enriched_graph(spec.lattice, spec.graph).empty());
}

TEST_CASE("lowering hom(A,D) breaks the composition axiom with a witness") {
  auto spec = parse_lattice_spec(kChainSpec);
  auto& g = spec.graph;
  g.hom[0 * 4 + 3] = 0;  // hom(A, D) := bot
  auto violations = validate_enriched_graph(spec.lattice, g);
  REQUIRE_FALSE(violations.empty());
  bool found = std::any_of(
      violations.begin(), violations.end(), [](const std::string& v) {
        return v.find("(A, B, D)") != std::string::npos;
      });
  CHECK(found);
}

TEST_CASE("all-top graphs validate trivially") {
  auto l = chain3();
  EnrichedGraph g{{"X", "Y"}, {2, 2, 2, 2}};
  CHECK(validate_enriched_graph(l, g).empty());
}

TEST_CASE("entailment graphs at each level match the fixed tables") {
  auto spec = parse_lattice_spec(kChainSpec);
  const auto& l = spec.lattice;
  const auto& g = spec.graph;

  EdgeSet at_top{{"A", "A"}, {"A", "B"}, {"A", "D"}, {"B", "B"},
                 {"C", "C"}, {"C", "D"}, {"D", "D"}};
  CHECK(param_graph(l, g, *l.index_of("top")) == at_top);
  CHECK(underlying_graph(l, g) == at_top);

  EdgeSet at_one{{"A", "A"}, {"A", "B"}, {"A", "C"}, {"A", "D"}, {"B", "B"},
                 {"B", "D"}, {"C", "C"}, {"C", "D"}, {"D", "D"}};
  CHECK(param_graph(l, g, *l.index_of("1")) == at_one);

  CHECK(param_graph(l, g, *l.index_of("bot")).size() == 16);

  CHECK_THROWS_AS(param_graph(l, g, 99), LatticeError);
}

TEST_CASE("entailment is antitone in the level and transitively closed") {
  auto spec = parse_lattice_spec(kChainSpec);
  const auto& l = spec.lattice;
  const auto& g = spec.graph;
  for (std::size_t p = 0; p < l.size(); ++p) {
    auto edges_p = param_graph(l, g, p);
    for (std::size_t q = 0; q < l.size(); ++q) {
      if (!l.leq(p, q)) continue;
      // p <= q: everything entailed by q is entailed by p.
      for (const auto& e : param_graph(l, g, q))
        CHECK(std::find(edges_p.begin(), edges_p.end(), e) != edges_p.end());
    }
    // Reflexive-transitive closure.
    for (const auto& [x, y] : edges_p)
      for (const auto& [y2, z] : edges_p)
        if (y == y2)
          CHECK(std::find(edges_p.begin(), edges_p.end(),
                          std::make_pair(x, z)) != edges_p.end());
  }
}

TEST_CASE("edge formatting is canonical") {
  EdgeSet edges{{"A", "B"}, {"C", "D"}};
  CHECK(format_edges(edges) == "A -> B\nC -> D\n");
}

TEST_CASE("spec parser rejects malformed input") {
  CHECK_THROWS_AS(parse_lattice_spec("[elements]\n"), LatticeError);
  CHECK_THROWS_AS(parse_lattice_spec("[elements]\na *\nb *\n"), LatticeError);
  CHECK_THROWS_AS(parse_lattice_spec("junk before section\n"), LatticeError);
  CHECK_THROWS_AS(
      parse_lattice_spec("[elements]\na *\n[leq]\n[objects]\nX\n[hom]\n"),
      LatticeError);  // no leq entries and no meet section
  CHECK_THROWS_AS(
      parse_lattice_spec(
          "[elements]\na *\nb\n[leq]\nb a\n[objects]\nX\n[hom]\nX X c\n"),
      LatticeError);  // unknown element in hom
}

TEST_CASE("meet section disagreement with leq is rejected") {
  const char* spec =
      "[elements]\nbot\ntop *\n"
      "[leq]\nbot top\n"
      "[meet]\nbot bot bot\nbot top top\ntop bot bot\ntop top top\n"
      "[objects]\nX\n[hom]\nX X top\n";
  CHECK_THROWS_AS(parse_lattice_spec(spec), LatticeError);
}
