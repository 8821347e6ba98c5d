// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0
//
// The meet-semilattice semantics. These bases have no useful generalized
// elements to evaluate at, so the construction is table-driven: the hom-set
// from X to Y at level p degenerates to the entailment test p <= hom(X, Y).

#ifndef PARAMCAT_LATTICE_HPP_
#define PARAMCAT_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paramcat {

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite meet-semilattice with a top element. Elements are referred to by
/// index; names are kept for reporting and parsing.
class MeetSemilattice {
 public:
  /// Builds from an explicit partial order. `leq_pairs` holds (a, b) with
  /// a <= b; the reflexive-transitive closure is taken, then the meet table
  /// is derived as greatest lower bounds.
  static MeetSemilattice from_leq(
      std::vector<std::string> elements, std::size_t top,
      const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

  /// Builds from an explicit meet table (row-major, n x n); the order is
  /// recovered as a <= b iff meet(a, b) = a.
  static MeetSemilattice from_meet(std::vector<std::string> elements,
                                   std::size_t top,
                                   std::vector<std::size_t> meet_table);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t top() const { return top_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const {
    return meet_[a * size() + b];
  }

  /// Verifies every axiom by exhaustion: partial order (reflexive,
  /// antisymmetric, transitive), meet = greatest lower bound, top greatest.
  /// Returns human-readable violations with witnesses; empty means valid.
  std::vector<std::string> validate() const;

 private:
  std::vector<std::string> names_;
  std::size_t top_ = 0;
  std::vector<bool> leq_;          // row-major adjacency
  std::vector<std::size_t> meet_;  // row-major table
};

/// Objects with lattice-valued hom labels.
struct EnrichedGraph {
  std::vector<std::string> objects;
  std::vector<std::size_t> hom;  // row-major objects x objects -> element

  std::size_t hom_at(std::size_t x, std::size_t y) const {
    return hom[x * objects.size() + y];
  }
};

/// Checks top <= hom(X,X) and meet(hom(Y,Z), hom(X,Y)) <= hom(X,Z) for all
/// triples. Violations carry witnesses; empty means valid.
std::vector<std::string> validate_enriched_graph(const MeetSemilattice& l,
                                                 const EnrichedGraph& g);

using EdgeSet = std::vector<std::pair<std::string, std::string>>;

/// The edges entailed by level p: { (X, Y) : p <= hom(X, Y) }, sorted
/// lexicographically by (X, Y).
EdgeSet param_graph(const MeetSemilattice& l, const EnrichedGraph& g,
                    std::size_t p);

/// param_graph at top: the absolutely-certain edges.
EdgeSet underlying_graph(const MeetSemilattice& l, const EnrichedGraph& g);

std::string format_edges(const EdgeSet& edges);

struct LatticeSpec {
  MeetSemilattice lattice;
  EnrichedGraph graph;
};

/// Parses the lattice/graph spec format:
///   [elements]   one name per line, exactly one marked top with a trailing *
///   [leq]        lines `a b` meaning a <= b   (or instead:)
///   [meet]       lines `a b c` meaning a ^ b = c
///   [objects]    one object name per line
///   [hom]        lines `X Y e`
/// `#` starts a comment. Throws LatticeError on malformed input; lattice or
/// enrichment axiom violations are reported via the validate functions.
LatticeSpec parse_lattice_spec(const std::string& text);

}  // namespace paramcat

#endif  // PARAMCAT_LATTICE_HPP_
