// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include "paramcat/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace paramcat {

namespace {

std::vector<bool> closure_from_pairs(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw LatticeError("leq pair index out of range");
    leq[a * n + b] = true;
  }
  // Warshall.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;
  return leq;
}

/// Greatest lower bound of a, b under leq, if one exists.
std::optional<std::size_t> glb(const std::vector<bool>& leq, std::size_t n,
                               std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!leq[c * n + a] || !leq[c * n + b]) continue;
    if (!best || leq[*best * n + c]) best = c;
  }
  if (best)  // must dominate every lower bound
    for (std::size_t c = 0; c < n; ++c)
      if (leq[c * n + a] && leq[c * n + b] && !leq[c * n + *best])
        return std::nullopt;
  return best;
}

}  // namespace

MeetSemilattice MeetSemilattice::from_leq(
    std::vector<std::string> elements, std::size_t top,
    const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs) {
  const std::size_t n = elements.size();
  if (top >= n) throw LatticeError("top index out of range");
  MeetSemilattice l;
  l.names_ = std::move(elements);
  l.top_ = top;
  l.leq_ = closure_from_pairs(n, leq_pairs);
  l.meet_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto m = glb(l.leq_, n, a, b);
      if (!m)
        throw LatticeError("no greatest lower bound for (" + l.names_[a] +
                           ", " + l.names_[b] + ")");
      l.meet_[a * n + b] = *m;
    }
  return l;
}

MeetSemilattice MeetSemilattice::from_meet(std::vector<std::string> elements,
                                           std::size_t top,
                                           std::vector<std::size_t> meet_table) {
  const std::size_t n = elements.size();
  if (top >= n) throw LatticeError("top index out of range");
  if (meet_table.size() != n * n)
    throw LatticeError("meet table has wrong size");
  for (std::size_t v : meet_table)
    if (v >= n) throw LatticeError("meet table entry out of range");
  MeetSemilattice l;
  l.names_ = std::move(elements);
  l.top_ = top;
  l.meet_ = std::move(meet_table);
  l.leq_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      l.leq_[a * n + b] = l.meet_[a * n + b] == a;
  return l;
}

std::optional<std::size_t> MeetSemilattice::index_of(
    const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::string> MeetSemilattice::validate() const {
  std::vector<std::string> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    if (!leq(a, a)) out.push_back("order not reflexive at " + names_[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        out.push_back("order not antisymmetric: " + names_[a] + " ~ " +
                      names_[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          out.push_back("order not transitive: " + names_[a] + " <= " +
                        names_[b] + " <= " + names_[c]);
    }
  for (std::size_t a = 0; a < n; ++a)
    if (!leq(a, top_))
      out.push_back("top not greatest: " + names_[a] + " !<= " + names_[top_]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = meet(a, b);
      bool ok = leq(m, a) && leq(m, b);
      // top is greatest by decree, so glb(a, top) must be a even when the
      // derived order has already been skewed by a bad meet table.
      if (b == top_ && m != a) ok = false;
      if (a == top_ && m != b) ok = false;
      for (std::size_t c = 0; ok && c < n; ++c)
        if (leq(c, a) && leq(c, b) && !leq(c, m)) ok = false;
      if (!ok)
        out.push_back("meet not greatest lower bound at (" + names_[a] + ", " +
                      names_[b] + ")");
    }
  return out;
}

std::vector<std::string> validate_enriched_graph(const MeetSemilattice& l,
                                                 const EnrichedGraph& g) {
  std::vector<std::string> out;
  const std::size_t n = g.objects.size();
  if (g.hom.size() != n * n) {
    out.push_back("hom table has wrong size");
    return out;
  }
  for (std::size_t e : g.hom)
    if (e >= l.size()) {
      out.push_back("hom table entry out of range");
      return out;
    }
  for (std::size_t x = 0; x < n; ++x)
    if (!l.leq(l.top(), g.hom_at(x, x)))
      out.push_back("identity axiom violated at " + g.objects[x] +
                    ": top !<= hom(" + g.objects[x] + ", " + g.objects[x] +
                    ")");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t m = l.meet(g.hom_at(y, z), g.hom_at(x, y));
        if (!l.leq(m, g.hom_at(x, z)))
          out.push_back("composition axiom violated at (" + g.objects[x] +
                        ", " + g.objects[y] + ", " + g.objects[z] + "): " +
                        l.names()[g.hom_at(y, z)] + " ^ " +
                        l.names()[g.hom_at(x, y)] + " !<= " +
                        l.names()[g.hom_at(x, z)]);
      }
  return out;
}

EdgeSet param_graph(const MeetSemilattice& l, const EnrichedGraph& g,
                    std::size_t p) {
  if (p >= l.size()) throw LatticeError("unknown lattice element");
  EdgeSet edges;
  for (std::size_t x = 0; x < g.objects.size(); ++x)
    for (std::size_t y = 0; y < g.objects.size(); ++y)
      if (l.leq(p, g.hom_at(x, y)))
        edges.emplace_back(g.objects[x], g.objects[y]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

EdgeSet underlying_graph(const MeetSemilattice& l, const EnrichedGraph& g) {
  return param_graph(l, g, l.top());
}

std::string format_edges(const EdgeSet& edges) {
  std::string out;
  for (const auto& [x, y] : edges) out += x + " -> " + y + "\n";
  return out;
}

LatticeSpec parse_lattice_spec(const std::string& text) {
  std::vector<std::string> elements;
  std::optional<std::size_t> top;
  std::vector<std::pair<std::string, std::string>> leq_names;
  std::vector<std::tuple<std::string, std::string, std::string>> meet_triples;
  std::vector<std::string> objects;
  std::vector<std::tuple<std::string, std::string, std::string>> hom_triples;

  enum class Section { none, elements, leq, meet, objects, hom };
  Section sec = Section::none;

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0].front() == '[') {
      const std::string& s = toks[0];
      if (s == "[elements]") sec = Section::elements;
      else if (s == "[leq]") sec = Section::leq;
      else if (s == "[meet]") sec = Section::meet;
      else if (s == "[objects]") sec = Section::objects;
      else if (s == "[hom]") sec = Section::hom;
      else
        throw LatticeError("line " + std::to_string(lineno) +
                           ": unknown section " + s);
      continue;
    }
    switch (sec) {
      case Section::none:
        throw LatticeError("line " + std::to_string(lineno) +
                           ": content before any section header");
      case Section::elements: {
        bool is_top = toks.size() == 2 && toks[1] == "*";
        if (toks.size() > 2 || (toks.size() == 2 && !is_top))
          throw LatticeError("line " + std::to_string(lineno) +
                             ": expected `name` or `name *`");
        if (is_top) {
          if (top)
            throw LatticeError("line " + std::to_string(lineno) +
                               ": more than one top element");
          top = elements.size();
        }
        elements.push_back(toks[0]);
        break;
      }
      case Section::leq:
        if (toks.size() != 2)
          throw LatticeError("line " + std::to_string(lineno) +
                             ": leq entries are pairs `a b`");
        leq_names.emplace_back(toks[0], toks[1]);
        break;
      case Section::meet:
        if (toks.size() != 3)
          throw LatticeError("line " + std::to_string(lineno) +
                             ": meet entries are triples `a b c`");
        meet_triples.emplace_back(toks[0], toks[1], toks[2]);
        break;
      case Section::objects:
        if (toks.size() != 1)
          throw LatticeError("line " + std::to_string(lineno) +
                             ": one object name per line");
        objects.push_back(toks[0]);
        break;
      case Section::hom:
        if (toks.size() != 3)
          throw LatticeError("line " + std::to_string(lineno) +
                             ": hom entries are triples `X Y element`");
        hom_triples.emplace_back(toks[0], toks[1], toks[2]);
        break;
    }
  }

  if (elements.empty()) throw LatticeError("no [elements] section");
  if (!top) throw LatticeError("no element marked as top (trailing *)");
  if (objects.empty()) throw LatticeError("no [objects] section");

  auto elem_index = [&elements](const std::string& name,
                                const char* what) -> std::size_t {
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end())
      throw LatticeError(std::string(what) + ": unknown element " + name);
    return static_cast<std::size_t>(it - elements.begin());
  };

  std::vector<std::pair<std::size_t, std::size_t>> leq_pairs;
  for (const auto& [a, b] : leq_names)
    leq_pairs.emplace_back(elem_index(a, "leq"), elem_index(b, "leq"));

  MeetSemilattice lattice = [&]() {
    if (!meet_triples.empty()) {
      const std::size_t n = elements.size();
      std::vector<std::size_t> table(n * n, n);  // n = unset sentinel
      for (const auto& [a, b, c] : meet_triples)
        table[elem_index(a, "meet") * n + elem_index(b, "meet")] =
            elem_index(c, "meet");
      for (std::size_t v : table)
        if (v == n) throw LatticeError("meet table is incomplete");
      MeetSemilattice from_table =
          MeetSemilattice::from_meet(elements, *top, std::move(table));
      if (!leq_pairs.empty()) {
        // When both sections are present they must agree.
        MeetSemilattice from_order =
            MeetSemilattice::from_leq(elements, *top, leq_pairs);
        for (std::size_t a = 0; a < elements.size(); ++a)
          for (std::size_t b = 0; b < elements.size(); ++b)
            if (from_table.meet(a, b) != from_order.meet(a, b))
              throw LatticeError("meet table disagrees with leq at (" +
                                 elements[a] + ", " + elements[b] + ")");
      }
      return from_table;
    }
    if (leq_pairs.empty())
      throw LatticeError("need a [leq] or [meet] section");
    return MeetSemilattice::from_leq(elements, *top, leq_pairs);
  }();

  const std::size_t n = objects.size();
  std::vector<std::size_t> hom(n * n, lattice.size());  // sentinel
  auto obj_index = [&objects](const std::string& name) -> std::size_t {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end())
      throw LatticeError("hom: unknown object " + name);
    return static_cast<std::size_t>(it - objects.begin());
  };
  for (const auto& [x, y, e] : hom_triples)
    hom[obj_index(x) * n + obj_index(y)] = elem_index(e, "hom");
  for (std::size_t v : hom)
    if (v == lattice.size()) throw LatticeError("hom table is incomplete");

  return {std::move(lattice), EnrichedGraph{std::move(objects), std::move(hom)}};
}

}  // namespace paramcat
