#pragma once

// Quivers, paths, and presentations of path algebras by relations with a
// declared truncation length.

#include "moritakit/scalar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace moritakit {

class QuiverError : public std::runtime_error {
public:
  explicit QuiverError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Quiver {
  struct Arrow {
    std::string label;
    int source = 0;
    int target = 0;
  };

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    throw QuiverError("unknown vertex: " + label);
  }

  int arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    throw QuiverError("unknown arrow: " + label);
  }

  void validate() const {
    std::map<std::string, int> seen;
    for (const auto& v : vertices)
      if (++seen[v] > 1) throw QuiverError("duplicate vertex label: " + v);
    for (const auto& a : arrows) {
      if (++seen[a.label] > 1) throw QuiverError("duplicate label: " + a.label);
      if (a.source < 0 || a.source >= static_cast<int>(vertices.size()) ||
          a.target < 0 || a.target >= static_cast<int>(vertices.size()))
        throw QuiverError("arrow " + a.label + " has undeclared endpoint");
    }
  }
};

/// A path is a composable arrow sequence read left to right; an empty
/// sequence is the lazy path at a vertex.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }

  static Path vertex(int v) { return Path{v, v, {}}; }

  static Path of_arrows(const Quiver& q, const std::vector<int>& seq) {
    if (seq.empty()) throw QuiverError("empty arrow sequence has no endpoints");
    Path p;
    p.source = q.arrows[seq.front()].source;
    int at = p.source;
    for (int a : seq) {
      if (q.arrows[a].source != at)
        throw QuiverError("arrows " + q.arrows[a].label + " not composable in sequence");
      at = q.arrows[a].target;
    }
    p.target = at;
    p.arrows = seq;
    return p;
  }

  std::string label(const Quiver& q) const {
    if (arrows.empty()) return q.vertices[source];
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (i) s += "*";
      s += q.arrows[arrows[i]].label;
    }
    return s;
  }

  bool operator==(const Path& o) const {
    return source == o.source && arrows == o.arrows;
  }

  // (length, source, lexicographic arrow sequence); the basis order.
  bool operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;
  }
};

template <typename K>
struct Relation {
  struct Term {
    K coefficient;
    Path path;
  };
  std::vector<Term> terms;
};

template <typename K>
struct Presentation {
  Quiver quiver;
  std::vector<Relation<K>> relations;
  int truncation_length = 2;
};

/// All paths of length < maxlen in the canonical basis order.
inline std::vector<Path> enumerate_paths(const Quiver& q, int maxlen) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    layer.push_back(Path::vertex(v));
  for (int len = 0; len < maxlen; ++len) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.target) {
          Path ext = p;
          ext.arrows.push_back(static_cast<int>(a));
          ext.target = q.arrows[a].target;
          next.push_back(ext);
        }
    layer = std::move(next);
  }
  return all;
}

}  // namespace moritakit
