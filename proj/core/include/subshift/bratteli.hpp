#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/contexts.hpp"
#include "subshift/int_matrix.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

enum class DiagramKind { Homoclinic, Stable, Unstable };

std::string to_string(DiagramKind kind);
DiagramKind diagram_kind_from_string(const std::string& name);

struct LevelVertex {
  std::size_t id = 0;
  Word representative;
  bool sync = false;
  std::vector<Word> members;
};

struct DiagramEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

// p_i = period[(i + offset) mod |period|].
struct PeriodicPoint {
  Word period;
  long offset = 0;

  Symbol at(long i) const;
  // p_[from, to], inclusive.
  Word window(long from, long to) const;
  bool operator==(const PeriodicPoint&) const = default;
};

struct BratteliDiagram {
  DiagramKind kind = DiagramKind::Homoclinic;
  Alphabet alphabet;
  bool has_root = true;
  bool sync_restricted = false;
  // Level index of levels[0]: -1 for B^lc, -N for B^lcs_N and B^lcu_N.
  int first_index = -1;
  std::vector<std::vector<LevelVertex>> levels;
  // matrices[i] maps levels[i] to levels[i + 1], indexed [target][source].
  std::vector<IntMatrix> matrices;
  std::vector<std::vector<DiagramEdge>> edges;
  std::vector<std::string> certainty;
  std::optional<PeriodicPoint> point;
  std::size_t ray_offset = 0;
  // Synchronizing window of the ray: ends at p_{-N} (stable) or starts at
  // p_N (unstable).
  Word window;

  std::vector<std::size_t> level_sizes() const;
  int index_of_position(std::size_t position) const {
    return first_index + static_cast<int>(position);
  }
};

struct BuildOptions {
  std::optional<std::size_t> ext_len;
};

// Levels V_{-1} = {*}, V_0, ..., V_{depth-1}, where V_n = L_{2n+1} / context.
BratteliDiagram build_blc(const ShiftPresentation& p, std::size_t depth,
                          const BuildOptions& options = {});

BratteliDiagram restrict_sync(const BratteliDiagram& d);

// Root is the ray; level i holds length-i right (stable) or left (unstable)
// extensions under one-sided context equivalence, i = 1..depth.
BratteliDiagram build_blcs(const ShiftPresentation& p, const PeriodicPoint& point, std::size_t n,
                           std::size_t depth, const BuildOptions& options = {});
BratteliDiagram build_blcu(const ShiftPresentation& p, const PeriodicPoint& point, std::size_t n,
                           std::size_t depth, const BuildOptions& options = {});

struct LevelMap {
  // maps[i][v]: position of the image of vertex v of levels[i] of the
  // source diagram inside levels[i + shift] of the target diagram.
  std::vector<std::vector<std::size_t>> maps;
  std::size_t shift = 0;
  bool injective = true;
  bool edge_consistent = true;
};

LevelMap level_inclusion(const BratteliDiagram& from, const BratteliDiagram& to);

// Transition matrix out of the level with level index n.
IntMatrix transition_matrix(const BratteliDiagram& d, int n);

std::string export_dot(const BratteliDiagram& d);
std::string export_json(const BratteliDiagram& d);
BratteliDiagram import_json(const std::string& text);

}  // namespace subshift
