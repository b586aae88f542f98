#include "subshift/ktheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "subshift/contexts.hpp"
#include "subshift/error.hpp"
#include "subshift/zoo.hpp"

namespace subshift {

KSummary k_summary(const BratteliDiagram& d) {
  if (d.levels.size() < 2 || d.matrices.empty()) {
    throw InvalidArgument("k_summary needs a diagram with at least two levels");
  }
  long const wanted = 1L - d.first_index;
  std::size_t const start = static_cast<std::size_t>(
      std::clamp<long>(wanted, 0, static_cast<long>(d.matrices.size()) - 1));
  KSummary k;
  k.first_level = d.index_of_position(start);
  IntMatrix composite = d.matrices[start];
  k.rank_sequence.push_back(rank(composite));
  for (std::size_t t = start + 1; t < d.matrices.size(); ++t) {
    composite = d.matrices[t] * composite;
    k.rank_sequence.push_back(rank(composite));
  }
  k.eventual_rank = k.rank_sequence.back();
  std::size_t tail = k.rank_sequence.size() - 1;
  while (tail > 0 && k.rank_sequence[tail - 1] == k.eventual_rank) {
    --tail;
  }
  k.eventual_level = d.index_of_position(start + tail);
  std::size_t const m = d.matrices.size();
  if (m >= 2 && d.matrices[m - 1] == d.matrices[m - 2]) {
    StationaryPart s;
    s.matrix = d.matrices.back();
    if (s.matrix.square()) {
      s.determinant = determinant(s.matrix);
      s.invertible = abs(*s.determinant) == 1;
    }
    k.stationary = std::move(s);
  }
  k.torsion_note = k.stationary && k.stationary->invertible ? "free" : "undetermined";
  return k;
}

namespace {

// Permutes rows and columns of matrices around level `pos`.
void reorder_level(BratteliDiagram& d, std::size_t pos, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    inverse[order[i]] = i;
  }
  std::vector<LevelVertex> level;
  for (std::size_t i = 0; i < order.size(); ++i) {
    LevelVertex v = d.levels[pos][order[i]];
    v.id = i;
    level.push_back(std::move(v));
  }
  d.levels[pos] = std::move(level);
  if (pos > 0) {
    IntMatrix const& a = d.matrices[pos - 1];
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        b(r, c) = a(order[r], c);
      }
    }
    d.matrices[pos - 1] = std::move(b);
    for (auto& e : d.edges[pos - 1]) {
      e.target = inverse[e.target];
    }
  }
  if (pos < d.matrices.size()) {
    IntMatrix const& a = d.matrices[pos];
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        b(r, c) = a(r, order[c]);
      }
    }
    d.matrices[pos] = std::move(b);
    for (auto& e : d.edges[pos]) {
      e.source = inverse[e.source];
    }
  }
}

std::size_t longest_rep(const BratteliDiagram& d) {
  std::size_t n = 0;
  for (auto const& l : d.levels) {
    for (auto const& v : l) {
      n = std::max(n, v.representative.size());
    }
  }
  return n;
}

}  // namespace

BratteliDiagram pair_canonicalize(const ShiftPresentation& p, const BratteliDiagram& sync,
                                  const BratteliDiagram& lcs, const BratteliDiagram& lcu) {
  if (lcs.kind != DiagramKind::Stable || lcu.kind != DiagramKind::Unstable) {
    throw InvalidArgument("pair_canonicalize needs a stable and an unstable diagram");
  }
  std::size_t const max_len =
      std::max({longest_rep(sync), longest_rep(lcs) + lcs.window.size(),
                longest_rep(lcu) + lcu.window.size()});
  auto oracle = make_oracle(p, max_len);
  std::map<std::vector<bool>, std::size_t> right_index;
  for (auto const& v : lcs.levels.back()) {
    right_index.emplace(oracle->one_sided_signature(concat(lcs.window, v.representative), Side::Right),
                        v.id);
  }
  std::map<std::vector<bool>, std::size_t> left_index;
  for (auto const& v : lcu.levels.back()) {
    left_index.emplace(oracle->one_sided_signature(concat(v.representative, lcu.window), Side::Left),
                       v.id);
  }
  std::size_t const missing = std::max(right_index.size(), left_index.size()) + 1;
  BratteliDiagram out = sync;
  for (std::size_t pos = 0; pos < out.levels.size(); ++pos) {
    if (out.has_root && pos == 0) {
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (auto const& v : out.levels[pos]) {
      auto r = right_index.find(oracle->one_sided_signature(v.representative, Side::Right));
      auto l = left_index.find(oracle->one_sided_signature(v.representative, Side::Left));
      keys.emplace_back(r == right_index.end() ? missing : r->second,
                        l == left_index.end() ? missing : l->second);
    }
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    reorder_level(out, pos, order);
  }
  return out;
}

namespace {

std::optional<IntMatrix> stationary_matrix(const BratteliDiagram& d) {
  std::size_t const m = d.matrices.size();
  if (m >= 2 && d.matrices[m - 1] == d.matrices[m - 2]) {
    return d.matrices.back();
  }
  return std::nullopt;
}

}  // namespace

TensorVerdict tensor_factor_check(const BratteliDiagram& sync, const BratteliDiagram& lcs,
                                  const BratteliDiagram& lcu) {
  TensorVerdict v;
  auto s = stationary_matrix(sync);
  auto a = stationary_matrix(lcs);
  auto b = stationary_matrix(lcu);
  if (!s || !a || !b) {
    v.structural_failure = true;
    v.message = "a diagram is not stationary at the built depth";
    return v;
  }
  v.product = kronecker(*a, *b);
  v.sync = *s;
  if (!v.sync.square() || !v.product.square() || v.sync.rows() != v.product.rows()) {
    v.structural_failure = true;
    v.message = "dimension mismatch: |sync| = " + std::to_string(v.sync.rows()) +
                ", |lcs| * |lcu| = " + std::to_string(v.product.rows());
    return v;
  }
  std::size_t const n = v.sync.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (v.product == v.sync) {
    v.holds = true;
    v.method = "canonical";
    v.permutation = perm;
    v.message = "A_lcs (x) A_lcu = A_sync in pair-canonical order";
    return v;
  }
  if (n > 8) {
    v.message = "canonical order failed and size exceeds the permutation search cap";
    return v;
  }
  do {
    if (permute_similar(v.product, perm) == v.sync) {
      v.holds = true;
      v.method = "search";
      v.permutation = perm;
      v.message = "A_lcs (x) A_lcu is permutation similar to A_sync";
      return v;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  v.message = "no permutation similarity found";
  return v;
}

std::vector<RankGrowthRow> sync_rank_growth(const ShiftPresentation& p, std::size_t n_max) {
  if (n_max == 0) {
    return {};
  }
  BratteliDiagram d = build_blc(p, n_max + 2);
  BratteliDiagram s = restrict_sync(d);
  std::vector<RankGrowthRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    RankGrowthRow row;
    row.n = n;
    auto const& level = d.levels[n + 1];
    row.sync_classes = static_cast<std::size_t>(
        std::count_if(level.begin(), level.end(), [](auto const& v) { return v.sync; }));
    if (row.sync_classes > 0) {
      IntMatrix a = transition_matrix(s, static_cast<int>(n));
      row.rank = rank(a);
    }
    row.full_rank = row.rank == row.sync_classes;
    rows.push_back(row);
  }
  return rows;
}

VlVrVerdict vlvr_correspondence_check(const ShiftPresentation& p, std::size_t n) {
  VlVrVerdict verdict;
  if (p.alphabet() != Alphabet({"a", "b"})) {
    throw InvalidArgument("the V_l x V_r correspondence is defined for the a^n b^n shift");
  }
  std::size_t const len = 2 * n + 1;
  std::size_t const k = 2 * n + 4;
  auto oracle = make_oracle(p, len, {k, true});
  auto classes = partition_by_context(*oracle, path_labels(oracle->graph(), len));
  std::size_t const level = len + 2;
  LabeledGraph gl = zoo::anbn_left_graph(level);
  LabeledGraph gr = zoo::anbn_right_graph(level);
  verdict.bound = (2 * n) * (2 * n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  bool inside = true;
  for (auto const& c : classes) {
    if (!oracle->synchronizing(c.members.front()).synchronizing) {
      continue;
    }
    ++verdict.classes;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (auto const& w : c.members) {
      auto src = profile(gl, w).sources().elements();
      auto dst = profile(gr, w).targets().elements();
      if (src.size() != 1 || dst.size() != 1) {
        verdict.well_defined = false;
        continue;
      }
      std::pair<std::size_t, std::size_t> here{src.front(), dst.front()};
      if (pair && *pair != here) {
        verdict.well_defined = false;
      }
      pair = here;
    }
    if (!pair) {
      continue;
    }
    if (pair->first >= 2 * n || pair->second >= 2 * n) {
      inside = false;
    }
    if (!seen.insert(*pair).second) {
      verdict.injective = false;
    }
    verdict.pairs.emplace_back(gl.vertex_name(pair->first), gr.vertex_name(pair->second));
  }
  verdict.distinct_pairs = seen.size();
  verdict.inside_vn = inside;
  verdict.holds = verdict.well_defined && verdict.injective && verdict.classes <= verdict.bound;
  verdict.message = std::to_string(verdict.classes) + " synchronizing classes, " +
                    std::to_string(verdict.distinct_pairs) + " distinct pairs, bound " +
                    std::to_string(verdict.bound) + (inside ? "" : ", some endpoints outside V^n");
  return verdict;
}

}  // namespace subshift
