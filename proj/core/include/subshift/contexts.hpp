#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/labeled_graph.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

enum class Side { Left, Right };

// The relation {(u, v) : some path labeled `word` runs from u to v}.
class TransferProfile {
 public:
  TransferProfile() = default;
  TransferProfile(Word word, std::vector<VertexSet> rows);
  static TransferProfile identity(std::size_t vertex_count);

  const Word& word() const noexcept { return word_; }
  std::size_t vertex_count() const noexcept { return rows_.size(); }
  const std::vector<VertexSet>& rows() const noexcept { return rows_; }

  bool contains(std::size_t u, std::size_t v) const { return rows_.at(u).contains(v); }
  bool empty() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  VertexSet sources() const;
  VertexSet targets() const;
  VertexSet image(const VertexSet& from) const;

  // Relational composition: this profile followed by `next`.
  TransferProfile then(const TransferProfile& next) const;

  bool same_relation(const TransferProfile& other) const { return rows_ == other.rows_; }

 private:
  Word word_;
  std::vector<VertexSet> rows_;
};

TransferProfile profile(const LabeledGraph& g, const Word& w);

// Subsets reachable from the full vertex set by one-symbol transfer, with
// the shortlex-least word realising each one.
struct ReachFamily {
  std::vector<VertexSet> sets;
  std::vector<Word> witnesses;
};

struct ReachFamilies {
  ReachFamily forward;   // endpoint sets F(a)
  ReachFamily backward;  // start-point sets B(b)
  std::optional<std::size_t> bound;
};

// Closure under transfer when `bound` is empty, otherwise words of length
// at most `bound`. Throws LimitExceeded beyond `max_subsets` sets.
ReachFamilies reach_families(const LabeledGraph& g, std::optional<std::size_t> bound,
                             std::size_t max_subsets);

// SUBSHIFT_MAX_SUBSETS, default 65536.
std::size_t max_subsets_from_env();

struct SyncVerdict {
  bool synchronizing = true;
  // Least k with a refutation inside extensions of length <= k.
  std::optional<std::size_t> refuted_at;
  // (left_witness, e) and (e, right_witness) lie in E(w) but
  // (left_witness, right_witness) does not.
  Word left_witness;
  Word right_witness;
};

using ContextSignature = std::vector<std::uint32_t>;

// Decides context questions for words on a fixed finite graph. With no
// bound the answers are exact for the shift presented by the graph;
// with bound k they concern extensions of length at most k.
class ContextOracle {
 public:
  ContextOracle(LabeledGraph g, std::optional<std::size_t> bound,
                std::size_t max_subsets = max_subsets_from_env());

  const LabeledGraph& graph() const noexcept { return graph_; }
  const Alphabet& alphabet() const noexcept { return graph_.alphabet(); }
  std::optional<std::size_t> bound() const noexcept { return families_.bound; }
  bool exact() const noexcept { return !families_.bound.has_value(); }
  const ReachFamilies& families() const noexcept { return families_; }

  bool contains(const Word& w) const { return w.empty() || has_path(graph_, w); }
  TransferProfile profile(const Word& w) const { return subshift::profile(graph_, w); }

  SyncVerdict synchronizing(const Word& w) const;

  // Equal signatures <=> equal (bounded) contexts.
  ContextSignature signature(const Word& w) const;
  std::vector<bool> one_sided_signature(const Word& w, Side side) const;

  bool equivalent(const Word& w, const Word& v) const;
  bool one_sided_equivalent(const Word& w, const Word& v, Side side) const;

 private:
  TransferProfile checked_profile(const Word& w) const;
  std::uint32_t pattern_id(const VertexSet& image) const;

  LabeledGraph graph_;
  ReachFamilies families_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> image_memo_;
  mutable std::map<std::vector<bool>, std::uint32_t> pattern_ids_;
};

struct OracleOptions {
  std::optional<std::size_t> ext_len;
  bool force_bounded = false;
};

// Default bounded extension length for words of length n.
constexpr std::size_t default_ext_len(std::size_t n) { return 2 * n + 4; }

// An oracle able to answer questions about words of length <= max_word_len:
// exact for finite presentations, bounded otherwise.
std::unique_ptr<ContextOracle> make_oracle(const ShiftPresentation& p, std::size_t max_word_len,
                                           const OracleOptions& options = {});

struct BoundedContext {
  Word word;
  std::size_t ext_len = 0;
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<Word> left;
  std::vector<Word> right;
};

// Exhaustive over extensions of length <= k.
BoundedContext bounded_context(const ShiftPresentation& p, const Word& w, std::size_t k);

bool is_synchronizing_exact(const LabeledGraph& g, const Word& w);
bool is_synchronizing_exact(const ShiftPresentation& p, const Word& w);

struct BoundedSync {
  enum class Kind { Refuted, ConsistentUpTo };
  Kind kind = Kind::ConsistentUpTo;
  std::size_t k = 0;  // refuting length, or the bound checked
  Word left_witness;
  Word right_witness;
  bool refuted() const noexcept { return kind == Kind::Refuted; }
};

BoundedSync is_synchronizing_bounded(const ShiftPresentation& p, const Word& w, std::size_t k);

bool context_equivalent_exact(const LabeledGraph& g, const Word& w, const Word& v);
bool context_equivalent_exact(const ShiftPresentation& p, const Word& w, const Word& v);
bool context_equivalent_bounded(const ShiftPresentation& p, const Word& w, const Word& v,
                                std::size_t k);

// E+_k(w) (right) or E-_k(w) (left), lexicographic.
std::vector<Word> one_sided_context(const ShiftPresentation& p, const Word& w, Side side,
                                    std::size_t k);
// Exact for finite presentations, bounded by k otherwise.
bool one_sided_equivalent(const ShiftPresentation& p, const Word& w, const Word& v, Side side,
                          std::size_t k);

struct ContextClass {
  std::vector<Word> members;  // lexicographic; members.front() is the representative
};

// Groups words by oracle signature; classes ordered by representative.
std::vector<ContextClass> partition_by_context(const ContextOracle& oracle,
                                               const std::vector<Word>& words);
std::vector<ContextClass> context_partition(const ShiftPresentation& p, std::size_t n);
std::vector<ContextClass> context_partition(const LabeledGraph& g, std::size_t n);

}  // namespace subshift
