#include "subshift/contexts.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "subshift/error.hpp"

namespace subshift {

TransferProfile::TransferProfile(Word word, std::vector<VertexSet> rows)
    : word_(std::move(word)), rows_(std::move(rows)) {}

TransferProfile TransferProfile::identity(std::size_t vertex_count) {
  std::vector<VertexSet> rows(vertex_count, VertexSet(vertex_count));
  for (std::size_t v = 0; v < vertex_count; ++v) {
    rows[v].insert(v);
  }
  return TransferProfile({}, std::move(rows));
}

bool TransferProfile::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const VertexSet& r) { return r.empty(); });
}

std::vector<std::pair<std::size_t, std::size_t>> TransferProfile::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
  }
  return out;
}

VertexSet TransferProfile::sources() const {
  VertexSet s(rows_.size());
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    if (!rows_[u].empty()) {
      s.insert(u);
    }
  }
  return s;
}

VertexSet TransferProfile::targets() const {
  VertexSet t(rows_.size());
  for (auto const& r : rows_) {
    t |= r;
  }
  return t;
}

VertexSet TransferProfile::image(const VertexSet& from) const {
  VertexSet out(rows_.size());
  from.for_each([&](std::size_t u) { out |= rows_[u]; });
  return out;
}

TransferProfile TransferProfile::then(const TransferProfile& next) const {
  if (next.vertex_count() != vertex_count()) {
    throw InvalidArgument("profiles over different graphs");
  }
  std::vector<VertexSet> rows;
  rows.reserve(rows_.size());
  for (auto const& r : rows_) {
    rows.push_back(next.image(r));
  }
  return TransferProfile(concat(word_, next.word_), std::move(rows));
}

TransferProfile profile(const LabeledGraph& g, const Word& w) {
  g.alphabet().validate(w);
  TransferProfile id = TransferProfile::identity(g.vertex_count());
  std::vector<VertexSet> rows = id.rows();
  for (auto& r : rows) {
    for (Symbol s : w) {
      if (r.empty()) {
        break;
      }
      r = g.step(r, s);
    }
  }
  return TransferProfile(w, std::move(rows));
}

std::size_t max_subsets_from_env() {
  if (char const* env = std::getenv("SUBSHIFT_MAX_SUBSETS")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) {
        return static_cast<std::size_t>(v);
      }
    } catch (std::exception const&) {
    }
    throw InvalidArgument(std::string("SUBSHIFT_MAX_SUBSETS is not a positive integer: ") + env);
  }
  return 65536;
}

namespace {

template <typename Step>
ReachFamily closure(std::size_t n, std::size_t alphabet_size, std::optional<std::size_t> bound,
                    std::size_t max_subsets, bool append, Step step) {
  ReachFamily fam;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
  fam.sets.push_back(VertexSet::full(n));
  fam.witnesses.emplace_back();
  index.emplace(fam.sets.front(), 0);
  std::vector<std::size_t> frontier{0};
  std::size_t length = 0;
  while (!frontier.empty() && (!bound || length < *bound)) {
    std::vector<std::pair<Word, VertexSet>> candidates;
    for (auto id : frontier) {
      for (Symbol s = 0; s < alphabet_size; ++s) {
        VertexSet next = step(fam.sets[id], s);
        if (next.empty() || index.count(next) != 0) {
          continue;
        }
        Word w = append ? concat(fam.witnesses[id], Word{s}) : concat(Word{s}, fam.witnesses[id]);
        candidates.emplace_back(std::move(w), std::move(next));
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    frontier.clear();
    for (auto& [w, set] : candidates) {
      if (index.count(set) != 0) {
        continue;
      }
      index.emplace(set, fam.sets.size());
      frontier.push_back(fam.sets.size());
      fam.sets.push_back(std::move(set));
      fam.witnesses.push_back(std::move(w));
      if (fam.sets.size() > max_subsets) {
        throw LimitExceeded("subset construction exceeded " + std::to_string(max_subsets) +
                            " sets (raise SUBSHIFT_MAX_SUBSETS)");
      }
    }
    ++length;
  }
  return fam;
}

}  // namespace

ReachFamilies reach_families(const LabeledGraph& g, std::optional<std::size_t> bound,
                             std::size_t max_subsets) {
  ReachFamilies r;
  r.bound = bound;
  std::size_t const n = g.vertex_count();
  std::size_t const k = g.alphabet().size();
  r.forward = closure(n, k, bound, max_subsets, true,
                      [&](const VertexSet& s, Symbol a) { return g.step(s, a); });
  r.backward = closure(n, k, bound, max_subsets, false,
                       [&](const VertexSet& s, Symbol a) { return g.step_back(s, a); });
  return r;
}

ContextOracle::ContextOracle(LabeledGraph g, std::optional<std::size_t> bound,
                             std::size_t max_subsets)
    : graph_(std::move(g)), families_(reach_families(graph_, bound, max_subsets)) {}

TransferProfile ContextOracle::checked_profile(const Word& w) const {
  TransferProfile p = subshift::profile(graph_, w);
  if (p.empty()) {
    throw NotInLanguage("word '" + alphabet().format(w) + "' is not in the language");
  }
  return p;
}

std::uint32_t ContextOracle::pattern_id(const VertexSet& image) const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (auto it = image_memo_.find(image); it != image_memo_.end()) {
    return it->second;
  }
  auto const& back = families_.backward.sets;
  std::vector<bool> pattern(back.size());
  for (std::size_t j = 0; j < back.size(); ++j) {
    pattern[j] = image.intersects(back[j]);
  }
  auto [it, inserted] =
      pattern_ids_.emplace(std::move(pattern), static_cast<std::uint32_t>(pattern_ids_.size()));
  image_memo_.emplace(image, it->second);
  return it->second;
}

ContextSignature ContextOracle::signature(const Word& w) const {
  TransferProfile p = checked_profile(w);
  ContextSignature sig;
  sig.reserve(families_.forward.sets.size());
  for (auto const& x : families_.forward.sets) {
    sig.push_back(pattern_id(p.image(x)));
  }
  return sig;
}

std::vector<bool> ContextOracle::one_sided_signature(const Word& w, Side side) const {
  TransferProfile p = checked_profile(w);
  std::vector<bool> sig;
  if (side == Side::Right) {
    VertexSet r = p.targets();
    for (auto const& y : families_.backward.sets) {
      sig.push_back(y.intersects(r));
    }
  } else {
    VertexSet d = p.sources();
    for (auto const& x : families_.forward.sets) {
      sig.push_back(x.intersects(d));
    }
  }
  return sig;
}

SyncVerdict ContextOracle::synchronizing(const Word& w) const {
  TransferProfile p = checked_profile(w);
  VertexSet const r = p.targets();
  auto const& fwd = families_.forward;
  auto const& bwd = families_.backward;
  std::vector<std::size_t> right_ok;
  for (std::size_t j = 0; j < bwd.sets.size(); ++j) {
    if (bwd.sets[j].intersects(r)) {
      right_ok.push_back(j);
    }
  }
  SyncVerdict verdict;
  for (std::size_t i = 0; i < fwd.sets.size(); ++i) {
    VertexSet img = p.image(fwd.sets[i]);
    if (img.empty()) {
      continue;
    }
    for (auto j : right_ok) {
      if (img.intersects(bwd.sets[j])) {
        continue;
      }
      std::size_t at = std::max(fwd.witnesses[i].size(), bwd.witnesses[j].size());
      if (!verdict.refuted_at || at < *verdict.refuted_at) {
        verdict.synchronizing = false;
        verdict.refuted_at = at;
        verdict.left_witness = fwd.witnesses[i];
        verdict.right_witness = bwd.witnesses[j];
      }
    }
  }
  return verdict;
}

bool ContextOracle::equivalent(const Word& w, const Word& v) const {
  return signature(w) == signature(v);
}

bool ContextOracle::one_sided_equivalent(const Word& w, const Word& v, Side side) const {
  return one_sided_signature(w, side) == one_sided_signature(v, side);
}

std::unique_ptr<ContextOracle> make_oracle(const ShiftPresentation& p, std::size_t max_word_len,
                                           const OracleOptions& options) {
  if (p.finite() && !options.force_bounded) {
    return std::make_unique<ContextOracle>(graph_for(p, 0).graph, std::nullopt);
  }
  std::size_t k = options.ext_len.value_or(default_ext_len(max_word_len));
  GraphAccess access = graph_for(p, max_word_len + 2 * k);
  return std::make_unique<ContextOracle>(std::move(access.graph), k);
}

namespace {

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t k) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= k; ++n) {
    auto layer = all_words(alphabet_size, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

void require_in_language(const LabeledGraph& g, const Word& w) {
  if (!w.empty() && !has_path(g, w)) {
    throw NotInLanguage("word '" + g.alphabet().format(w) + "' is not in the language");
  }
}

}  // namespace

BoundedContext bounded_context(const ShiftPresentation& p, const Word& w, std::size_t k) {
  p.alphabet().validate(w);
  LabeledGraph g = graph_for(p, w.size() + 2 * k).graph;
  require_in_language(g, w);
  BoundedContext ctx{w, k, {}, {}, {}};
  auto ext = words_up_to(p.alphabet().size(), k);
  for (auto const& a : ext) {
    if (has_path(g, concat(a, w))) {
      ctx.left.push_back(a);
    }
  }
  for (auto const& b : ext) {
    if (has_path(g, concat(w, b))) {
      ctx.right.push_back(b);
    }
  }
  for (auto const& a : ctx.left) {
    for (auto const& b : ctx.right) {
      if (has_path(g, concat(a, w, b))) {
        ctx.pairs.emplace_back(a, b);
      }
    }
  }
  return ctx;
}

bool is_synchronizing_exact(const LabeledGraph& g, const Word& w) {
  return ContextOracle(g.essential(), std::nullopt).synchronizing(w).synchronizing;
}

bool is_synchronizing_exact(const ShiftPresentation& p, const Word& w) {
  if (!p.finite()) {
    throw InvalidArgument("exact decisions need a finite presentation");
  }
  return make_oracle(p, w.size())->synchronizing(w).synchronizing;
}

BoundedSync is_synchronizing_bounded(const ShiftPresentation& p, const Word& w, std::size_t k) {
  p.alphabet().validate(w);
  auto oracle = make_oracle(p, w.size(), {k, true});
  SyncVerdict v = oracle->synchronizing(w);
  if (v.synchronizing) {
    return {BoundedSync::Kind::ConsistentUpTo, k, {}, {}};
  }
  return {BoundedSync::Kind::Refuted, *v.refuted_at, v.left_witness, v.right_witness};
}

bool context_equivalent_exact(const LabeledGraph& g, const Word& w, const Word& v) {
  return ContextOracle(g.essential(), std::nullopt).equivalent(w, v);
}

bool context_equivalent_exact(const ShiftPresentation& p, const Word& w, const Word& v) {
  if (!p.finite()) {
    throw InvalidArgument("exact decisions need a finite presentation");
  }
  return make_oracle(p, std::max(w.size(), v.size()))->equivalent(w, v);
}

bool context_equivalent_bounded(const ShiftPresentation& p, const Word& w, const Word& v,
                                std::size_t k) {
  return make_oracle(p, std::max(w.size(), v.size()), {k, true})->equivalent(w, v);
}

std::vector<Word> one_sided_context(const ShiftPresentation& p, const Word& w, Side side,
                                    std::size_t k) {
  p.alphabet().validate(w);
  LabeledGraph g = graph_for(p, w.size() + k).graph;
  require_in_language(g, w);
  std::vector<Word> out;
  for (auto const& x : words_up_to(p.alphabet().size(), k)) {
    if (has_path(g, side == Side::Right ? concat(w, x) : concat(x, w))) {
      out.push_back(x);
    }
  }
  return out;
}

bool one_sided_equivalent(const ShiftPresentation& p, const Word& w, const Word& v, Side side,
                          std::size_t k) {
  auto oracle = make_oracle(p, std::max(w.size(), v.size()), {k, false});
  return oracle->one_sided_equivalent(w, v, side);
}

std::vector<ContextClass> partition_by_context(const ContextOracle& oracle,
                                               const std::vector<Word>& words) {
  std::map<ContextSignature, std::vector<Word>> groups;
  for (auto const& w : words) {
    groups[oracle.signature(w)].push_back(w);
  }
  std::vector<ContextClass> classes;
  for (auto& [sig, members] : groups) {
    std::sort(members.begin(), members.end());
    classes.push_back({std::move(members)});
  }
  std::sort(classes.begin(), classes.end(), [](auto const& a, auto const& b) {
    return a.members.front() < b.members.front();
  });
  return classes;
}

std::vector<ContextClass> context_partition(const ShiftPresentation& p, std::size_t n) {
  auto oracle = make_oracle(p, n);
  return partition_by_context(*oracle, enumerate_language(p, n).words);
}

std::vector<ContextClass> context_partition(const LabeledGraph& g, std::size_t n) {
  return context_partition(ShiftPresentation(SoficGraph{g}), n);
}

}  // namespace subshift
