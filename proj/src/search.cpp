#include "nht/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "nht/classify.hpp"
#include "nht/io.hpp"

namespace nht {

namespace {

constexpr int kHardSearchBound = 13;

BitRow bit(int v) { return BitRow{1} << v; }

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  bool feasible = true;
};

DegreeWindow degree_window(int n, Filter f) {
  const int k = n / 2;
  const int half = (n - 1) / 2;
  switch (f) {
    case Filter::None: return {0, n - 1, true};
    case Filter::AlmostRegular: return {k - 1, k, n % 2 == 0};
    case Filter::NearHomogeneous4t2: return {k - 1, k, n % 4 == 2 && n >= 6};
    case Filter::NearHomogeneous4t: return {k - 1, k, n % 4 == 0 && n >= 4};
    case Filter::NearHomogeneous4t1: return {half, half, n % 4 == 1 && n >= 5};
    case Filter::Homogeneous: return {half, half, n % 4 == 3};
  }
  return {};
}

// Range every cyclic index must fall in under the filter.
std::pair<int, int> lambda_window(int n, Filter f) {
  const int t = derived_t(n);
  switch (f) {
    case Filter::Homogeneous: return {t + 1, t + 1};
    case Filter::NearHomogeneous4t1:
    case Filter::NearHomogeneous4t2: return {t, t + 1};
    case Filter::NearHomogeneous4t: return {0, t + 1};
    default: return {0, n};
  }
}

using LeafVisitor = std::function<bool(const Tournament&)>;

class Backtracker {
 public:
  Backtracker(int n, Filter filter, bool prune, SearchStats& stats, const LeafVisitor& visit)
      : n_(n),
        filter_(filter),
        prune_(prune),
        window_(degree_window(n, filter)),
        lambdas_(lambda_window(n, filter)),
        k_(n / 2),
        t_(derived_t(n)),
        out_(n, 0),
        in_(n, 0),
        out_degree_(n, 0),
        remaining_(n, n - 1),
        stats_(stats),
        visit_(visit) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
    }
  }

  int shard_count() const { return n_ <= 1 ? 1 : 1 << (n_ - 1); }

  // Shard s fixes row 0: pair (0,j) is oriented 0->j iff bit n-1-j of s is set,
  // so shard order is adjacency order.
  void run_shard(int shard) {
    if (!window_.feasible && prune_) return;
    if (n_ <= 1) {
      leaf();
      return;
    }
    int placed = 0;
    bool ok = true;
    for (int j = 1; j < n_ && ok; ++j) {
      const bool forward = (shard >> (n_ - 1 - j)) & 1;
      ok = place(placed, forward);
      ++placed;
    }
    if (ok) recurse(placed);
    for (int p = placed - 1; p >= 0; --p) unplace(p);
  }

  bool stopped() const { return stop_; }

 private:
  // Orients pair p and reports whether the branch survives pruning.
  bool place(int p, bool forward) {
    ++stats_.nodes;
    const auto [i, j] = pairs_[p];
    const int tail = forward ? i : j;
    const int head = forward ? j : i;
    out_[tail] |= bit(head);
    in_[head] |= bit(tail);
    ++out_degree_[tail];
    --remaining_[i];
    --remaining_[j];
    if (j == n_ - 1) zero_added_[i] = 0;
    if (!prune_) return true;
    if (!degree_ok(i) || !degree_ok(j)) return false;
    if (j == n_ - 1 && i < n_ - 2) return row_complete(i);
    return true;
  }

  void unplace(int p) {
    const auto [i, j] = pairs_[p];
    const bool forward = (out_[i] >> j) & 1;
    const int tail = forward ? i : j;
    const int head = forward ? j : i;
    out_[tail] &= ~bit(head);
    in_[head] &= ~bit(tail);
    --out_degree_[tail];
    ++remaining_[i];
    ++remaining_[j];
    if (j == n_ - 1) zero_c_arcs_ -= zero_added_[i];
  }

  bool degree_ok(int v) const {
    return out_degree_[v] <= window_.hi && out_degree_[v] + remaining_[v] >= window_.lo;
  }

  // Vertices 0..i now have every arc decided.
  bool row_complete(int i) {
    if (filter_ == Filter::None || filter_ == Filter::AlmostRegular) return true;
    for (int h = 0; h < i; ++h) {
      const int u = (out_[h] >> i) & 1 ? h : i;
      const int v = u == h ? i : h;
      if (!complete_arc_ok(u, v, i)) return false;
    }
    const BitRow done = i + 1 >= 64 ? ~BitRow{0} : bit(i + 1) - 1;
    const BitRow open = ~done & (n_ >= 64 ? ~BitRow{0} : bit(n_) - 1);
    for (int h = 0; h <= i; ++h) {
      for (int w = i + 1; w < n_; ++w) {
        const BitRow rest = open & ~bit(w);
        int lo = 0;
        int hi = 0;
        if ((out_[h] >> w) & 1) {
          lo = std::popcount(out_[w] & in_[h]);
          hi = lo + std::popcount(in_[h] & rest);
        } else {
          lo = std::popcount(out_[h] & in_[w]);
          hi = lo + std::popcount(out_[h] & rest);
        }
        if (hi < lambdas_.first || lo > lambdas_.second) return false;
      }
    }
    return true;
  }

  bool complete_arc_ok(int u, int v, int row) {
    const int lambda = std::popcount(out_[v] & in_[u]);
    switch (filter_) {
      case Filter::Homogeneous:
      case Filter::NearHomogeneous4t1:
        return lambda >= lambdas_.first && lambda <= lambdas_.second;
      case Filter::NearHomogeneous4t2: {
        const bool c_arc = out_degree_[u] == k_ && out_degree_[v] == k_ - 1;
        return lambda == (c_arc ? t_ : t_ + 1);
      }
      case Filter::NearHomogeneous4t: {
        const bool tail_high = out_degree_[u] == k_;
        const bool head_high = out_degree_[v] == k_;
        if (!tail_high && head_high) return lambda == t_ + 1;
        if (tail_high && !head_high && lambda == 0) {
          ++zero_added_[row];
          return ++zero_c_arcs_ <= 1;
        }
        return lambda == t_;
      }
      default: return true;
    }
  }

  void recurse(int p) {
    if (stop_) return;
    if (p == static_cast<int>(pairs_.size())) {
      leaf();
      return;
    }
    for (const bool forward : {false, true}) {
      if (place(p, forward)) recurse(p + 1);
      unplace(p);
      if (stop_) return;
    }
  }

  void leaf() {
    ++stats_.visited;
    Tournament t = Tournament::from_out_rows(n_, out_);
    if (!passes(t, filter_)) return;
    ++stats_.passing;
    if (!visit_(t)) stop_ = true;
  }

  int n_;
  Filter filter_;
  bool prune_;
  DegreeWindow window_;
  std::pair<int, int> lambdas_;
  int k_;
  int t_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<BitRow> out_;
  std::vector<BitRow> in_;
  std::vector<int> out_degree_;
  std::vector<int> remaining_;
  std::array<int, 64> zero_added_{};
  int zero_c_arcs_ = 0;
  bool stop_ = false;
  SearchStats& stats_;
  const LeafVisitor& visit_;
};

void validate(const SearchSpec& spec, const SearchOptions& options) {
  if (spec.order <= 0) throw Error(ErrorCode::InvalidOrder, "search order must be positive");
  const int bound = options.max_order.value_or(spec.filter == Filter::None ? kUnfilteredSearchBound
                                                                            : kFilteredSearchBound);
  if (spec.order > bound || spec.order > kHardSearchBound) {
    throw Error(ErrorCode::OrderTooLarge, "search order " + std::to_string(spec.order) +
                                              " exceeds the exhaustive bound " +
                                              std::to_string(std::min(bound, kHardSearchBound)));
  }
  if (spec.dedup && spec.order > kCanonicalBound) {
    throw Error(ErrorCode::OrderTooLarge, "dedup needs order <= " + std::to_string(kCanonicalBound));
  }
}

struct ShardResult {
  SearchStats stats;
  std::vector<Tournament> items;  // raw, or one representative per class with dedup
  std::vector<CanonicalForm> forms;  // parallel to items when known
};

ShardResult run_one_shard(const SearchSpec& spec, bool prune, int shard) {
  ShardResult r;
  std::map<CanonicalForm, Tournament> classes;
  const LeafVisitor collect = [&](const Tournament& t) {
    if (spec.dedup) {
      Canonicalized c = canonicalize(t);
      classes.try_emplace(std::move(c.form), std::move(c.representative));
    } else {
      r.items.push_back(t);
    }
    return true;
  };
  Backtracker bt(spec.order, spec.filter, prune, r.stats, collect);
  bt.run_shard(shard);
  for (auto& [form, rep] : classes) {
    r.forms.push_back(form);
    r.items.push_back(std::move(rep));
  }
  return r;
}

std::string checkpoint_header(const SearchSpec& spec, bool prune) {
  return "# nht-search order=" + std::to_string(spec.order) + " filter=" +
         std::string(to_string(spec.filter)) + " dedup=" + (spec.dedup ? "1" : "0") +
         " prune=" + (prune ? "1" : "0");
}

std::map<int, ShardResult> load_checkpoint(const std::string& path, const SearchSpec& spec, bool prune) {
  std::map<int, ShardResult> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != checkpoint_header(spec, prune)) {
    throw Error(ErrorCode::ParseError, "checkpoint " + path + " belongs to a different search");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    int shard = 0;
    std::size_t count = 0;
    ShardResult r;
    if (!(fields >> tag >> shard >> r.stats.nodes >> r.stats.visited >> r.stats.passing >> count) ||
        tag != "shard") {
      throw Error(ErrorCode::ParseError, "bad checkpoint record '" + line + "'");
    }
    bool complete = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) {
        complete = false;
        break;
      }
      r.items.push_back(parse_digraph6(line));
    }
    // A record cut short by an interrupted write is simply redone.
    if (complete) done[shard] = std::move(r);
  }
  return done;
}

void append_checkpoint(std::ofstream& out, int shard, const ShardResult& r) {
  out << "shard " << shard << ' ' << r.stats.nodes << ' ' << r.stats.visited << ' '
      << r.stats.passing << ' ' << r.items.size() << '\n';
  for (const Tournament& t : r.items) out << to_digraph6(t);
  out.flush();
}

}  // namespace

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  visited += o.visited;
  passing += o.passing;
  classes += o.classes;
  return *this;
}

std::string_view to_string(Filter f) {
  switch (f) {
    case Filter::None: return "none";
    case Filter::AlmostRegular: return "almost_regular";
    case Filter::NearHomogeneous4t1: return "nh_4t1";
    case Filter::NearHomogeneous4t2: return "nh_4t2";
    case Filter::NearHomogeneous4t: return "nh_4t";
    case Filter::Homogeneous: return "homogeneous";
  }
  return "none";
}

std::optional<Filter> parse_filter(std::string_view name) {
  for (Filter f : {Filter::None, Filter::AlmostRegular, Filter::NearHomogeneous4t1,
                   Filter::NearHomogeneous4t2, Filter::NearHomogeneous4t, Filter::Homogeneous}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

bool passes(const Tournament& t, Filter f) {
  switch (f) {
    case Filter::None: return true;
    case Filter::AlmostRegular: return is_almost_regular(t).holds;
    case Filter::NearHomogeneous4t1: return is_near_homogeneous_4t1(t).holds;
    case Filter::NearHomogeneous4t2: return is_near_homogeneous_4t2(t).holds;
    case Filter::NearHomogeneous4t: return is_near_homogeneous_4t(t).holds;
    case Filter::Homogeneous: return is_homogeneous(t).holds;
  }
  return false;
}

std::string adjacency_key(const Tournament& t) {
  std::string key;
  key.reserve(static_cast<std::size_t>(t.order()) * t.order());
  for (Vertex u = 0; u < t.order(); ++u) {
    for (Vertex v = 0; v < t.order(); ++v) key.push_back(t.beats(u, v) ? '1' : '0');
  }
  return key;
}

SearchStats for_each_tournament(const SearchSpec& spec,
                                const std::function<bool(const Tournament&)>& visitor,
                                const SearchOptions& options) {
  validate(spec, options);
  SearchStats stats;
  std::size_t emitted = 0;
  const LeafVisitor limited = [&](const Tournament& t) {
    ++emitted;
    const bool keep_going = visitor(t);
    return keep_going && (!spec.limit || emitted < *spec.limit);
  };
  if (spec.limit && *spec.limit == 0) return stats;
  Backtracker bt(spec.order, spec.filter, options.prune, stats, limited);
  for (int s = 0; s < bt.shard_count() && !bt.stopped(); ++s) bt.run_shard(s);
  return stats;
}

SearchResult enumerate(const SearchSpec& spec, const SearchOptions& options) {
  validate(spec, options);
  const int shards = spec.order <= 1 ? 1 : 1 << (spec.order - 1);

  std::vector<std::optional<ShardResult>> slots(shards);
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    for (auto& [shard, r] : load_checkpoint(options.checkpoint_path, spec, options.prune)) {
      if (shard >= 0 && shard < shards) slots[shard] = std::move(r);
    }
    const bool fresh = !std::ifstream(options.checkpoint_path).good();
    checkpoint.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint) throw Error(ErrorCode::ParseError, "cannot write checkpoint " + options.checkpoint_path);
    if (fresh) checkpoint << checkpoint_header(spec, options.prune) << '\n' << std::flush;
  }

  // Shards are merged strictly in index order so the output, the counts and
  // the point where a limit cuts the search are the same for any job count.
  std::mutex mutex;
  SearchResult result;
  std::map<CanonicalForm, Tournament> classes;
  std::size_t produced = 0;
  int next_merge = 0;
  bool limit_hit = spec.limit && *spec.limit == 0;
  auto merge_ready = [&] {
    while (!limit_hit && next_merge < shards && slots[next_merge]) {
      ShardResult& r = *slots[next_merge];
      result.stats += r.stats;
      for (std::size_t i = 0; i < r.items.size(); ++i) {
        Tournament& t = r.items[i];
        if (spec.dedup) {
          CanonicalForm form = i < r.forms.size() ? std::move(r.forms[i]) : canonical(t);
          classes.try_emplace(std::move(form), std::move(t));
        } else {
          result.tournaments.push_back(std::move(t));
        }
      }
      r.items.clear();
      r.forms.clear();
      produced = spec.dedup ? classes.size() : result.tournaments.size();
      ++next_merge;
      if (spec.limit && produced >= *spec.limit) limit_hit = true;
    }
  };

  {
    std::lock_guard lock(mutex);
    merge_ready();
  }
  std::atomic<int> next_shard{0};
  auto worker = [&] {
    for (;;) {
      const int s = next_shard.fetch_add(1);
      if (s >= shards) return;
      {
        std::lock_guard lock(mutex);
        if (limit_hit) return;
        if (slots[s]) continue;
      }
      ShardResult r = run_one_shard(spec, options.prune, s);
      std::lock_guard lock(mutex);
      if (checkpoint.is_open()) append_checkpoint(checkpoint, s, r);
      slots[s] = std::move(r);
      merge_ready();
    }
  };
  const int jobs = std::max(1, std::min(options.jobs, shards));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
  }

  if (spec.dedup) {
    result.stats.classes = classes.size();
    for (auto& [form, rep] : classes) result.tournaments.push_back(std::move(rep));
    std::vector<std::pair<std::string, std::size_t>> order;
    order.reserve(result.tournaments.size());
    for (std::size_t i = 0; i < result.tournaments.size(); ++i) {
      order.emplace_back(adjacency_key(result.tournaments[i]), i);
    }
    std::sort(order.begin(), order.end());
    std::vector<Tournament> sorted;
    sorted.reserve(order.size());
    for (const auto& [key, i] : order) sorted.push_back(std::move(result.tournaments[i]));
    result.tournaments = std::move(sorted);
  }
  if (spec.limit && result.tournaments.size() > *spec.limit) {
    result.tournaments.erase(result.tournaments.begin() + static_cast<std::ptrdiff_t>(*spec.limit),
                             result.tournaments.end());
  }
  return result;
}

std::string summary_line(const SearchSpec& spec, const SearchStats& stats) {
  std::string line = "order=" + std::to_string(spec.order) + " filter=" + std::string(to_string(spec.filter)) +
                     " visited=" + std::to_string(stats.visited) + " passing=" + std::to_string(stats.passing);
  if (spec.dedup) line += " classes=" + std::to_string(stats.classes);
  return line;
}

}  // namespace nht
