#ifndef PAIRPART_ENGINE_HPP
#define PAIRPART_ENGINE_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <ostream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "pairpart/brackets.hpp"
#include "pairpart/detail/packed.hpp"

namespace pairpart {

/// The four partitions every category contains: the two identity strings and
/// the two one-row pair blocks.
inline const std::vector<Partition>& base_partitions() {
  static const std::vector<Partition> base = {
      parse("w/w;L1U1"), parse("b/b;L1U1"), parse("/bw;L1L2"), parse("/wb;L1L2")};
  return base;
}

enum class EnumerateShape : std::uint8_t { OneLine, AllRowSplits };

/// Category operations available to the closure engine.
struct OpSet {
  enum : unsigned {
    Tensor = 1u,
    Compose = 2u,
    Involute = 4u,
    Rotate = 8u,
    VerticolorReflect = 16u,
    EraseNeutralInterval = 32u,
  };
  unsigned mask{0};

  static OpSet all() { return {Tensor | Compose | Involute | Rotate | VerticolorReflect |
                               EraseNeutralInterval}; }
  bool has(unsigned op) const { return (mask & op) != 0; }
  bool empty() const { return mask == 0; }

  static OpSet from_names(const std::vector<std::string>& names) {
    OpSet out;
    for (const auto& n : names) {
      if (n == "tensor") out.mask |= Tensor;
      else if (n == "compose") out.mask |= Compose;
      else if (n == "involute") out.mask |= Involute;
      else if (n == "rotate") out.mask |= Rotate;
      else if (n == "verticolor_reflect") out.mask |= VerticolorReflect;
      else if (n == "erase_neutral_interval") out.mask |= EraseNeutralInterval;
      else throw std::invalid_argument("unknown op name: " + n);
    }
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (has(Tensor)) out.push_back("tensor");
    if (has(Compose)) out.push_back("compose");
    if (has(Involute)) out.push_back("involute");
    if (has(Rotate)) out.push_back("rotate");
    if (has(VerticolorReflect)) out.push_back("verticolor_reflect");
    if (has(EraseNeutralInterval)) out.push_back("erase_neutral_interval");
    return out;
  }
};

struct ClosureConfig {
  int max_points{0};
  OpSet ops = OpSet::all();
  bool seed_base = true;
  int jobs = 0;                    // 0 = hardware concurrency
  std::ostream* trace = nullptr;   // per-round diagnostics
};

namespace detail {

// Enumeration of all pair partitions with neutral blocks, packed form.
inline void enumerate_oneline_packed(int points, std::vector<Packed>& out) {
  if (points == 0) {
    out.push_back(pack(Small{}));
    return;
  }
  if (points % 2 != 0) return;
  Small s;
  s.nl = static_cast<std::uint8_t>(points);
  std::array<bool, kMaxPackedPoints> used{};
  std::function<void(int)> rec = [&](int done) {
    if (done == points) {
      out.push_back(pack(s));
      return;
    }
    int a = 0;
    while (used[static_cast<std::size_t>(a)]) ++a;
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b < points; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      s.partner[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      s.partner[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
      // one leg black, one white; lower row so normalized = plain colors
      for (int ab = 0; ab < 2; ++ab) {
        const int black = ab ? b : a, white = ab ? a : b;
        s.colors = static_cast<std::uint16_t>(
            (s.colors | (1u << black)) & ~(1u << white));
        rec(done + 2);
      }
      s.colors = static_cast<std::uint16_t>(s.colors & ~((1u << a) | (1u << b)));
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  };
  rec(0);
}

inline std::vector<Packed> enumerate_packed(int max_points, EnumerateShape shape) {
  if (max_points < 0 || max_points > kMaxPackedPoints)
    throw std::domain_error("enumeration bound must be between 0 and 16");
  std::vector<Packed> out;
  for (int pts = 0; pts <= max_points; pts += 2) {
    std::vector<Packed> oneline;
    enumerate_oneline_packed(pts, oneline);
    for (const Packed& p : oneline) {
      out.push_back(p);
      if (shape == EnumerateShape::AllRowSplits) {
        Small s = unpack(p);
        for (int u = 1; u <= pts; ++u) {
          s = rotate_small(s, SmallRotation::UpRight);
          out.push_back(pack(s));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Open-addressing index from Packed keys to member ids. Keys live inside the
// slots so a membership probe touches one cache line.
class PackedIndex {
 public:
  explicit PackedIndex(std::size_t expect = 1024) { rehash(expect * 2); }

  std::uint32_t find(const Packed& key, const std::vector<Packed>&) const {
    return find(key);
  }
  std::uint32_t find(const Packed& key) const { return find_from(key, probe_start(key)); }

  std::size_t probe_start(const Packed& key) const { return hash_packed(key) & mask_; }
  void prefetch_slot(std::size_t i) const { __builtin_prefetch(&slots_[i]); }
  std::uint32_t find_from(const Packed& key, std::size_t i) const {
    while (true) {
      const Slot& s = slots_[i];
      if (s.id == kEmpty) return kEmpty;
      if (s.key == key) return s.id;
      i = (i + 1) & mask_;
    }
  }

  void insert(const Packed& key, std::uint32_t id, const std::vector<Packed>&) {
    insert(key, id);
  }
  void insert(const Packed& key, std::uint32_t id) {
    if ((size_ + 1) * 5 > slots_.size() * 3) grow();
    std::size_t i = hash_packed(key) & mask_;
    while (slots_[i].id != kEmpty) i = (i + 1) & mask_;
    slots_[i] = {key, id};
    ++size_;
  }

  static constexpr std::uint32_t kEmpty = 0xffffffffu;

 private:
  struct Slot {
    Packed key;
    std::uint32_t id{kEmpty};
  };

  void rehash(std::size_t want) {
    std::size_t n = 64;
    while (n < want) n <<= 1;
    slots_.assign(n, Slot{});
    mask_ = n - 1;
    size_ = 0;
  }
  void grow() {
    std::vector<Slot> old = std::move(slots_);
    rehash(old.size() * 2);
    for (const Slot& s : old)
      if (s.id != kEmpty) {
        std::size_t i = hash_packed(s.key) & mask_;
        while (slots_[i].id != kEmpty) i = (i + 1) & mask_;
        slots_[i] = s;
        ++size_;
      }
  }

  std::vector<Slot> slots_;
  std::size_t mask_{0};
  std::size_t size_{0};
};

// Bucket entry carrying everything the pair loops need without extra loads.
struct BucketEntry {
  Packed key;
  std::uint32_t idx;
  std::uint32_t istar;
  std::uint32_t irefl;
  std::uint32_t istarrefl;
};

}  // namespace detail

/// Canonical, deduplicated set of partitions closed under the configured
/// operations up to the point bound.
class ClosureSet {
 public:
  ClosureSet(std::vector<Partition> generators, int bound, OpSet ops, bool seeded_base)
      : generators_(std::move(generators)), bound_(bound), ops_(ops),
        seeded_base_(seeded_base) {
    if (bound_ < 2) throw std::domain_error("closure bound must be at least 2");
    if (bound_ > detail::kMaxPackedPoints)
      throw std::domain_error("closure engine supports bounds up to 16 points");
    if (ops_.empty()) throw std::domain_error("closure op set must be non-empty");
  }

  int bound() const { return bound_; }
  OpSet ops() const { return ops_; }
  bool seeded_base() const { return seeded_base_; }
  const std::vector<Partition>& generators() const { return generators_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Partition& p) const {
    if (p.total_points() > bound_ || !is_pair_partition(p)) return false;
    return index_.find(detail::pack(detail::to_small(p)), members_) != detail::PackedIndex::kEmpty;
  }
  bool contains_packed(const detail::Packed& key) const {
    return index_.find(key, members_) != detail::PackedIndex::kEmpty;
  }

  /// Members with at most max_pts points, decoded, sorted by canonical key.
  std::vector<Partition> members_with_at_most(int max_pts) const {
    std::vector<detail::Packed> keys = packed_members_with_at_most(max_pts);
    std::vector<Partition> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(detail::to_partition(detail::unpack(k)));
    return out;
  }

  std::vector<detail::Packed> packed_members_with_at_most(int max_pts) const {
    std::vector<detail::Packed> keys;
    for (const auto& m : members_) {
      detail::Small s = detail::unpack(m);
      if (s.n() <= max_pts) keys.push_back(m);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  std::vector<Partition> members() const { return members_with_at_most(bound_); }

  template <typename F>
  void for_each_packed(F&& f) const {
    for (const auto& m : members_) f(m);
  }

  // engine access
  const std::vector<detail::Packed>& raw_members() const { return members_; }
  std::vector<detail::Packed>& raw_members() { return members_; }
  detail::PackedIndex& raw_index() { return index_; }
  const detail::PackedIndex& raw_index() const { return index_; }

 private:
  std::vector<Partition> generators_;
  int bound_;
  OpSet ops_;
  bool seeded_base_;
  std::vector<detail::Packed> members_;
  detail::PackedIndex index_{1 << 12};
};

namespace detail {

// Fixpoint driver. Members, transform links and row-word buckets are frozen
// during a worker phase; the merge step is single-threaded.
class ClosureEngine {
 public:
  ClosureEngine(int bound, OpSet ops, int jobs, std::ostream* trace)
      : bound_(bound), ops_(ops), trace_(trace) {
    jobs_ = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs_ < 1) jobs_ = 1;
    qstar_ = ops_.has(OpSet::Involute);
    qrefl_ = ops_.has(OpSet::VerticolorReflect);
    by_total_.resize(static_cast<std::size_t>(bound_) + 1);
  }

  std::uint32_t insert(const Packed& key) {
    std::uint32_t found = index_.find(key, members_);
    if (found != PackedIndex::kEmpty) return found;
    std::uint32_t id = static_cast<std::uint32_t>(members_.size());
    members_.push_back(key);
    istar_.push_back(PackedIndex::kEmpty);
    irefl_.push_back(PackedIndex::kEmpty);
    index_.insert(key, id, members_);
    return id;
  }

  // Insert together with the enabled unary symmetries and link them.
  void insert_orbit(const Packed& key) {
    std::uint32_t i0 = insert(key);
    std::uint32_t is = i0, ir = i0, isr = i0;
    if (qstar_) is = insert(pack(involution_small(unpack(key))));
    if (qrefl_) ir = insert(pack(reflect_small(unpack(key))));
    if (qstar_ && qrefl_) isr = insert(pack(involution_small(reflect_small(unpack(key)))));
    if (qstar_) {
      istar_[i0] = is;
      istar_[is] = i0;
      if (qrefl_) {
        istar_[ir] = isr;
        istar_[isr] = ir;
      }
    }
    if (qrefl_) {
      irefl_[i0] = ir;
      irefl_[ir] = i0;
      if (qstar_) {
        irefl_[is] = isr;
        irefl_[isr] = is;
      }
    }
  }

  void run() {
    std::size_t done = 0;  // members already indexed into buckets & processed
    int round = 0;
    while (done < members_.size()) {
      std::size_t frontier_begin = done;
      // index the new members before processing so frontier x frontier works
      for (std::size_t i = frontier_begin; i < members_.size(); ++i) register_member(i);
      done = members_.size();
      auto t0 = std::chrono::steady_clock::now();
      process_frontier(frontier_begin, done);
      if (trace_)
        (*trace_) << "closure: round " << round << " members " << done << " new "
                  << members_.size() - done << " visits " << visits_ << " survivors "
                  << survivors_ << " emitted " << emitted_ << " secs "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count()
                  << std::endl;
      ++round;
    }
  }

  std::vector<Packed>& members() { return members_; }
  PackedIndex& index() { return index_; }

 private:
  void register_member(std::size_t i) {
    Small s = unpack(members_[i]);
    const auto id = static_cast<std::uint32_t>(i);
    BucketEntry e{members_[i], id, qstar_ ? istar_[i] : id, qrefl_ ? irefl_[i] : id,
                  (qstar_ && qrefl_) ? irefl_[istar_[i]] : id};
    by_lower_[lower_word(s)][static_cast<std::size_t>(s.nu)].push_back(e);
    by_upper_[upper_word(s)][static_cast<std::size_t>(s.nl)].push_back(e);
    by_total_[static_cast<std::size_t>(s.n())].push_back(e);
  }

  struct PairRef {
    std::uint32_t a, b;
    bool operator<(const PairRef& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const PairRef& o) const { return a == o.a && b == o.b; }
  };

  // Lexicographically minimal representative of the pair orbit under the
  // enabled symmetries. star swaps composition operands, reflect swaps tensor
  // operands.
  // Lexicographic minimality of (ia, b.idx) within its orbit. Involution
  // swaps composition operands but not tensor operands; verticolor reflection
  // swaps tensor operands but not composition operands; their combination
  // swaps both.
  template <bool kCompose>
  bool pair_is_minimal(std::uint32_t ia, std::uint32_t ias, std::uint32_t iar,
                       std::uint32_t iasr, const BucketEntry& b) const {
    PairRef self{ia, b.idx};
    if (qstar_) {
      PairRef alt = kCompose ? PairRef{b.istar, ias} : PairRef{ias, b.istar};
      if (alt < self) return false;
    }
    if (qrefl_) {
      PairRef alt = kCompose ? PairRef{iar, b.irefl} : PairRef{b.irefl, iar};
      if (alt < self) return false;
    }
    if (qstar_ && qrefl_) {
      PairRef alt{b.istarrefl, iasr};
      if (alt < self) return false;
    }
    return true;
  }

  struct PackedHash {
    std::size_t operator()(const Packed& k) const noexcept {
      return static_cast<std::size_t>(hash_packed(k));
    }
  };
  struct Local {
    std::unordered_set<Packed, PackedHash> seen;
    std::vector<Packed> out;
    std::uint64_t visits{0}, survivors{0};
    void emit(const Packed& k) {
      if (seen.insert(k).second) out.push_back(k);
    }
  };

  // Defers membership probes a few steps so the prefetched slot line has
  // arrived by the time it is read.
  class EmitRing {
   public:
    EmitRing(const PackedIndex& idx, Local& local) : idx_(idx), local_(local) {}
    ~EmitRing() { flush(); }
    void push(const Packed& k) {
      std::size_t start = idx_.probe_start(k);
      idx_.prefetch_slot(start);
      if (count_ == kDepth) drain_one();
      int at = (head_ + count_) & (kDepth - 1);
      keys_[at] = k;
      starts_[at] = start;
      ++count_;
    }
    void flush() {
      while (count_ > 0) drain_one();
    }

   private:
    void drain_one() {
      if (idx_.find_from(keys_[head_], starts_[head_]) == PackedIndex::kEmpty)
        local_.emit(keys_[head_]);
      head_ = (head_ + 1) & (kDepth - 1);
      --count_;
    }
    static constexpr int kDepth = 8;
    const PackedIndex& idx_;
    Local& local_;
    Packed keys_[kDepth];
    std::size_t starts_[kDepth];
    int head_{0};
    int count_{0};
  };

  void process_member(std::uint32_t ip, std::size_t frontier_begin, Local& local) const {
    const Packed key = members_[ip];
    const Small p = unpack(key);
    const int n = p.n();
    const std::uint32_t ips = qstar_ ? istar_[ip] : ip;
    const std::uint32_t ipr = qrefl_ ? irefl_[ip] : ip;
    const std::uint32_t ipsr = (qstar_ && qrefl_) ? irefl_[istar_[ip]] : ip;
    const BucketEntry self{key, ip, ips, ipr, ipsr};
    EmitRing ring(index_, local);

    // involution and verticolor reflection are applied eagerly at insert
    if (ops_.has(OpSet::Rotate) && n > 0) {
      if (p.nu > 0) {
        ring.push(pack(rotate_small(p, SmallRotation::DownLeft)));
        ring.push(pack(rotate_small(p, SmallRotation::DownRight)));
      }
      if (p.nl > 0) {
        ring.push(pack(rotate_small(p, SmallRotation::UpLeft)));
        ring.push(pack(rotate_small(p, SmallRotation::UpRight)));
      }
    }
    if (ops_.has(OpSet::EraseNeutralInterval) && n >= 2) {
      for (int pos = 0; pos < n; ++pos)
        if (is_turn_at(p, pos)) ring.push(pack(erase_turn_small(p, pos)));
    }
    if (ops_.has(OpSet::Tensor)) {
      for (int n2 = 1; n2 <= bound_ - n; ++n2) {
        for (const BucketEntry& b : by_total_[static_cast<std::size_t>(n2)]) {
          if (pair_is_minimal<false>(ip, ips, ipr, ipsr, b))
            ring.push(pack(tensor_small(p, unpack(b.key))));
          if (b.idx < frontier_begin &&
              pair_is_minimal<false>(b.idx, b.istar, b.irefl, b.istarrefl, self))
            ring.push(pack(tensor_small(unpack(b.key), p)));
        }
      }
    }
    if (ops_.has(OpSet::Compose)) {
      // (p, q) for all q with matching lower row, sub-bucketed by upper size
      auto it = by_lower_.find(upper_word(p));
      if (it != by_lower_.end()) {
        for (int qnu = 0; qnu <= bound_ - p.nl && qnu <= kMaxPackedPoints; ++qnu) {
          for (const BucketEntry& b : it->second[static_cast<std::size_t>(qnu)]) {
            ++local.visits;
            if (!pair_is_minimal<true>(ip, ips, ipr, ipsr, b)) continue;
            ++local.survivors;
            ring.push(pack(compose_fast_small(p, unpack(b.key))));
          }
        }
      }
      // (q, p) for old q with matching upper row; sub-bucket entries are
      // idx-sorted, so the old prefix ends at frontier_begin
      auto it2 = by_upper_.find(lower_word(p));
      if (it2 != by_upper_.end()) {
        for (int qnl = 0; qnl <= bound_ - p.nu && qnl <= kMaxPackedPoints; ++qnl) {
          const auto& bucket = it2->second[static_cast<std::size_t>(qnl)];
          auto bend = std::lower_bound(
              bucket.begin(), bucket.end(), frontier_begin,
              [](const BucketEntry& e, std::size_t v) { return e.idx < v; });
          for (auto bi = bucket.begin(); bi != bend; ++bi) {
            const BucketEntry& b = *bi;
            ++local.visits;
            if (!pair_is_minimal<true>(b.idx, b.istar, b.irefl, b.istarrefl, self))
              continue;
            ++local.survivors;
            ring.push(pack(compose_fast_small(unpack(b.key), p)));
          }
        }
      }
    }
  }

  void process_frontier(std::size_t begin, std::size_t end) {
    std::vector<Local> locals(static_cast<std::size_t>(jobs_));
    std::atomic<std::size_t> cursor{begin};
    auto work = [&](int w) {
      Local& local = locals[static_cast<std::size_t>(w)];
      while (true) {
        std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= end) break;
        process_member(static_cast<std::uint32_t>(i), begin, local);
      }
    };
    if (jobs_ == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs_; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (auto& local : locals) {
      visits_ += local.visits;
      survivors_ += local.survivors;
      emitted_ += local.out.size();
      for (const Packed& k : local.out) insert_orbit(k);
    }
  }

  int bound_;
  OpSet ops_;
  std::ostream* trace_;
  int jobs_;
  bool qstar_{false}, qrefl_{false};
  std::uint64_t visits_{0}, survivors_{0}, emitted_{0};

  std::vector<Packed> members_;
  PackedIndex index_{1 << 12};
  std::vector<std::uint32_t> istar_, irefl_;
  // word -> (opposite row size -> idx-sorted entries): keeps pairs whose
  // result would exceed the bound out of the scan entirely
  using SizedBuckets = std::array<std::vector<BucketEntry>, kMaxPackedPoints + 1>;
  std::unordered_map<std::uint32_t, SizedBuckets> by_lower_, by_upper_;
  std::vector<std::vector<BucketEntry>> by_total_;
};

}  // namespace detail

/// Least set containing the generators (plus the base partitions when
/// seeded), closed under the configured operations without ever exceeding
/// the point bound.
inline ClosureSet closure(const std::vector<Partition>& generators, const ClosureConfig& cfg) {
  ClosureSet out(generators, cfg.max_points, cfg.ops, cfg.seed_base);
  detail::ClosureEngine engine(cfg.max_points, cfg.ops, cfg.jobs, cfg.trace);
  for (const Partition& g : generators) {
    if (g.total_points() > cfg.max_points)
      throw std::domain_error("generator exceeds the closure bound: " + render(g));
    if (!is_pair_partition(g))
      throw std::domain_error("closure generators must be pair partitions: " + render(g));
    engine.insert_orbit(detail::pack(detail::to_small(g)));
  }
  if (cfg.seed_base)
    for (const Partition& b : base_partitions())
      engine.insert_orbit(detail::pack(detail::to_small(b)));
  engine.run();
  out.raw_members() = std::move(engine.members());
  out.raw_index() = std::move(engine.index());
  return out;
}

/// One escape found while checking closedness.
struct ClosureViolation {
  std::string op;
  Partition lhs;
  Partition rhs;      // second operand for binary ops; empty otherwise
  Partition result;   // the member that is missing from the set
};

/// Re-applies every operation to every member (no symmetry shortcuts) and
/// reports results that stay within the bound but are not in the set.
inline std::vector<ClosureViolation> verify_category_closed(const ClosureSet& s,
                                                            std::size_t max_violations = 32) {
  using namespace detail;
  std::vector<ClosureViolation> out;
  const OpSet ops = s.ops();
  const int bound = s.bound();
  std::vector<Small> all;
  for (const Packed& k : s.raw_members()) all.push_back(unpack(k));
  auto check = [&](const char* op, const Small& a, const Small* b, const Small& r) {
    if (r.n() > bound) return;
    if (s.contains_packed(pack(r))) return;
    if (out.size() >= max_violations) return;
    out.push_back({op, to_partition(a), b ? to_partition(*b) : Partition{}, to_partition(r)});
  };
  for (const Small& p : all) {
    if (ops.has(OpSet::Involute)) check("involute", p, nullptr, involution_small(p));
    if (ops.has(OpSet::VerticolorReflect)) check("verticolor_reflect", p, nullptr, reflect_small(p));
    if (ops.has(OpSet::Rotate) && p.n() > 0) {
      if (p.nu > 0) {
        check("rotate", p, nullptr, rotate_small(p, SmallRotation::DownLeft));
        check("rotate", p, nullptr, rotate_small(p, SmallRotation::DownRight));
      }
      if (p.nl > 0) {
        check("rotate", p, nullptr, rotate_small(p, SmallRotation::UpLeft));
        check("rotate", p, nullptr, rotate_small(p, SmallRotation::UpRight));
      }
    }
    if (ops.has(OpSet::EraseNeutralInterval)) {
      for (int pos = 0; pos < p.n(); ++pos)
        if (is_turn_at(p, pos)) check("erase_neutral_interval", p, nullptr,
                                      erase_turn_small(p, pos));
    }
    for (const Small& q : all) {
      if (ops.has(OpSet::Tensor) && p.n() + q.n() <= bound)
        check("tensor", p, &q, tensor_small(p, q));
      if (ops.has(OpSet::Compose) && lower_word(q) == upper_word(p) && p.nl + q.nu <= bound)
        check("compose", p, &q, compose_small(p, q));
    }
  }
  return out;
}

/// Build a ClosureSet directly from explicit members (no fixpoint run); used
/// to check closedness of externally constructed sets.
inline ClosureSet make_set(const std::vector<Partition>& members, int bound, OpSet ops) {
  ClosureSet out(members, bound, ops, false);
  for (const Partition& m : members) {
    if (m.total_points() > bound)
      throw std::domain_error("member exceeds the bound: " + render(m));
    detail::Packed k = detail::pack(detail::to_small(m));
    if (out.raw_index().find(k, out.raw_members()) == detail::PackedIndex::kEmpty) {
      out.raw_members().push_back(k);
      out.raw_index().insert(k, static_cast<std::uint32_t>(out.raw_members().size() - 1),
                             out.raw_members());
    }
  }
  return out;
}

/// Every canonical pair partition with neutral blocks up to the bound;
/// one-line restricts to an empty upper row.
inline std::vector<Partition> enumerate_p2nb(int max_points, EnumerateShape shape) {
  std::vector<Partition> out;
  for (const auto& k : detail::enumerate_packed(max_points, shape))
    out.push_back(detail::to_partition(detail::unpack(k)));
  return out;
}

struct ClassifyReport {
  bool subset_of_S0{false};
  int detected_w{0};
  bool matches_S_w_at_bound{false};
};

/// Detects w as the gcd of the bracket weights found in the set, checks
/// whether everything sits inside S_0, and compares the small members with
/// the S_w slice of the full enumeration.
inline ClassifyReport classify(const ClosureSet& s, int compare_bound) {
  using namespace detail;
  if (compare_bound > s.bound())
    throw std::domain_error("compare bound exceeds the closure bound");
  ClassifyReport rep;
  rep.subset_of_S0 = true;
  int g = 0;
  s.for_each_packed([&](const Packed& k) {
    Small m = unpack(k);
    if (!in_S_w_small(m, 0)) rep.subset_of_S0 = false;
    if (is_bracket_small(m)) {
      int w = weight_small(m);
      g = std::gcd(g, w < 0 ? -w : w);
    }
  });
  rep.detected_w = g;
  std::vector<Packed> have = s.packed_members_with_at_most(compare_bound);
  std::vector<Packed> want;
  for (const Packed& k : enumerate_packed(compare_bound, EnumerateShape::AllRowSplits))
    if (in_S_w_small(unpack(k), rep.detected_w)) want.push_back(k);
  std::sort(want.begin(), want.end());
  rep.matches_S_w_at_bound = have == want;
  return rep;
}

/// Generator pair whose bounded closures are compared by the acceptance
/// suite: the all-white crossing on k+1 strings and the S_k bracket
/// generator.
inline std::pair<Partition, Partition> unk_generators(int k) {
  if (k < 1) throw std::domain_error("unk_generators needs k >= 1");
  const int n = k + 1;
  std::vector<Color> row(static_cast<std::size_t>(n), Color::White);
  std::vector<int> lid(static_cast<std::size_t>(n)), uid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lid[static_cast<std::size_t>(i)] = i;
  uid[static_cast<std::size_t>(n - 1)] = 0;
  uid[0] = n - 1;
  for (int i = 1; i + 1 < n; ++i) uid[static_cast<std::size_t>(i)] = i;
  Partition crossing = Partition::from_block_ids(row, row, std::move(uid), std::move(lid));
  return {std::move(crossing), gen_S_w(k, Color::Black)};
}

}  // namespace pairpart

#endif  // PAIRPART_ENGINE_HPP
