// Copyright 2026 The cycsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cycsub/engine.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <utility>

#include "cycsub/bitset.hpp"

namespace cycsub {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

const char* to_string(JoinMode mode) {
  return mode == JoinMode::strict ? "strict" : "literal";
}

bool family_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

CandidateFamily CandidateFamily::of(std::vector<VertexSet> members) {
  CandidateFamily f;
  std::sort(members.begin(), members.end(), family_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  f.members_ = std::move(members);
  return f;
}

bool CandidateFamily::insert(VertexSet s) {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, family_less);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, std::move(s));
  return true;
}

bool CandidateFamily::contains(const VertexSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, family_less);
  return it != members_.end() && *it == s;
}

std::size_t EngineTrace::peak_partials() const {
  std::size_t peak = 0;
  for (const IterationRecord& r : iterations) peak = std::max(peak, r.partials_in);
  return peak;
}

IterationCapError::IterationCapError(JoinMode mode, int iterations)
    : EngineError("join loop hit the iteration cap: " +
                  std::to_string(iterations) + " passes in " +
                  std::string(to_string(mode)) +
                  " mode without draining the partial-cycle family"),
      mode_(mode),
      iterations_(iterations) {}

ResourceLimitError::ResourceLimitError(const std::string& what,
                                       std::size_t states_seen,
                                       double seconds_elapsed,
                                       int iterations_done)
    : EngineError(what),
      states_seen_(states_seen),
      seconds_elapsed_(seconds_elapsed),
      iterations_done_(iterations_done) {}

// ---------------------------------------------------------------------------
// Step-at-a-time operations on the classified-triple representation.

std::vector<PartialCycle> prune_with_cliques(
    const std::vector<PartialCycle>& partials,
    const std::vector<Clique3>& cliques) {
  std::vector<PartialCycle> out;
  out.reserve(partials.size());
  for (const PartialCycle& p : partials) {
    bool hit = false;
    for (const Clique3& q : cliques) {
      if (q.vertices.subset_of(p.vertices)) {
        hit = true;
        break;
      }
    }
    if (!hit) out.push_back(p);
  }
  return out;
}

namespace {

// Joins with a triple are blocked when the guard fails: strict refuses
// triples already inside the partial, literal refuses only exact equality.
bool join_blocked(const VertexSet& triple, const VertexSet& partial,
                  JoinMode mode) {
  if (mode == JoinMode::strict) return triple.subset_of(partial);
  return triple == partial;
}

}  // namespace

void close_with_foundations(const std::vector<PartialCycle>& partials,
                            const std::vector<Foundation>& foundations,
                            JoinMode mode, CandidateFamily& z) {
  for (const PartialCycle& i : partials) {
    for (const Foundation& j : foundations) {
      if (j.open != i.open) continue;
      if (join_blocked(j.vertices, i.vertices, mode)) continue;
      z.insert(i.vertices.united_with(j.vertices));
    }
  }
}

std::vector<PartialCycle> extend_with_extensions(
    const std::vector<PartialCycle>& partials,
    const std::vector<Extension>& extensions, JoinMode mode) {
  std::vector<PartialCycle> out;
  for (const PartialCycle& i : partials) {
    for (const Extension& j : extensions) {
      int hit;
      if (j.non_edges[0] == i.open)
        hit = 0;
      else if (j.non_edges[1] == i.open)
        hit = 1;
      else
        continue;
      if (join_blocked(j.vertices, i.vertices, mode)) continue;
      out.push_back(PartialCycle{i.vertices.united_with(j.vertices),
                                 j.non_edges[1 - hit]});
    }
  }
  auto less = [](const PartialCycle& a, const PartialCycle& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.open < b.open;
  };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void include_cliques(const std::vector<Clique3>& cliques, CandidateFamily& z) {
  for (const Clique3& q : cliques) z.insert(q.vertices);
}

CandidateFamily minimal_filter(const CandidateFamily& z) {
  // Members arrive size-ascending, so testing against survivors alone is
  // exact: the smallest proper subset of a dominated member has no proper
  // subset of its own in z, hence is itself a survivor.
  std::vector<VertexSet> kept;
  for (const VertexSet& m : z.members()) {
    bool dominated = false;
    for (const VertexSet& s : kept) {
      if (s.subset_of(m)) {  // proper: equal members cannot repeat in z
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  return CandidateFamily::of(std::move(kept));
}

StateBoundReport engine_stats(const EngineTrace& trace,
                              std::size_t foundation_count) {
  StateBoundReport r;
  r.foundation_count = foundation_count;
  for (const IterationRecord& rec : trace.iterations) {
    if (rec.partials_in > r.peak_partials) {
      r.peak_partials = rec.partials_in;
      r.peak_iteration = rec.index;
    }
  }
  r.within_bound = r.peak_partials <= foundation_count;
  return r;
}

// ---------------------------------------------------------------------------
// Packed kernel. Same loop, but partials are bitsets and the join
// partners are read off adjacency rows instead of scanned from lists:
// for a partial open on {x,y}, the foundations sharing that open pair
// are exactly the triples {x,y,w} with w adjacent to both x and y, and
// the extensions containing it are the triples {x,y,w} with w adjacent
// to exactly one of them (which also fixes the emitted open pair).

namespace {

template <int W>
struct KernelState {
  SmallBitset<W> verts;
  std::uint16_t ox = 0, oy = 0;  // open pair, ox < oy
  bool has_clique = false;       // vertex set contains a triangle
};

template <int W>
bool state_less(const KernelState<W>& a, const KernelState<W>& b) {
  if (a.verts != b.verts) return a.verts < b.verts;
  if (a.ox != b.ox) return a.ox < b.ox;
  return a.oy < b.oy;
}

template <int W>
bool state_eq(const KernelState<W>& a, const KernelState<W>& b) {
  return a.verts == b.verts && a.ox == b.ox && a.oy == b.oy;
}

// True when s gains a triangle through w, assuming s was triangle-free
// before w joined (every new triangle must then pass through w).
template <int W>
bool triangle_through(const std::vector<SmallBitset<W>>& adj,
                      const SmallBitset<W>& verts, int w) {
  SmallBitset<W> wn = adj[w] & verts;
  bool found = false;
  wn.for_each_bit([&](int a) {
    if (!found && (adj[a] & wn).count() != 0) found = true;
  });
  return found;
}

template <int W>
EngineResult run_kernel(const Graph& g, JoinMode mode,
                        const EngineLimits& limits) {
  using BS = SmallBitset<W>;
  const int n = g.vertex_count();
  const auto run_start = Clock::now();

  EngineTrace trace;
  trace.mode = mode;

  std::vector<BS> adj(n);
  for (int v = 0; v < n; ++v) {
    auto words = g.neighbor_words(v);
    for (std::size_t k = 0; k < words.size() && k < std::size_t{W}; ++k)
      adj[v].w[k] = words[k];
  }

  // Steps 1-2: classify triples. Foundations become the initial
  // partials; cliques are kept as masks for pruning-by-flag bookkeeping
  // and the later candidate merge; extensions are only counted, the
  // adjacency rows stand in for the list.
  std::vector<KernelState<W>> cur;
  std::vector<BS> clique_masks;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      bool xy = adj[x].test(y);
      for (int z = y + 1; z < n; ++z) {
        bool xz = adj[x].test(z);
        bool yz = adj[y].test(z);
        int edges = int(xy) + int(xz) + int(yz);
        if (edges == 1) {
          ++trace.extension_count;
        } else if (edges == 2) {
          ++trace.foundation_count;
          KernelState<W> s;
          s.verts.set(x);
          s.verts.set(y);
          s.verts.set(z);
          if (!xy) {
            s.ox = std::uint16_t(x), s.oy = std::uint16_t(y);
          } else if (!xz) {
            s.ox = std::uint16_t(x), s.oy = std::uint16_t(z);
          } else {
            s.ox = std::uint16_t(y), s.oy = std::uint16_t(z);
          }
          cur.push_back(s);
        } else if (edges == 3) {
          ++trace.clique_count;
          BS q;
          q.set(x);
          q.set(y);
          q.set(z);
          clique_masks.push_back(q);
        }
      }
    }
  }
  std::sort(cur.begin(), cur.end(), state_less<W>);
  trace.classify_seconds = seconds_since(run_start);

  const auto loop_start = Clock::now();
  std::vector<BS> z_masks;  // numeric-sorted, unique
  std::vector<BS> z_new;
  std::vector<KernelState<W>> next;

  auto enforce_limits = [&](int body_done) {
    std::size_t live = cur.size() + next.size() + z_masks.size();
    if (limits.max_states != 0 && live > limits.max_states)
      throw ResourceLimitError(
          "state limit exceeded: " + std::to_string(live) + " > " +
              std::to_string(limits.max_states),
          live, seconds_since(run_start), body_done);
    if (limits.budget_seconds > 0.0) {
      double elapsed = seconds_since(run_start);
      if (elapsed > limits.budget_seconds)
        throw ResourceLimitError(
            "time budget exceeded: " + std::to_string(elapsed) + " s > " +
                std::to_string(limits.budget_seconds) + " s",
            live, elapsed, body_done);
    }
  };

  int body = 0;
  while (!cur.empty()) {
    if (body >= n) throw IterationCapError(mode, body);
    const auto body_start = Clock::now();
    IterationRecord rec;
    rec.index = body;
    rec.partials_in = cur.size();

    // Clique pruning: flagged states are exactly those whose vertex set
    // contains some 3-clique.
    std::erase_if(cur, [](const KernelState<W>& s) { return s.has_clique; });

    z_new.clear();
    next.clear();
    std::size_t processed = 0;
    for (const KernelState<W>& s : cur) {
      if ((++processed & 0xFFF) == 0) enforce_limits(body);
      const BS& nx = adj[s.ox];
      const BS& ny = adj[s.oy];
      BS close = nx & ny;
      BS extend = nx ^ ny;
      if (mode == JoinMode::strict) {
        close = close.and_not(s.verts);
        extend = extend.and_not(s.verts);
      }
      // Literal guard: only the exact triple {ox,oy,w} == verts is
      // refused, which needs |verts| == 3 and w inside.
      const bool size3 = mode == JoinMode::literal && s.verts.count() == 3;

      close.for_each_bit([&](int w) {
        if (size3 && s.verts.test(w)) return;
        BS u = s.verts;
        u.set(w);
        z_new.push_back(u);
      });

      extend.for_each_bit([&](int w) {
        if (size3 && s.verts.test(w)) return;
        KernelState<W> c;
        c.verts = s.verts;
        c.verts.set(w);
        int a, b;
        if (adj[s.ox].test(w)) {
          a = s.oy;
          b = w;
        } else {
          a = s.ox;
          b = w;
        }
        if (a > b) std::swap(a, b);
        // Always-on invariant: the tracked pair must be a non-edge.
        if (adj[a].test(b))
          throw EngineError("internal invariant violated: open pair {" +
                            std::to_string(a) + "," + std::to_string(b) +
                            "} is an edge");
        c.ox = std::uint16_t(a);
        c.oy = std::uint16_t(b);
        c.has_clique = triangle_through<W>(adj, c.verts, w);
        next.push_back(c);
      });
    }

    std::sort(z_new.begin(), z_new.end());
    z_new.erase(std::unique(z_new.begin(), z_new.end()), z_new.end());
    std::size_t old_size = z_masks.size();
    std::size_t mid = z_masks.size();
    {
      std::vector<BS> fresh;
      fresh.reserve(z_new.size());
      std::set_difference(z_new.begin(), z_new.end(), z_masks.begin(),
                          z_masks.end(), std::back_inserter(fresh));
      z_masks.insert(z_masks.end(), fresh.begin(), fresh.end());
      std::inplace_merge(z_masks.begin(), z_masks.begin() + mid,
                         z_masks.end());
    }
    rec.z_added = z_masks.size() - old_size;

    std::sort(next.begin(), next.end(), state_less<W>);
    next.erase(std::unique(next.begin(), next.end(), state_eq<W>),
               next.end());
    enforce_limits(body + 1);

    if (!next.empty()) ++trace.productive_iterations;
    cur.swap(next);
    rec.wall_seconds = seconds_since(body_start);
    trace.iterations.push_back(rec);
    ++body;
  }
  trace.loop_seconds = seconds_since(loop_start);

  // Step 4: the 3-cliques are candidates too.
  const auto filter_start = Clock::now();
  {
    std::sort(clique_masks.begin(), clique_masks.end());
    std::vector<BS> fresh;
    std::size_t mid = z_masks.size();
    std::set_difference(clique_masks.begin(), clique_masks.end(),
                        z_masks.begin(), z_masks.end(),
                        std::back_inserter(fresh));
    z_masks.insert(z_masks.end(), fresh.begin(), fresh.end());
    std::inplace_merge(z_masks.begin(), z_masks.begin() + mid, z_masks.end());
  }
  trace.z_size = z_masks.size();

  // Step 5: keep candidates with no proper subset among the candidates.
  // Size-ascending scan against survivors only; a candidate containing a
  // triangle is dominated outright since every 3-clique is a candidate.
  std::sort(z_masks.begin(), z_masks.end(), [](const BS& a, const BS& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<BS> minimal;
  std::vector<std::vector<std::uint32_t>> by_lowest(
      static_cast<std::size_t>(n));
  for (const BS& c : z_masks) {
    bool dominated = false;
    if (c.count() > 3) {
      bool tri = false;
      c.for_each_bit([&](int a) {
        if (!tri && (adj[a] & c).count() >= 2) {
          SmallBitset<W> an = adj[a] & c;
          an.for_each_bit([&](int b) {
            if (!tri && b > a && (adj[b] & an).count() != 0) tri = true;
          });
        }
      });
      dominated = tri;
    }
    if (!dominated) {
      for (int wi = 0; wi < W && !dominated; ++wi) {
        std::uint64_t bits = c.w[std::size_t(wi)];
        while (bits && !dominated) {
          int v = wi * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          for (std::uint32_t idx : by_lowest[std::size_t(v)]) {
            if (c.contains_all(minimal[idx])) {  // proper: masks are unique
              dominated = true;
              break;
            }
          }
        }
      }
    }
    if (!dominated) {
      by_lowest[std::size_t(c.lowest())].push_back(
          std::uint32_t(minimal.size()));
      minimal.push_back(c);
    }
  }
  trace.result_size = minimal.size();

  std::vector<VertexSet> out;
  out.reserve(minimal.size());
  for (const BS& m : minimal) {
    std::vector<int> vs;
    vs.reserve(std::size_t(m.count()));
    m.for_each_bit([&](int v) { vs.push_back(v); });
    out.push_back(VertexSet(std::move(vs)));
  }
  trace.filter_seconds = seconds_since(filter_start);
  trace.total_seconds = seconds_since(run_start);

  EngineResult result;
  result.cycles = CandidateFamily::of(std::move(out));
  result.trace = std::move(trace);
  return result;
}

}  // namespace

EngineResult cycsub(const Graph& g, JoinMode mode, const EngineLimits& limits) {
  const int n = g.vertex_count();
  if (n > kEngineMaxVertices)
    throw InputError("cycsub: graph has " + std::to_string(n) +
                     " vertices, engine capacity is " +
                     std::to_string(kEngineMaxVertices));
  if (n <= 64) return run_kernel<1>(g, mode, limits);
  return run_kernel<4>(g, mode, limits);
}

}  // namespace cycsub
