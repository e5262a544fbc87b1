#include "kroncover/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "kroncover/errors.hpp"

namespace kc {

namespace {

// Ordered-partition backtracking in the McKay style: equitable refinement,
// individualization on the first smallest non-singleton cell, leaf
// certificates compared lexicographically, and sibling pruning through the
// orbits of the automorphisms discovered so far (only those fixing the
// current base pointwise, which keeps the pruning sound and the discovered
// set generating).
class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::vector<int> colors, long long node_budget)
      : g_(g),
        n_(g.vertex_count()),
        words_(g.words_per_row()),
        node_budget_(node_budget),
        colors_(std::move(colors)) {
    if (colors_.empty()) colors_.assign(static_cast<std::size_t>(n_), 0);
    // Loops are folded into the initial colors: a looped vertex can never
    // map to a loop-free one.
    for (int v = 0; v < n_; ++v)
      colors_[static_cast<std::size_t>(v)] =
          colors_[static_cast<std::size_t>(v)] * 2 + (g.has_loop(v) ? 1 : 0);
  }

  void run() {
    if (n_ == 0) return;
    elems_.resize(static_cast<std::size_t>(n_));
    pos_.resize(static_cast<std::size_t>(n_));
    cstart_.resize(static_cast<std::size_t>(n_));
    clen_.assign(static_cast<std::size_t>(n_), 0);

    std::iota(elems_.begin(), elems_.end(), 0);
    std::stable_sort(elems_.begin(), elems_.end(), [&](int a, int b) {
      return colors_[static_cast<std::size_t>(a)] < colors_[static_cast<std::size_t>(b)];
    });
    int start = 0;
    for (int p = 0; p < n_; ++p) {
      pos_[static_cast<std::size_t>(elems_[static_cast<std::size_t>(p)])] = p;
      if (p > 0 && colors_[static_cast<std::size_t>(elems_[static_cast<std::size_t>(p)])] !=
                       colors_[static_cast<std::size_t>(elems_[static_cast<std::size_t>(p - 1)])])
        start = p;
      cstart_[static_cast<std::size_t>(p)] = start;
      ++clen_[static_cast<std::size_t>(start)];
    }
    std::deque<int> work;
    for (int p = 0; p < n_; p += clen_[static_cast<std::size_t>(p)]) work.push_back(p);
    refine(work);
    node();
  }

  Permutation best_labeling() const { return Permutation(best_lab_); }
  const std::vector<std::uint64_t>& best_certificate() const { return best_cert_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  long long nodes() const { return nodes_; }

  std::vector<int> canonical_colors() const {
    // Position -> original color (loop bit stripped); identical across
    // leaves because refinement never crosses the initial color blocks.
    std::vector<int> out(static_cast<std::size_t>(n_));
    Permutation inv = Permutation(best_lab_).inverse();
    for (int p = 0; p < n_; ++p)
      out[static_cast<std::size_t>(p)] = colors_[static_cast<std::size_t>(inv(p))] / 2;
    return out;
  }

 private:
  struct Snapshot {
    std::vector<int> elems, pos, cstart, clen;
  };

  Snapshot save() const { return {elems_, pos_, cstart_, clen_}; }
  void restore(const Snapshot& s) {
    elems_ = s.elems;
    pos_ = s.pos;
    cstart_ = s.cstart;
    clen_ = s.clen;
  }

  // Splits every cell by neighbor counts into the queued cells until the
  // partition is equitable. Subcells are ordered by ascending count, which
  // keeps the procedure equivariant under isomorphisms.
  void refine(std::deque<int>& work) {
    std::vector<std::uint64_t> wmask(static_cast<std::size_t>(words_));
    std::vector<int> cnt(static_cast<std::size_t>(n_));
    while (!work.empty()) {
      int w = work.front();
      work.pop_front();
      std::fill(wmask.begin(), wmask.end(), 0);
      for (int p = w; p < w + clen_[static_cast<std::size_t>(w)]; ++p) {
        int v = elems_[static_cast<std::size_t>(p)];
        wmask[static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
      }
      std::vector<int> starts;
      for (int s = 0; s < n_; s += clen_[static_cast<std::size_t>(s)])
        if (clen_[static_cast<std::size_t>(s)] > 1) starts.push_back(s);
      for (int s : starts) {
        int len = clen_[static_cast<std::size_t>(s)];
        bool uniform = true;
        int first_cnt = -1;
        for (int p = s; p < s + len; ++p) {
          int v = elems_[static_cast<std::size_t>(p)];
          auto r = g_.row(v);
          int c = 0;
          for (int wd = 0; wd < words_; ++wd)
            c += std::popcount(r[static_cast<std::size_t>(wd)] & wmask[static_cast<std::size_t>(wd)]);
          cnt[static_cast<std::size_t>(v)] = c;
          if (p == s) first_cnt = c;
          else if (c != first_cnt) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(elems_.begin() + s, elems_.begin() + s + len, [&](int a, int b) {
          return cnt[static_cast<std::size_t>(a)] < cnt[static_cast<std::size_t>(b)];
        });
        int sub = s;
        for (int p = s; p < s + len; ++p) {
          int v = elems_[static_cast<std::size_t>(p)];
          if (p > s && cnt[static_cast<std::size_t>(v)] !=
                           cnt[static_cast<std::size_t>(elems_[static_cast<std::size_t>(p - 1)])]) {
            sub = p;
            work.push_back(p);
          }
          pos_[static_cast<std::size_t>(v)] = p;
          cstart_[static_cast<std::size_t>(p)] = sub;
        }
        for (int p = s; p < s + len; ++p) clen_[static_cast<std::size_t>(p)] = 0;
        for (int p = s; p < s + len; ++p) ++clen_[static_cast<std::size_t>(cstart_[static_cast<std::size_t>(p)])];
        work.push_back(s);
      }
    }
  }

  bool discrete() const {
    for (int s = 0; s < n_; s += clen_[static_cast<std::size_t>(s)])
      if (clen_[static_cast<std::size_t>(s)] > 1) return false;
    return true;
  }

  int target_cell() const {
    int best = -1, best_len = n_ + 1;
    for (int s = 0; s < n_; s += clen_[static_cast<std::size_t>(s)]) {
      int len = clen_[static_cast<std::size_t>(s)];
      if (len > 1 && len < best_len) {
        best = s;
        best_len = len;
      }
    }
    return best;
  }

  void individualize(int v) {
    int s = cstart_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])];
    int len = clen_[static_cast<std::size_t>(s)];
    int pv = pos_[static_cast<std::size_t>(v)];
    int u = elems_[static_cast<std::size_t>(s)];
    std::swap(elems_[static_cast<std::size_t>(s)], elems_[static_cast<std::size_t>(pv)]);
    pos_[static_cast<std::size_t>(v)] = s;
    pos_[static_cast<std::size_t>(u)] = pv;
    clen_[static_cast<std::size_t>(s)] = 1;
    clen_[static_cast<std::size_t>(s + 1)] = len - 1;
    cstart_[static_cast<std::size_t>(s)] = s;
    for (int p = s + 1; p < s + len; ++p) cstart_[static_cast<std::size_t>(p)] = s + 1;
  }

  std::vector<std::uint64_t> leaf_certificate() const {
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v) {
      int p = pos_[static_cast<std::size_t>(v)];
      auto r = g_.row(v);
      for (int wd = 0; wd < words_; ++wd) {
        std::uint64_t word = r[static_cast<std::size_t>(wd)];
        while (word) {
          int u = wd * 64 + std::countr_zero(word);
          word &= word - 1;
          int q = pos_[static_cast<std::size_t>(u)];
          cert[static_cast<std::size_t>(p) * words_ + static_cast<std::size_t>(q / 64)] |=
              1ull << (q % 64);
        }
      }
    }
    return cert;
  }

  // Returns the automorphism mapping leaf labeling `a` onto leaf labeling
  // `b` (certificates already equal): x -> b^{-1}(a(x)).
  Permutation leaf_automorphism(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> binv(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) binv[static_cast<std::size_t>(b[static_cast<std::size_t>(v)])] = v;
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      img[static_cast<std::size_t>(v)] = binv[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])];
    return Permutation(std::move(img));
  }

  bool verify_automorphism(const Permutation& p) const {
    for (const auto& [u, v] : g_.edges())
      if (!g_.adjacent(p(u), p(v))) return false;
    return true;
  }

  void record_automorphism(const Permutation& p) {
    if (p.is_identity()) return;
    if (!verify_automorphism(p))
      throw std::logic_error("canonical search produced a non-automorphism");
    gens_.push_back(p);
  }

  void process_leaf() {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) lab[static_cast<std::size_t>(v)] = pos_[static_cast<std::size_t>(v)];
    auto cert = leaf_certificate();
    if (!first_found_) {
      first_found_ = true;
      first_lab_ = lab;
      first_cert_ = cert;
      best_lab_ = lab;
      best_cert_ = cert;
      return;
    }
    if (cert == first_cert_) {
      record_automorphism(leaf_automorphism(lab, first_lab_));
      return;
    }
    if (cert == best_cert_) {
      record_automorphism(leaf_automorphism(lab, best_lab_));
      return;
    }
    if (cert < best_cert_) {
      best_lab_ = lab;
      best_cert_ = cert;
    }
  }

  void node() {
    if (++nodes_ > node_budget_)
      throw budget_error("canonical_form: node budget exceeded");
    if (discrete()) {
      process_leaf();
      return;
    }
    int t = target_cell();
    std::vector<int> members(elems_.begin() + t,
                             elems_.begin() + t + clen_[static_cast<std::size_t>(t)]);
    std::sort(members.begin(), members.end());

    std::vector<int> tried;
    Snapshot snap = save();
    for (int v : members) {
      if (is_pruned(v, tried)) continue;
      individualize(v);
      std::deque<int> work{cstart_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])]};
      work.push_back(work.front() + 1);
      refine(work);
      base_.push_back(v);
      node();
      base_.pop_back();
      restore(snap);
      tried.push_back(v);
    }
  }

  // v is pruned when an automorphism fixing the current base pointwise maps
  // it into an already-explored sibling.
  bool is_pruned(int v, const std::vector<int>& tried) {
    if (tried.empty()) return false;
    std::vector<int> rep(static_cast<std::size_t>(n_));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (rep[static_cast<std::size_t>(x)] != x) {
        rep[static_cast<std::size_t>(x)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(x)])];
        x = rep[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& g : gens_) {
      bool fixes_base = true;
      for (int b : base_)
        if (g(b) != b) {
          fixes_base = false;
          break;
        }
      if (!fixes_base) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(g(x));
        if (a != b) rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    if (!any) return false;
    int rv = find(v);
    for (int u : tried)
      if (find(u) == rv) return true;
    return false;
  }

  const Graph& g_;
  int n_, words_;
  long long node_budget_;
  long long nodes_ = 0;
  std::vector<int> colors_;

  std::vector<int> elems_, pos_, cstart_, clen_;
  std::vector<int> base_;

  bool first_found_ = false;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<Permutation> gens_;
};

std::vector<std::pair<int, int>> cert_to_edges(const std::vector<std::uint64_t>& cert, int n) {
  int words = n == 0 ? 0 : static_cast<int>(cert.size()) / n;
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < n; ++p)
    for (int wd = 0; wd < words; ++wd) {
      std::uint64_t word = cert[static_cast<std::size_t>(p) * words + static_cast<std::size_t>(wd)];
      while (word) {
        int q = wd * 64 + std::countr_zero(word);
        word &= word - 1;
        if (q >= p) edges.emplace_back(p, q);
      }
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors,
                             int vertex_budget, long long node_budget) {
  if (g.vertex_count() > vertex_budget)
    throw budget_error("canonical_form: vertex budget exceeded");
  if (!colors.empty() && static_cast<int>(colors.size()) != g.vertex_count())
    throw std::invalid_argument("canonical_form: color vector size mismatch");
  CanonSearch search(g, colors, node_budget);
  search.run();
  CanonicalForm out;
  if (g.vertex_count() == 0) {
    out.labeling = Permutation::identity(0);
    return out;
  }
  out.labeling = search.best_labeling();
  out.certificate_edges = cert_to_edges(search.best_certificate(), g.vertex_count());
  if (!colors.empty()) out.color_histogram = search.canonical_colors();
  out.generators = search.generators();
  out.nodes = search.nodes();
  return out;
}

namespace {

std::optional<Permutation> iso_from_forms(const Graph& g, const Graph& h,
                                          const CanonicalForm& cg, const CanonicalForm& ch) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  if (cg.certificate_edges != ch.certificate_edges) return std::nullopt;
  if (cg.color_histogram != ch.color_histogram) return std::nullopt;
  // witness: v -> ch.labeling^{-1}(cg.labeling(v)). Forward edge
  // preservation of a bijection plus equal edge counts makes the inverse a
  // homomorphism as well.
  Permutation witness = compose(ch.labeling.inverse(), cg.labeling);
  for (const auto& [u, v] : g.edges())
    if (!h.adjacent(witness(u), witness(v)))
      throw std::logic_error("are_isomorphic: witness failed edge verification");
  return witness;
}

}  // namespace

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h,
                                          int vertex_budget, long long node_budget) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  auto cg = canonical_form(g, {}, vertex_budget, node_budget);
  auto ch = canonical_form(h, {}, vertex_budget, node_budget);
  return iso_from_forms(g, h, cg, ch);
}

std::optional<Permutation> are_isomorphic_colored(const Graph& g, const std::vector<int>& gc,
                                                  const Graph& h, const std::vector<int>& hc,
                                                  int vertex_budget, long long node_budget) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  auto cg = canonical_form(g, gc, vertex_budget, node_budget);
  auto ch = canonical_form(h, hc, vertex_budget, node_budget);
  auto w = iso_from_forms(g, h, cg, ch);
  if (w) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (gc[static_cast<std::size_t>(v)] != hc[static_cast<std::size_t>((*w)(v))])
        throw std::logic_error("are_isomorphic_colored: witness breaks colors");
  }
  return w;
}

PermutationGroup automorphism_group(const Graph& g, int vertex_budget, long long node_budget) {
  auto form = canonical_form(g, {}, vertex_budget, node_budget);
  return PermutationGroup(g.vertex_count(), form.generators);
}

StarMonomorphismReport star_monomorphism(const Graph& g, int vertex_budget,
                                         long long node_budget) {
  StarMonomorphismReport report;
  PermutationGroup aut_g = automorphism_group(g, vertex_budget, node_budget);
  Graph cover = categorical_product(complete_graph(2), g);
  PermutationGroup aut_cover = automorphism_group(cover, vertex_budget, node_budget);
  report.aut_base_order = aut_g.order();
  report.aut_cover_order = aut_cover.order();
  report.surjective = 2 * aut_g.order() == aut_cover.order();

  int n = g.vertex_count();
  auto embed = [&](bool swap_layers, const Permutation& f) {
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int layer = 0; layer < 2; ++layer)
      for (int v = 0; v < n; ++v) {
        int to_layer = swap_layers ? 1 - layer : layer;
        img[static_cast<std::size_t>(layer * n + v)] = to_layer * n + f(v);
      }
    return Permutation(std::move(img));
  };
  report.image_generators.push_back(embed(true, Permutation::identity(n)));
  for (const auto& f : aut_g.generators()) report.image_generators.push_back(embed(false, f));
  for (const auto& p : report.image_generators)
    if (!aut_cover.contains(p))
      throw std::logic_error("star_monomorphism: image is not an automorphism of the cover");
  return report;
}

}  // namespace kc
