#include "kroncover/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kroncover/errors.hpp"

namespace kc {

PermutationGroup::PermutationGroup(int degree) : degree_(degree) {}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree_)
      throw std::invalid_argument("PermutationGroup: generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(std::move(g));
  }
  build();
}

namespace {

// Gen(i) of a chain is the union of the generator lists at levels >= i.
struct GenView {
  const std::vector<const std::vector<Permutation>*> lists;
  template <typename F>
  void for_each(F&& f) const {
    for (const auto* l : lists)
      for (const auto& g : *l) f(g);
  }
};

}  // namespace

void PermutationGroup::rebuild_orbit(std::size_t lvl) {
  Level& L = levels_[lvl];
  L.orbit.clear();
  L.slot.assign(static_cast<std::size_t>(degree_), -1);
  L.transversal.clear();
  L.orbit.push_back(L.beta);
  L.slot[static_cast<std::size_t>(L.beta)] = 0;
  L.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
    int p = L.orbit[qi];
    for (std::size_t j = lvl; j < levels_.size(); ++j) {
      for (const auto& s : levels_[j].gens) {
        int q = s(p);
        if (L.slot[static_cast<std::size_t>(q)] < 0) {
          L.slot[static_cast<std::size_t>(q)] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(q);
          L.transversal.push_back(compose(s, L.transversal[qi]));
        }
      }
    }
  }
}

bool PermutationGroup::strip(const Permutation& p, std::size_t from,
                             Permutation* residue, std::size_t* stop) const {
  Permutation r = p;
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    int img = r(L.beta);
    int s = L.slot[static_cast<std::size_t>(img)];
    if (s < 0) {
      *residue = std::move(r);
      *stop = lvl;
      return false;
    }
    r = compose(L.transversal[static_cast<std::size_t>(s)].inverse(), r);
  }
  *stop = levels_.size();
  bool ok = r.is_identity();
  *residue = std::move(r);
  return ok;
}

void PermutationGroup::build() {
  levels_.clear();
  // base points are distinct, so the chain never exceeds degree_ levels;
  // reserving keeps Level references stable across insertions
  levels_.reserve(static_cast<std::size_t>(degree_));
  order_ = 1;

  // Places a nontrivial permutation at the deepest level whose base prefix
  // it fixes, extending the base when it fixes every current base point.
  auto insert_gen = [&](const Permutation& g) -> std::size_t {
    std::size_t lvl = 0;
    while (lvl < levels_.size() && g(levels_[lvl].beta) == levels_[lvl].beta) ++lvl;
    if (lvl == levels_.size()) {
      int beta = -1;
      for (int x = 0; x < degree_; ++x)
        if (g(x) != x) { beta = x; break; }
      levels_.push_back(Level{});
      levels_.back().beta = beta;
    }
    levels_[lvl].gens.push_back(g);
    return lvl;
  };

  for (const auto& g : gens_) insert_gen(g);
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);

  // Verify bottom-up that every Schreier generator sifts to the identity;
  // insert residues as new strong generators until the chain is closed.
  if (!levels_.empty()) {
    std::size_t i = levels_.size() - 1;
    while (true) {
      rebuild_orbit(i);
      bool inserted = false;
      Level& L = levels_[i];
      for (std::size_t qi = 0; qi < L.orbit.size() && !inserted; ++qi) {
        int p = L.orbit[qi];
        const Permutation& up = L.transversal[qi];
        for (std::size_t j = i; j < levels_.size() && !inserted; ++j) {
          for (const auto& s : levels_[j].gens) {
            int sp = s(p);
            const Permutation& usp =
                L.transversal[static_cast<std::size_t>(L.slot[static_cast<std::size_t>(sp)])];
            Permutation schreier = compose(usp.inverse(), compose(s, up));
            if (schreier.is_identity()) continue;
            Permutation residue;
            std::size_t stop = 0;
            if (strip(schreier, i + 1, &residue, &stop)) continue;
            std::size_t at = insert_gen(residue);
            for (std::size_t l = i + 1; l <= at && l < levels_.size(); ++l) rebuild_orbit(l);
            i = at;
            inserted = true;
            break;
          }
        }
      }
      if (inserted) continue;
      if (i == 0) break;
      --i;
    }
  }

  for (const auto& L : levels_) {
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(order_, static_cast<std::uint64_t>(L.orbit.size()), &next))
      throw std::overflow_error("PermutationGroup: order exceeds 64 bits");
    order_ = next;
  }
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (levels_.empty()) return p.is_identity();
  Permutation residue;
  std::size_t stop = 0;
  return strip(p, 0, &residue, &stop);
}

void PermutationGroup::enumerate_rec(std::size_t lvl, const Permutation& prefix,
                                     const std::function<void(const Permutation&)>& visit) const {
  if (lvl == levels_.size()) {
    visit(prefix);
    return;
  }
  const Level& L = levels_[lvl];
  std::vector<int> pts = L.orbit;
  std::sort(pts.begin(), pts.end());
  for (int p : pts) {
    const Permutation& u = L.transversal[static_cast<std::size_t>(L.slot[static_cast<std::size_t>(p)])];
    enumerate_rec(lvl + 1, compose(prefix, u), visit);
  }
}

void PermutationGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  enumerate_rec(0, Permutation::identity(degree_), visit);
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t budget) const {
  if (order_ > budget) throw budget_error("PermutationGroup::elements: order exceeds budget");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<int> PermutationGroup::point_orbits() const {
  std::vector<int> rep(static_cast<std::size_t>(degree_));
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (rep[static_cast<std::size_t>(x)] != x) {
      rep[static_cast<std::size_t>(x)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(x)])];
      x = rep[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) rep[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  for (int x = 0; x < degree_; ++x) rep[static_cast<std::size_t>(x)] = find(x);
  return rep;
}

std::uint64_t group_order(int degree, const std::vector<Permutation>& gens) {
  return PermutationGroup(degree, gens).order();
}

PermutationGroup subgroup_where(const PermutationGroup& g,
                                const std::function<bool(const Permutation&)>& pred,
                                std::uint64_t enumeration_budget) {
  if (g.order() > enumeration_budget)
    throw budget_error("subgroup_where: ambient group exceeds enumeration budget");
  std::vector<Permutation> sgens;
  PermutationGroup cur(g.degree());
  g.for_each_element([&](const Permutation& e) {
    if (e.is_identity() || !pred(e) || cur.contains(e)) return;
    sgens.push_back(e);
    cur = PermutationGroup(g.degree(), sgens);
  });
  return cur;
}

namespace {

bool commutes(const Permutation& a, const Permutation& b) {
  for (int x = 0; x < a.degree(); ++x)
    if (a(b(x)) != b(a(x))) return false;
  return true;
}

}  // namespace

PermutationGroup centralizer_in_symmetric(int n, const Permutation& sigma) {
  if (sigma.degree() != n)
    throw std::invalid_argument("centralizer_in_symmetric: degree mismatch");

  if (is_involution(sigma)) {
    // Z_{S_n}(sigma) for an involution with m transpositions: each
    // transposition is central in its block, blocks can be permuted among
    // themselves, and the fixed points carry a full symmetric group.
    std::vector<std::pair<int, int>> blocks;
    std::vector<int> fixed;
    for (int x = 0; x < n; ++x) {
      if (sigma(x) == x) fixed.push_back(x);
      else if (sigma(x) > x) blocks.emplace_back(x, sigma(x));
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<Permutation> gens;
    auto transposition = [&](int a, int b) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::swap(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]);
      return Permutation(std::move(img));
    };
    for (const auto& [a, b] : blocks) gens.push_back(transposition(a, b));
    for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::swap(img[static_cast<std::size_t>(blocks[j].first)],
                img[static_cast<std::size_t>(blocks[j + 1].first)]);
      std::swap(img[static_cast<std::size_t>(blocks[j].second)],
                img[static_cast<std::size_t>(blocks[j + 1].second)]);
      gens.push_back(Permutation(std::move(img)));
    }
    if (fixed.size() >= 2) gens.push_back(transposition(fixed[0], fixed[1]));
    if (fixed.size() >= 3) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      for (std::size_t j = 0; j < fixed.size(); ++j)
        img[static_cast<std::size_t>(fixed[j])] = fixed[(j + 1) % fixed.size()];
      gens.push_back(Permutation(std::move(img)));
    }
    return PermutationGroup(n, std::move(gens));
  }

  if (n > 10)
    throw budget_error("centralizer_in_symmetric: brute force limited to n <= 10");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> sgens;
  PermutationGroup cur(n);
  do {
    Permutation p(img);
    if (!commutes(p, sigma) || p.is_identity() || cur.contains(p)) continue;
    sgens.push_back(p);
    cur = PermutationGroup(n, sgens);
  } while (std::next_permutation(img.begin(), img.end()));
  return cur;
}

Permutation phi_embedding(const std::vector<int>& bits, const Permutation& sigma) {
  int m = sigma.degree();
  if (static_cast<int>(bits.size()) != m)
    throw std::invalid_argument("phi_embedding: bits/sigma size mismatch");
  std::vector<int> img(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    img[static_cast<std::size_t>(i)] = sigma(i);
    img[static_cast<std::size_t>(m + i)] = m + sigma(i);
  }
  Permutation result{std::move(img)};
  for (int i = m - 1; i >= 0; --i) {
    if (!bits[static_cast<std::size_t>(i)]) continue;
    std::vector<int> eps(static_cast<std::size_t>(2 * m));
    std::iota(eps.begin(), eps.end(), 0);
    std::swap(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(m + i)]);
    result = compose(Permutation(std::move(eps)), result);
  }
  return result;
}

}  // namespace kc
