#include "agrp/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "agrp/cayley.hpp"

namespace agrp {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x] != static_cast<int>(x)) return false;
  return true;
}

bool perm_is_bijection(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  for (int v : a) {
    if (v < 0 || v >= static_cast<int>(a.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

namespace {

int first_moved_point(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return static_cast<int>(x);
  return -1;
}

}  // namespace

// -- Schreier–Sims -----------------------------------------------------------

struct PermGroup::Builder {
  struct Level {
    ChainLevel data;
    std::vector<std::size_t> checked;  // per orbit point: generators already paired
  };

  int n;
  std::vector<Level> levels;

  explicit Builder(int degree) : n(degree) {}

  explicit Builder(const PermGroup& G) : n(G.degree_) {
    for (const auto& l : *G.levels_) {
      Level L;
      L.data = *l;
      L.checked.assign(L.data.orbit.size(), L.data.generators.size());
      levels.push_back(std::move(L));
    }
  }

  void add_level(int b) {
    Level L;
    L.data.base_point = b;
    L.data.orbit = {b};
    L.data.orbit_pos.assign(n, -1);
    L.data.orbit_pos[b] = 0;
    L.data.transversal = {perm_identity(n)};
    L.data.inverse_transversal = {perm_identity(n)};
    L.checked = {0};
    levels.push_back(std::move(L));
  }

  std::pair<std::size_t, Perm> sift(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels.size(); ++l) {
      const auto& d = levels[l].data;
      const int pos = d.orbit_pos[g[d.base_point]];
      if (pos < 0) return {l, std::move(g)};
      if (pos != 0) g = perm_mul(g, d.inverse_transversal[pos]);
    }
    return {levels.size(), std::move(g)};
  }

  void push_point(Level& L, int z, const Perm& u) {
    L.data.orbit_pos[z] = static_cast<int>(L.data.orbit.size());
    L.data.orbit.push_back(z);
    L.data.transversal.push_back(u);
    L.data.inverse_transversal.push_back(perm_inv(u));
    L.checked.push_back(0);
  }

  void add_generator_to_level(Level& L, const Perm& s) {
    L.data.generators.push_back(s);
    const std::size_t old = L.data.orbit.size();
    for (std::size_t k = 0; k < old; ++k) {
      const int z = s[L.data.orbit[k]];
      if (L.data.orbit_pos[z] < 0) push_point(L, z, perm_mul(L.data.transversal[k], s));
    }
    for (std::size_t k = old; k < L.data.orbit.size(); ++k)
      for (const Perm& t : L.data.generators) {
        const int z = t[L.data.orbit[k]];
        if (L.data.orbit_pos[z] < 0) push_point(L, z, perm_mul(L.data.transversal[k], t));
      }
  }

  // h fixes the base points of levels < to; it joins levels from..to.
  void add_strong(const Perm& h, std::size_t from, std::size_t to) {
    if (to == levels.size()) add_level(first_moved_point(h));
    for (std::size_t l = from; l <= to; ++l) add_generator_to_level(levels[l], h);
  }

  void run(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      bool restarted = false;
      Level& L = levels[i];
      for (std::size_t k = 0; k < L.data.orbit.size() && !restarted; ++k) {
        while (L.checked[k] < L.data.generators.size()) {
          const Perm& s = L.data.generators[L.checked[k]];
          ++L.checked[k];
          const int z = s[L.data.orbit[k]];
          Perm sg = perm_mul(perm_mul(L.data.transversal[k], s),
                             L.data.inverse_transversal[L.data.orbit_pos[z]]);
          auto [j, r] = sift(std::move(sg), static_cast<std::size_t>(i) + 1);
          if (!perm_is_identity(r)) {
            add_strong(r, static_cast<std::size_t>(i) + 1, j);
            i = static_cast<std::ptrdiff_t>(j);
            restarted = true;
            break;
          }
        }
      }
      if (!restarted) --i;
    }
  }

  // Returns false when g is already in the group.
  bool add_input(const Perm& g) {
    auto [j, r] = sift(g, 0);
    if (perm_is_identity(r)) return false;
    add_strong(r, 0, j);
    run(j);
    return true;
  }

  std::shared_ptr<const std::vector<std::shared_ptr<const ChainLevel>>> freeze() {
    auto out = std::make_shared<std::vector<std::shared_ptr<const ChainLevel>>>();
    for (auto& L : levels) out->push_back(std::make_shared<const ChainLevel>(std::move(L.data)));
    return out;
  }
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::vector<int> base_prefix)
    : degree_(degree) {
  require(degree >= 0, "negative degree");
  Builder b(degree);
  for (int x : base_prefix) {
    require(x >= 0 && x < degree, "base point out of range");
    b.add_level(x);
  }
  for (auto& g : generators) {
    require(static_cast<int>(g.size()) == degree, "generator degree mismatch");
    require(perm_is_bijection(g), "generator is not a permutation");
    if (b.add_input(g)) generators_.push_back(std::move(g));
  }
  levels_ = b.freeze();
}

PermGroup PermGroup::regular(const CayleyGroup& G) {
  std::vector<Perm> gens;
  for (Elem g : whole_group(G).generators) {
    Perm p(G.order());
    for (Elem x = 0; x < G.order(); ++x) p[x] = G.mul(x, g);
    gens.push_back(std::move(p));
  }
  return PermGroup(G.order(), std::move(gens));
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& l : *levels_) b.push_back(l->base_point);
  return b;
}

std::uint64_t PermGroup::order() const {
  unsigned __int128 r = 1;
  for (const auto& l : *levels_) {
    r *= l->orbit.size();
    if (r > ~std::uint64_t{0}) throw ResourceExhausted("group order exceeds 2^64");
  }
  return static_cast<std::uint64_t>(r);
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  Perm h = g;
  for (const auto& l : *levels_) {
    const int pos = l->orbit_pos[h[l->base_point]];
    if (pos < 0) return false;
    if (pos != 0) h = perm_mul(h, l->inverse_transversal[pos]);
  }
  return perm_is_identity(h);
}

std::vector<int> PermGroup::orbit(int x) const {
  require(x >= 0 && x < degree_, "orbit: point out of range");
  std::vector<int> orb{x};
  std::vector<char> seen(degree_, 0);
  seen[x] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const Perm& g : generators_)
      if (!seen[g[orb[k]]]) {
        seen[g[orb[k]]] = 1;
        orb.push_back(g[orb[k]]);
      }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const Perm& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order() == b.order() && a.is_subgroup_of(b);
}

PermGroup PermGroup::with_base(std::vector<int> prefix) const {
  const auto b = base();
  if (prefix.size() <= b.size() && std::equal(prefix.begin(), prefix.end(), b.begin())) return *this;
  return PermGroup(degree_, generators_, std::move(prefix));
}

PermGroup PermGroup::with_generators(std::span<const Perm> extra) const {
  Builder b(*this);
  std::vector<Perm> gens = generators_;
  for (const Perm& g : extra) {
    require(static_cast<int>(g.size()) == degree_, "generator degree mismatch");
    require(perm_is_bijection(g), "generator is not a permutation");
    if (b.add_input(g)) gens.push_back(g);
  }
  return PermGroup(degree_, std::move(gens), b.freeze());
}

PermGroup PermGroup::chain_suffix(std::size_t k) const {
  auto lv = std::make_shared<std::vector<std::shared_ptr<const ChainLevel>>>();
  for (std::size_t l = k; l < levels_->size(); ++l) lv->push_back((*levels_)[l]);
  std::vector<Perm> gens;
  if (!lv->empty()) gens = lv->front()->generators;
  return PermGroup(degree_, std::move(gens), std::move(lv));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
  if (order() > cap) throw ResourceExhausted("elements: group too large to enumerate");
  std::vector<Perm> out{perm_identity(degree_)};
  // g = t_{L-1} ... t_0, built from the deepest level up
  for (auto it = levels_->rbegin(); it != levels_->rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * (*it)->orbit.size());
    for (const Perm& g : out)
      for (const Perm& t : (*it)->transversal) next.push_back(perm_mul(g, t));
    out = std::move(next);
  }
  return out;
}

Perm PermGroup::random_element(Rng& rng) const {
  Perm g = perm_identity(degree_);
  for (auto it = levels_->rbegin(); it != levels_->rend(); ++it)
    g = perm_mul(g, (*it)->transversal[rng.below((*it)->orbit.size())]);
  return g;
}

// -- cosets ------------------------------------------------------------------

Coset Coset::none(int degree) { return Coset{PermGroup::trivial(degree), perm_identity(degree), true}; }

Coset Coset::of(PermGroup H) {
  const int n = H.degree();
  return Coset{std::move(H), perm_identity(n), false};
}

bool Coset::contains(const Perm& g) const {
  return !empty && subgroup.contains(perm_mul(g, perm_inv(representative)));
}

Coset Coset::right_mul(const Perm& g) const {
  if (empty) return *this;
  return Coset{subgroup, perm_mul(representative, g), false};
}

bool operator==(const Coset& a, const Coset& b) {
  if (a.empty || b.empty) return a.empty == b.empty;
  return a.subgroup == b.subgroup && a.contains(b.representative);
}

std::vector<Perm> coset_elements(const Coset& c, std::uint64_t cap) {
  if (c.empty) return {};
  auto els = c.subgroup.elements(cap);
  for (auto& g : els) g = perm_mul(g, c.representative);
  return els;
}

Coset point_transporter(const PermGroup& P, int x, int y) {
  require(x >= 0 && x < P.degree() && y >= 0 && y < P.degree(), "point_transporter: point out of range");
  PermGroup Q = P.with_base({x});
  const auto& top = *Q.chain().front();
  const int pos = top.orbit_pos[y];
  if (pos < 0) return Coset::none(P.degree());
  return Coset{Q.chain_suffix(1), top.transversal[pos], false};
}

Coset point_transporter(const Coset& C, int x, int y) {
  if (C.empty) return C;
  const Perm rinv = perm_inv(C.representative);
  return point_transporter(C.subgroup, x, rinv[y]).right_mul(C.representative);
}

PermGroup pointwise_stabilizer(const PermGroup& P, std::span<const int> delta) {
  return P.with_base(std::vector<int>(delta.begin(), delta.end())).chain_suffix(delta.size());
}

Coset union_of_cosets(std::span<const Coset> cosets) {
  const Coset* first = nullptr;
  for (const auto& c : cosets)
    if (!c.empty) {
      first = &c;
      break;
    }
  if (!first) return Coset::none(cosets.empty() ? 0 : cosets.front().subgroup.degree());
  const Perm rinv = perm_inv(first->representative);
  std::vector<Perm> extra;
  for (const auto& c : cosets) {
    if (c.empty || &c == first) continue;
    for (const Perm& g : c.subgroup.generators()) extra.push_back(g);
    Perm t = perm_mul(c.representative, rinv);
    if (!perm_is_identity(t)) extra.push_back(std::move(t));
  }
  return Coset{first->subgroup.with_generators(extra), first->representative, false};
}

// -- tracked homomorphisms ---------------------------------------------------

TrackedHom::TrackedHom(int source_degree, std::vector<Perm> generators, std::vector<Perm> images,
                       int target_degree)
    : source_degree_(source_degree), target_degree_(target_degree) {
  require(generators.size() == images.size(), "TrackedHom: generator/image count mismatch");
  for (const Perm& h : images)
    require(static_cast<int>(h.size()) == target_degree, "TrackedHom: image degree mismatch");
  const int n = source_degree, m = target_degree;
  std::vector<Perm> combined;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    require(static_cast<int>(generators[i].size()) == n, "TrackedHom: generator degree mismatch");
    Perm c(n + m);
    for (int x = 0; x < n; ++x) c[x] = generators[i][x];
    for (int x = 0; x < m; ++x) c[n + x] = n + images[i][x];
    combined.push_back(std::move(c));
  }
  source_ = PermGroup(n, std::move(generators));
  image_ = PermGroup(m, std::move(images));
  std::vector<int> prefix = image_.base();
  for (int& b : prefix) b += n;
  prefix_len_ = prefix.size();
  graph_ = PermGroup(n + m, std::move(combined), std::move(prefix));
  if (graph_.order() != source_.order())
    throw InvalidInput("TrackedHom: generator images do not define a homomorphism");
  std::vector<Perm> kgens;
  if (prefix_len_ < graph_.chain().size())
    for (const Perm& g : graph_.chain()[prefix_len_]->generators) kgens.emplace_back(g.begin(), g.begin() + n);
  kernel_ = PermGroup(n, std::move(kgens));
}

Perm TrackedHom::preimage(const Perm& h) const {
  require(static_cast<int>(h.size()) == target_degree_, "preimage: degree mismatch");
  const int n = source_degree_, m = target_degree_;
  Perm g(n + m);
  for (int x = 0; x < n; ++x) g[x] = x;
  for (int x = 0; x < m; ++x) g[n + x] = n + h[x];
  for (std::size_t l = 0; l < prefix_len_; ++l) {
    const auto& lv = *graph_.chain()[l];
    const int pos = lv.orbit_pos[g[lv.base_point]];
    if (pos < 0) throw InvalidInput("preimage: element not in the image");
    if (pos != 0) g = perm_mul(g, lv.inverse_transversal[pos]);
  }
  for (int x = 0; x < m; ++x)
    if (g[n + x] != n + x) throw InvalidInput("preimage: element not in the image");
  return perm_inv(Perm(g.begin(), g.begin() + n));
}

// -- output ------------------------------------------------------------------

void write_perm(std::ostream& out, const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p[i];
  }
  out << '\n';
}

void write_permgroup(std::ostream& out, const PermGroup& P) {
  out << "degree " << P.degree() << " generators " << P.generators().size() << '\n';
  for (const Perm& g : P.generators()) write_perm(out, g);
}

void write_coset(std::ostream& out, const Coset& C) {
  if (C.empty) {
    out << "empty\n";
    return;
  }
  write_permgroup(out, C.subgroup);
  out << "rep ";
  write_perm(out, C.representative);
}

}  // namespace agrp
