#include "agrp/representation.hpp"

#include <algorithm>
#include <map>

namespace agrp {

Representation::Representation(Unchecked, std::shared_ptr<const CayleyGroup> H, ModuleShape shape,
                               std::vector<HomMatrix> images, std::vector<Elem> gens)
    : H_(std::move(H)), shape_(std::move(shape)), images_(std::move(images)), gens_(std::move(gens)) {}

Representation::Representation(std::shared_ptr<const CayleyGroup> H, ModuleShape shape,
                               std::vector<HomMatrix> images)
    : H_(std::move(H)), shape_(std::move(shape)), images_(std::move(images)) {
  require(H_ != nullptr, "Representation: null group");
  const CayleyGroup& G = *H_;
  require(static_cast<int>(images_.size()) == G.order(), "Representation: one image per element required");
  for (const auto& M : images_)
    require(M.shape == shape_ && M.is_valid(), "Representation: image has the wrong shape");
  require(images_[0] == HomMatrix::identity(shape_), "Representation: identity must act trivially");
  gens_ = whole_group(G).generators;
  for (Elem h = 0; h < G.order(); ++h)
    for (Elem s : gens_)
      require(images_[G.mul(h, s)] == hom_mul(images_[h], images_[s]),
              "Representation: images do not form a homomorphism");
}

Representation Representation::trivial(std::shared_ptr<const CayleyGroup> H, ModuleShape shape) {
  const int n = H->order();
  auto gens = whole_group(*H).generators;
  return Representation(Unchecked{}, std::move(H), shape,
                        std::vector<HomMatrix>(n, HomMatrix::identity(shape)), std::move(gens));
}

Representation Representation::from_generators(std::shared_ptr<const CayleyGroup> H, ModuleShape shape,
                                               std::span<const Elem> gens, std::span<const HomMatrix> images) {
  require(gens.size() == images.size(), "Representation: generator and image counts differ");
  const CayleyGroup& G = *H;
  std::vector<std::optional<HomMatrix>> img(G.order());
  img[0] = HomMatrix::identity(shape);
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = G.mul(x, gens[j]);
      if (img[y]) continue;
      img[y] = hom_mul(*img[x], images[j]);
      queue.push_back(y);
    }
  }
  require(static_cast<int>(queue.size()) == G.order(), "Representation: generators do not generate H");
  std::vector<HomMatrix> all;
  all.reserve(img.size());
  for (auto& m : img) all.push_back(std::move(*m));
  return Representation(std::move(H), std::move(shape), std::move(all));
}

Subgroup Representation::kernel() const {
  std::vector<Elem> k;
  const HomMatrix id = HomMatrix::identity(shape_);
  for (Elem h = 0; h < H_->order(); ++h)
    if (images_[h] == id) k.push_back(h);
  return subgroup_from_elements(*H_, std::move(k));
}

Representation act_by_autA(const Representation& alpha, const HomMatrix& psi) {
  const HomMatrix inv = hom_inverse(psi);
  std::vector<HomMatrix> out;
  out.reserve(alpha.images_.size());
  for (const auto& M : alpha.images_) out.push_back(hom_mul(hom_mul(inv, M), psi));
  return Representation(Representation::Unchecked{}, alpha.H_, alpha.shape_, std::move(out), alpha.gens_);
}

Representation act_by_autH(const Representation& alpha, const Perm& phi) {
  const Perm inv = perm_inv(phi);
  std::vector<HomMatrix> out;
  out.reserve(alpha.images_.size());
  for (std::size_t h = 0; h < alpha.images_.size(); ++h) out.push_back(alpha.images_[inv[h]]);
  return Representation(Representation::Unchecked{}, alpha.H_, alpha.shape_, std::move(out), alpha.gens_);
}

Representation compose_images(const Representation& alpha, ModuleShape shape, const std::vector<HomMatrix>& images) {
  return Representation(Representation::Unchecked{}, alpha.H_, std::move(shape), images, alpha.gens_);
}

Representation lambda_component(const Representation& alpha, const HomocyclicDecomposition& D, int c) {
  require(D.shape == alpha.shape(), "lambda_component: decomposition of another module");
  const int m = D.components[c].rank;
  ModuleShape s{std::vector<int>(m, static_cast<int>(D.p))};
  std::vector<HomMatrix> out;
  out.reserve(alpha.images().size());
  for (const auto& M : alpha.images()) {
    IntMatrix b = hom_block(M, D, c, c);
    for (auto& x : b.data) x %= D.p;
    out.push_back(HomMatrix{s, std::move(b)});
  }
  return compose_images(alpha, s, out);
}

ConjugationRep conjugation_rep(const CayleyGroup& G, const Subgroup& A, const Subgroup& H) {
  require(is_normal(G, A), "conjugation_rep: A is not normal");
  require(is_abelian(G, A), "conjugation_rep: A is not abelian");
  require(intersection(G, A, H).is_trivial() && A.order() * H.order() == G.order(),
          "conjugation_rep: H is not a complement to A");
  ConjugationRep r{embed(G, A), embed(G, H), {}, Representation::trivial(std::make_shared<CayleyGroup>(), {})};
  r.basis = abelian_basis(r.A.group);
  auto Hp = std::make_shared<const CayleyGroup>(r.H.group);
  std::vector<HomMatrix> images;
  images.reserve(H.order());
  for (Elem h = 0; h < Hp->order(); ++h) {
    const Elem hp = r.H.to_parent[h];
    std::vector<std::vector<std::int64_t>> rows;
    for (Elem g : r.basis.generators) rows.push_back(r.basis.coords(r.A.from_parent[G.conj(r.A.to_parent[g], hp)]));
    images.push_back(HomMatrix::from_rows(r.basis.shape, rows));
  }
  r.rep = Representation(std::move(Hp), r.basis.shape, std::move(images));
  return r;
}

// -- subspaces ---------------------------------------------------------------

Subspace span_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p, int ambient) {
  Subspace S;
  S.p = p;
  S.ambient = ambient;
  for (auto& r : rows)
    for (auto& x : r) x = mod(x, p);
  int row = 0;
  for (int col = 0; col < ambient && row < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = row; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[row], rows[piv]);
    const std::int64_t inv = inverse_mod(rows[row][col], p);
    for (auto& x : rows[row]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == row || rows[i][col] == 0) continue;
      const std::int64_t f = rows[i][col];
      for (int j = 0; j < ambient; ++j) rows[i][j] = mod(rows[i][j] - f * rows[row][j], p);
    }
    S.pivots.push_back(col);
    ++row;
  }
  rows.resize(row);
  S.basis = std::move(rows);
  return S;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  auto rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return span_mod_p(std::move(rows), a.p, a.ambient);
}

bool Subspace::contains(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> w(v.begin(), v.end());
  for (auto& x : w) x = mod(x, p);
  for (int i = 0; i < dim(); ++i) {
    const std::int64_t f = w[pivots[i]];
    if (f == 0) continue;
    for (int j = 0; j < ambient; ++j) w[j] = mod(w[j] - f * basis[i][j], p);
  }
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::int64_t> Subspace::coordinates(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = mod(v[pivots[i]], p);
  return c;
}

std::vector<int> Subspace::element_indices() const {
  int stride = 1;
  std::vector<int> strides(ambient);
  for (int j = 0; j < ambient; ++j) {
    strides[j] = stride;
    stride *= static_cast<int>(p);
  }
  std::vector<std::vector<std::int64_t>> vecs{std::vector<std::int64_t>(ambient, 0)};
  for (const auto& b : basis) {
    const std::size_t n = vecs.size();
    for (std::int64_t c = 1; c < p; ++c)
      for (std::size_t i = 0; i < n; ++i) {
        auto w = vecs[i];
        for (int j = 0; j < ambient; ++j) w[j] = (w[j] + c * b[j]) % p;
        vecs.push_back(std::move(w));
      }
  }
  std::vector<int> out;
  for (const auto& w : vecs) {
    int idx = 0;
    for (int j = 0; j < ambient; ++j) idx += static_cast<int>(w[j]) * strides[j];
    out.push_back(idx);
  }
  return out;
}

bool is_elementary(const ModuleShape& s) {
  if (s.moduli.empty()) return true;
  const int p = s.moduli[0];
  return is_prime(p) && std::all_of(s.moduli.begin(), s.moduli.end(), [p](int n) { return n == p; });
}

namespace {

std::int64_t field_of(const Representation& alpha) {
  require(is_elementary(alpha.shape()), "representation: module is not elementary abelian");
  return alpha.shape().moduli.empty() ? 2 : alpha.shape().moduli[0];
}

}  // namespace

Subspace submodule_generated(const Representation& alpha, const std::vector<std::int64_t>& v) {
  const std::int64_t p = field_of(alpha);
  const int m = alpha.shape().rank();
  Subspace W = span_mod_p({v}, p, m);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < W.basis.size() && !grew; ++i)
      for (Elem s : alpha.group_generators()) {
        auto w = alpha(s).apply(W.basis[i]);
        if (W.contains(w)) continue;
        auto rows = W.basis;
        rows.push_back(std::move(w));
        W = span_mod_p(std::move(rows), p, m);
        grew = true;
        break;
      }
  }
  return W;
}

bool is_irreducible(const Representation& alpha) {
  const int m = alpha.shape().rank();
  if (m == 0) return false;
  const int N = alpha.shape().size();
  for (int x = 1; x < N; ++x)
    if (submodule_generated(alpha, alpha.shape().vector(x)).dim() != m) return false;
  return true;
}

std::vector<Subspace> irreducible_submodules(const Representation& alpha) {
  field_of(alpha);
  const int N = alpha.shape().size();
  std::map<Subspace, int> ids;
  std::vector<Subspace> subs;
  std::vector<int> gen_of(N, -1);
  for (int x = 1; x < N; ++x) {
    Subspace W = submodule_generated(alpha, alpha.shape().vector(x));
    auto [it, fresh] = ids.emplace(W, static_cast<int>(subs.size()));
    if (fresh) subs.push_back(std::move(W));
    gen_of[x] = it->second;
  }
  std::vector<Subspace> out;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    bool irreducible = true;
    for (int x : subs[k].element_indices())
      if (x != 0 && gen_of[x] != static_cast<int>(k)) {
        irreducible = false;
        break;
      }
    if (irreducible) out.push_back(subs[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Representation restrict_to(const Representation& alpha, const Subspace& W) {
  const std::int64_t p = field_of(alpha);
  ModuleShape s{std::vector<int>(W.dim(), static_cast<int>(p))};
  std::vector<HomMatrix> out;
  out.reserve(alpha.images().size());
  for (const auto& M : alpha.images()) {
    HomMatrix R = HomMatrix::zero(s);
    for (int i = 0; i < W.dim(); ++i) {
      auto w = M.apply(W.basis[i]);
      require(W.contains(w), "restrict_to: subspace is not invariant");
      auto c = W.coordinates(w);
      for (int j = 0; j < W.dim(); ++j) R.m(i, j) = c[j];
    }
    out.push_back(std::move(R));
  }
  return compose_images(alpha, s, out);
}

namespace detail {

std::optional<HomMatrix> equivalent_unchecked(const Representation& alpha, const Representation& beta) {
  if (!(alpha.shape() == beta.shape())) return std::nullopt;
  const ModuleShape& s = alpha.shape();
  const int d = s.rank();
  if (d == 0) return HomMatrix::identity(s);
  const std::int64_t p = s.moduli[0];
  const PrimePowerRing F{p, 1};
  // orbit basis u·α(h_i) of an irreducible module, u = e_0
  std::vector<std::int64_t> u(d, 0);
  u[0] = 1;
  std::vector<Elem> hs;
  std::vector<std::vector<std::int64_t>> rows;
  for (Elem h = 0; h < alpha.group().order() && static_cast<int>(rows.size()) < d; ++h) {
    auto w = alpha(h).apply(u);
    auto trial = rows;
    trial.push_back(w);
    if (span_mod_p(trial, p, d).dim() > static_cast<int>(rows.size())) {
      rows = std::move(trial);
      hs.push_back(h);
    }
  }
  if (static_cast<int>(rows.size()) < d) return std::nullopt;
  IntMatrix B(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) B(i, j) = rows[i][j];
  const IntMatrix Binv = *mat_inverse(B, F);
  for (int v = 1; v < s.size(); ++v) {
    const auto vv = s.vector(v);
    IntMatrix C(d, d);
    for (int i = 0; i < d; ++i) {
      auto w = beta(hs[i]).apply(vv);
      for (int j = 0; j < d; ++j) C(i, j) = w[j];
    }
    HomMatrix Psi{s, mat_mul(Binv, C, p)};
    if (det_mod_prime(Psi.m, p) == 0) continue;
    bool ok = true;
    for (Elem g : alpha.group_generators())
      if (!(hom_mul(alpha(g), Psi) == hom_mul(Psi, beta(g)))) {
        ok = false;
        break;
      }
    if (ok) return Psi;
  }
  return std::nullopt;
}

}  // namespace detail

std::optional<HomMatrix> irreducible_equivalent(const Representation& alpha, const Representation& beta) {
  require(is_irreducible(alpha) && is_irreducible(beta), "irreducible_equivalent: input is not irreducible");
  return detail::equivalent_unchecked(alpha, beta);
}

Decomposition decompose(const Representation& alpha) {
  const std::int64_t p = field_of(alpha);
  require(alpha.group().order() % p != 0, "decompose: p divides |H|");
  const int m = alpha.shape().rank();
  Decomposition D;
  const auto irr = irreducible_submodules(alpha);
  Subspace cur = span_mod_p({}, p, m);
  while (cur.dim() < m) {
    const Subspace* next = nullptr;
    for (const auto& W : irr)
      if (!cur.contains(W.basis[0])) {
        next = &W;
        break;
      }
    ensure(next != nullptr, "decompose: no irreducible submodule outside the current sum");
    cur = subspace_sum(cur, *next);
    D.summands.push_back(*next);
  }
  for (const auto& W : D.summands) {
    Representation r = restrict_to(alpha, W);
    int cls = -1;
    for (std::size_t c = 0; c < D.classes.size() && cls < 0; ++c)
      if (detail::equivalent_unchecked(D.classes[c].rep, r)) cls = static_cast<int>(c);
    if (cls < 0) {
      cls = static_cast<int>(D.classes.size());
      D.classes.push_back({std::move(r), 0});
    }
    D.classes[cls].multiplicity++;
    D.class_of.push_back(cls);
  }
  return D;
}

}  // namespace agrp
