#include "agrp/intertwiner.hpp"

#include <cmath>

namespace agrp {

GroupRing::GroupRing(std::shared_ptr<const CayleyGroup> H, std::int64_t e) : H_(std::move(H)), e_(e) {
  require(H_ != nullptr && e >= 1, "GroupRing: bad parameters");
}

GroupRing::Element GroupRing::one() const { return basis(0); }

GroupRing::Element GroupRing::basis(Elem h) const {
  Element x = zero();
  x[h] = 1 % e_;
  return x;
}

GroupRing::Element GroupRing::add(const Element& x, const Element& y) const {
  Element r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % e_;
  return r;
}

GroupRing::Element GroupRing::mul(const Element& x, const Element& y) const {
  Element r = zero();
  for (Elem g = 0; g < H_->order(); ++g) {
    if (x[g] == 0) continue;
    for (Elem h = 0; h < H_->order(); ++h)
      if (y[h] != 0) {
        const Elem gh = H_->mul(g, h);
        r[gh] = (r[gh] + x[g] * y[h]) % e_;
      }
  }
  return r;
}

HomMatrix ring_action(const Representation& alpha, const GroupRing& R, const GroupRing::Element& r) {
  for (int n : alpha.shape().moduli) require(R.modulus() % n == 0, "ring_action: exponent does not divide e");
  HomMatrix out = HomMatrix::zero(alpha.shape());
  for (Elem h = 0; h < alpha.group().order(); ++h)
    if (r[h] != 0) out = hom_add(out, hom_scale(alpha(h), r[h]));
  return out;
}

double HomModule::log2_size() const {
  double s = 0;
  for (auto o : orders) s += std::log2(static_cast<double>(o));
  return s;
}

std::optional<std::uint64_t> HomModule::size() const {
  std::uint64_t s = 1;
  for (auto o : orders) {
    if (s > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(o)) return std::nullopt;
    s *= static_cast<std::uint64_t>(o);
  }
  return s;
}

HomMatrix HomModule::combination(const std::vector<std::int64_t>& c) const {
  HomMatrix M = HomMatrix::zero(shape);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) M = hom_add(M, hom_scale(basis[i], c[i]));
  return M;
}

HomMatrix HomModule::element(std::uint64_t k) const {
  std::vector<std::int64_t> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    c[i] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(orders[i]));
    k /= static_cast<std::uint64_t>(orders[i]);
  }
  return combination(c);
}

HomMatrix HomModule::random_element(Rng& rng) const {
  std::vector<std::int64_t> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    c[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(orders[i])));
  return combination(c);
}

HomModule hom_module(const Representation& alpha, const Representation& beta) {
  require(alpha.shape() == beta.shape(), "hom_module: different modules");
  require(alpha.group().order() == beta.group().order(), "hom_module: different groups");
  const ModuleShape& s = alpha.shape();
  HomModule out{s, {}, {}};
  std::vector<Elem> gens = alpha.group_generators();
  for (Elem g : beta.group_generators()) gens.push_back(g);
  for (const auto& b : primary_blocks(s)) {
    const int t = b.end - b.begin;
    const auto& n = b.decomposition.shape.moduli;
    const std::int64_t e = n.back();
    const PrimePowerRing R{b.p, log_p(e, b.p)};
    // unknown z_ij = ψ_ij · e/n_j, a multiple of e/gcd(n_i, n_j)
    auto var = [t](int i, int j) { return i * t + j; };
    std::vector<std::vector<std::int64_t>> columns;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        std::vector<std::int64_t> col(t * t, 0);
        col[var(i, j)] = gcd64(n[i], n[j]) % e;
        if (col[var(i, j)] != 0) columns.push_back(std::move(col));
      }
    for (Elem h : gens) {
      const HomMatrix M = restrict_block(alpha(h), b), N = restrict_block(beta(h), b);
      for (int i = 0; i < t; ++i)
        for (int k = 0; k < t; ++k) {
          // (Mψ - ψN)_ik scaled by e/n_k
          std::vector<std::int64_t> col(t * t, 0);
          for (int l = 0; l < t; ++l) {
            col[var(l, k)] = mod(col[var(l, k)] + M.m(i, l), e);
            const std::int64_t c = N.m(l, k) * n[l] / n[k];
            ensure(N.m(l, k) * n[l] % n[k] == 0, "hom_module: invalid matrix entry");
            col[var(i, l)] = mod(col[var(i, l)] - c, e);
          }
          columns.push_back(std::move(col));
        }
    }
    IntMatrix A(t * t, static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (int r = 0; r < t * t; ++r) A(r, static_cast<int>(c)) = columns[c][r];
    const auto sol = solve_left(A, std::vector<std::int64_t>(columns.size(), 0), R);
    ensure(sol.has_value(), "hom_module: homogeneous system inconsistent");
    for (std::size_t g = 0; g < sol->generators.size(); ++g) {
      HomMatrix psi = HomMatrix::zero(s);
      for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
          const std::int64_t z = sol->generators[g][var(i, j)];
          ensure(z * n[j] % e == 0, "hom_module: solution outside the constraint lattice");
          psi.m(b.begin + i, b.begin + j) = z * n[j] / e;
        }
      ensure(psi.is_valid(), "hom_module: solution is not an endomorphism");
      ensure(hom_additive_order(psi) == sol->orders[g], "hom_module: order mismatch");
      out.basis.push_back(std::move(psi));
      out.orders.push_back(sol->orders[g]);
    }
  }
  return out;
}

CentralizerRing centralizer_ring(const Representation& alpha) { return hom_module(alpha, alpha); }

namespace {

bool intertwines(const Representation& alpha, const Representation& beta, const HomMatrix& psi) {
  for (Elem h : alpha.group_generators())
    if (!(hom_mul(alpha(h), psi) == hom_mul(psi, beta(h)))) return false;
  for (Elem h : beta.group_generators())
    if (!(hom_mul(alpha(h), psi) == hom_mul(psi, beta(h)))) return false;
  return true;
}

std::optional<HomMatrix> scan(const HomModule& K, std::uint64_t size) {
  for (std::uint64_t k = 0; k < size; ++k) {
    HomMatrix M = K.element(k);
    if (is_invertible(M)) return M;
  }
  return std::nullopt;
}

}  // namespace

std::optional<HomMatrix> module_isomorphism(const Representation& alpha, const Representation& beta,
                                            const IntertwinerOptions& opts) {
  if (alpha == beta) return HomMatrix::identity(alpha.shape());
  const HomModule K = hom_module(alpha, beta);
  const auto size = K.size();
  std::optional<HomMatrix> found;
  if (size && *size <= opts.exhaustive_limit) {
    found = scan(K, *size);
  } else {
    Rng rng(opts.seed);
    const auto trials = static_cast<std::uint64_t>(64 * (1 + K.log2_size()));
    for (std::uint64_t t = 0; t < trials && !found; ++t) {
      HomMatrix M = K.random_element(rng);
      if (is_invertible(M)) found = M;
    }
    if (!found) {
      if (!size || *size > opts.scan_cap)
        throw ResourceExhausted("module_isomorphism: Hom group too large to certify absence");
      found = scan(K, *size);
    }
  }
  if (found) ensure(intertwines(alpha, beta, *found), "module_isomorphism: result does not intertwine");
  return found;
}

std::vector<HomMatrix> aut_generators(const ModuleShape& s) {
  std::vector<HomMatrix> out;
  for (const auto& b : primary_blocks(s))
    for (const auto& g : aut_generators(b.decomposition)) {
      HomMatrix M = HomMatrix::identity(s);
      for (int i = b.begin; i < b.end; ++i)
        for (int j = b.begin; j < b.end; ++j) M.m(i, j) = g.m(i - b.begin, j - b.begin);
      out.push_back(std::move(M));
    }
  return out;
}

namespace {

// log2 |End(A)|
double log2_end(const ModuleShape& s) {
  double r = 0;
  for (int a : s.moduli)
    for (int b : s.moduli) r += std::log2(static_cast<double>(gcd64(a, b)));
  return r;
}

struct UnitCollector {
  UnitGroup out;
  bool add(const HomMatrix& M) {
    Perm p = hom_to_perm(M);
    if (out.group.contains(p)) return false;
    out.generators.push_back(M);
    out.group = out.group.with_generators(std::span<const Perm>(&p, 1));
    return true;
  }
};

}  // namespace

UnitGroup unit_group(const CentralizerRing& K, const IntertwinerOptions& opts) {
  const ModuleShape& s = K.shape;
  UnitCollector c{{PermGroup::trivial(s.size()), {}, false}};
  if (std::abs(K.log2_size() - log2_end(s)) < 1e-9) {
    for (const auto& g : aut_generators(s)) c.add(g);
    return c.out;
  }
  const auto size = K.size();
  if (size && *size <= opts.exhaustive_limit) {
    std::uint64_t units = 0;
    for (std::uint64_t k = 0; k < *size; ++k)
      if (is_invertible(K.element(k))) ++units;
    Rng rng(opts.seed);
    // a few random units usually suffice; the scan completes the rest
    for (int t = 0; t < 64 && c.out.group.order() < units; ++t) {
      HomMatrix M = K.random_element(rng);
      if (is_invertible(M)) c.add(M);
    }
    for (std::uint64_t k = 0; k < *size && c.out.group.order() < units; ++k) {
      HomMatrix M = K.element(k);
      if (is_invertible(M)) c.add(M);
    }
    ensure(c.out.group.order() == units, "unit_group: generated group misses units");
    return c.out;
  }
  Rng rng(opts.seed);
  const auto patience = static_cast<std::uint64_t>(32 * std::max(1.0, K.log2_size()));
  std::uint64_t stable = 0;
  while (stable < patience) {
    HomMatrix M = K.random_element(rng);
    if (!is_invertible(M)) continue;
    stable = c.add(M) ? 0 : stable + 1;
  }
  c.out.randomized = true;
  return c.out;
}

IntertwiningCoset intertwining_coset(const Representation& alpha, const Representation& beta,
                                     const IntertwinerOptions& opts) {
  IntertwiningCoset r{Coset::none(alpha.shape().size()), {}, std::nullopt, false};
  r.representative = module_isomorphism(alpha, beta, opts);
  if (!r.representative) return r;
  UnitGroup U = unit_group(centralizer_ring(alpha), opts);
  r.unit_generators = std::move(U.generators);
  r.randomized = U.randomized;
  r.coset = Coset{std::move(U.group), hom_to_perm(*r.representative), false};
  return r;
}

}  // namespace agrp
