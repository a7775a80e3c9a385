#include <cctype>
#include <filesystem>
#include <variant>

#include "agrp/abelian.hpp"
#include "agrp/harness.hpp"

namespace agrp {

namespace {

struct Value;
using List = std::vector<Value>;
struct Call {
  std::string name;
  std::vector<Value> args;
};
struct Value {
  std::variant<std::int64_t, std::string, List, Call> v;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Value parse() {
    Value v = value();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  template <class F>
  std::vector<Value> sequence(char close, F item) {
    std::vector<Value> out;
    if (eat(close)) return out;
    do out.push_back(item());
    while (eat(','));
    expect(close);
    return out;
  }

  Value value() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '[') {
      ++pos_;
      return Value{sequence(']', [&] { return value(); })};
    }
    if (c == '"') {
      const std::size_t end = s_.find('"', pos_ + 1);
      if (end == std::string::npos) fail("unterminated string");
      std::string str = s_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return Value{std::move(str)};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(s_.substr(pos_), &used);
      } catch (const std::exception&) {
        fail("bad integer");
      }
      pos_ += used;
      return Value{x};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      Call call{s_.substr(b, pos_ - b), {}};
      expect('(');
      call.args = sequence(')', [&] { return value(); });
      return Value{std::move(call)};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Built {
  CayleyGroup G;
  // coordinates when G is Z/n1 × ... in mixed radix (first fastest)
  std::optional<std::vector<int>> moduli;
};

class Evaluator {
 public:
  explicit Evaluator(const BuildOptions& o) : opts_(o) {}

  Built eval(const Value& v) {
    const Call* c = std::get_if<Call>(&v.v);
    if (!c) throw InvalidInput("expected a group expression");
    Built b = dispatch(*c);
    if (b.G.order() > opts_.max_order)
      throw ResourceExhausted("group of order " + std::to_string(b.G.order()) + " exceeds --max-order");
    return b;
  }

 private:
  static std::int64_t integer(const Value& v) {
    if (auto x = std::get_if<std::int64_t>(&v.v)) return *x;
    throw InvalidInput("expected an integer");
  }
  static void arity(const Call& c, std::size_t lo, std::size_t hi) {
    if (c.args.size() < lo || c.args.size() > hi) throw InvalidInput("wrong number of arguments to " + c.name);
  }
  int bounded(const Value& v, std::int64_t lo, std::int64_t hi, const std::string& what) const {
    const std::int64_t x = integer(v);
    if (x < lo || x > hi) throw InvalidInput(what + " out of range");
    return static_cast<int>(x);
  }
  // refuses huge abelian products before building any table
  void check_size(const std::vector<int>& ns) const {
    std::int64_t n = 1;
    for (int x : ns) {
      n *= x;
      if (n > opts_.max_order) throw ResourceExhausted("group exceeds --max-order");
    }
  }

  Built dispatch(const Call& c) {
    const std::int64_t cap = opts_.max_order;
    if (c.name == "cyclic") {
      arity(c, 1, 1);
      const int n = bounded(c.args[0], 1, 1 << 30, "cyclic order");
      check_size({n});
      return {cyclic_group(n), std::vector<int>{n}};
    }
    if (c.name == "elab") {
      arity(c, 2, 2);
      const int p = bounded(c.args[0], 2, 1 << 30, "prime");
      if (!is_prime(p)) throw InvalidInput("elab: " + std::to_string(p) + " is not prime");
      const int k = bounded(c.args[1], 0, 62, "rank");
      std::vector<int> ns(k, p);
      check_size(ns);
      return {abelian_group(ns), ns};
    }
    if (c.name == "abelian") {
      std::vector<int> ns;
      for (const auto& a : c.args) ns.push_back(bounded(a, 1, 1 << 30, "abelian factor"));
      check_size(ns);
      return {abelian_group(ns), ns};
    }
    if (c.name == "sym" || c.name == "alt") {
      arity(c, 1, 1);
      const int n = bounded(c.args[0], 1, 6, c.name + " degree");
      return {c.name == "sym" ? symmetric_group(n) : alternating_group(n), std::nullopt};
    }
    if (c.name == "direct") {
      if (c.args.empty()) throw InvalidInput("direct needs at least one factor");
      Built acc = eval(c.args[0]);
      for (std::size_t i = 1; i < c.args.size(); ++i) {
        Built f = eval(c.args[i]);
        if (static_cast<std::int64_t>(acc.G.order()) * f.G.order() > cap)
          throw ResourceExhausted("group exceeds --max-order");
        acc.G = direct_product(acc.G, f.G).group;
        acc.moduli.reset();
      }
      return acc;
    }
    if (c.name == "semidirect") {
      arity(c, 3, 3);
      Built A = eval(c.args[0]);
      Built H = eval(c.args[1]);
      if (static_cast<std::int64_t>(A.G.order()) * H.G.order() > cap) throw ResourceExhausted("group exceeds --max-order");
      return {semidirect_product(A.G, H.G, action(A, H.G, c.args[2])).group, std::nullopt};
    }
    if (c.name == "table") {
      arity(c, 1, 1);
      const auto* path = std::get_if<std::string>(&c.args[0].v);
      if (!path) throw InvalidInput("table expects a quoted path");
      std::filesystem::path p(*path);
      if (p.is_relative() && !opts_.base_dir.empty()) p = std::filesystem::path(opts_.base_dir) / p;
      return {read_group_file(p.string()), std::nullopt};
    }
    if (c.name == "relabel") {
      arity(c, 1, 2);
      Built b = eval(c.args[0]);
      const std::uint64_t seed = c.args.size() == 2 ? static_cast<std::uint64_t>(integer(c.args[1])) : opts_.seed;
      return {relabel(b.G, seed).first, std::nullopt};
    }
    throw InvalidInput("unknown constructor " + c.name);
  }

  // Generator images extended over H; rejects assignments that are not a
  // homomorphism H -> Aut(A).
  std::vector<std::vector<Elem>> action(const Built& A, const CayleyGroup& H, const Value& spec) {
    if (!is_abelian(A.G)) throw InvalidInput("semidirect: the normal factor must be abelian");
    const Call* c = std::get_if<Call>(&spec.v);
    if (!c) throw InvalidInput("semidirect: expected pow(k) or mat(...)");
    const auto gens = small_generating_set(H);
    const int n = A.G.order();
    std::vector<std::vector<Elem>> img;
    if (c->name == "pow") {
      arity(*c, 1, 1);
      const std::int64_t k = integer(c->args[0]);
      std::vector<Elem> f(n);
      for (Elem a = 0; a < n; ++a) f[a] = A.G.pow(a, k);
      img.assign(gens.size(), f);
    } else if (c->name == "mat") {
      if (!A.moduli) throw InvalidInput("mat: the normal factor must be cyclic, elab or abelian");
      if (c->args.size() != gens.size())
        throw InvalidInput("mat: expected " + std::to_string(gens.size()) + " matrices, one per generator of H");
      const auto& ns = *A.moduli;
      const ModuleShape shape{ns};
      for (const auto& mv : c->args) {
        const auto* rows = std::get_if<List>(&mv.v);
        if (!rows || rows->size() != ns.size()) throw InvalidInput("mat: matrix must have one row per coordinate");
        std::vector<std::vector<std::int64_t>> M;
        for (const auto& r : *rows) {
          const auto* row = std::get_if<List>(&r.v);
          if (!row || row->size() != ns.size()) throw InvalidInput("mat: matrix must be square");
          M.emplace_back();
          for (const auto& x : *row) M.back().push_back(integer(x));
        }
        std::vector<Elem> f(n);
        for (int x = 0; x < n; ++x) {
          const auto v = shape.vector(x);
          std::vector<std::int64_t> w(ns.size(), 0);
          for (std::size_t i = 0; i < ns.size(); ++i)
            for (std::size_t j = 0; j < ns.size(); ++j) w[j] = mod(w[j] + v[i] * M[i][j], ns[j]);
          f[x] = shape.index(w);
        }
        img.push_back(std::move(f));
      }
    } else {
      throw InvalidInput("semidirect: unknown action " + c->name);
    }
    for (const auto& f : img)
      if (!is_automorphism(A.G, f)) throw InvalidInput("semidirect: a generator image is not an automorphism of A");
    std::vector<std::vector<Elem>> act(H.order());
    act[0].resize(n);
    for (Elem a = 0; a < n; ++a) act[0][a] = a;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem x = queue[q], y = H.mul(x, gens[j]);
        std::vector<Elem> g(n);
        for (Elem a = 0; a < n; ++a) g[a] = img[j][act[x][a]];
        if (act[y].empty()) {
          act[y] = std::move(g);
          queue.push_back(y);
        } else if (act[y] != g) {
          throw InvalidInput("semidirect: the action is not a homomorphism from H");
        }
      }
    return act;
  }

  const BuildOptions& opts_;
};

}  // namespace

CayleyGroup build_group(const std::string& expr, const BuildOptions& opts) {
  Value v = Parser(expr).parse();
  CayleyGroup G = Evaluator(opts).eval(v).G;
  G.set_name(expr);
  return G;
}

}  // namespace agrp
