#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2.hpp"
#include "free_loop.hpp"
#include "identities.hpp"
#include "loop.hpp"
#include "m_loop.hpp"
#include "parallel.hpp"

namespace triality {

/// Coordinates over the centre basis x_i^2, [x_i,x_j], (x_i,x_j,x_k),
/// in that order with pairs and triples lexicographic.
inline std::size_t center_dim(int n) {
  const auto un = static_cast<std::uint64_t>(n);
  return static_cast<std::size_t>(un + binomial(un, 2) + binomial(un, 3));
}

struct CenterVector {
  std::size_t dim = 0;
  std::uint64_t bits = 0;
  bool operator==(const CenterVector&) const = default;
  bool operator[](std::size_t k) const { return bits >> k & 1; }
  std::string to_string() const { return F2Subspace::bits(bits, dim); }
};

using CenterSubspace = F2Subspace;

/// (lambda_i; lambda_ij; lambda_ijk) packed in the centre-basis order.
class CharacteristicVector {
 public:
  CharacteristicVector() = default;
  CharacteristicVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1) throw std::invalid_argument("characteristic vector needs n >= 1");
    if (center_dim(n) > 63) throw std::length_error("characteristic vector too long");
    if (bits >> center_dim(n)) throw std::invalid_argument("characteristic vector has too many bits");
  }

  /// "lambda_1 .. lambda_n lambda_12 .. lambda_123 .." as 0/1 characters;
  /// the length fixes n.
  static CharacteristicVector parse(const std::string& s) {
    for (int n = 1; center_dim(n) <= 63; ++n)
      if (center_dim(n) == s.size()) return CharacteristicVector(n, F2Subspace::parse_bits(s));
    throw std::invalid_argument("length " + std::to_string(s.size()) + " is not n + C(n,2) + C(n,3) for any n");
  }

  int n() const { return n_; }
  std::size_t dim() const { return center_dim(n_); }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  bool lambda(int i) const { return bits_ >> (i - 1) & 1; }
  bool lambda(int i, int j) const { return bits_ >> pair_pos(i, j) & 1; }
  bool lambda(int i, int j, int k) const { return bits_ >> triple_pos(i, j, k) & 1; }

  std::size_t pair_pos(int i, int j) const {
    std::size_t pos = static_cast<std::size_t>(n_);
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b, ++pos)
        if (a == i && b == j) return pos;
    throw std::out_of_range("bad pair");
  }
  std::size_t triple_pos(int i, int j, int k) const {
    std::size_t pos = static_cast<std::size_t>(n_) + binomial(static_cast<std::uint64_t>(n_), 2);
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b)
        for (int c = b + 1; c <= n_; ++c, ++pos)
          if (a == i && b == j && c == k) return pos;
    throw std::out_of_range("bad triple");
  }

  std::string to_string() const { return F2Subspace::bits(bits_, dim()); }
  bool operator==(const CharacteristicVector&) const = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Kernel of the functional v -> sum lambda_k v_k; the centre basis is
/// treated as self-dual.
inline CenterSubspace hyperplane(const CharacteristicVector& lam) {
  if (lam.is_zero()) throw std::invalid_argument("the zero characteristic vector defines no hyperplane");
  const std::size_t d = lam.dim();
  const std::uint64_t l = lam.bits();
  const int p = __builtin_ctzll(l);
  CenterSubspace T(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (static_cast<int>(k) == p) continue;
    std::uint64_t v = std::uint64_t{1} << k;
    if (l >> k & 1) v |= std::uint64_t{1} << p;
    T.insert(v);
  }
  return T;
}

/// The functional whose kernel is the codimension-one subspace T.
inline CharacteristicVector functional_of(const CenterSubspace& T, int n) {
  if (T.codim() != 1) throw std::invalid_argument("subspace must have codimension 1");
  for (std::uint64_t l = 1; l < (std::uint64_t{1} << T.dim()); ++l) {
    bool ok = true;
    for (auto r : T.basis())
      if (__builtin_popcountll(r & l) & 1) {
        ok = false;
        break;
      }
    if (ok) return CharacteristicVector(n, l);
  }
  throw std::logic_error("no functional vanishes on the subspace");
}

struct CenterBasis {
  int n = 0;
  std::vector<std::size_t> elements;
  std::vector<std::string> names;
  bool all_central = false;
  bool independent = false;
  std::uint64_t span_size = 0;
  /// set when the full centre was available for comparison
  std::optional<bool> span_is_center;
  /// coordinates of each element of the span, indexed by loop element; -1 elsewhere
  std::vector<std::int64_t> coord;
  /// loop element for each coordinate vector (when independent)
  std::vector<std::size_t> by_coord;

  std::size_t dim() const { return elements.size(); }
  bool in_span(std::size_t x) const { return coord[x] >= 0; }
  CenterVector coordinates(std::size_t x) const {
    if (coord[x] < 0) throw std::domain_error("element is not in the span of the centre basis");
    return {dim(), static_cast<std::uint64_t>(coord[x])};
  }
  std::size_t element_of(std::uint64_t v) const { return by_coord.at(v); }
};

namespace detail {

template <FiniteLoop L, class Central>
CenterBasis center_basis_impl(const L& l, const std::vector<std::size_t>& x, Central is_central,
                              const std::vector<std::size_t>* full_center) {
  CenterBasis B;
  const int n = static_cast<int>(x.size());
  B.n = n;
  for (int i = 0; i < n; ++i) {
    B.elements.push_back(square(l, x[static_cast<std::size_t>(i)]));
    B.names.push_back("x" + std::to_string(i + 1) + "^2");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      B.elements.push_back(commutator(l, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]));
      B.names.push_back("[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        B.elements.push_back(associator(l, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)],
                                        x[static_cast<std::size_t>(k)]));
        B.names.push_back("(x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + ",x" +
                          std::to_string(k + 1) + ")");
      }
  B.all_central = std::all_of(B.elements.begin(), B.elements.end(), [&](std::size_t e) { return is_central(e); });

  B.coord.assign(l.size(), -1);
  B.coord[0] = 0;
  B.by_coord = {0};
  B.independent = B.all_central;
  for (std::size_t k = 0; k < B.elements.size() && B.independent; ++k) {
    const std::size_t cur = B.by_coord.size();
    for (std::size_t s = 0; s < cur; ++s) {
      const std::size_t e = l.mul(B.by_coord[s], B.elements[k]);
      if (B.coord[e] >= 0) {
        B.independent = false;
        break;
      }
      B.coord[e] = B.coord[B.by_coord[s]] | (std::int64_t{1} << k);
      B.by_coord.push_back(e);
    }
  }
  B.span_size = B.by_coord.size();
  if (full_center) {
    bool eq = full_center->size() == B.span_size;
    for (auto c : *full_center)
      if (B.coord[c] < 0) eq = false;
    B.span_is_center = eq;
  }
  return B;
}

}  // namespace detail

/// Centre basis of a rank-3 table: centrality by definition, and the span
/// is compared with the centre computed by definition.
inline CenterBasis center_basis(const LoopTable& l, const std::vector<std::size_t>& gens) {
  const auto z = center(l);
  std::vector<char> central(l.size(), 0);
  for (auto c : z) central[c] = 1;
  return detail::center_basis_impl(l, gens, [&](std::size_t e) { return central[e] != 0; }, &z);
}

/// Centre basis of the embedded realization; centrality is checked in the
/// ambient product (componentwise), which implies centrality in the subloop.
inline CenterBasis center_basis(const EmbeddedFreeLoop& l) {
  return detail::center_basis_impl(
      l, l.generators(), [&](std::size_t e) { return l.componentwise_central(e); }, nullptr);
}

struct CodeLoop {
  CenterSubspace T;
  /// base index of each coset representative (least index in the coset)
  std::vector<std::size_t> reps;
  /// quotient map: base index -> quotient index
  std::vector<std::uint32_t> class_of;
  LoopTable table;
  /// product of classes agreed with the class of the product on all checked pairs
  bool well_defined = false;
  std::uint64_t checked_pairs = 0;

  std::size_t operator()(std::size_t base_index) const { return class_of[base_index]; }
  std::size_t size() const { return table.size(); }
};

struct QuotientOptions {
  /// pairs of base elements to test for well-definedness; 0 = all pairs
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_base_size = std::uint64_t{1} << 20;
};

template <FiniteLoop L>
CodeLoop quotient(const L& l, const CenterBasis& B, const CenterSubspace& T, const std::vector<std::size_t>& gens,
                  QuotientOptions opt = {}) {
  if (T.dim() != B.dim()) throw std::invalid_argument("subspace dimension does not match the centre basis");
  if (T.codim() != 1) throw std::invalid_argument("quotients are taken by subspaces of codimension 1");
  if (!B.independent) throw std::logic_error("centre basis is not independent");
  if (l.size() > opt.max_base_size) throw std::length_error("loop exceeds the quotient size guard");
  const std::size_t N = l.size();
  std::vector<std::size_t> telems;
  for (auto v : T.elements()) telems.push_back(B.element_of(v));

  CodeLoop q;
  q.T = T;
  constexpr std::uint32_t kUnset = UINT32_MAX;
  q.class_of.assign(N, kUnset);
  for (std::size_t x = 0; x < N; ++x) {
    if (q.class_of[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(q.reps.size());
    q.reps.push_back(x);
    for (auto t : telems) {
      const std::size_t y = l.mul(x, t);
      if (q.class_of[y] != kUnset && q.class_of[y] != c) throw std::logic_error("cosets overlap");
      q.class_of[y] = c;
    }
  }
  const std::size_t M = q.reps.size();
  std::vector<std::uint32_t> mul(M * M);
  for (std::size_t a = 0; a < M; ++a)
    for (std::size_t b = 0; b < M; ++b) mul[a * M + b] = q.class_of[l.mul(q.reps[a], q.reps[b])];

  bool ok = true;
  if (opt.samples == 0) {
    for (std::size_t x = 0; x < N && ok; ++x)
      for (std::size_t y = 0; y < N; ++y)
        if (q.class_of[l.mul(x, y)] != mul[q.class_of[x] * M + q.class_of[y]]) {
          ok = false;
          break;
        }
    q.checked_pairs = static_cast<std::uint64_t>(N) * N;
  } else {
    SplitMix64 g(opt.seed);
    for (std::uint64_t s = 0; s < opt.samples && ok; ++s) {
      const std::size_t x = g.below(N), y = g.below(N);
      if (q.class_of[l.mul(x, y)] != mul[q.class_of[x] * M + q.class_of[y]]) ok = false;
    }
    q.checked_pairs = opt.samples;
  }
  q.well_defined = ok;
  std::vector<std::size_t> qgens;
  for (auto g : gens) qgens.push_back(q.class_of[g]);
  q.table = LoopTable(M, std::move(mul), {}, std::move(qgens));
  return q;
}

/// |{x^2}| <= 2 and Moufang.  Tables up to 256 elements are checked on all
/// triples; larger ones on `samples` seeded triples per identity.
inline bool is_code_loop(const LoopTable& l, std::uint64_t samples = 1'000'000, std::uint64_t seed = 0) {
  if (squares(l).size() > 2) return false;
  const Scope scope = l.size() <= 256 ? Scope::all() : Scope::sampled(samples);
  for (auto w : {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle})
    if (!check_moufang(l, w, scope, seed).passed()) return false;
  return true;
}

/// Reads off lambda on the generators: the bit is 1 where the square,
/// commutator or associator equals the unique nonidentity value s.
inline CharacteristicVector characteristic_vector(const LoopTable& l, const std::vector<std::size_t>& gens) {
  if (generated_subloop(l, gens).size() != l.size())
    throw std::invalid_argument("the given elements do not generate the loop");
  const int n = static_cast<int>(gens.size());
  std::vector<std::size_t> vals;
  for (int i = 0; i < n; ++i) vals.push_back(square(l, gens[static_cast<std::size_t>(i)]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      vals.push_back(commutator(l, gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        vals.push_back(associator(l, gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)],
                                  gens[static_cast<std::size_t>(k)]));
  std::optional<std::size_t> s;
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (vals[k] == 0) continue;
    if (s && *s != vals[k])
      throw std::domain_error("squares, commutators and associators of the generators take two nonidentity values");
    s = vals[k];
    bits |= std::uint64_t{1} << k;
  }
  return CharacteristicVector(n, bits);
}

inline CharacteristicVector characteristic_vector(const CodeLoop& q) {
  return characteristic_vector(q.table, q.table.generators());
}

/// L(T(lambda)) together with its quotient map (CodeLoop::class_of).
template <FiniteLoop L>
CodeLoop pi_lambda(const L& l, const CenterBasis& B, const std::vector<std::size_t>& gens,
                   const CharacteristicVector& lam, QuotientOptions opt = {}) {
  if (lam.n() != B.n) throw std::invalid_argument("characteristic vector has the wrong rank");
  return quotient(l, B, hyperplane(lam), gens, opt);
}

/// Subloop generated by all associators, by exhaustive evaluation.
template <FiniteLoop L>
std::vector<std::size_t> associator_subloop(const L& l, unsigned jobs = 1) {
  const std::size_t N = l.size();
  std::vector<std::vector<char>> hit(N);
  parallel_chunks(N, jobs, [&](std::size_t a) {
    auto& h = hit[a];
    h.assign(N, 0);
    for (std::size_t b = 0; b < N; ++b) {
      const std::size_t ab = l.mul(a, b);
      for (std::size_t c = 0; c < N; ++c) h[l.ldiv(l.mul(a, l.mul(b, c)), l.mul(ab, c))] = 1;
    }
  });
  std::vector<std::size_t> vals;
  for (std::size_t v = 0; v < N; ++v)
    for (std::size_t a = 0; a < N; ++a)
      if (hit[a][v]) {
        vals.push_back(v);
        break;
      }
  return generated_subloop(l, vals);
}

struct SweepRow {
  CharacteristicVector lambda;
  CenterSubspace T;
  std::size_t order = 0;
  bool well_defined = false;
  bool moufang = false;
  std::size_t square_count = 0;
  bool is_group = false;
  bool contains_associators = false;
  bool variety_e = false;
  bool expansion_laws = false;
  /// non-groups: one nonidentity square, commutator and associator, all equal
  bool unique_values = false;
  bool roundtrip = false;

  bool code_loop() const { return moufang && square_count <= 2; }
  bool ok() const {
    return order == 16 && well_defined && code_loop() && is_group == contains_associators && variety_e &&
           expansion_laws && (is_group || unique_values) && roundtrip;
  }
};

struct SweepResult {
  CenterBasis basis;
  CenterSubspace associators;  // U as a subspace of centre coordinates
  std::size_t associator_subloop_order = 0;
  std::vector<SweepRow> rows;
  std::size_t groups() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return r.is_group; }));
  }
  bool ok() const {
    return rows.size() == (std::size_t{1} << basis.dim()) - 1 && std::all_of(rows.begin(), rows.end(), [](auto& r) { return r.ok(); });
  }
};

namespace detail {

inline SweepRow sweep_one(const LoopTable& base, const CenterBasis& B, const std::vector<std::size_t>& gens,
                          const CenterSubspace& U, std::uint64_t lam_bits) {
  SweepRow r;
  r.lambda = CharacteristicVector(B.n, lam_bits);
  CodeLoop q = pi_lambda(base, B, gens, r.lambda);
  const LoopTable& t = q.table;
  r.T = q.T;
  r.order = t.size();
  r.well_defined = q.well_defined;
  r.moufang = true;
  for (auto w : {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle})
    r.moufang = r.moufang && check_moufang(t, w, Scope::all()).passed();
  r.square_count = squares(t).size();
  r.is_group = is_associative(t);
  r.contains_associators = q.T.contains(U);
  const VarietyScope all{5, 0};
  auto ve = check_variety_E(t, all);
  r.variety_e = std::all_of(ve.begin(), ve.end(), [](auto& x) { return x.passed(); });
  auto ex = check_expansion_laws(t, all);
  r.expansion_laws = std::all_of(ex.begin(), ex.end(), [](auto& x) { return x.passed(); });

  std::set<std::size_t> sq, cm, as;
  const std::size_t M = t.size();
  for (std::size_t a = 0; a < M; ++a) {
    if (auto s = square(t, a)) sq.insert(s);
    for (std::size_t b = 0; b < M; ++b) {
      if (auto c = commutator(t, a, b)) cm.insert(c);
      for (std::size_t c = 0; c < M; ++c)
        if (auto v = associator(t, a, b, c)) as.insert(v);
    }
  }
  r.unique_values = sq.size() == 1 && cm.size() == 1 && as.size() == 1 && *sq.begin() == *cm.begin() &&
                    *cm.begin() == *as.begin();
  r.roundtrip = characteristic_vector(q) == r.lambda;
  return r;
}

}  // namespace detail

/// Every codimension-one subspace of the centre of M, one per nonzero lambda.
inline SweepResult codeloop_sweep(const MLoop& m, unsigned jobs = 1) {
  const std::vector<std::size_t> gens(m.x.begin(), m.x.end());
  SweepResult res;
  res.basis = center_basis(m.table, gens);
  if (!res.basis.independent) throw std::logic_error("centre basis of M is not independent");
  const auto U = associator_subloop(m.table, jobs);
  res.associator_subloop_order = U.size();
  res.associators = CenterSubspace(res.basis.dim());
  for (auto u : U) res.associators.insert(res.basis.coordinates(u).bits);
  const std::uint64_t count = (std::uint64_t{1} << res.basis.dim()) - 1;
  res.rows.resize(count);
  parallel_chunks(count, jobs, [&](std::size_t k) {
    res.rows[k] = detail::sweep_one(m.table, res.basis, gens, res.associators, k + 1);
  });
  return res;
}

}  // namespace triality
