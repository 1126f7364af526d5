#include "quiverhh/hochschild.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "quiverhh/errors.hpp"

namespace quiverhh {

// endomorphisms ------------------------------------------------------------

Endomorphism Endomorphism::from_vector(const SparseVec& v, std::size_t dim) {
  Endomorphism f(dim);
  for (const auto& [idx, c] : v) f.cols_.at(idx / dim).push_back(idx % dim, c);
  return f;
}

Endomorphism Endomorphism::diagonal(const std::vector<Scalar>& eigenvalues) {
  Endomorphism f(eigenvalues.size());
  for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
    if (!Field::is_zero(eigenvalues[j])) f.cols_[j].push_back(j, eigenvalues[j]);
  }
  return f;
}

SparseVec Endomorphism::apply(const Field& k, const SparseVec& x) const {
  SparseVec out;
  for (const auto& [j, c] : x) out.axpy(k, c, cols_.at(j));
  return out;
}

bool Endomorphism::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& v) { return v.empty(); });
}

bool Endomorphism::is_diagonal() const {
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& [i, c] : cols_[j]) {
      if (i != j) return false;
    }
  }
  return true;
}

SparseVec Endomorphism::vectorize() const {
  SparseVec out;
  const std::size_t n = cols_.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, c] : cols_[j]) out.push_back(j * n + i, c);
  }
  return out;
}

Endomorphism add(const Field& k, const Endomorphism& f, const Endomorphism& g) {
  Endomorphism out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.column(j) = add(k, f.column(j), g.column(j));
  return out;
}

Endomorphism sub(const Field& k, const Endomorphism& f, const Endomorphism& g) {
  Endomorphism out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.column(j) = sub(k, f.column(j), g.column(j));
  return out;
}

Endomorphism scaled(const Field& k, const Endomorphism& f, const Scalar& c) {
  Endomorphism out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.column(j) = f.column(j).scaled(k, c);
  return out;
}

Endomorphism compose(const Field& k, const Endomorphism& f, const Endomorphism& g) {
  Endomorphism out(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) out.column(j) = f.apply(k, g.column(j));
  return out;
}

Endomorphism bracket(const Field& k, const Endomorphism& f, const Endomorphism& g) {
  return sub(k, compose(k, f, g), compose(k, g, f));
}

Endomorphism power(const Field& k, const Endomorphism& f, unsigned long e) {
  Endomorphism out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) out.column(j) = SparseVec::unit(j);
  for (unsigned long i = 0; i < e; ++i) out = compose(k, f, out);
  return out;
}

Endomorphism inner_derivation(const Algebra& a, const SparseVec& c) {
  Endomorphism f(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    SparseVec b = SparseVec::unit(j);
    f.column(j) = sub(a.field(), a.multiply(c, b), a.multiply(b, c));
  }
  return f;
}

bool satisfies_leibniz(const Algebra& a, const Endomorphism& f) {
  const Field& k = a.field();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseVec bi = SparseVec::unit(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      SparseVec bj = SparseVec::unit(j);
      SparseVec lhs = f.apply(k, a.product(i, j));
      SparseVec rhs = add(k, a.multiply(f.column(i), bj), a.multiply(bi, f.column(j)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool kills_idempotents(const Algebra& a, const Endomorphism& f) {
  return std::all_of(a.idempotents().begin(), a.idempotents().end(),
                     [&](std::size_t e) { return f.column(e).empty(); });
}

// derivation solve ---------------------------------------------------------

namespace {

// linear form in the unknowns with values in A: unknown -> vector
using LinA = std::map<std::size_t, SparseVec>;

void lin_axpy(const Field& k, LinA& acc, const Scalar& c, const LinA& x) {
  if (Field::is_zero(c)) return;
  for (const auto& [u, v] : x) {
    SparseVec& slot = acc[u];
    slot.axpy(k, c, v);
    if (slot.empty()) acc.erase(u);
  }
}

struct Block {
  std::size_t left, right;
  bool operator==(const Block&) const = default;
};

// (s, t) with e_s b e_t = b, when every basis element sits in one block
std::optional<std::vector<Block>> basis_blocks(const Algebra& a) {
  std::vector<Block> blocks(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    std::optional<std::size_t> l, r;
    SparseVec b = SparseVec::unit(j);
    for (std::size_t t = 0; t < a.idempotents().size(); ++t) {
      SparseVec e = SparseVec::unit(a.idempotents()[t]);
      SparseVec eb = a.multiply(e, b);
      if (eb == b) l = t;
      else if (!eb.empty()) return std::nullopt;
      SparseVec be = a.multiply(b, e);
      if (be == b) r = t;
      else if (!be.empty()) return std::nullopt;
    }
    if (!l || !r) return std::nullopt;
    blocks[j] = Block{*l, *r};
  }
  return blocks;
}

std::vector<Endomorphism> solve_derivations(const Algebra& a, bool kill_idempotents) {
  const Field& k = a.field();
  const std::size_t n = a.dim();
  if (n == 0) return {};
  auto blocks = kill_idempotents ? basis_blocks(a) : std::nullopt;

  // generators: idempotents, then greedily the first basis element outside the generated span
  std::vector<std::size_t> gens = a.idempotents();
  struct Word {
    std::size_t parent;  // SIZE_MAX for a generator
    std::size_t gen;
    SparseVec value;
  };
  std::vector<Word> words;
  for (;;) {
    words.clear();
    Echelon span(k);
    std::deque<std::size_t> queue;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      SparseVec g = SparseVec::unit(gens[t]);
      if (span.insert(g)) {
        words.push_back({SIZE_MAX, t, g});
        queue.push_back(words.size() - 1);
      }
    }
    while (!queue.empty() && span.rank() < n) {
      std::size_t w = queue.front();
      queue.pop_front();
      for (std::size_t t = 0; t < gens.size(); ++t) {
        SparseVec v = a.multiply(words[w].value, SparseVec::unit(gens[t]));
        if (!v.empty() && span.insert(v)) {
          words.push_back({w, t, std::move(v)});
          queue.push_back(words.size() - 1);
        }
      }
    }
    if (span.rank() == n) break;
    for (std::size_t j = 0; j < n; ++j) {
      if (!span.contains(SparseVec::unit(j))) {
        gens.push_back(j);
        break;
      }
    }
  }

  // unknowns: coordinates of f(g) for every generator g
  std::vector<std::vector<std::size_t>> gen_unknowns(gens.size());
  std::vector<std::size_t> unknown_coord;
  std::set<std::size_t> idem(a.idempotents().begin(), a.idempotents().end());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (kill_idempotents && idem.count(gens[t])) continue;
    for (std::size_t r = 0; r < n; ++r) {
      if (blocks && !((*blocks)[r] == (*blocks)[gens[t]])) continue;
      gen_unknowns[t].push_back(unknown_coord.size());
      unknown_coord.push_back(r);
    }
  }
  const std::size_t num_unknowns = unknown_coord.size();

  // f on every word by the Leibniz rule, then on the basis through the inverse word matrix
  std::vector<LinA> fw(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    const Word& word = words[w];
    LinA out;
    if (word.parent != SIZE_MAX) {
      SparseVec g = SparseVec::unit(gens[word.gen]);
      for (const auto& [u, v] : fw[word.parent]) {
        SparseVec vg = a.multiply(v, g);
        if (!vg.empty()) out[u] = std::move(vg);
      }
      const SparseVec& parent_value = words[word.parent].value;
      for (auto u : gen_unknowns[word.gen]) {
        SparseVec x = a.multiply(parent_value, SparseVec::unit(unknown_coord[u]));
        if (x.empty()) continue;
        SparseVec& slot = out[u];
        slot.axpy(k, 1, x);
        if (slot.empty()) out.erase(u);
      }
    } else {
      for (auto u : gen_unknowns[word.gen]) out[u] = SparseVec::unit(unknown_coord[u]);
    }
    fw[w] = std::move(out);
  }
  FieldMatrix wm(k, n, n);
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto& [i, c] : words[w].value) wm(i, w) = c;
  }
  auto winv = inverse(wm);
  if (!winv) throw InvariantViolation("word values do not form a basis");
  std::vector<LinA> fb(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t w = 0; w < n; ++w) lin_axpy(k, fb[j], (*winv)(w, j), fw[w]);
  }

  // Leibniz on all basis pairs
  Echelon eqs(k);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec bi = SparseVec::unit(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (blocks && (*blocks)[i].right != (*blocks)[j].left) continue;
      SparseVec bj = SparseVec::unit(j);
      LinA res;
      for (const auto& [l, c] : a.product(i, j)) lin_axpy(k, res, c, fb[l]);
      for (const auto& [u, v] : fb[i]) {
        SparseVec x = a.multiply(v, bj);
        if (x.empty()) continue;
        SparseVec& slot = res[u];
        slot.axpy(k, k.make(-1), x);
        if (slot.empty()) res.erase(u);
      }
      for (const auto& [u, v] : fb[j]) {
        SparseVec x = a.multiply(bi, v);
        if (x.empty()) continue;
        SparseVec& slot = res[u];
        slot.axpy(k, k.make(-1), x);
        if (slot.empty()) res.erase(u);
      }
      if (res.empty()) continue;
      // one equation per coordinate of A
      std::map<std::size_t, SparseVec> rows;
      for (const auto& [u, v] : res) {
        for (const auto& [r, c] : v) rows[r].push_back(u, c);
      }
      for (const auto& [r, row] : rows) {
        if (eqs.rank() == num_unknowns) break;
        eqs.insert(row);
      }
    }
  }

  // kernel of the equations, one vector per free unknown
  std::vector<bool> pivot(num_unknowns, false);
  for (const auto& [p, row] : eqs.rows()) pivot[p] = true;
  std::vector<Endomorphism> out;
  for (std::size_t free = 0; free < num_unknowns; ++free) {
    if (pivot[free]) continue;
    std::map<std::size_t, Scalar> x{{free, Scalar(1)}};
    for (const auto& [p, row] : eqs.rows()) {
      Scalar c = row.get(free);
      if (!Field::is_zero(c)) x[p] = k.neg(c);
    }
    Endomorphism f(n);
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec col;
      for (const auto& [u, v] : fb[j]) {
        auto it = x.find(u);
        if (it != x.end()) col.axpy(k, it->second, v);
      }
      f.column(j) = std::move(col);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Endomorphism> independent(const Field& k, std::vector<Endomorphism> fs) {
  Echelon e(k);
  std::vector<Endomorphism> out;
  for (auto& f : fs) {
    if (e.insert(f.vectorize())) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

DerivationSpace derivation_space(const Algebra& a, DerivationFlavor flavor) {
  const Field& k = a.field();
  const std::size_t n = a.dim();
  switch (flavor) {
    case DerivationFlavor::der:
      return {flavor, solve_derivations(a, false)};
    case DerivationFlavor::der0:
      return {flavor, solve_derivations(a, true)};
    case DerivationFlavor::inn: {
      std::vector<Endomorphism> ads;
      for (std::size_t j = 0; j < n; ++j) ads.push_back(inner_derivation(a, SparseVec::unit(j)));
      return {flavor, independent(k, std::move(ads))};
    }
    case DerivationFlavor::inn0: {
      // c with [c, e_i] = 0 for every idempotent
      const auto& idem = a.idempotents();
      FieldMatrix m(k, n * idem.size(), n);
      for (std::size_t j = 0; j < n; ++j) {
        SparseVec bj = SparseVec::unit(j);
        for (std::size_t t = 0; t < idem.size(); ++t) {
          SparseVec e = SparseVec::unit(idem[t]);
          for (const auto& [r, c] : sub(k, a.multiply(bj, e), a.multiply(e, bj))) m(t * n + r, j) = c;
        }
      }
      std::vector<Endomorphism> ads;
      for (const auto& c : kernel_basis(m)) ads.push_back(inner_derivation(a, SparseVec::from_dense(c)));
      return {flavor, independent(k, std::move(ads))};
    }
  }
  return {flavor, {}};
}

// HH1 ----------------------------------------------------------------------

HH1::HH1(const Algebra& a)
    : algebra_(&a), der0_(a.field()), inn0_(a.field()), reps_echelon_(a.field()) {
  const Field& k = a.field();
  der0_basis_ = derivation_space(a, DerivationFlavor::der0).basis;
  inn0_basis_ = derivation_space(a, DerivationFlavor::inn0).basis;
  for (const auto& f : der0_basis_) der0_.insert(f.vectorize());
  for (const auto& f : inn0_basis_) {
    SparseVec v = f.vectorize();
    if (!der0_.contains(v)) throw InvariantViolation("inner derivation outside Der0");
    inn0_.insert(v);
  }
  for (const auto& f : der0_basis_) reps_echelon_.insert(inn0_.reduce(f.vectorize()));
  for (const auto& [p, row] : reps_echelon_.rows()) {
    rep_pivots_.push_back(p);
    reps_.push_back(Endomorphism::from_vector(row, a.dim()));
  }
  (void)k;
}

bool HH1::in_der0(const Endomorphism& f) const { return der0_.contains(f.vectorize()); }

bool HH1::is_inner(const Endomorphism& f) const { return inn0_.contains(f.vectorize()); }

std::vector<Scalar> HH1::coordinates(const Endomorphism& f) const {
  SparseVec v = f.vectorize();
  if (!der0_.contains(v)) throw InvariantViolation("endomorphism is not a derivation vanishing on the idempotents");
  SparseVec r = inn0_.reduce(v);
  std::vector<Scalar> coords(reps_.size());
  for (std::size_t i = 0; i < rep_pivots_.size(); ++i) coords[i] = r.get(rep_pivots_[i]);
  if (!reps_echelon_.reduce(r).empty()) throw InvariantViolation("coset reduction left a remainder");
  return coords;
}

Endomorphism HH1::lift(const std::vector<Scalar>& coords) const {
  const Field& k = algebra_->field();
  Endomorphism out(algebra_->dim());
  for (std::size_t i = 0; i < coords.size() && i < reps_.size(); ++i) {
    if (!Field::is_zero(coords[i])) out = add(k, out, scaled(k, reps_[i], coords[i]));
  }
  return out;
}

const std::vector<std::vector<std::vector<Scalar>>>& HH1::bracket_table() const {
  if (!bracket_cache_) {
    const Field& k = algebra_->field();
    std::vector<std::vector<std::vector<Scalar>>> t(dim(), std::vector<std::vector<Scalar>>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) t[i][j] = coordinates(quiverhh::bracket(k, reps_[i], reps_[j]));
    }
    bracket_cache_ = std::move(t);
  }
  return *bracket_cache_;
}

std::vector<Scalar> HH1::bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  return coordinates(quiverhh::bracket(algebra_->field(), lift(x), lift(y)));
}

std::vector<Scalar> HH1::ppower(const std::vector<Scalar>& x) const {
  const Field& k = algebra_->field();
  if (k.is_rationals()) throw InputError("the p-power map needs a prime field");
  return coordinates(power(k, lift(x), k.characteristic()));
}

std::vector<std::vector<Scalar>> HH1::ppower_table() const {
  std::vector<std::vector<Scalar>> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::vector<Scalar> e(dim());
    e[i] = 1;
    out.push_back(ppower(e));
  }
  return out;
}

std::size_t HH1::rank_modulo_inner(const std::vector<Endomorphism>& fs) const {
  Echelon e = inn0_;
  std::size_t r = 0;
  for (const auto& f : fs) {
    if (e.insert(f.vectorize())) ++r;
  }
  return r;
}

bool jacobson_formula_holds(const HH1& h, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  const Field& k = h.algebra().field();
  const unsigned long p = k.characteristic();
  if (p == 0) throw InputError("the p-power map needs a prime field");
  Endomorphism X = h.lift(x), Y = h.lift(y);
  // ad(tX + Y)^(p-1)(X) = sum_i i s_i t^(i-1)
  std::vector<Endomorphism> poly{X};
  for (unsigned long step = 0; step + 1 < p; ++step) {
    std::vector<Endomorphism> next(poly.size() + 1, Endomorphism(X.dim()));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = add(k, next[d + 1], bracket(k, X, poly[d]));
      next[d] = add(k, next[d], bracket(k, Y, poly[d]));
    }
    poly = std::move(next);
  }
  Endomorphism rhs = add(k, power(k, X, p), power(k, Y, p));
  for (unsigned long i = 1; i < p; ++i) rhs = add(k, rhs, scaled(k, poly[i - 1], k.inv(k.make(static_cast<long>(i)))));
  Endomorphism lhs = power(k, add(k, X, Y), p);
  return h.coordinates(lhs) == h.coordinates(rhs);
}

// tori and theta -----------------------------------------------------------

Endomorphism diagonal_derivation(const Algebra& a, const std::vector<Scalar>& arrow_weights) {
  std::vector<Scalar> none;
  return diagonal_derivation(a, arrow_weights, none);
}

Endomorphism diagonal_derivation(const Algebra& a, const std::vector<Scalar>& arrow_weights,
                                 const std::vector<Scalar>& vertex_offset) {
  if (!a.has_paths()) throw InputError("diagonal derivations need an algebra with a path basis");
  const Field& k = a.field();
  std::vector<Scalar> eig(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Path& p = a.paths()[j];
    Scalar e = 0;
    for (auto arrow : p.arrows) e = k.add(e, arrow_weights.at(arrow));
    if (!vertex_offset.empty()) e = k.add(e, k.sub(vertex_offset.at(p.source), vertex_offset.at(p.target)));
    eig[j] = e;
  }
  return Endomorphism::diagonal(eig);
}

Torus diagonal_torus(const Presentation& p, const RewriteSystem& rs, const HH1& h) {
  const Algebra& a = h.algebra();
  const Field& k = a.field();
  const std::size_t m = p.quiver.num_arrows();
  // normal_form(delta_lambda(g)) = 0, linear in lambda
  Echelon eqs(k);
  for (const auto& g : p.relations) {
    std::map<std::size_t, std::vector<Scalar>> rows;  // basis coordinate -> coefficients over arrows
    for (const auto& [path, c] : g.terms()) {
      SparseVec nf = a.embed(rs.normal_form(path));
      auto counts = arrow_counts(p.quiver, path);
      for (const auto& [r, v] : nf) {
        auto& row = rows.try_emplace(r, std::vector<Scalar>(m)).first->second;
        for (std::size_t x = 0; x < m; ++x) {
          if (counts[x] != 0) row[x] = k.add(row[x], k.mul(k.mul(c, v), k.make(counts[x])));
        }
      }
    }
    for (const auto& [r, row] : rows) eqs.insert(SparseVec::from_dense(row));
  }
  Torus t;
  std::vector<bool> pivot(m, false);
  for (const auto& [pv, row] : eqs.rows()) pivot[pv] = true;
  for (std::size_t free = 0; free < m; ++free) {
    if (pivot[free]) continue;
    std::vector<Scalar> lambda(m);
    lambda[free] = 1;
    for (const auto& [pv, row] : eqs.rows()) lambda[pv] = k.neg(row.get(free));
    t.weight_basis.push_back(std::move(lambda));
  }
  Echelon e = h.inner_echelon();
  for (const auto& lambda : t.weight_basis) {
    Endomorphism d = diagonal_derivation(a, lambda);
    if (!h.in_der0(d)) {
      throw BoundExceeded("arrow-weight derivation fails the Leibniz rule; the degree bound is too small");
    }
    if (e.insert(d.vectorize())) {
      t.cosets.push_back(h.coordinates(d));
      t.derivations.push_back(std::move(d));
    }
  }
  return t;
}

Character Character::from_chord_values(const Quiver& q, const Field& k, const std::vector<Scalar>& values) {
  WalkSystem w = spanning_walk_system(q);
  auto chords = chord_arrows(q, w);
  if (values.size() != chords.size()) {
    throw InputError("a character needs " + std::to_string(chords.size()) + " chord values, got " +
                     std::to_string(values.size()));
  }
  Character f;
  f.arrow_weights.assign(q.num_arrows(), Scalar(0));
  for (std::size_t i = 0; i < chords.size(); ++i) {
    f.chord_values.push_back(k.make(values[i]));
    f.arrow_weights[chords[i]] = f.chord_values.back();
  }
  return f;
}

FieldMatrix character_constraints(const Quiver& q, const Field& k, const HomotopyComplex& c) {
  auto chords = chord_arrows(q, spanning_walk_system(q));
  FieldMatrix m(k, c.pairs.size(), chords.size());
  for (std::size_t r = 0; r < c.pairs.size(); ++r) {
    for (std::size_t j = 0; j < chords.size(); ++j) m(r, j) = k.make(mpq_class(c.delta1(chords[j], r)));
  }
  return m;
}

std::vector<Character> character_space_basis(const Quiver& q, const Field& k, const HomotopyComplex& c) {
  std::vector<Character> out;
  for (const auto& v : kernel_basis(character_constraints(q, k, c))) {
    out.push_back(Character::from_chord_values(q, k, v));
  }
  return out;
}

bool is_character(const Quiver& q, const Field& k, const HomotopyComplex& c, const Character& f) {
  FieldMatrix m = character_constraints(q, k, c);
  if (f.chord_values.size() != m.cols()) return false;
  for (const auto& x : m.apply(f.chord_values)) {
    if (!Field::is_zero(x)) return false;
  }
  return true;
}

Endomorphism theta_derivation(const Algebra& a, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c,
                              const Character& f) {
  const Field& k = a.field();
  if (!is_character(q, k, c, f)) throw InputError("the chord values violate a homotopy pair constraint");
  auto walk_value = [&](const Walk& walk) {
    Scalar s = 0;
    for (const auto& st : walk.steps) {
      s = st.inverse ? k.sub(s, f.arrow_weights[st.arrow]) : k.add(s, f.arrow_weights[st.arrow]);
    }
    return s;
  };
  std::vector<Scalar> offset;
  for (const auto& walk : w.walks) offset.push_back(walk_value(walk));
  return diagonal_derivation(a, f.arrow_weights, offset);
}

std::vector<Scalar> theta(const HH1& h, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c,
                          const Character& f) {
  return h.coordinates(theta_derivation(h.algebra(), q, w, c, f));
}

std::size_t theta_image_dimension(const HH1& h, const Quiver& q, const WalkSystem& w, const HomotopyComplex& c) {
  std::vector<Endomorphism> images;
  for (const auto& f : character_space_basis(q, h.algebra().field(), c)) {
    Endomorphism d = theta_derivation(h.algebra(), q, w, c, f);
    if (!h.in_der0(d)) throw BoundExceeded("theta of a character fails the Leibniz rule; the degree bound is too small");
    images.push_back(std::move(d));
  }
  return h.rank_modulo_inner(images);
}

// restricted structure -----------------------------------------------------

bool is_toral(const HH1& h, const std::vector<Scalar>& x) { return h.ppower(x) == x; }

std::optional<std::vector<Scalar>> find_toral(const HH1& h, std::size_t cap) {
  const Field& k = h.algebra().field();
  if (k.is_rationals()) throw InputError("toral elements are defined in positive characteristic only");
  const std::size_t n = h.dim();
  if (n == 0) return std::nullopt;
  const unsigned long p = k.characteristic();
  double size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= static_cast<double>(p);
  if (size > static_cast<double>(cap)) {
    throw BoundExceeded("search space too large: " + std::to_string(p) + "^" + std::to_string(n) +
                        " candidates exceed the toral cap " + std::to_string(cap));
  }
  std::vector<unsigned long> digits(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && digits[i] == p - 1) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
    std::vector<Scalar> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = k.make(static_cast<long>(digits[j]));
    if (is_toral(h, x)) return x;
  }
  return std::nullopt;
}

NilpotencyReport nilpotency_report(const HH1& h, std::size_t toral_cap) {
  const Field& k = h.algebra().field();
  const std::size_t n = h.dim();
  NilpotencyReport rep;
  const auto& table = h.bracket_table();

  // lower central series in coset coordinates
  std::vector<SparseVec> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(SparseVec::unit(i));
  rep.lower_central_series.push_back(n);
  while (!current.empty()) {
    Echelon next(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& y : current) {
        std::vector<Scalar> z(n);
        for (const auto& [j, c] : y) {
          for (std::size_t l = 0; l < n; ++l) z[l] = k.add(z[l], k.mul(c, table[i][j][l]));
        }
        next.insert(SparseVec::from_dense(z));
      }
    }
    if (next.rank() == current.size()) break;
    current.clear();
    for (const auto& [p, row] : next.rows()) current.push_back(row);
    rep.lower_central_series.push_back(current.size());
  }
  rep.lie_nilpotent = current.empty();
  if (rep.lie_nilpotent) rep.nilpotency_class = rep.lower_central_series.size() - 1;

  if (!k.is_rationals()) {
    try {
      bool no_toral = !find_toral(h, toral_cap).has_value();
      rep.toral_search_complete = true;
      bool all_nilpotent = true;
      for (std::size_t i = 0; i < n && all_nilpotent; ++i) {
        std::vector<Scalar> x(n);
        x[i] = 1;
        std::vector<std::vector<Scalar>> seen;
        bool zero = false;
        for (std::size_t step = 0; step <= h.algebra().dim() + n + 1; ++step) {
          x = h.ppower(x);
          if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return Field::is_zero(s); })) {
            zero = true;
            break;
          }
          if (std::find(seen.begin(), seen.end(), x) != seen.end()) break;
          seen.push_back(x);
        }
        all_nilpotent = zero;
      }
      rep.p_nilpotent_witnessed = no_toral && all_nilpotent;
    } catch (const BoundExceeded&) {
      rep.toral_search_complete = false;
      rep.p_nilpotent_witnessed = false;
    }
  }
  return rep;
}

}  // namespace quiverhh
