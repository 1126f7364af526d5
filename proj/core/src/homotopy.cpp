#include "quiverhh/homotopy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "quiverhh/errors.hpp"

namespace quiverhh {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

FieldMatrix select_columns(const FieldMatrix& m, const std::vector<std::size_t>& cols) {
  FieldMatrix out(m.field(), m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(r, cols[c]);
  }
  return out;
}

// one kernel vector with full support on exactly these columns
bool is_circuit(const FieldMatrix& m, const std::vector<std::size_t>& cols) {
  auto ker = kernel_basis(select_columns(m, cols));
  if (ker.size() != 1) return false;
  return std::none_of(ker[0].begin(), ker[0].end(), [](const Scalar& x) { return Field::is_zero(x); });
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ParallelClass> parallel_classes(const Presentation& p, const RewriteSystem& rs) {
  std::map<std::pair<std::size_t, std::size_t>, std::set<Path>> groups;
  auto add = [&](const Path& path) { groups[{path.source, path.target}].insert(path); };
  for (const auto& path : rs.irreducible_paths()) add(path);
  for (const auto& r : p.relations) {
    for (const auto& [path, c] : r.terms()) add(path);
  }
  for (const auto& rule : rs.rules()) {
    add(rule.lead);
    for (const auto& [path, c] : rule.tail.terms()) add(path);
  }
  std::vector<ParallelClass> out;
  for (auto& [ends, paths] : groups) out.push_back(ParallelClass{ends.first, ends.second, {paths.begin(), paths.end()}});
  return out;
}

RelationSubspace relation_subspace(const Algebra& a, const RewriteSystem& rs, const ParallelClass& cls) {
  FieldMatrix eval(a.field(), a.dim(), cls.paths.size());
  for (std::size_t j = 0; j < cls.paths.size(); ++j) {
    SparseVec v = a.embed(rs.normal_form(cls.paths[j]));
    for (const auto& [i, c] : v) eval(i, j) = c;
  }
  auto ker = kernel_basis(eval);
  FieldMatrix rows(a.field(), ker.size(), cls.paths.size());
  for (std::size_t i = 0; i < ker.size(); ++i) {
    for (std::size_t j = 0; j < cls.paths.size(); ++j) rows(i, j) = ker[i][j];
  }
  FieldMatrix basis = ker.empty() ? rows : row_reduce(rows).reduced;
  return RelationSubspace{cls, std::move(eval), std::move(basis)};
}

CircuitSet enumerate_circuits(const FieldMatrix& columns, std::size_t support_cap) {
  const std::size_t n = columns.cols();
  auto [red, pivots] = row_reduce(columns);
  // keep only the nonzero rows; the column matroid is unchanged
  FieldMatrix m(columns.field(), pivots.size(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = red(r, c);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  CircuitSet out;
  UnionFind uf(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    bool loop = true;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (Field::is_zero(m(r, j))) continue;
      loop = false;
      uf.unite(j, pivots[r]);
    }
    if (loop) out.circuits.push_back({j});
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t j = 0; j < n; ++j) comps[uf.find(j)].push_back(j);

  for (auto& [root, elems] : comps) {
    if (elems.size() < 2) continue;
    out.components.push_back(elems);
    std::size_t r = rank(select_columns(m, elems));
    std::size_t largest = std::min(r + 1, elems.size());
    if (largest > support_cap) {
      throw BoundExceeded("support cap exceeded: a component of " + std::to_string(elems.size()) +
                          " paths needs supports up to " + std::to_string(largest) + " (cap " +
                          std::to_string(support_cap) + "); raise --support-cap");
    }
    std::vector<std::vector<std::size_t>> found;
    for (std::size_t size = 2; size <= largest; ++size) {
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        std::vector<std::size_t> cand(size);
        for (std::size_t t = 0; t < size; ++t) cand[t] = elems[idx[t]];
        bool has_smaller = std::any_of(found.begin(), found.end(), [&](const auto& c) {
          return std::includes(cand.begin(), cand.end(), c.begin(), c.end());
        });
        if (!has_smaller && is_circuit(m, cand)) found.push_back(std::move(cand));
      } while (next_combination(idx, elems.size()));
    }
    out.circuits.insert(out.circuits.end(), found.begin(), found.end());
  }
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

CircuitSet enumerate_circuits(const RelationSubspace& r, std::size_t support_cap) {
  if (r.dim() == 0) return CircuitSet{};
  return enumerate_circuits(r.evaluation, support_cap);
}

std::vector<PathPair> homotopy_pairs(const std::vector<RelationSubspace>& subspaces,
                                     const std::vector<CircuitSet>& circuits) {
  std::vector<PathPair> out;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& paths = subspaces[i].cls.paths;
    UnionFind uf(paths.size());
    for (const auto& c : circuits[i].circuits) {
      for (std::size_t t = 0; t + 1 < c.size(); ++t) {
        if (uf.unite(c[t], c[t + 1])) out.emplace_back(paths[c[t]], paths[c[t + 1]]);
      }
    }
  }
  return out;
}

HomotopyComplex build_complex(const Quiver& q, const std::vector<PathPair>& pairs) {
  HomotopyComplex c{IntMatrix(q.num_vertices(), q.num_arrows()), IntMatrix(q.num_arrows(), pairs.size()), pairs};
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    c.delta0(q.arrow(a).source, a) += 1;
    c.delta0(q.arrow(a).target, a) -= 1;
  }
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    auto p = arrow_counts(q, pairs[j].first);
    auto r = arrow_counts(q, pairs[j].second);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) c.delta1(a, j) = p[a] - r[a];
  }
  return c;
}

HomotopyResult pi1_abelianization(const Quiver& q, const HomotopyComplex& c, const Field& k) {
  if (!(c.delta0 * c.delta1).is_zero()) throw InvariantViolation("delta0 * delta1 is not zero");
  auto comp = q.component_of_vertex();
  HomotopyResult out;
  for (std::size_t id = 0; id < q.num_components(); ++id) {
    std::vector<std::size_t> verts, arrows, pairs;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
      if (comp[v] == id) verts.push_back(v);
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      if (comp[q.arrow(a).source] == id) arrows.push_back(a);
    }
    for (std::size_t j = 0; j < c.pairs.size(); ++j) {
      if (comp[c.pairs[j].first.source] == id) pairs.push_back(j);
    }
    if (arrows.empty()) {
      out.per_component.emplace_back();
      continue;
    }
    IntMatrix d0(verts.size(), arrows.size());
    for (std::size_t r = 0; r < verts.size(); ++r) {
      for (std::size_t a = 0; a < arrows.size(); ++a) d0(r, a) = c.delta0(verts[r], arrows[a]);
    }
    IntMatrix d1(arrows.size(), pairs.size());
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      for (std::size_t j = 0; j < pairs.size(); ++j) d1(a, j) = c.delta1(arrows[a], pairs[j]);
    }
    SmithForm s = smith_normal_form(d0);
    // kernel lattice = last columns of V; coordinates of x in it = tail of V^-1 x
    IntMatrix y = s.right_inverse * d1;
    const std::size_t kdim = arrows.size() - s.rank;
    IntMatrix coords(kdim, pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      for (std::size_t r = 0; r < s.rank; ++r) {
        if (y(r, j) != 0) throw InvariantViolation("pair difference is not a cycle");
      }
      for (std::size_t r = 0; r < kdim; ++r) coords(r, j) = y(s.rank + r, j);
    }
    out.per_component.push_back(cokernel_group(kdim, coords));
  }
  for (const auto& g : out.per_component) out.pi1_ab = direct_sum(out.pi1_ab, g);
  out.dual_dim = dual_dimension(out.pi1_ab, k);
  return out;
}

std::string to_string(Semimonomial s, const Field& k) {
  switch (s) {
    case Semimonomial::monomial:
      return "monomial";
    case Semimonomial::semimonomial:
      return "semimonomial";
    case Semimonomial::p_semimonomial:
      return std::to_string(k.characteristic()) + "-semimonomial";
    case Semimonomial::none:
      break;
  }
  return "none";
}

Semimonomial semimonomial_check(const Quiver& q, const Field& k, const std::vector<RelationSubspace>& subspaces,
                                const std::vector<CircuitSet>& circuits) {
  bool monomial = true, equal = true, equal_mod_p = true;
  const long p = static_cast<long>(k.characteristic());
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const auto& paths = subspaces[i].cls.paths;
    for (const auto& c : circuits[i].circuits) {
      if (c.size() < 2) continue;
      monomial = false;
      auto first = arrow_counts(q, paths[c[0]]);
      for (std::size_t t = 1; t < c.size(); ++t) {
        auto other = arrow_counts(q, paths[c[t]]);
        for (std::size_t a = 0; a < first.size(); ++a) {
          long d = first[a] - other[a];
          if (d == 0) continue;
          equal = false;
          if (p == 0 || d % p != 0) equal_mod_p = false;
        }
      }
    }
  }
  if (monomial) return Semimonomial::monomial;
  if (equal) return Semimonomial::semimonomial;
  if (p != 0 && equal_mod_p) return Semimonomial::p_semimonomial;
  return Semimonomial::none;
}

HomotopyAnalysis analyze_homotopy(const Presentation& p, const RewriteSystem& rs, const Algebra& a,
                                  std::size_t support_cap) {
  HomotopyAnalysis out;
  for (const auto& cls : parallel_classes(p, rs)) {
    RelationSubspace r = relation_subspace(a, rs, cls);
    if (r.dim() == 0) continue;
    out.circuits.push_back(enumerate_circuits(r, support_cap));
    out.subspaces.push_back(std::move(r));
  }
  out.complex = build_complex(p.quiver, homotopy_pairs(out.subspaces, out.circuits));
  out.result = pi1_abelianization(p.quiver, out.complex, p.field);
  out.status = semimonomial_check(p.quiver, p.field, out.subspaces, out.circuits);
  return out;
}

}  // namespace quiverhh
