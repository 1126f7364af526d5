#include "quiverhh/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

#include "quiverhh/errors.hpp"

namespace quiverhh {

Algebra::Algebra(Field k, std::vector<std::string> labels, std::vector<std::size_t> idempotents,
                 std::vector<std::vector<SparseVec>> table, std::vector<Path> paths)
    : field_(k),
      labels_(std::move(labels)),
      idempotents_(std::move(idempotents)),
      table_(std::move(table)),
      paths_(std::move(paths)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n) throw std::invalid_argument("structure table has wrong size");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("structure table has wrong size");
    for (const auto& v : row) {
      if (!v.empty() && v.entries().back().first >= n) throw std::invalid_argument("structure constant out of range");
    }
  }
  for (auto i : idempotents_) {
    if (i >= n) throw std::invalid_argument("idempotent index out of range");
  }
  if (!paths_.empty()) {
    if (paths_.size() != n) throw std::invalid_argument("basis paths do not match dimension");
    for (std::size_t i = 0; i < n; ++i) path_index_.emplace(paths_[i], i);
  }
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) {
      const SparseVec& p = table_[i][j];
      if (!p.empty()) out.axpy(field_, field_.mul(a, b), p);
    }
  }
  return out;
}

SparseVec Algebra::unit() const {
  SparseVec u;
  std::vector<std::size_t> idx = idempotents_;
  std::sort(idx.begin(), idx.end());
  for (auto i : idx) u.push_back(i, 1);
  return u;
}

std::optional<std::size_t> Algebra::index_of(const Path& p) const {
  auto it = path_index_.find(p);
  if (it == path_index_.end()) return std::nullopt;
  return it->second;
}

SparseVec Algebra::embed(const Element& x) const {
  std::vector<std::pair<std::size_t, Scalar>> entries;
  for (const auto& [p, c] : x.terms()) {
    auto i = index_of(p);
    if (!i) throw std::invalid_argument("path is not a basis element");
    entries.emplace_back(*i, c);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& [i, c] : entries) v.push_back(i, c);
  return v;
}

std::string Algebra::format(const SparseVec& x) const {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : x) {
    std::string s = to_string(c);
    bool negative = s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (s != "1") out += s + "*";
    out += labels_[i];
    first = false;
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> associativity_defect(const Algebra& a, const BuildOptions& options) {
  const std::size_t n = a.dim();
  auto check = [&](std::size_t i, std::size_t j, std::size_t l) {
    SparseVec left = a.multiply(a.product(i, j), SparseVec::unit(l));
    SparseVec right = a.multiply(SparseVec::unit(i), a.product(j, l));
    return left == right;
  };
  if (n <= options.full_associativity_cap) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!check(i, j, l)) return std::array<std::size_t, 3>{i, j, l};
        }
      }
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < options.random_triples; ++t) {
    std::size_t i = pick(rng), j = pick(rng), l = pick(rng);
    if (!check(i, j, l)) return std::array<std::size_t, 3>{i, j, l};
  }
  return std::nullopt;
}

QuiverImages canonical_images(const Algebra& a, const RewriteSystem& rs) {
  const Quiver& q = rs.quiver();
  QuiverImages im;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) im.vertices.push_back(a.embed(Element::of(Path::trivial(v))));
  for (std::size_t x = 0; x < q.num_arrows(); ++x) {
    im.arrows.push_back(a.embed(rs.reduce_unbounded(Element::of(Path::of_arrow(q, x)))));
  }
  return im;
}

SparseVec evaluate(const Algebra& a, const QuiverImages& images, const Element& x) {
  SparseVec out;
  for (const auto& [p, c] : x.terms()) {
    SparseVec v = images.vertices.at(p.source);
    for (auto arrow : p.arrows) {
      v = a.multiply(v, images.arrows.at(arrow));
      if (v.empty()) break;
    }
    out.axpy(a.field(), c, v);
  }
  return out;
}

Algebra build_algebra(const Presentation& p, const BuildOptions& options) {
  return build_algebra(p, complete_rewriting(p), options);
}

Algebra build_algebra(const Presentation& p, const RewriteSystem& rs, const BuildOptions& options) {
  const Field& k = p.field;
  std::vector<Path> basis = rs.irreducible_paths();
  const std::size_t n = basis.size();
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);
  auto coords = [&](const Element& x) {
    SparseVec v;
    std::vector<std::pair<std::size_t, Scalar>> entries;
    for (const auto& [path, c] : x.terms()) {
      auto it = index.find(path);
      if (it == index.end()) throw InvariantViolation("normal form left the irreducible basis");
      entries.emplace_back(it->second, c);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, c] : entries) v.push_back(i, c);
    return v;
  };

  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (auto prod = compose(basis[i], basis[j])) table[i][j] = coords(rs.reduce_unbounded(Element::of(*prod)));
    }
  }
  std::vector<std::string> labels;
  std::vector<std::size_t> idem;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(basis[i].to_string(p.quiver));
    if (basis[i].is_trivial()) idem.push_back(i);
  }
  Algebra a(k, std::move(labels), std::move(idem), std::move(table), basis);

  auto fail = [&](const std::string& what) {
    throw BoundExceeded("algebra certificate failed at degree bound " + std::to_string(p.degree_bound) + ": " +
                        what + "; raise --degree-bound");
  };
  if (auto bad = associativity_defect(a, options)) {
    fail("multiplication is not associative on (" + a.labels()[(*bad)[0]] + ", " + a.labels()[(*bad)[1]] + ", " +
         a.labels()[(*bad)[2]] + ")");
  }
  QuiverImages images = canonical_images(a, rs);
  for (const auto& r : p.relations) {
    if (!evaluate(a, images, r).empty()) fail("relation " + r.to_string(p.quiver) + " does not vanish");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(evaluate(a, images, Element::of(basis[i])) == SparseVec::unit(i))) {
      fail("basis path " + a.labels()[i] + " is not the product of its arrows");
    }
  }
  SparseVec one = a.unit();
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec b = SparseVec::unit(i);
    if (!(a.multiply(one, b) == b) || !(a.multiply(b, one) == b)) fail("idempotents do not sum to the unit");
  }
  return a;
}

namespace {

[[noreturn]] void alg_error(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    alg_error(line, "expected a basis index, found '" + tok + "'");
  }
}

Scalar parse_coefficient(const Field& k, std::string tok, std::size_t line) {
  try {
    mpq_class q(tok);
    q.canonicalize();
    return k.make(q);
  } catch (const InputError& e) {
    alg_error(line, e.what());
  } catch (const std::exception&) {
    alg_error(line, "bad coefficient '" + tok + "'");
  }
}

}  // namespace

Algebra ingest_structure_constants(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> dim;
  std::optional<Field> field;
  std::vector<std::size_t> idem;
  std::vector<std::string> labels;
  bool have_idem = false;
  std::vector<std::vector<SparseVec>> table;
  std::vector<std::vector<bool>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      std::string v;
      ls >> v;
      dim = parse_index(v, line_no);
      table.assign(*dim, std::vector<SparseVec>(*dim));
      seen.assign(*dim, std::vector<bool>(*dim, false));
      continue;
    }
    if (head == "field") {
      std::string rest;
      std::getline(ls, rest);
      try {
        field = Field::parse(rest);
      } catch (const InputError& e) {
        alg_error(line_no, e.what());
      }
      continue;
    }
    if (!dim) alg_error(line_no, "'dim' must come first");
    if (head == "idempotents") {
      std::string tok;
      while (ls >> tok) {
        std::size_t i = parse_index(tok, line_no);
        if (i >= *dim) alg_error(line_no, "idempotent index out of range");
        idem.push_back(i);
      }
      have_idem = true;
      continue;
    }
    if (head == "labels") {
      std::string tok;
      while (ls >> tok) labels.push_back(tok);
      if (labels.size() != *dim) alg_error(line_no, "expected " + std::to_string(*dim) + " labels");
      continue;
    }
    if (!field) alg_error(line_no, "'field' must precede the products");
    std::size_t i = parse_index(head, line_no);
    std::string tok;
    ls >> tok;
    std::size_t j = parse_index(tok, line_no);
    if (i >= *dim || j >= *dim) alg_error(line_no, "basis index out of range");
    if (seen[i][j]) alg_error(line_no, "product " + std::to_string(i) + " " + std::to_string(j) + " given twice");
    seen[i][j] = true;
    if (!(ls >> tok) || tok != "->") alg_error(line_no, "expected '->'");
    std::string rhs;
    std::getline(ls, rhs);
    // terms: [sign] [coeff *] index; an empty right side is the zero product
    std::string compact;
    for (char c : rhs) {
      if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    std::vector<std::pair<std::size_t, Scalar>> entries;
    std::size_t pos = 0;
    while (pos < compact.size()) {
      bool negative = false;
      if (compact[pos] == '+' || compact[pos] == '-') {
        negative = compact[pos] == '-';
        ++pos;
      } else if (!entries.empty()) {
        alg_error(line_no, "expected '+' or '-'");
      }
      std::size_t end = compact.find_first_of("+-", pos);
      std::string term = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      pos = end == std::string::npos ? compact.size() : end;
      Scalar c = field->make(1);
      std::string idx = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        c = parse_coefficient(*field, term.substr(0, star), line_no);
        idx = term.substr(star + 1);
      }
      if (negative) c = field->neg(c);
      std::size_t t = parse_index(idx, line_no);
      if (t >= *dim) alg_error(line_no, "basis index out of range");
      entries.emplace_back(t, c);
    }
    std::vector<Scalar> dense(*dim);
    for (auto& [t, c] : entries) dense[t] = field->add(dense[t], c);
    table[i][j] = SparseVec::from_dense(dense);
  }
  if (!dim) throw InputError("missing 'dim'");
  if (!field) throw InputError("missing 'field'");
  if (!have_idem || idem.empty()) throw InputError("missing 'idempotents'");
  if (labels.empty()) {
    for (std::size_t i = 0; i < *dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  Algebra a(*field, labels, idem, table);

  if (auto bad = associativity_defect(a)) {
    throw InputError("table is not associative on (" + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1]) +
                     ", " + std::to_string((*bad)[2]) + ")");
  }
  for (auto i : idem) {
    for (auto j : idem) {
      SparseVec expect = i == j ? SparseVec::unit(i) : SparseVec();
      if (!(a.product(i, j) == expect)) throw InputError("idempotents are not orthogonal idempotents");
    }
  }
  SparseVec one = a.unit();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseVec b = SparseVec::unit(i);
    if (!(a.multiply(one, b) == b) || !(a.multiply(b, one) == b)) {
      throw InputError("idempotents do not sum to the unit");
    }
  }
  return a;
}

Algebra load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ingest_structure_constants(buf.str());
}

Echelon generated_subspace(const Algebra& a, const std::vector<SparseVec>& generators) {
  Echelon span(a.field());
  std::deque<SparseVec> queue;
  for (const auto& g : generators) {
    if (span.insert(g)) queue.push_back(g);
  }
  while (!queue.empty() && span.rank() < a.dim()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      SparseVec w = a.multiply(v, g);
      if (!w.empty() && span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span;
}

MinimalityResult minimality_check(const Presentation& p, const Algebra& a) {
  return minimality_check(complete_rewriting(p), a);
}

MinimalityResult minimality_check(const RewriteSystem& rs, const Algebra& a) {
  QuiverImages im = canonical_images(a, rs);
  const std::size_t m = rs.quiver().num_arrows();
  for (std::size_t skip = m; skip-- > 0;) {
    std::vector<SparseVec> gens = im.vertices;
    for (std::size_t x = 0; x < m; ++x) {
      if (x != skip) gens.push_back(im.arrows[x]);
    }
    if (generated_subspace(a, gens).rank() == a.dim()) return MinimalityResult{false, skip};
  }
  return MinimalityResult{true, std::nullopt};
}

std::size_t cartan_trace(const Algebra& a) {
  std::size_t total = 0;
  for (auto e : a.idempotents()) {
    Echelon span(a.field());
    SparseVec ev = SparseVec::unit(e);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      SparseVec x = a.multiply(ev, a.multiply(SparseVec::unit(j), ev));
      if (!x.empty()) span.insert(x);
    }
    total += span.rank();
  }
  return total;
}

}  // namespace quiverhh
