#include "quiverhh/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

#include "quiverhh/errors.hpp"

namespace quiverhh {

RewriteSystem::RewriteSystem(Quiver q, Field k, std::size_t degree_bound, std::vector<Rule> rules,
                             std::size_t discarded_pairs)
    : quiver_(std::move(q)), field_(k), bound_(degree_bound), rules_(std::move(rules)), discarded_(discarded_pairs) {}

const Rule* RewriteSystem::matching_rule(const Path& p, std::size_t& position) const {
  for (const auto& r : rules_) {
    if (r.lead.length() > p.length()) continue;
    if (auto pos = find_subpath(p, r.lead)) {
      position = *pos;
      return &r;
    }
  }
  return nullptr;
}

bool RewriteSystem::is_irreducible(const Path& p) const {
  std::size_t pos = 0;
  return matching_rule(p, pos) == nullptr;
}

Element RewriteSystem::reduce_unbounded(const Element& x) const {
  Element work = x;
  Element done;
  while (!work.is_zero()) {
    Path p = work.leading_path();
    Scalar c = work.leading_coefficient();
    work.add_term(field_, p, field_.neg(c));
    std::size_t pos = 0;
    const Rule* r = matching_rule(p, pos);
    if (!r) {
      done.add_term(field_, p, c);
      continue;
    }
    // p = left * lead * right
    Path left{p.source, 0, {p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(pos)}};
    left.target = r->lead.source;
    Path right{r->lead.target, p.target,
               {p.arrows.begin() + static_cast<std::ptrdiff_t>(pos + r->lead.length()), p.arrows.end()}};
    work.axpy(field_, c, sandwich(field_, left, r->tail, right));
  }
  return done;
}

Element RewriteSystem::normal_form(const Element& x) const {
  if (x.degree() > bound_) {
    throw BoundExceeded("path of length " + std::to_string(x.degree()) + " exceeds the degree bound " +
                        std::to_string(bound_) + "; raise --degree-bound");
  }
  return reduce_unbounded(x);
}

std::vector<Path> RewriteSystem::irreducible_paths() const {
  std::vector<Path> out;
  std::deque<Path> queue;
  for (std::size_t v = 0; v < quiver_.num_vertices(); ++v) queue.push_back(Path::trivial(v));
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    if (!is_irreducible(p)) continue;
    if (p.length() > bound_) {
      throw BoundExceeded("not finite dimensional at bound " + std::to_string(bound_) + " (irreducible path " +
                          p.to_string(quiver_) + "); raise --degree-bound if the algebra is finite dimensional");
    }
    for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
      if (quiver_.arrow(a).source != p.target) continue;
      Path longer = p;
      longer.arrows.push_back(a);
      longer.target = quiver_.arrow(a).target;
      queue.push_back(std::move(longer));
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Completion {
  const Quiver& q;
  Field k;
  std::size_t bound;
  std::size_t budget;
  std::vector<Rule> rules;
  std::vector<bool> alive;
  std::size_t alive_count = 0;
  std::size_t discarded = 0;
  std::deque<Element> pending;
  // (overlap length, first rule, second rule, overlap size)
  using Pair = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;

  RewriteSystem snapshot() const {
    std::vector<Rule> live;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (alive[i]) live.push_back(rules[i]);
    }
    return RewriteSystem(q, k, bound, std::move(live), discarded);
  }

  Element reduce(const Element& x) const {
    // the live rule set changes often; a throwaway system is cheap at this scale
    return snapshot().reduce_unbounded(x);
  }

  void queue_pairs(std::size_t id) {
    for (std::size_t other = 0; other < rules.size(); ++other) {
      if (!alive[other]) continue;
      add_overlaps(id, other);
      if (other != id) add_overlaps(other, id);
    }
  }

  // suffix of rules[r].lead equal to a prefix of rules[s].lead
  void add_overlaps(std::size_t r, std::size_t s) {
    const auto& a = rules[r].lead.arrows;
    const auto& b = rules[s].lead.arrows;
    std::size_t max_k = std::min(a.size(), b.size());
    for (std::size_t k2 = 1; k2 <= max_k; ++k2) {
      if (k2 == a.size() && k2 == b.size()) continue;
      if (k2 == a.size() || k2 == b.size()) continue;  // inclusions are removed by interreduction
      if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k2), a.end(), b.begin())) continue;
      std::size_t len = a.size() + b.size() - k2;
      if (len > bound) {
        ++discarded;
        continue;
      }
      pairs.emplace(len, r, s, k2);
    }
  }

  Element s_element(std::size_t r, std::size_t s, std::size_t k2) const {
    const Rule& R = rules[r];
    const Rule& S = rules[s];
    // W = A * lead_s = lead_r * C
    Path a_path{R.lead.source, S.lead.source,
                {R.lead.arrows.begin(), R.lead.arrows.end() - static_cast<std::ptrdiff_t>(k2)}};
    Path c_path{R.lead.target, S.lead.target,
                {S.lead.arrows.begin() + static_cast<std::ptrdiff_t>(k2), S.lead.arrows.end()}};
    Element out = sandwich(k, Path::trivial(R.lead.source), R.tail, c_path);
    out.axpy(k, k.make(-1), sandwich(k, a_path, S.tail, Path::trivial(S.lead.target)));
    return out;
  }

  void add(const Element& raw) {
    Element f = reduce(raw);
    if (f.is_zero()) return;
    Path lead = f.leading_path();
    if (lead.is_trivial()) {
      throw InputError("the ideal contains the idempotent e(" + q.vertices().at(lead.source) +
                       "); the presented algebra has a zero vertex");
    }
    Scalar inv = k.inv(f.leading_coefficient());
    Element tail;
    for (const auto& [p, c] : f.terms()) {
      if (p == lead) continue;
      tail.add_term(k, p, k.neg(k.mul(inv, c)));
    }
    // leads containing the new one are no longer needed as rules
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!alive[i] || !find_subpath(rules[i].lead, lead)) continue;
      alive[i] = false;
      --alive_count;
      Element back = Element::of(rules[i].lead);
      back.axpy(k, k.make(-1), rules[i].tail);
      pending.push_back(std::move(back));
    }
    rules.push_back(Rule{lead, std::move(tail)});
    alive.push_back(true);
    ++alive_count;
    if (rules.size() > budget) {
      throw BoundExceeded("completion exceeded rule budget (" + std::to_string(budget) + " rules)");
    }
    queue_pairs(rules.size() - 1);
  }

  void run() {
    for (;;) {
      if (!pending.empty()) {
        Element e = std::move(pending.front());
        pending.pop_front();
        add(e);
        continue;
      }
      if (pairs.empty()) break;
      auto [len, r, s, k2] = pairs.top();
      pairs.pop();
      if (!alive[r] || !alive[s]) continue;
      add(s_element(r, s, k2));
    }
  }
};

}  // namespace

RewriteSystem complete_rewriting(const Presentation& p, const CompletionOptions& options) {
  Completion c{p.quiver, p.field, p.degree_bound, options.rule_budget, {}, {}, 0, 0, {}, {}};
  for (const auto& r : p.relations) c.pending.push_back(r);
  c.run();

  // final interreduction of tails
  RewriteSystem rough = c.snapshot();
  std::vector<Rule> clean;
  for (const auto& r : rough.rules()) clean.push_back(Rule{r.lead, rough.reduce_unbounded(r.tail)});
  std::sort(clean.begin(), clean.end(), [](const Rule& a, const Rule& b) { return a.lead < b.lead; });
  return RewriteSystem(p.quiver, p.field, p.degree_bound, std::move(clean), c.discarded);
}

}  // namespace quiverhh
