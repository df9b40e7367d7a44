// Copyright 2026 The Plexflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plexflow/query/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <regex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "plexflow/vocab/terms.hpp"

namespace plexflow::query {
namespace {

using rdf::Graph;
using rdf::Term;
using Id = std::uint32_t;

constexpr Id kUnbound = std::numeric_limits<Id>::max();
constexpr Id kExtraBit = 0x80000000u;

using Row = std::vector<Id>;

// Graph ids plus ids for constants that do not occur in the graph.
class TermTable {
 public:
  explicit TermTable(const Graph& g) : g_(g) {}

  Id id(const Term& t) {
    if (auto found = g_.lookup(t)) return *found;
    auto [it, inserted] =
        extra_ids_.try_emplace(t.ntriples(), static_cast<Id>(extra_.size()) | kExtraBit);
    if (inserted) extra_.push_back(t);
    return it->second;
  }

  static bool in_graph(Id id) { return (id & kExtraBit) == 0; }

  const Term& term(Id id) const {
    return in_graph(id) ? g_.term(id) : extra_.at(id & ~kExtraBit);
  }

 private:
  const Graph& g_;
  std::vector<Term> extra_;
  std::unordered_map<std::string, Id> extra_ids_;
};

struct Slot {
  bool is_var = false;
  std::size_t var = 0;
  Id id = kUnbound;
};

struct CompiledTriple {
  Slot s, p, o;
  bool closure = false;
};

// ---- value helpers ----------------------------------------------------------

bool is_numeric_type(std::string_view dt) {
  static const std::set<std::string, std::less<>> kTypes = [] {
    std::set<std::string, std::less<>> s;
    for (const char* local :
         {"integer", "decimal", "double", "float", "int", "long", "short",
          "byte", "nonNegativeInteger", "positiveInteger", "negativeInteger",
          "nonPositiveInteger", "unsignedInt", "unsignedLong", "unsignedShort",
          "unsignedByte"}) {
      s.insert(std::string(vocab::xsd::kBase) + local);
    }
    return s;
  }();
  return kTypes.count(dt) != 0;
}

std::optional<double> numeric_value(const Term& t) {
  if (!t.is_literal() || !is_numeric_type(t.datatype())) return std::nullopt;
  const std::string& s = t.value();
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

bool is_simple_string(const Term& t) {
  return t.is_literal() && t.datatype() == rdf::kXsdString;
}

Term boolean(bool b) {
  return Term::typed_literal(b ? "true" : "false", vocab::xsd::kBoolean);
}

// Effective boolean value; nullopt is a type error.
std::optional<bool> ebv(const std::optional<Term>& v) {
  if (!v || !v->is_literal()) return std::nullopt;
  if (v->datatype() == vocab::xsd::kBoolean) {
    return v->value() == "true" || v->value() == "1";
  }
  if (auto n = numeric_value(*v)) return !std::isnan(*n) && *n != 0.0;
  if (is_numeric_type(v->datatype())) return false;  // ill-formed numeric
  if (is_simple_string(*v)) return !v->value().empty();
  return std::nullopt;
}

// -1/0/1, or nullopt when the two terms cannot be ordered.
std::optional<int> compare_values(const Term& a, const Term& b) {
  auto na = numeric_value(a);
  auto nb = numeric_value(b);
  if (na && nb) return *na < *nb ? -1 : (*na > *nb ? 1 : 0);
  bool same_kind_literal =
      a.is_literal() && b.is_literal() && a.datatype() == b.datatype() &&
      (is_simple_string(a) || a.datatype() == vocab::xsd::kDateTime ||
       a.datatype() == vocab::xsd::kDate || a.datatype() == vocab::xsd::kBoolean);
  if (same_kind_literal) {
    int c = a.value().compare(b.value());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  return std::nullopt;
}

// ORDER BY comparison: unbound < blank < IRI < literal.
int order_rank(const std::optional<Term>& t) {
  if (!t) return 0;
  if (t->is_blank()) return 1;
  if (t->is_iri()) return 2;
  return 3;
}

int order_compare(const std::optional<Term>& a, const std::optional<Term>& b) {
  int ra = order_rank(a);
  int rb = order_rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (!a) return 0;
  if (a->is_literal()) {
    if (auto c = compare_values(*a, *b)) {
      if (*c != 0) return *c;
    }
  } else {
    int c = a->value().compare(b->value());
    if (c != 0) return c < 0 ? -1 : 1;
  }
  int c = a->ntriples().compare(b->ntriples());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// ---- evaluator --------------------------------------------------------------

class Evaluator {
 public:
  Evaluator(const Query& q, const Graph& g) : q_(q), g_(g), table_(g) {
    collect_vars(q_.where);
  }

  ResultTable run() {
    std::vector<Row> rows = eval_group(q_.where, {Row(vars_.size(), kUnbound)}, {});
    std::vector<std::string> header =
        q_.select_all ? pattern_variables(q_.where) : q_.projection;
    std::vector<std::size_t> cols;
    for (const std::string& h : header) cols.push_back(var_index_.at(h));

    std::vector<std::vector<std::optional<Term>>> projected;
    projected.reserve(rows.size());
    for (const Row& r : rows) {
      std::vector<std::optional<Term>> out;
      for (std::size_t c : cols) {
        if (r[c] == kUnbound) {
          out.push_back(std::nullopt);
        } else {
          out.push_back(table_.term(r[c]));
        }
      }
      projected.push_back(std::move(out));
    }
    // Order keys are taken from the full solution, so keep the row index.
    std::vector<std::vector<std::string>> canon;
    canon.reserve(projected.size());
    for (const auto& r : projected) {
      std::vector<std::string> k;
      for (const auto& cell : r) k.push_back(cell ? cell->ntriples() : "");
      canon.push_back(std::move(k));
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::pair<std::size_t, bool>> keys;
    for (const OrderKey& k : q_.order_by) {
      auto it = var_index_.find(k.variable);
      if (it != var_index_.end()) keys.emplace_back(it->second, k.descending);
    }
    auto value_at = [&](std::size_t row, std::size_t var) -> std::optional<Term> {
      Id id = rows[row][var];
      if (id == kUnbound) return std::nullopt;
      return table_.term(id);
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      for (const auto& [var, desc] : keys) {
        int c = order_compare(value_at(a, var), value_at(b, var));
        if (c != 0) return desc ? c > 0 : c < 0;
      }
      return canon[a] < canon[b];
    });

    ResultTable result(header);
    const std::vector<std::string>* previous = nullptr;
    std::set<std::vector<std::string>> seen;
    for (std::size_t i : order) {
      if (q_.distinct && !seen.insert(canon[i]).second) continue;
      result.add_row(std::move(projected[i]));
      previous = &canon[i];
    }
    (void)previous;
    return result;
  }

 private:
  // ---- variables ----

  void add_var(const std::string& name) {
    if (var_index_.count(name) == 0) {
      var_index_[name] = vars_.size();
      vars_.push_back(name);
    }
  }

  void collect_expr_vars(const Expr& e) {
    if (e.kind == ExprKind::kVariable || e.kind == ExprKind::kBound) add_var(e.variable);
    for (const Expr& a : e.args) collect_expr_vars(a);
  }

  void collect_vars(const std::vector<Element>& group) {
    for (const Element& e : group) {
      switch (e.kind) {
        case ElementKind::kTriple:
          for (const PatternTerm* t :
               {&e.triple->subject, &e.triple->predicate, &e.triple->object}) {
            if (const auto* v = std::get_if<Variable>(t)) add_var(v->name);
          }
          break;
        case ElementKind::kValues:
          add_var(e.values->variable);
          break;
        case ElementKind::kFilter:
          collect_expr_vars(*e.filter);
          break;
        case ElementKind::kOptional:
        case ElementKind::kMinus:
          collect_vars(e.group);
          break;
      }
    }
    for (const OrderKey& k : q_.order_by) add_var(k.variable);
    for (const std::string& p : q_.projection) add_var(p);
  }

  Slot compile_slot(const PatternTerm& t) {
    Slot s;
    if (const auto* v = std::get_if<Variable>(&t)) {
      s.is_var = true;
      s.var = var_index_.at(v->name);
    } else {
      s.id = table_.id(std::get<Term>(t));
    }
    return s;
  }

  // ---- group evaluation ----

  std::vector<Row> eval_group(const std::vector<Element>& group,
                              std::vector<Row> rows,
                              std::set<std::size_t> certain) {
    std::vector<CompiledTriple> bgp;
    std::vector<const Expr*> filters;
    auto flush = [&] {
      if (bgp.empty()) return;
      rows = join_bgp(std::move(rows), bgp, certain);
      bgp.clear();
    };
    for (const Element& e : group) {
      switch (e.kind) {
        case ElementKind::kTriple: {
          const TriplePatternNode& t = *e.triple;
          bgp.push_back({compile_slot(t.subject), compile_slot(t.predicate),
                         compile_slot(t.object), t.closure});
          break;
        }
        case ElementKind::kFilter:
          filters.push_back(&*e.filter);
          break;
        case ElementKind::kValues:
          flush();
          rows = join_values(std::move(rows), *e.values, certain);
          break;
        case ElementKind::kOptional: {
          flush();
          std::vector<Element> body;
          std::vector<const Expr*> conditions;
          for (const Element& inner : e.group) {
            if (inner.kind == ElementKind::kFilter) {
              conditions.push_back(&*inner.filter);
            } else {
              body.push_back(inner);
            }
          }
          std::vector<Row> right = eval_group(body, {Row(vars_.size(), kUnbound)}, {});
          rows = left_join(std::move(rows), right, conditions);
          break;
        }
        case ElementKind::kMinus: {
          flush();
          std::vector<Row> right =
              eval_group(e.group, {Row(vars_.size(), kUnbound)}, {});
          rows = minus(std::move(rows), right);
          break;
        }
      }
    }
    flush();
    if (!filters.empty()) {
      std::vector<Row> kept;
      for (Row& r : rows) {
        bool ok = std::all_of(filters.begin(), filters.end(), [&](const Expr* f) {
          return ebv(eval_expr(*f, r)).value_or(false);
        });
        if (ok) kept.push_back(std::move(r));
      }
      rows = std::move(kept);
    }
    return rows;
  }

  static int bound_count(const CompiledTriple& t, const std::set<std::size_t>& bound) {
    int n = 0;
    for (const Slot* s : {&t.s, &t.p, &t.o}) {
      if (!s->is_var || bound.count(s->var) != 0) ++n;
    }
    return n;
  }

  std::vector<Row> join_bgp(std::vector<Row> rows, std::vector<CompiledTriple> bgp,
                            std::set<std::size_t>& certain) {
    // Greedy order: most bound positions first, textual order on ties.
    std::vector<CompiledTriple> ordered;
    std::set<std::size_t> bound = certain;
    while (!bgp.empty()) {
      std::size_t best = 0;
      int best_count = -1;
      for (std::size_t i = 0; i < bgp.size(); ++i) {
        int c = bound_count(bgp[i], bound);
        if (c > best_count) {
          best = i;
          best_count = c;
        }
      }
      for (const Slot* s : {&bgp[best].s, &bgp[best].p, &bgp[best].o}) {
        if (s->is_var) bound.insert(s->var);
      }
      ordered.push_back(bgp[best]);
      bgp.erase(bgp.begin() + static_cast<std::ptrdiff_t>(best));
    }
    certain = bound;
    for (const CompiledTriple& t : ordered) {
      std::vector<Row> next;
      for (const Row& r : rows) extend(r, t, next);
      rows = std::move(next);
      if (rows.empty()) break;
    }
    return rows;
  }

  // Current value of a slot in a row, or kUnbound for a free variable.
  static Id resolve(const Slot& s, const Row& r) {
    return s.is_var ? r[s.var] : s.id;
  }

  static bool bind(Row& r, const Slot& s, Id value) {
    if (!s.is_var) return s.id == value;
    if (r[s.var] == kUnbound) {
      r[s.var] = value;
      return true;
    }
    return r[s.var] == value;
  }

  void extend(const Row& r, const CompiledTriple& t, std::vector<Row>& out) {
    Id s = resolve(t.s, r);
    Id p = resolve(t.p, r);
    Id o = resolve(t.o, r);
    // A bound value that is not in the graph can never match.
    for (Id v : {s, p, o}) {
      if (v != kUnbound && !TermTable::in_graph(v)) return;
    }
    auto opt = [](Id v) { return v == kUnbound ? std::nullopt : std::optional<Id>(v); };
    if (!t.closure) {
      g_.for_each(opt(s), opt(p), opt(o), [&](const Graph::IdTriple& k) {
        Row n = r;
        if (bind(n, t.s, k[0]) && bind(n, t.p, k[1]) && bind(n, t.o, k[2])) {
          out.push_back(std::move(n));
        }
      });
      return;
    }
    auto emit = [&](Id from, Id to) {
      Row n = r;
      if (bind(n, t.s, from) && bind(n, t.o, to)) out.push_back(std::move(n));
    };
    if (s != kUnbound) {
      for (Id to : reach(s, p, true)) {
        if (o == kUnbound || o == to) emit(s, to);
      }
    } else if (o != kUnbound) {
      for (Id from : reach(o, p, false)) emit(from, o);
    } else {
      std::set<Id> starts;
      g_.for_each(std::nullopt, p, std::nullopt,
                  [&](const Graph::IdTriple& k) { starts.insert(k[0]); });
      for (Id from : starts) {
        for (Id to : reach(from, p, true)) emit(from, to);
      }
    }
  }

  // Nodes reachable in one or more p-steps (forward) or from which `node`
  // is reachable (backward). Breadth-first, each node once.
  std::vector<Id> reach(Id node, Id p, bool forward) {
    auto key = std::make_tuple(node, p, forward);
    auto cached = reach_cache_.find(key);
    if (cached != reach_cache_.end()) return cached->second;
    std::vector<Id> out;
    std::unordered_set<Id> seen;
    std::deque<Id> queue = {node};
    while (!queue.empty()) {
      Id cur = queue.front();
      queue.pop_front();
      auto visit = [&](Id next) {
        if (seen.insert(next).second) {
          out.push_back(next);
          queue.push_back(next);
        }
      };
      if (forward) {
        g_.for_each(cur, p, std::nullopt,
                    [&](const Graph::IdTriple& k) { visit(k[2]); });
      } else {
        g_.for_each(std::nullopt, p, cur,
                    [&](const Graph::IdTriple& k) { visit(k[0]); });
      }
    }
    reach_cache_.emplace(key, out);
    return out;
  }

  std::vector<Row> join_values(std::vector<Row> rows, const ValuesClause& v,
                               std::set<std::size_t>& certain) {
    std::size_t var = var_index_.at(v.variable);
    std::vector<Id> ids;
    bool has_undef = false;
    for (const auto& t : v.rows) {
      if (t) {
        ids.push_back(table_.id(*t));
      } else {
        has_undef = true;
        ids.push_back(kUnbound);
      }
    }
    std::vector<Row> out;
    for (const Row& r : rows) {
      for (Id id : ids) {
        if (id == kUnbound) {
          out.push_back(r);
        } else if (r[var] == kUnbound || r[var] == id) {
          Row n = r;
          n[var] = id;
          out.push_back(std::move(n));
        }
      }
    }
    if (!has_undef) certain.insert(var);
    return out;
  }

  static bool compatible(const Row& a, const Row& b, bool& shares) {
    shares = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == kUnbound || b[i] == kUnbound) continue;
      if (a[i] != b[i]) return false;
      shares = true;
    }
    return true;
  }

  static Row merge(const Row& a, const Row& b) {
    Row out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == kUnbound) out[i] = b[i];
    }
    return out;
  }

  // Variables bound in every row of `rows`.
  std::vector<std::size_t> always_bound(const std::vector<Row>& rows) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      bool all = std::all_of(rows.begin(), rows.end(),
                             [&](const Row& r) { return r[v] != kUnbound; });
      if (all) out.push_back(v);
    }
    return out;
  }

  // Candidate right rows for each left row, bucketed on the variables that
  // are bound on both sides in every row.
  template <typename Fn>
  void for_each_candidate(const std::vector<Row>& left, const std::vector<Row>& right,
                          Fn&& fn) {
    std::vector<std::size_t> lk = always_bound(left);
    std::vector<std::size_t> rk = always_bound(right);
    std::vector<std::size_t> keys;
    std::set_intersection(lk.begin(), lk.end(), rk.begin(), rk.end(),
                          std::back_inserter(keys));
    auto key_of = [&](const Row& r) {
      std::string k;
      for (std::size_t v : keys) {
        k.append(reinterpret_cast<const char*>(&r[v]), sizeof(Id));
      }
      return k;
    };
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < right.size(); ++i) buckets[key_of(right[i])].push_back(i);
    static const std::vector<std::size_t> kNone;
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto it = buckets.find(key_of(left[i]));
      fn(i, it == buckets.end() ? kNone : it->second);
    }
  }

  std::vector<Row> left_join(std::vector<Row> left, const std::vector<Row>& right,
                             const std::vector<const Expr*>& conditions) {
    std::vector<Row> out;
    for_each_candidate(left, right, [&](std::size_t i,
                                        const std::vector<std::size_t>& cands) {
      bool matched = false;
      for (std::size_t j : cands) {
        bool shares = false;
        if (!compatible(left[i], right[j], shares)) continue;
        Row merged = merge(left[i], right[j]);
        bool ok = std::all_of(conditions.begin(), conditions.end(), [&](const Expr* c) {
          return ebv(eval_expr(*c, merged)).value_or(false);
        });
        if (ok) {
          out.push_back(std::move(merged));
          matched = true;
        }
      }
      if (!matched) out.push_back(left[i]);
    });
    return out;
  }

  std::vector<Row> minus(std::vector<Row> left, const std::vector<Row>& right) {
    std::vector<Row> out;
    // Bucketing is only valid on variables that force a shared binding, so
    // MINUS compares against every right row.
    for (Row& l : left) {
      bool drop = std::any_of(right.begin(), right.end(), [&](const Row& r) {
        bool shares = false;
        return compatible(l, r, shares) && shares;
      });
      if (!drop) out.push_back(std::move(l));
    }
    return out;
  }

  // ---- expressions ----

  std::optional<Term> eval_expr(const Expr& e, const Row& r) {
    switch (e.kind) {
      case ExprKind::kConstant:
        return e.term;
      case ExprKind::kVariable: {
        Id id = r[var_index_.at(e.variable)];
        if (id == kUnbound) return std::nullopt;
        return table_.term(id);
      }
      case ExprKind::kBound:
        return boolean(r[var_index_.at(e.variable)] != kUnbound);
      case ExprKind::kNot: {
        auto v = ebv(eval_expr(e.args[0], r));
        if (!v) return std::nullopt;
        return boolean(!*v);
      }
      case ExprKind::kAnd: {
        auto a = ebv(eval_expr(e.args[0], r));
        auto b = ebv(eval_expr(e.args[1], r));
        if ((a && !*a) || (b && !*b)) return boolean(false);
        if (a && b) return boolean(true);
        return std::nullopt;
      }
      case ExprKind::kOr: {
        auto a = ebv(eval_expr(e.args[0], r));
        auto b = ebv(eval_expr(e.args[1], r));
        if ((a && *a) || (b && *b)) return boolean(true);
        if (a && b) return boolean(false);
        return std::nullopt;
      }
      case ExprKind::kEqual:
      case ExprKind::kNotEqual:
      case ExprKind::kLess:
      case ExprKind::kGreater:
      case ExprKind::kLessEqual:
      case ExprKind::kGreaterEqual:
        return compare(e, r);
      case ExprKind::kStr: {
        auto v = eval_expr(e.args[0], r);
        if (!v || v->is_blank()) return std::nullopt;
        return Term::literal(v->value());
      }
      case ExprKind::kRegex:
        return regex(e, r);
    }
    return std::nullopt;
  }

  std::optional<Term> compare(const Expr& e, const Row& r) {
    auto a = eval_expr(e.args[0], r);
    auto b = eval_expr(e.args[1], r);
    if (!a || !b) return std::nullopt;
    std::optional<int> c = compare_values(*a, *b);
    switch (e.kind) {
      case ExprKind::kEqual:
        return boolean(c ? *c == 0 : *a == *b);
      case ExprKind::kNotEqual:
        return boolean(c ? *c != 0 : !(*a == *b));
      case ExprKind::kLess:
        if (!c) return std::nullopt;
        return boolean(*c < 0);
      case ExprKind::kGreater:
        if (!c) return std::nullopt;
        return boolean(*c > 0);
      case ExprKind::kLessEqual:
        if (!c) return std::nullopt;
        return boolean(*c <= 0);
      case ExprKind::kGreaterEqual:
        if (!c) return std::nullopt;
        return boolean(*c >= 0);
      default:
        return std::nullopt;
    }
  }

  std::optional<Term> regex(const Expr& e, const Row& r) {
    auto text = eval_expr(e.args[0], r);
    auto pattern = eval_expr(e.args[1], r);
    std::optional<Term> flags;
    if (e.args.size() > 2) {
      flags = eval_expr(e.args[2], r);
      if (!flags || !is_simple_string(*flags)) return std::nullopt;
    }
    if (!text || !pattern || !text->is_literal() || !is_simple_string(*pattern)) {
      return std::nullopt;
    }
    if (text->datatype() != rdf::kXsdString && text->datatype() != rdf::kRdfLangString) {
      return std::nullopt;
    }
    std::string flag_text = flags ? flags->value() : "";
    std::string key = flag_text + '\0' + pattern->value();
    auto it = regex_cache_.find(key);
    if (it == regex_cache_.end()) {
      auto options = std::regex::ECMAScript;
      for (char f : flag_text) {
        if (f == 'i') {
          options |= std::regex::icase;
        } else {
          return std::nullopt;
        }
      }
      try {
        it = regex_cache_.emplace(key, std::regex(pattern->value(), options)).first;
      } catch (const std::regex_error&) {
        return std::nullopt;
      }
    }
    return boolean(std::regex_search(text->value(), it->second));
  }

  const Query& q_;
  const Graph& g_;
  TermTable table_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::size_t> var_index_;
  std::map<std::tuple<Id, Id, bool>, std::vector<Id>> reach_cache_;
  std::unordered_map<std::string, std::regex> regex_cache_;
};

// ---- parameter substitution ----------------------------------------------

void substitute(PatternTerm& t, const std::map<std::string, Term>& params) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    auto it = params.find(v->name);
    if (it != params.end()) t = it->second;
  }
}

void substitute(Expr& e, const std::map<std::string, Term>& params) {
  if (e.kind == ExprKind::kVariable || e.kind == ExprKind::kBound) {
    auto it = params.find(e.variable);
    if (it != params.end()) {
      e.term = e.kind == ExprKind::kBound ? boolean(true) : it->second;
      e.kind = ExprKind::kConstant;
      e.variable.clear();
    }
  }
  for (Expr& a : e.args) substitute(a, params);
}

void substitute(std::vector<Element>& group, const std::map<std::string, Term>& params) {
  for (Element& e : group) {
    switch (e.kind) {
      case ElementKind::kTriple:
        substitute(e.triple->subject, params);
        substitute(e.triple->predicate, params);
        substitute(e.triple->object, params);
        if (e.triple->closure && !std::holds_alternative<Term>(e.triple->predicate)) {
          throw QueryError("closure predicate must be an IRI");
        }
        break;
      case ElementKind::kFilter:
        substitute(*e.filter, params);
        break;
      case ElementKind::kValues:
        if (params.count(e.values->variable) != 0) {
          throw QueryError("parameter ?" + e.values->variable +
                           " is also a VALUES column");
        }
        break;
      case ElementKind::kOptional:
      case ElementKind::kMinus:
        substitute(e.group, params);
        break;
    }
  }
}

}  // namespace

ResultTable evaluate(const Query& query, const Graph& g) {
  return Evaluator(query, g).run();
}

Query bind_parameters(Query query, const std::map<std::string, Term>& params) {
  for (const std::string& p : query.projection) {
    if (params.count(p) != 0) {
      throw QueryError("parameter ?" + p + " cannot be projected");
    }
  }
  substitute(query.where, params);
  std::erase_if(query.order_by,
                [&](const OrderKey& k) { return params.count(k.variable) != 0; });
  return query;
}

}  // namespace plexflow::query
