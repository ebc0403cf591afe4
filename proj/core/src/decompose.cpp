#include "icsolve/decompose.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "icsolve/error.hpp"

namespace icsolve {
namespace {

// DAG of the equations' subexpressions, shared by structural equality.
class Decomposer {
 public:
  explicit Decomposer(const Problem& problem) : problem_(problem) {
    for (const auto& d : problem.declarations) {
      user_.insert(d.name);
      domain_[d.name] = d.domain;
    }
  }

  Csp run() {
    for (const auto& eq : problem_.equations) equation(eq);
    return finish();
  }

 private:
  enum class Kind { kVar, kConst, kSum, kDiff, kProd, kSquare, kNeg };

  struct Node {
    Kind kind = Kind::kConst;
    VarName var;
    Interval value;
    int a = -1;
    int b = -1;
    ExprPtr origin;
  };

  using Key = std::tuple<int, int, int, VarName, double, double>;

  int intern(Node node) {
    const Key key{static_cast<int>(node.kind), node.a, node.b, node.var, node.value.lo(),
                  node.value.hi()};
    const auto it = cse_.find(key);
    if (it != cse_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    binding_.emplace_back();
    cse_.emplace(key, id);
    return id;
  }

  int make(Kind kind, int a, int b, ExprPtr origin) {
    if (kind == Kind::kSum || kind == Kind::kProd) {
      if (b < a) std::swap(a, b);
      if (kind == Kind::kProd && a == b) return make(Kind::kSquare, a, -1, std::move(origin));
    }
    Node n;
    n.kind = kind;
    n.a = a;
    n.b = b;
    n.origin = std::move(origin);
    return intern(std::move(n));
  }

  int constant(const Interval& value, ExprPtr origin) {
    Node n;
    n.kind = Kind::kConst;
    n.value = value;
    n.origin = std::move(origin);
    return intern(std::move(n));
  }

  // x^k by repeated squaring: even powers square x^(k/2), odd ones multiply.
  int power(int base, int k) {
    if (k == 1) return base;
    const ExprPtr o = nodes_[base].origin;  // copy: interning may reallocate nodes_
    if (k % 2 == 0) {
      const int half = power(base, k / 2);
      return make(Kind::kSquare, half, -1, Expr::pow(o, k));
    }
    const int rest = power(base, k - 1);
    return make(Kind::kProd, rest, base, Expr::pow(o, k));
  }

  int build(const ExprPtr& e) {
    switch (e->op) {
      case Expr::Op::kVar: {
        Node n;
        n.kind = Kind::kVar;
        n.var = e->name;
        n.origin = e;
        return intern(std::move(n));
      }
      case Expr::Op::kConst:
        return constant(e->value, e);
      case Expr::Op::kAdd:
      case Expr::Op::kSub:
      case Expr::Op::kMul: {
        // Left before right: node ids, and so the output, depend on it.
        const int l = build(e->lhs);
        const int r = build(e->rhs);
        const Kind k = e->op == Expr::Op::kAdd   ? Kind::kSum
                       : e->op == Expr::Op::kSub ? Kind::kDiff
                                                 : Kind::kProd;
        return make(k, l, r, e);
      }
      case Expr::Op::kNeg: {
        const int child = build(e->lhs);
        if (nodes_[child].kind == Kind::kConst) return constant(neg(nodes_[child].value), e);
        return make(Kind::kNeg, child, -1, e);
      }
      case Expr::Op::kPow:
        return power(build(e->lhs), e->exponent);
    }
    throw ContractViolation("unknown expression node");
  }

  VarName fresh_aux(const Interval& dom, const ExprPtr& origin) {
    VarName name = "_t" + std::to_string(aux_counter_++);
    domain_[name] = dom;
    aux_def_[name] = origin;
    return name;
  }

  static bool is_aux(const VarName& v) { return !v.empty() && v.front() == '_'; }

  static int aux_number(const VarName& v) { return std::stoi(v.substr(2)); }

  void emit(PrimitiveConstraint c) { out_.push_back(std::move(c)); }

  // Replaces auxiliary `from` by `to` everywhere; `to` keeps both domains.
  void substitute(const VarName& from, const VarName& to) {
    for (auto& c : out_) {
      for (auto& a : c.args) {
        if (a == from) a = to;
      }
    }
    for (auto& b : binding_) {
      if (b && *b == from) b = to;
    }
    domain_[to] = intersect(domain_[to], domain_[from]);
    domain_.erase(from);
    aux_def_.erase(from);
  }

  // Makes `a` and `b` denote the same value; returns the surviving name.
  VarName unify(const VarName& a, const VarName& b) {
    if (a == b) return a;
    if (is_aux(a) && is_aux(b)) {
      const bool keep_a = aux_number(a) < aux_number(b);
      substitute(keep_a ? b : a, keep_a ? a : b);
      return keep_a ? a : b;
    }
    if (is_aux(b)) {
      substitute(b, a);
      return a;
    }
    if (is_aux(a)) {
      substitute(a, b);
      return b;
    }
    const VarName zero = materialize(constant(Interval::point(0.0), Expr::constant(0.0)));
    emit(PrimitiveConstraint::sum(a, zero, b));
    return a;
  }

  // Variable holding node `id`'s value, bound to `target` when given.
  VarName materialize(int id, const std::optional<VarName>& target = std::nullopt) {
    const Node node = nodes_[id];
    if (node.kind == Kind::kVar) return target ? unify(node.var, *target) : node.var;
    if (node.kind == Kind::kConst && node.value.is_point() && target) {
      emit(PrimitiveConstraint::constant(node.value.lo(), *target));
      return *target;
    }
    if (binding_[id]) {
      const VarName bound = *binding_[id];
      return target ? unify(bound, *target) : bound;
    }
    if (node.kind == Kind::kConst) {
      VarName v = fresh_aux(node.value.is_point() ? Interval::entire() : node.value, node.origin);
      if (node.value.is_point()) emit(PrimitiveConstraint::constant(node.value.lo(), v));
      binding_[id] = v;
      return target ? unify(v, *target) : v;
    }

    const VarName a = materialize(node.a);
    const VarName b = node.b >= 0 ? materialize(node.b) : VarName();
    // Children may have been renamed while materializing siblings.
    const VarName a_now = current_name(node.a, a);
    const VarName out = target ? *target : fresh_aux(Interval::entire(), node.origin);
    switch (node.kind) {
      case Kind::kSum:
        emit(PrimitiveConstraint::sum(a_now, b, out));
        break;
      case Kind::kDiff:  // out = a - b  <=>  out + b = a
        emit(PrimitiveConstraint::sum(out, b, a_now));
        break;
      case Kind::kProd:
        emit(PrimitiveConstraint::mul(a_now, b, out));
        break;
      case Kind::kSquare:
        emit(PrimitiveConstraint::sq(a_now, out));
        break;
      case Kind::kNeg: {  // out + a = 0
        const VarName zero = materialize(constant(Interval::point(0.0), Expr::constant(0.0)));
        emit(PrimitiveConstraint::sum(out, current_name(node.a, a_now), zero));
        break;
      }
      default:
        break;
    }
    binding_[id] = out;
    return out;
  }

  VarName current_name(int id, const VarName& fallback) const {
    if (nodes_[id].kind == Kind::kVar) return nodes_[id].var;
    return binding_[id] ? *binding_[id] : fallback;
  }

  bool is_leaf(const ExprPtr& e, Expr::Op op) const { return e->op == op; }

  void equation(const Equation& eq) {
    const int l = build(eq.lhs);
    const int r = build(eq.rhs);
    if (nodes_[l].kind == Kind::kVar) {
      materialize(r, nodes_[l].var);
    } else if (nodes_[r].kind == Kind::kVar) {
      materialize(l, nodes_[r].var);
    } else if (nodes_[l].kind == Kind::kConst && nodes_[r].kind != Kind::kConst) {
      const VarName v = materialize(r);
      materialize(l, v);
    } else {
      const VarName v = materialize(l);
      materialize(r, v);
    }
  }

  Csp finish() {
    // Drop duplicates created by aliasing.
    std::vector<PrimitiveConstraint> unique;
    for (auto& c : out_) {
      const bool seen = std::any_of(unique.begin(), unique.end(),
                                    [&](const auto& u) { return u.same_relation(c); });
      if (!seen) unique.push_back(std::move(c));
    }

    // Compact auxiliary names in order of introduction.
    std::vector<VarName> aux;
    for (const auto& [name, dom] : domain_) {
      if (is_aux(name)) aux.push_back(name);
    }
    std::sort(aux.begin(), aux.end(),
              [](const VarName& a, const VarName& b) { return aux_number(a) < aux_number(b); });
    std::map<VarName, VarName> rename;
    for (std::size_t i = 0; i < aux.size(); ++i) rename[aux[i]] = "_t" + std::to_string(i);
    auto renamed = [&](const VarName& v) {
      const auto it = rename.find(v);
      return it == rename.end() ? v : it->second;
    };
    for (auto& c : unique) {
      for (auto& a : c.args) a = renamed(a);
    }

    std::vector<std::pair<VarName, Interval>> bindings;
    for (const auto& [name, dom] : domain_) bindings.emplace_back(renamed(name), dom);
    std::map<VarName, ExprPtr> defs;
    for (const auto& [name, origin] : aux_def_) defs[renamed(name)] = origin;
    return Csp(std::move(unique), Box(bindings), user_, problem_.equations, std::move(defs));
  }

  const Problem& problem_;
  VarSet user_;
  std::map<VarName, Interval> domain_;
  std::map<VarName, ExprPtr> aux_def_;
  std::vector<Node> nodes_;
  std::vector<std::optional<VarName>> binding_;
  std::map<Key, int> cse_;
  std::vector<PrimitiveConstraint> out_;
  int aux_counter_ = 0;
};

}  // namespace

Csp decompose(const Problem& problem) { return Decomposer(problem).run(); }

Csp load_problem(std::string_view text) { return decompose(parse_problem(text)); }

std::string canonical_text(const Csp& csp) {
  Problem p;
  for (const auto& v : csp.user_vars()) p.declarations.push_back({v, csp.initial_box().at(v)});
  p.equations = csp.source_equations();
  return canonical_text(p);
}

}  // namespace icsolve
