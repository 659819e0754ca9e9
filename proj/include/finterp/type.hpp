#pragma once

#include <cassert>
#include <memory>
#include <utility>
#include <vector>

namespace finterp {

// Finite types: the base type 0 (naturals) and arrow types rho -> tau.
// The abbreviation 1 stands for (0->0) and is identified with it.
class Type {
public:
  Type() = default;  // the base type 0

  static Type nat() { return Type(); }
  static Type arrow(Type dom, Type cod);
  static Type one() { return arrow(nat(), nat()); }

  bool is_nat() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }

  const Type& domain() const;
  const Type& codomain() const;

  // level(0) = 0, level(rho->tau) = max(level(rho)+1, level(tau))
  int level() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Type dom;
  Type cod;
};

inline Type Type::arrow(Type dom, Type cod) {
  return Type(std::make_shared<const Node>(Node{std::move(dom), std::move(cod)}));
}

inline const Type& Type::domain() const {
  assert(is_arrow());
  return node_->dom;
}

inline const Type& Type::codomain() const {
  assert(is_arrow());
  return node_->cod;
}

inline int Type::level() const {
  if (is_nat()) return 0;
  int d = domain().level() + 1;
  int c = codomain().level();
  return d > c ? d : c;
}

inline bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_nat() || b.is_nat()) return a.is_nat() && b.is_nat();
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

// Splits rho1 -> ... -> rhok -> 0 into its argument chain [rho1..rhok].
inline std::vector<Type> argument_chain(Type t) {
  std::vector<Type> args;
  while (t.is_arrow()) {
    args.push_back(t.domain());
    t = t.codomain();
  }
  return args;
}

// curry([a, b], r) = a -> b -> r
inline Type curry(const std::vector<Type>& args, Type result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    result = Type::arrow(*it, result);
  return result;
}

}  // namespace finterp
