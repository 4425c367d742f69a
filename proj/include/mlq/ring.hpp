#ifndef MLQ_RING_HPP
#define MLQ_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlq/coeff.hpp"

namespace mlq {

struct UnknownVariable : Error {
  using Error::Error;
};

// Laurent variables may carry negative exponents, Poly variables may not.
enum class VarKind { Poly, Laurent };

// Immutable, shared variable table.  The table fixes the variable order (and
// with it the canonical term order) and carries the optional quadratic
// extension d so coefficient arithmetic knows which sqrt it is working with.
class Ring {
 public:
  struct Var {
    std::string name;
    VarKind kind;
  };

  static std::shared_ptr<const Ring> make(std::vector<Var> vars, Ext ext = {});

  int nvars() const { return static_cast<int>(vars_.size()); }
  const Var& var(int i) const { return vars_[static_cast<size_t>(i)]; }
  const std::string& name(int i) const { return var(i).name; }
  VarKind kind(int i) const { return var(i).kind; }
  const Ext& extension() const { return ext_; }

  std::optional<int> find(std::string_view name) const;
  // Same, but throws UnknownVariable.
  int index(std::string_view name) const;

  bool same_as(const Ring& other) const;

 private:
  Ring(std::vector<Var> vars, Ext ext)
      : vars_(std::move(vars)), ext_(std::move(ext)) {}

  std::vector<Var> vars_;
  Ext ext_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Convenience for the common "all variables of one kind" case.
RingPtr make_ring(const std::vector<std::string>& poly_vars, Ext ext = {});

}  // namespace mlq

#endif  // MLQ_RING_HPP
