#include "mlq/ring.hpp"

#include <cctype>

namespace mlq {

namespace {

bool identifier_shaped(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace

RingPtr Ring::make(std::vector<Var> vars, Ext ext) {
  for (size_t i = 0; i < vars.size(); ++i) {
    if (!identifier_shaped(vars[i].name) || vars[i].name == "sqrt")
      throw DomainError("bad variable name '" + vars[i].name + "'");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name)
        throw DomainError("duplicate variable name '" + vars[i].name + "'");
  }
  if (ext && *ext <= 0)
    throw DomainError("extension parameter must be positive");
  return RingPtr(new Ring(std::move(vars), std::move(ext)));
}

std::optional<int> Ring::find(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

bool Ring::same_as(const Ring& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size()) return false;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].kind != other.vars_[i].kind)
      return false;
  if (ext_.has_value() != other.ext_.has_value()) return false;
  return !ext_ || *ext_ == *other.ext_;
}

RingPtr make_ring(const std::vector<std::string>& poly_vars, Ext ext) {
  std::vector<Ring::Var> vars;
  vars.reserve(poly_vars.size());
  for (const auto& n : poly_vars) vars.push_back({n, VarKind::Poly});
  return Ring::make(std::move(vars), std::move(ext));
}

}  // namespace mlq
