#include "sysid/basis.hpp"

#include <cmath>

#include "sysid/errors.hpp"

namespace sysid {

void BasisLibrary::validate() const {
  if (state_dim <= 0) throw ValidationError("basis state_dim must be positive");
  if (terms.empty()) throw ValidationError("basis has no terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const BasisTerm& t = terms[k];
    auto check_index = [&](int idx) {
      if (idx < 0 || idx >= state_dim)
        throw ValidationError("basis term " + std::to_string(k) + ": index " +
                              std::to_string(idx) + " out of range for state_dim " +
                              std::to_string(state_dim));
    };
    check_index(t.i);
    if (t.kind == BasisTerm::Kind::Cross || t.kind == BasisTerm::Kind::SinProd) check_index(t.j);
    if (t.kind == BasisTerm::Kind::Cross && t.i == t.j)
      throw ValidationError("basis term " + std::to_string(k) + ": cross requires distinct indices");
  }
}

BasisLibrary linear_library(int n) {
  BasisLibrary lib;
  lib.state_dim = n;
  lib.terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lib.terms.push_back(BasisTerm::linear(i));
  lib.validate();
  return lib;
}

Eigen::VectorXd eval_basis(const BasisLibrary& basis, const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != basis.state_dim)
    throw DimensionError("eval_basis: x has dimension " + std::to_string(x.size()) +
                         ", basis expects " + std::to_string(basis.state_dim));
  if (!x.allFinite()) throw ValidationError("eval_basis: non-finite state");

  Eigen::VectorXd out(basis.output_dim());
  for (int k = 0; k < basis.output_dim(); ++k) {
    const BasisTerm& t = basis.terms[static_cast<std::size_t>(k)];
    switch (t.kind) {
      case BasisTerm::Kind::Linear:
        out[k] = x[t.i];
        break;
      case BasisTerm::Kind::Cross:
        out[k] = x[t.i] * x[t.j];
        break;
      case BasisTerm::Kind::Square:
        out[k] = x[t.i] * x[t.i];
        break;
      case BasisTerm::Kind::SinProd:
        out[k] = std::sin(x[t.i] * x[t.j]);
        break;
      case BasisTerm::Kind::Cos:
        out[k] = std::cos(x[t.i]);
        break;
    }
  }
  return out;
}

std::string term_to_string(const BasisTerm& term) {
  switch (term.kind) {
    case BasisTerm::Kind::Linear:
      return "linear " + std::to_string(term.i);
    case BasisTerm::Kind::Cross:
      return "cross " + std::to_string(term.i) + " " + std::to_string(term.j);
    case BasisTerm::Kind::Square:
      return "square " + std::to_string(term.i);
    case BasisTerm::Kind::SinProd:
      return "sinprod " + std::to_string(term.i) + " " + std::to_string(term.j);
    case BasisTerm::Kind::Cos:
      return "cos " + std::to_string(term.i);
  }
  throw ValidationError("unknown basis term kind");
}

BasisTerm term_from_tokens(const std::vector<std::string_view>& tokens) {
  if (tokens.empty()) throw ValidationError("empty basis term");
  auto index_at = [&](std::size_t pos) {
    if (pos >= tokens.size()) throw ValidationError("basis term missing index");
    const std::string s(tokens[pos]);
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw ValidationError("bad index");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("bad basis term index: '" + s + "'");
    }
  };
  const std::string_view kind = tokens[0];
  auto arity = [&](std::size_t n) {
    if (tokens.size() != n + 1)
      throw ValidationError("basis term '" + std::string(kind) + "' expects " +
                            std::to_string(n) + " indices");
  };
  if (kind == "linear") {
    arity(1);
    return BasisTerm::linear(index_at(1));
  }
  if (kind == "cross") {
    arity(2);
    return BasisTerm::cross(index_at(1), index_at(2));
  }
  if (kind == "square") {
    arity(1);
    return BasisTerm::square(index_at(1));
  }
  if (kind == "sinprod") {
    arity(2);
    return BasisTerm::sin_prod(index_at(1), index_at(2));
  }
  if (kind == "cos") {
    arity(1);
    return BasisTerm::cos(index_at(1));
  }
  throw ValidationError("unknown basis term kind: '" + std::string(kind) + "'");
}

}  // namespace sysid
