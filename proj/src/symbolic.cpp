#include "lfd/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lfd/linalg.hpp"

namespace lfd {

MultiPoly MultiPoly::constant(std::size_t vars, const mpq_class& c) {
  MultiPoly p(vars);
  p.add_term(Monomial(vars, 0), c);
  return p;
}

MultiPoly MultiPoly::from_linear_form(std::size_t vars, const LinearForm& f) {
  MultiPoly p(vars);
  if (f.constant != 0) p.add_term(Monomial(vars, 0), mpq_class(static_cast<long>(f.constant)));
  for (const auto& [c, a] : f.terms) {
    Monomial m(vars, 0);
    m.at(c) = 1;
    p.add_term(m, mpq_class(static_cast<long>(a)));
  }
  return p;
}

long MultiPoly::total_degree() const {
  long deg = -1;
  for (const auto& [m, c] : terms_) {
    long s = 0;
    for (auto e : m) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  const long deg = total_degree();
  for (const auto& [m, c] : terms_) {
    long s = 0;
    for (auto e : m) s += e;
    if (s != deg) return false;
  }
  return true;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (m.size() != vars_) throw DimensionMismatch("monomial has the wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw DimensionMismatch("polynomials in different rings");
  MultiPoly r(vars_);
  Monomial m(vars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) m[i] = static_cast<std::uint8_t>(a[i] + b[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
  MultiPoly r(vars_);
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  const auto& [lm, lc] = *divisor.terms_.rbegin();
  MultiPoly quotient(vars_), rest = *this;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms_.rbegin();
    Monomial t(vars_);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (m[i] < lm[i]) return std::nullopt;
      t[i] = static_cast<std::uint8_t>(m[i] - lm[i]);
    }
    MultiPoly step(vars_);
    step.add_term(t, c / lc);
    quotient = quotient + step;
    rest = rest - step * divisor;
  }
  return quotient;
}

MultiPoly MultiPoly::derive(const std::vector<LinearForm>& field) const {
  if (field.size() != vars_) throw DimensionMismatch("vector field has the wrong number of components");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_)
    for (std::size_t j = 0; j < vars_; ++j) {
      if (m[j] == 0 || field[j].is_zero()) continue;
      Monomial base = m;
      --base[j];
      MultiPoly part(vars_);
      part.add_term(base, c * static_cast<long>(m[j]));
      r = r + part * from_linear_form(vars_, field[j]);
    }
  return r;
}

PrimeField::Element MultiPoly::evaluate(const PrimeField& k, const std::vector<PrimeField::Element>& x) const {
  if (x.size() != vars_) throw DimensionMismatch("point has the wrong number of coordinates");
  const mpz_class p(std::to_string(k.characteristic()));
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<PrimeField::Element>(std::stoull(r.get_str()));
  };
  PrimeField::Element total = 0;
  for (const auto& [m, c] : terms_) {
    const auto den = reduce(c.get_den());
    if (den == 0) throw PrimeTooSmall("prime divides a coefficient denominator");
    auto v = k.div(reduce(c.get_num()), den);
    for (std::size_t i = 0; i < vars_; ++i) v = k.mul(v, k.pow(x[i], m[i]));
    total = k.add(total, v);
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const mpq_class a = abs(c);
    bool unit_monomial = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    if (a != 1 || unit_monomial) os << a.get_str();
    bool need_star = a != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << i;
      if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly expand_saito_determinant(const SaitoMatrix& s, std::size_t expand_limit) {
  const std::size_t n = s.size();
  if (n > expand_limit || n > 20)
    throw StepLimit("symbolic expansion is limited to n <= " + std::to_string(std::min<std::size_t>(expand_limit, 20)) +
                    ", got n = " + std::to_string(n));
  const std::size_t vars = static_cast<std::size_t>(rep_dimension(s.quiver, s.dim));
  // dp[mask]: signed sum over injective assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<MultiPoly> dp(std::size_t{1} << n, MultiPoly(vars));
  dp[0] = MultiPoly::constant(vars, 1);
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask >> col & 1u) continue;
      const auto& e = s.entries[row][col];
      if (e.is_zero()) continue;
      const std::size_t above = static_cast<std::size_t>(__builtin_popcountll(mask >> (col + 1)));
      auto term = dp[mask] * MultiPoly::from_linear_form(vars, e);
      if (above % 2) term = term.scaled(-1);
      dp[mask | (std::size_t{1} << col)] = dp[mask | (std::size_t{1} << col)] + term;
    }
  }
  return dp.back();
}

bool SymbolicFactorization::reduced() const {
  if (identically_zero) return false;
  return std::all_of(factors.begin(), factors.end(), [](const SymbolicFactor& f) { return f.multiplicity == 1; });
}

std::vector<long> SymbolicFactorization::factor_degrees() const {
  std::vector<long> out;
  for (const auto& f : factors)
    for (long i = 0; i < f.multiplicity; ++i) out.push_back(f.degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void monomials_of_degree(std::size_t vars, long degree, std::vector<MultiPoly::Monomial>& out) {
  MultiPoly::Monomial m(vars, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == vars) {
      m[i] = static_cast<std::uint8_t>(left);
      out.push_back(m);
      return;
    }
    for (long e = left; e >= 0; --e) {
      m[i] = static_cast<std::uint8_t>(e);
      rec(i + 1, left - e);
    }
  };
  if (vars > 0) rec(0, degree);
}

}  // namespace

SymbolicFactorization factor_saito_determinant(const SaitoMatrix& s, std::size_t expand_limit) {
  SymbolicFactorization out;
  out.f = expand_saito_determinant(s, expand_limit);
  if (out.f.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  const auto& q = s.quiver;
  const auto& d = s.dim;
  const std::size_t vars = out.f.variables();

  // Torus weight of each coordinate, indexed by (vertex, row) slots.
  std::vector<std::size_t> slot_offset(q.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) slot_offset[i + 1] = slot_offset[i] + static_cast<std::size_t>(d[i]);
  std::vector<std::vector<int>> coord_weight(vars, std::vector<int>(slot_offset.back(), 0));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    for (long long r = 0; r < d[ar.target]; ++r)
      for (long long c = 0; c < d[ar.source]; ++c) {
        auto& w = coord_weight[rep_coordinate(q, d, a, static_cast<std::size_t>(r), static_cast<std::size_t>(c))];
        ++w[slot_offset[ar.target] + static_cast<std::size_t>(r)];
        --w[slot_offset[ar.source] + static_cast<std::size_t>(c)];
      }
  }
  std::vector<std::vector<LinearForm>> nilpotent_fields;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t r = 0; r < static_cast<std::size_t>(d[i]); ++r)
      for (std::size_t c = 0; c < static_cast<std::size_t>(d[i]); ++c)
        if (r != c) nilpotent_fields.push_back(unit_vector_field(q, d, {i, r, c}));

  auto block_constant = [&](const std::vector<int>& w) {
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
      for (std::size_t t = slot_offset[i]; t < slot_offset[i + 1]; ++t)
        if (w[t] != w[slot_offset[i]]) return false;
    return true;
  };

  const RationalField k;
  MultiPoly rest = out.f;
  for (long deg = 1; deg <= rest.total_degree(); ++deg) {
    std::vector<MultiPoly::Monomial> monos;
    monomials_of_degree(vars, deg, monos);
    std::map<std::vector<int>, std::vector<MultiPoly::Monomial>> spaces;
    for (const auto& m : monos) {
      std::vector<int> w(slot_offset.back(), 0);
      for (std::size_t j = 0; j < vars; ++j)
        if (m[j])
          for (std::size_t t = 0; t < w.size(); ++t) w[t] += m[j] * coord_weight[j][t];
      if (block_constant(w)) spaces[w].push_back(m);
    }
    for (const auto& [w, basis] : spaces) {
      // Columns: basis monomials; rows: (field, image monomial) coefficients.
      std::map<std::pair<std::size_t, MultiPoly::Monomial>, std::size_t> row_index;
      std::vector<std::vector<std::pair<std::size_t, mpq_class>>> columns(basis.size());
      for (std::size_t b = 0; b < basis.size(); ++b) {
        MultiPoly mono(vars);
        mono.add_term(basis[b], 1);
        for (std::size_t f = 0; f < nilpotent_fields.size(); ++f) {
          const auto image = mono.derive(nilpotent_fields[f]);
          for (const auto& [m, c] : image.terms()) {
            auto [it, fresh] = row_index.emplace(std::make_pair(f, m), row_index.size());
            columns[b].push_back({it->second, c});
          }
        }
      }
      FieldMatrix<RationalField> sys(row_index.size(), basis.size(), k.zero());
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (const auto& [r, c] : columns[b]) sys(r, b) = c;
      const auto kernel = nullspace(k, sys);
      if (kernel.cols() == 0) continue;
      if (kernel.cols() > 1)
        throw Error("two independent semi-invariants of one character: the action has no open orbit");
      MultiPoly g(vars);
      for (std::size_t b = 0; b < basis.size(); ++b) g.add_term(basis[b], kernel(b, 0));
      SymbolicFactor factor{g, deg, 0};
      while (auto quotient = rest.divide_exact(g)) {
        rest = *quotient;
        ++factor.multiplicity;
      }
      if (factor.multiplicity > 0) out.factors.push_back(std::move(factor));
    }
  }
  if (rest.total_degree() != 0) throw Error("factorization left a non-constant cofactor " + rest.to_string());
  return out;
}

}  // namespace lfd
