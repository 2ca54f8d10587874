#include "sofic/metric/field_matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sofic {

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 97) throw std::invalid_argument("prime field needs a prime p <= 97, got " + std::to_string(p));
  return Field{p};
}

Rational Field::normalize(const Rational& x) const {
  if (is_rational()) return x;
  const std::int64_t pp = p;
  const BigInt num = boost::multiprecision::numerator(x) % pp;
  const BigInt den = boost::multiprecision::denominator(x) % pp;
  if (den == 0) throw std::domain_error("denominator divisible by the field characteristic");
  std::int64_t a = (num.convert_to<std::int64_t>() % pp + pp) % pp;
  std::int64_t b = (den.convert_to<std::int64_t>() % pp + pp) % pp;
  return Rational(a * mod_pow(b, pp - 2, pp) % pp);
}

Rational Field::inverse(const Rational& x) const {
  if (x == 0) throw std::domain_error("inverse of zero");
  if (is_rational()) return Rational(1) / x;
  const std::int64_t pp = p;
  return Rational(mod_pow(normalize(x).convert_to<std::int64_t>(), pp - 2, pp));
}

std::vector<Rational> Field::units() const {
  if (is_rational()) throw std::domain_error("the rationals are not enumerable");
  std::vector<Rational> out;
  for (std::uint32_t k = 1; k < p; ++k) out.emplace_back(k);
  return out;
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

FieldMatrix::FieldMatrix(std::size_t dim, Field field) : dim_(dim), field_(field), entries_(dim * dim, Rational(0)) {}

FieldMatrix FieldMatrix::identity(std::size_t dim, Field field) { return scalar(dim, field, 1); }

FieldMatrix FieldMatrix::scalar(std::size_t dim, Field field, const Rational& c) {
  FieldMatrix m(dim, field);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, c);
  return m;
}

FieldMatrix FieldMatrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  FieldMatrix m(rows.size(), field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, Rational(rows[i][j]));
  }
  return m;
}

FieldMatrix FieldMatrix::diagonal(Field field, const std::vector<std::int64_t>& diag) {
  FieldMatrix m(diag.size(), field);
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, Rational(diag[i]));
  return m;
}

void FieldMatrix::check_compatible(const FieldMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  if (!(field_ == o.field_)) throw std::invalid_argument("matrix field mismatch");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  check_compatible(o);
  FieldMatrix r(dim_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.normalize(entries_[k] + o.entries_[k]);
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  check_compatible(o);
  FieldMatrix r(dim_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.normalize(entries_[k] - o.entries_[k]);
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  check_compatible(o);
  FieldMatrix r(dim_, field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) r.entries_[i * dim_ + j] += a * o.at(k, j);
    }
  }
  for (auto& e : r.entries_) e = field_.normalize(e);
  return r;
}

FieldMatrix FieldMatrix::scaled(const Rational& c) const {
  FieldMatrix r(dim_, field_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = field_.normalize(entries_[k] * c);
  return r;
}

namespace {

/// Row-reduces in place; returns the rank and the determinant of the original.
std::pair<std::size_t, Rational> eliminate(std::vector<Rational>& a, std::size_t n, const Field& f) {
  std::size_t rank = 0;
  Rational det = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
      det = f.normalize(-det);
    }
    const Rational pv = a[rank * n + col];
    det = f.normalize(det * pv);
    const Rational inv = f.inverse(pv);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Rational factor = f.normalize(a[i * n + col] * inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) a[i * n + j] = f.normalize(a[i * n + j] - factor * a[rank * n + j]);
    }
    ++rank;
  }
  if (rank < n) det = 0;
  return {rank, det};
}

}  // namespace

std::size_t FieldMatrix::rank() const {
  auto a = entries_;
  return eliminate(a, dim_, field_).first;
}

Rational FieldMatrix::determinant() const {
  auto a = entries_;
  return eliminate(a, dim_, field_).second;
}

FieldMatrix FieldMatrix::inverse() const {
  const std::size_t n = dim_;
  std::vector<Rational> a = entries_;
  FieldMatrix inv = identity(n, field_);
  std::vector<Rational>& b = inv.entries_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular over " + field_.name());
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[pivot * n + j], a[col * n + j]);
      std::swap(b[pivot * n + j], b[col * n + j]);
    }
    const Rational pinv = field_.inverse(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = field_.normalize(a[col * n + j] * pinv);
      b[col * n + j] = field_.normalize(b[col * n + j] * pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rational factor = a[i * n + col];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] = field_.normalize(a[i * n + j] - factor * a[col * n + j]);
        b[i * n + j] = field_.normalize(b[i * n + j] - factor * b[col * n + j]);
      }
    }
  }
  return inv;
}

FieldMatrix kronecker(const FieldMatrix& a, const FieldMatrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kronecker: field mismatch");
  const std::size_t m = a.dim(), k = b.dim();
  FieldMatrix r(m * k, a.field());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (a.at(i, j) == 0) continue;
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) r.set(i * k + p, j * k + q, a.at(i, j) * b.at(p, q));
    }
  return r;
}

FieldMatrix block_diagonal(const std::vector<FieldMatrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == blocks.front().field())) throw std::invalid_argument("block_diagonal: field mismatch");
    total += b.dim();
  }
  FieldMatrix r(total, blocks.front().field());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) r.set(off + i, off + j, b.at(i, j));
    off += b.dim();
  }
  return r;
}

FieldMatrix hat(const FieldMatrix& a) { return block_diagonal({a, FieldMatrix::identity(a.dim(), a.field())}); }

FieldMatrix permutation_matrix(const Permutation& sigma, Field field) {
  FieldMatrix m(sigma.degree(), field);
  for (std::uint32_t j = 0; j < sigma.degree(); ++j) m.set(sigma(j), j, 1);
  return m;
}

Rational rank_distance(const FieldMatrix& m, const FieldMatrix& n) {
  return Rational(BigInt((m - n).rank()), BigInt(m.dim()));
}

std::vector<Rational> characteristic_polynomial(const FieldMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const std::size_t n = m.dim();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  FieldMatrix mk(n, m.field());
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + FieldMatrix::scalar(n, m.field(), c[n - k + 1]);
    const FieldMatrix amk = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk.at(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<BigInt> divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> ds;
  for (BigInt d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      ds.push_back(d);
      if (d * d != v) ds.push_back(v / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() <= 1) return roots;
  BigInt lcm = 1;
  for (const auto& x : c) {
    const BigInt d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<BigInt> ints;
  for (const auto& x : c) ints.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
  const BigInt limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) {
    throw std::domain_error("characteristic polynomial coefficients too large for rational root search");
  }
  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = ints.size(); i-- > 0;) acc = acc * x + Rational(ints[i]);
    return acc;
  };
  for (const auto& p : divisors(ints.front())) {
    for (const auto& q : divisors(ints.back())) {
      for (int s : {1, -1}) {
        const Rational x(p * s, q);
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational pseudo_rank_distance(const FieldMatrix& m, const FieldMatrix& n) {
  if (m.dim() != n.dim() || !(m.field() == n.field())) throw std::invalid_argument("pseudo_rank_distance: shape mismatch");
  std::vector<Rational> candidates;
  if (m.field().is_rational()) {
    for (const auto& r : rational_roots(characteristic_polynomial(m * n.inverse()))) {
      if (r != 0) candidates.push_back(r);
    }
  } else {
    candidates = m.field().units();
  }
  std::size_t best = m.dim();
  for (const auto& lambda : candidates) best = std::min(best, (m - n.scaled(lambda)).rank());
  return Rational(BigInt(best), BigInt(m.dim()));
}

std::vector<FieldMatrix> general_linear_group(std::size_t n, Field field) {
  if (field.is_rational()) throw std::domain_error("GL_n(Q) is infinite");
  const std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= field.p;
    if (total > (std::size_t{1} << 22)) throw std::domain_error("GL_n(F_p) enumeration too large");
  }
  std::vector<FieldMatrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    FieldMatrix m(n, field);
    std::size_t c = code;
    for (std::size_t k = 0; k < cells; ++k) {
      m.set(k / n, k % n, Rational(static_cast<long>(c % field.p)));
      c /= field.p;
    }
    if (m.invertible()) out.push_back(std::move(m));
  }
  return out;
}

void to_json(nlohmann::json& j, const Field& f) {
  if (f.is_rational()) {
    j = "Q";
  } else {
    j = {{"p", f.p}};
  }
}

void from_json(const nlohmann::json& j, Field& f) {
  if (j.is_string() && j.get<std::string>() == "Q") {
    f = Field::rationals();
  } else if (j.is_object() && j.contains("p") && j["p"].is_number_unsigned()) {
    f = Field::prime(j["p"].get<std::uint32_t>());
  } else {
    throw std::invalid_argument("field must be \"Q\" or {\"p\": prime}");
  }
}

void to_json(nlohmann::json& j, const FieldMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) {
      const Rational& v = m.at(i, k);
      if (boost::multiprecision::denominator(v) == 1) {
        row.push_back(boost::multiprecision::numerator(v).convert_to<std::int64_t>());
      } else {
        row.push_back(rational_to_json(v));
      }
    }
    rows.push_back(std::move(row));
  }
  j = {{"field", m.field()}, {"rows", rows}};
}

FieldMatrix field_matrix_from_json(const nlohmann::json& j) {
  const Field f = j.at("field").get<Field>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("\"rows\" must be a non-empty array");
  FieldMatrix m(rows.size(), f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t k = 0; k < rows.size(); ++k) m.set(i, k, rational_from_json(rows[i][k]));
  }
  return m;
}

}  // namespace sofic
