#include "sparsetrace/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sparsetrace/errors.hpp"

namespace sparsetrace {

Support make_support(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Support support_union(const Support& a, const Support& b) {
  std::vector<Point> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return make_support(std::move(all));
}

long total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0L);
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  Exponent e(arity, 0);
  e.at(index) = 1;
  return monomial(e);
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != arity_) throw DomainError("exponent length does not match arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.arity_ != arity_) throw DomainError("arity mismatch in addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.arity_ != arity_) throw DomainError("arity mismatch in subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) throw DomainError("arity mismatch in multiplication");
  Polynomial r(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= arity_) throw DomainError("derivative variable out of range");
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::shifted(const Exponent& shift) const {
  if (shift.size() != arity_) throw DomainError("shift length does not match arity");
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    for (std::size_t i = 0; i < arity_; ++i) s[i] += shift[i];
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw DomainError("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      long k = e[i];
      if (k == 0) continue;
      if (k < 0 && point[i] == 0) throw DomainError("division by zero in evaluation");
      Rational base = k > 0 ? point[i] : Rational(1) / point[i];
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::labs(k)));
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::labs(k)));
      term *= Rational(num, den);
    }
    total += term;
  }
  return total;
}

Support Polynomial::support() const {
  std::vector<Point> pts;
  pts.reserve(terms_.size());
  for (const auto& [e, c] : terms_) pts.push_back(e);
  return make_support(std::move(pts));
}

long Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

bool Polynomial::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (long v : e)
      if (v < 0) return true;
  return false;
}

Polynomial Polynomial::homogeneous_part(long d) const {
  Polynomial r(arity_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != arity_) throw DomainError("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(e.begin(), e.end(), [](long v) { return v == 0; });
    bool wrote = false;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << names[i];
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial result(vars_.size());
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [e, c] = parse_term();
      result.add_term(e, c * sign);
    }
    return result;
  }

 private:
  std::pair<Exponent, Rational> parse_term() {
    Exponent e(vars_.size(), 0);
    Rational c = 1;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) throw ParseError("expected a factor", pos_);
      char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
        long power = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          power = parse_exponent();
        }
        e[static_cast<std::size_t>(it - vars_.begin())] += power;
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {e, c};
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError("expected denominator", pos_);
      Integer den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError("zero denominator", dstart);
      Rational r(Integer(num), den);
      r.canonicalize();
      return r;
    }
    return Rational(Integer(num));
  }

  long parse_exponent() {
    skip_ws();
    bool paren = pos_ < text_.size() && text_[pos_] == '(';
    if (paren) ++pos_;
    skip_ws();
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return sign * v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::ostream& operator<<(std::ostream& out, const Polynomial& f) {
  return out << f.to_string(default_variable_names(f.arity()));
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return PolyParser(text, variables).parse();
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw DomainError("empty determinant");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  std::size_t arity = m[0][0].arity();
  if (n == 1) return m[0][0];
  Polynomial det(arity);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * polynomial_determinant(minor);
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

namespace {

void check_square(std::span<const Polynomial> system) {
  if (system.empty()) throw DomainError("empty system");
  for (const auto& f : system)
    if (f.arity() != system.size()) throw DomainError("system is not square");
}

}  // namespace

Polynomial jacobian(std::span<const Polynomial> system) {
  check_square(system);
  std::size_t n = system.size();
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(system[i].derivative(j));
  return polynomial_determinant(m);
}

Polynomial toric_jacobian(std::span<const Polynomial> system) {
  check_square(system);
  std::size_t n = system.size();
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(system[i].derivative(j) * Polynomial::variable(n, j));
  return polynomial_determinant(m);
}

Pencil::Pencil(Polynomial q, Polynomial p) : q_(std::move(q)), p_(std::move(p)) {
  if (q_.arity() != p_.arity()) throw DomainError("pencil arity mismatch");
}

Polynomial Pencil::at(const Rational& t) const { return q_ + p_ * t; }

}  // namespace sparsetrace
