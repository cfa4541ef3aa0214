#include "wtate/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace wtate {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int checked_int(std::int64_t v, const char* what) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw OverflowError(std::string(what) + " overflows");
  return static_cast<int>(v);
}

}  // namespace

WeightedRing::WeightedRing(std::vector<int> weights, PrimeField field, std::vector<std::string> names)
    : weights_(std::move(weights)), field_(field), names_(std::move(names)) {
  if (weights_.empty()) throw Error("weighted ring needs at least one variable");
  if (weights_.size() > 30) throw Error("at most 30 variables are supported");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) throw Error("variable weights must be positive");
    if (i > 0 && weights_[i] < weights_[i - 1]) throw Error("variable weights must be nondecreasing");
    total += weights_[i];
  }
  total_weight_ = checked_int(total, "total weight");
  if (names_.empty()) {
    for (std::size_t i = 0; i < weights_.size(); ++i) names_.push_back("x" + std::to_string(i));
  }
  if (names_.size() != weights_.size()) throw Error("number of variable names does not match weights");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<int> WeightedRing::var_index(std::string_view name) const {
  for (int i = 0; i < num_vars(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Monomial::Monomial(std::vector<int> e, int degree) : exps_(std::move(e)), degree_(degree) {
  std::int64_t t = 0;
  for (int x : exps_) t += x;
  total_ = checked_int(t, "monomial total degree");
}

Monomial::Monomial(std::vector<int> exponents, const std::vector<int>& weights)
    : exps_(std::move(exponents)) {
  if (exps_.size() != weights.size()) throw Error("monomial arity does not match ring");
  std::int64_t d = 0, t = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw Error("negative exponent");
    d += static_cast<std::int64_t>(exps_[i]) * weights[i];
    t += exps_[i];
    if (d > std::numeric_limits<int>::max()) throw OverflowError("monomial degree overflows");
  }
  degree_ = static_cast<int>(d);
  total_ = checked_int(t, "monomial total degree");
}

Monomial Monomial::variable(int i, const WeightedRing& R) {
  std::vector<int> e(R.num_vars(), 0);
  e[i] = 1;
  return Monomial(std::move(e), R.weight(i));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = checked_int(static_cast<std::int64_t>(exps_[i]) + other.exps_[i], "exponent");
  return Monomial(std::move(e), checked_int(static_cast<std::int64_t>(degree_) + other.degree_, "degree"));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
  return Monomial(std::move(e), degree_ - other.degree_);
}

Monomial Monomial::lcm(const Monomial& other, const std::vector<int>& weights) const {
  std::vector<int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e), weights);
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.num_vars() - 1; i >= 0; --i) {
    int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int weighted_degree(const Monomial& m, const WeightedRing& R) {
  std::int64_t d = 0;
  for (int i = 0; i < R.num_vars(); ++i) d += static_cast<std::int64_t>(m.exponent(i)) * R.weight(i);
  return checked_int(d, "weighted degree");
}

std::vector<Monomial> monomials_of_degree(const WeightedRing& R, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = R.num_vars();
  std::vector<int> e(n, 0);
  // Enumerate from the last variable down so that the result comes out in
  // descending grevlex order: smaller exponents of late variables first.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == 0) {
      if (remaining % R.weight(0) != 0) return;
      e[0] = remaining / R.weight(0);
      out.emplace_back(e, R.weights());
      e[0] = 0;
      return;
    }
    for (int k = 0; k * R.weight(i) <= remaining; ++k) {
      e[i] = k;
      self(self, i - 1, remaining - k * R.weight(i));
    }
    e[i] = 0;
  };
  rec(rec, n - 1, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(FieldElement c, int nvars) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(Monomial m, FieldElement c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const PrimeField& F) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

Polynomial Polynomial::add(const Polynomial& o, const PrimeField& F) const {
  Polynomial r;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElement s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::scale(FieldElement c, const PrimeField& F) const {
  Polynomial r;
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o, const PrimeField& F) const {
  return add(o.scale(F.neg(F.one()), F), F);
}

Polynomial Polynomial::mul(const Polynomial& o, const PrimeField& F) const {
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return from_terms(std::move(prod), F);
}

Polynomial Polynomial::pow(long e, const PrimeField& F, int nvars) const {
  Polynomial result = constant(F.one(), nvars);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result.mul(base, F);
    e >>= 1;
    if (e > 0) base = base.mul(base, F);
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string to_string(const Polynomial& f, const WeightedRing& R) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff.value != 1 || t.mono.is_one()) {
      os << t.coeff.value;
      wrote = true;
    }
    for (int i = 0; i < R.num_vars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (wrote) os << '*';
      os << R.name(i);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const WeightedRing& R) : s_(text), R_(R), F_(R.field()) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = acc.scale(F_.neg(F_.one()), F_);
    for (;;) {
      if (accept('+')) {
        acc = acc.add(term(), F_);
      } else if (accept('-')) {
        acc = acc.sub(term(), F_);
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc.mul(factor(), F_);
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a nonnegative integer literal");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 1'000'000) {
          pos_ = start;
          throw ParseError("exponent too large", start + 1);
        }
        ++pos_;
      }
      base = base.pow(e, F_, R_.num_vars());
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + (s_[pos_] - '0')) % F_.characteristic();
        ++pos_;
      }
      return Polynomial::constant(F_.normalize(v), R_.num_vars());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = R_.var_index(name);
      if (!idx) throw ParseError("unknown identifier '" + std::string(name) + "'", start + 1);
      return Polynomial::monomial(Monomial::variable(*idx, R_), F_.one());
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const WeightedRing& R_;
  PrimeField F_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const WeightedRing& R) { return PolyParser(text, R).parse(); }

}  // namespace wtate
