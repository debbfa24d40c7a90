#include "hopfcqt/scalar.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "hopfcqt/error.hpp"

namespace hopfcqt {

namespace {

struct Field {
  unsigned n = 1;
  unsigned degree = 1;
  std::vector<long> phi;                 // Phi_n, low to high, monic
  std::vector<std::vector<long>> power;  // x^e mod Phi_n
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return q;
}

std::unique_ptr<Field> build_field(unsigned n, const std::map<unsigned, std::unique_ptr<Field>>& known);

std::mutex g_field_mutex;
std::map<unsigned, std::unique_ptr<Field>> g_fields;

const Field& field_locked(unsigned n) {
  auto it = g_fields.find(n);
  if (it != g_fields.end()) return *it->second;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) field_locked(d);
  auto f = build_field(n, g_fields);
  const Field& ref = *f;
  g_fields.emplace(n, std::move(f));
  return ref;
}

std::unique_ptr<Field> build_field(unsigned n, const std::map<unsigned, std::unique_ptr<Field>>& known) {
  auto f = std::make_unique<Field>();
  f->n = n;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, known.at(d)->phi);
  f->phi = p;
  f->degree = static_cast<unsigned>(p.size() - 1);
  std::size_t len = std::max<std::size_t>(n, 2 * f->degree) + 1;
  std::vector<long> cur(f->degree, 0);
  cur[0] = 1;
  f->power.reserve(len);
  for (std::size_t e = 0; e < len; ++e) {
    f->power.push_back(cur);
    // multiply by x
    std::vector<long> next(f->degree, 0);
    long top = cur[f->degree - 1];
    for (unsigned k = f->degree - 1; k > 0; --k) next[k] = cur[k - 1];
    next[0] = 0;
    if (top != 0)
      for (unsigned k = 0; k < f->degree; ++k) next[k] -= top * f->phi[k];
    cur = std::move(next);
  }
  return f;
}

const Field& field(unsigned n) {
  std::lock_guard<std::mutex> lock(g_field_mutex);
  return field_locked(n);
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Scalar::Scalar() : order_(1), c_(1) {}
Scalar::Scalar(long n) : order_(1), c_{mpq_class(n)} {}
Scalar::Scalar(const mpq_class& q) : order_(1), c_{q} {}
Scalar::Scalar(unsigned order, std::vector<mpq_class> c) : order_(order), c_(std::move(c)) {
  normalize();
}

Scalar Scalar::rational(long p, long q) {
  if (q == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::root_of_unity(long n, long j) {
  if (n < 1) throw InvalidArgument("root_of_unity needs N >= 1");
  j = mod_pos(j, n);
  long g = std::gcd(j, n);
  if (j == 0) return Scalar(1);
  n /= g;
  j /= g;
  if (n == 2) return Scalar(-1);
  bool negate = false;
  if (n % 4 == 2) {
    // zeta_{2m}^j = (-1)^j zeta_m^{j(m+1)/2}
    long m = n / 2;
    negate = (j % 2) == 1;
    j = mod_pos(j * ((m + 1) / 2), m);
    n = m;
  }
  const Field& f = field(static_cast<unsigned>(n));
  std::vector<mpq_class> c(f.degree);
  const auto& pw = f.power[static_cast<std::size_t>(j)];
  for (unsigned k = 0; k < f.degree; ++k) c[k] = negate ? -pw[k] : pw[k];
  return Scalar(static_cast<unsigned>(n), std::move(c));
}

void Scalar::normalize() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return;
  c_.resize(1);
  order_ = 1;
}

std::vector<mpq_class> Scalar::embedded(unsigned m) const {
  if (m == order_) return c_;
  const Field& f = field(m);
  std::vector<mpq_class> out(f.degree);
  unsigned step = m / order_;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& pw = f.power[k * step];
    for (unsigned i = 0; i < f.degree; ++i)
      if (pw[i] != 0) out[i] += c_[k] * pw[i];
  }
  return out;
}

bool Scalar::is_zero() const { return order_ == 1 && c_[0] == 0; }
bool Scalar::is_one() const { return order_ == 1 && c_[0] == 1; }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == o.order_) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  } else if (o.order_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  } else {
    unsigned m = lcm_u(order_, o.order_);
    auto a = embedded(m);
    auto b = o.embedded(m);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    order_ = m;
    c_ = std::move(a);
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.order_ == 1) {
    if (o.c_[0] == 0) return *this = Scalar();
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (order_ == 1) {
    mpq_class s = c_[0];
    if (s == 0) return *this;
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  unsigned m = lcm_u(order_, o.order_);
  const Field& f = field(m);
  auto a = embedded(m);
  auto b = o.embedded(m);
  std::vector<mpq_class> prod(2 * f.degree - 1);
  for (unsigned i = 0; i < f.degree; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < f.degree; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  std::vector<mpq_class> out(f.degree);
  for (std::size_t e = 0; e < prod.size(); ++e) {
    if (prod[e] == 0) continue;
    if (e < f.degree) {
      out[e] += prod[e];
      continue;
    }
    const auto& pw = f.power[e];
    for (unsigned i = 0; i < f.degree; ++i)
      if (pw[i] != 0) out[i] += prod[e] * pw[i];
  }
  order_ = m;
  c_ = std::move(out);
  normalize();
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (order_ == 1) return Scalar(mpq_class(1) / c_[0]);
  // Solve (x * y) = 1 via the multiplication matrix of x.
  unsigned d = static_cast<unsigned>(c_.size());
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1));
  for (unsigned k = 0; k < d; ++k) {
    Scalar basis(order_, [&] {
      std::vector<mpq_class> e(d);
      e[k] = 1;
      return e;
    }());
    Scalar col = *this * basis;
    auto v = col.embedded(order_);
    for (unsigned i = 0; i < d; ++i) a[i][k] = v[i];
  }
  a[0][d] = 1;
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    mpq_class s = a[col][col];
    for (unsigned j = col; j <= d; ++j) a[col][j] /= s;
    for (unsigned r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class t = a[r][col];
      for (unsigned j = col; j <= d; ++j) a[r][j] -= t * a[col][j];
    }
  }
  std::vector<mpq_class> y(d);
  for (unsigned i = 0; i < d; ++i) y[i] = a[i][d];
  return Scalar(order_, std::move(y));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // normalized: non-rational vs rational
  unsigned m = lcm_u(a.order_, b.order_);
  return a.embedded(m) == b.embedded(m);
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> z = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < c_.size(); ++k)
    z += c_[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / order_);
  return z;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const mpq_class& q = c_[k];
    if (q == 0) continue;
    std::string term;
    if (k == 0) {
      term = q.get_str();
    } else {
      std::string z = "zeta(" + std::to_string(order_) + "," + std::to_string(k) + ")";
      if (q == 1)
        term = z;
      else if (q == -1)
        term = "-" + z;
      else
        term = q.get_str() + "*" + z;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar literal '" + std::string(s_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }
  Scalar factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after zeta");
      long n = integer();
      if (!eat(',')) fail("expected ','");
      long j = integer();
      if (!eat(')')) fail("expected ')'");
      if (n < 1) fail("zeta order must be positive");
      return Scalar::root_of_unity(n, j);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class q(std::string(s_.substr(start, pos_ - start)));
      q.canonicalize();
      return Scalar(q);
    }
    fail("expected number, zeta(N,j) or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  try {
    return LiteralParser(text).run();
  } catch (const DivisionByZero&) {
    throw ParseError("scalar literal '" + std::string(text) + "': division by zero");
  }
}

std::optional<std::pair<unsigned, unsigned>> root_of_unity_exponent(const Scalar& x) {
  if (x.is_rational()) {
    if (x.is_one()) return std::make_pair(1u, 0u);
    if (x == Scalar(-1)) return std::make_pair(2u, 1u);
    return std::nullopt;
  }
  unsigned n = x.order();
  unsigned b = (n % 2 == 1) ? 2 * n : n;
  for (unsigned j = 1; j < b; ++j) {
    if (x == Scalar::root_of_unity(b, j)) {
      unsigned g = std::gcd(j, b);
      return std::make_pair(b / g, j / g);
    }
  }
  return std::nullopt;
}

Scalar sqrt_root_of_unity(const Scalar& x) {
  auto e = root_of_unity_exponent(x);
  if (!e) throw NotARootOfUnity(x.to_string());
  return Scalar::root_of_unity(2 * static_cast<long>(e->first), e->second);
}

std::vector<Scalar> nth_roots(const Scalar& x, unsigned n) {
  auto e = root_of_unity_exponent(x);
  if (!e) throw NotARootOfUnity(x.to_string());
  std::vector<Scalar> out;
  long m = e->first;
  for (unsigned k = 0; k < n; ++k)
    out.push_back(Scalar::root_of_unity(static_cast<long>(n) * m, e->second + m * k));
  return out;
}

}  // namespace hopfcqt
