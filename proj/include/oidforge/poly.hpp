#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace oidforge {

using Q = mpq_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

inline constexpr int kMaxVars = 16;

struct Mono {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  friend bool operator==(const Mono&, const Mono&) = default;
  bool divides(const Mono& o) const;
  static Mono var(int i, int power = 1);
};

Mono operator*(const Mono& a, const Mono& b);
Mono operator/(const Mono& a, const Mono& b);  // requires b | a
Mono lcm(const Mono& a, const Mono& b);
bool coprime(const Mono& a, const Mono& b);

enum class OrderKind { grevlex, lex };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  // Variable indices from most to least significant; empty means input order.
  std::vector<int> priority;

  int compare(const Mono& a, const Mono& b, int nvars) const;
  static MonomialOrder parse(const std::string& name);
  std::string name() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

struct Term {
  Mono m;
  Q c;
};

class Ring;
class Poly;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(std::vector<std::string> vars, MonomialOrder order = {});
  // O/I for I generated by `ideal` (polynomials of `base`, which must not itself be a quotient).
  static RingPtr quotient(const RingPtr& base, const std::vector<Poly>& ideal);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }
  bool is_quotient() const { return base_ != nullptr; }
  RingPtr base() const;
  // Reduced Groebner basis of the quotient ideal, as polynomials of base().
  const std::vector<Poly>& ideal_basis() const { return ideal_; }
  bool is_zero_ring() const;
  int var_index(const std::string& name) const;
  int cmp(const Mono& a, const Mono& b) const { return order_.compare(a, b, nvars()); }
  bool same(const Ring& o) const;
  RingPtr with_order(const MonomialOrder& order) const;

 private:
  Ring() = default;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  RingPtr base_;
  std::vector<Poly> ideal_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}

  static Poly constant(const RingPtr& r, const Q& c);
  static Poly variable(const RingPtr& r, int i);
  static Poly monomial(const RingPtr& r, const Mono& m, const Q& c);
  // Sorts, merges duplicates and reduces modulo the quotient ideal.
  static Poly from_terms(const RingPtr& r, std::vector<Term> terms);
  static Poly parse(const RingPtr& r, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& lead() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Q& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly derivative(int var) const;
  Q evaluate(const std::vector<Q>& point) const;
  // The same terms viewed in the base polynomial ring.
  Poly lift() const;
  // The same terms viewed in `r` (reduced if `r` is a quotient).
  Poly in_ring(const RingPtr& r) const;
  // this - c*m*g, with g in the same base ring; no quotient reduction.
  void sub_mul_term(const Q& c, const Mono& m, const Poly& g);
  std::string str() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;  // strictly decreasing in the ring order
};

struct Division {
  Poly remainder;
  std::vector<Poly> cofactors;
};

// Full reduction of f by basis in the polynomial ring of f (quotient operands are lifted).
// Among possible reducers the lowest basis index wins.
Division normal_form_with_cofactors(const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);
Poly s_polynomial(const Poly& f, const Poly& g);
// Reduced Groebner basis (monic, sorted by increasing leading monomial).
std::vector<Poly> groebner(const std::vector<Poly>& gens);
std::vector<Poly> groebner(const std::vector<Poly>& gens, const MonomialOrder& order);
bool is_groebner(const std::vector<Poly>& basis);
Poly univariate_gcd(const Poly& a, const Poly& b, int var);
// Exact division of a by b (remainder must vanish); returns quotient.
Poly divide_exact(const Poly& a, const Poly& b);

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Poly> coeff) : coeff_(std::move(coeff)) {}
  static VectorField zero(const RingPtr& r);
  static VectorField partial(const RingPtr& r, int var, const Poly& f);  // f * d/dx_var

  int dim() const { return static_cast<int>(coeff_.size()); }
  const Poly& operator[](int a) const { return coeff_[a]; }
  Poly& operator[](int a) { return coeff_[a]; }
  const std::vector<Poly>& coeff() const { return coeff_; }
  bool is_zero() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& f, const VectorField& X);
  friend bool operator==(const VectorField& a, const VectorField& b);
  std::string str() const;

 private:
  std::vector<Poly> coeff_;
};

Poly apply_vf(const VectorField& X, const Poly& f);
VectorField commutator(const VectorField& X, const VectorField& Y);

}  // namespace oidforge
