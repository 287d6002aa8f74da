#include "ruled/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace ruled::sym {

Expr Expr::atom(std::string gen, GroupWord w, bool conj, bool scalar, int exp) {
  Expr e;
  if (exp != 0) e.pows_[Atom{std::move(gen), scalar ? kId : w, conj, scalar}] = exp;
  return e;
}

Expr Expr::constant(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Expr e;
  e.sign_ = sign;
  return e;
}

Expr Expr::operator*(const Expr& o) const {
  Expr r;
  r.sign_ = sign_ * o.sign_;
  r.pows_ = pows_;
  for (const auto& [a, k] : o.pows_) {
    int& e = r.pows_[a];
    e += k;
    if (e == 0) r.pows_.erase(a);
  }
  return r;
}

Expr Expr::operator-() const {
  Expr r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Expr Expr::inverse() const {
  Expr r;
  r.sign_ = sign_;  // (+-1)^-1 = +-1
  for (const auto& [a, k] : pows_) r.pows_[a] = -k;
  return r;
}

Expr Expr::conjugate() const {
  Expr r;
  r.sign_ = sign_;  // signs are real
  for (const auto& [a, k] : pows_) {
    Atom b = a;
    b.conj = !b.conj;
    r.pows_[b] = k;
  }
  return r;
}

Expr Expr::precompose(GroupWord sigma) const {
  Expr r;
  r.sign_ = sign_;
  for (const auto& [a, k] : pows_) {
    Atom b = a;
    if (!b.scalar) b.word = b.word * sigma;
    r.pows_[b] += k;
    if (r.pows_[b] == 0) r.pows_.erase(b);
  }
  return r;
}

Expr Expr::pow(int e) const {
  Expr r;
  r.sign_ = (sign_ == -1 && e % 2 != 0) ? -1 : 1;
  if (e != 0)
    for (const auto& [a, k] : pows_) r.pows_[a] = k * e;
  return r;
}

int Expr::total_degree() const {
  int d = 0;
  for (const auto& [a, k] : pows_) d += std::abs(k);
  return d;
}

bool Expr::operator<(const Expr& o) const {
  int da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  if (pows_ != o.pows_) return pows_ < o.pows_;
  return sign_ > o.sign_;  // +1 is simpler than -1
}

std::string Expr::str() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  if (pows_.empty()) {
    os << "1";
    return os.str();
  }
  bool first = true;
  for (const auto& [a, k] : pows_) {
    if (!first) os << "*";
    first = false;
    if (a.conj) os << "conj(";
    os << a.gen;
    if (a.word.cb || a.word.phi) {
      os << "@";
      if (a.word.cb) os << "cb";
      if (a.word.phi) os << "phi";
    }
    if (a.conj) os << ")";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

bool divides(const Expr& e, const Expr& lhs) {
  for (const auto& [a, k] : lhs.powers()) {
    auto it = e.powers().find(a);
    if (it == e.powers().end()) return false;
    int m = it->second;
    if (k > 0 ? m < k : m > k) return false;
  }
  return true;
}

}  // namespace

RewriteSystem::RewriteSystem(const std::vector<Hypothesis>& hyps, int step_budget)
    : budget_(step_budget) {
  const GroupWord words[] = {kId, kCb, kPhi, kCbPhi};
  for (const auto& h : hyps) {
    for (GroupWord sigma : words) {
      for (bool cj : {false, true}) {
        for (bool inv : {false, true}) {
          Expr l = h.lhs.precompose(sigma);
          Expr r = h.rhs.precompose(sigma);
          if (cj) {
            l = l.conjugate();
            r = r.conjugate();
          }
          if (inv) {
            l = l.inverse();
            r = r.inverse();
          }
          if (l.powers() == r.powers()) continue;  // trivial or sign-only
          if (l < r) std::swap(l, r);              // orient: rewrite toward simpler
          Hypothesis inst{l, r};
          if (inst.lhs.powers().empty()) continue;  // never rewrite by a constant
          if (std::find(rules_.begin(), rules_.end(), inst) == rules_.end())
            rules_.push_back(inst);
        }
      }
    }
  }
}

Expr RewriteSystem::normal_form(const Expr& e) const {
  Expr cur = e;
  int steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules_) {
      if (divides(cur, rule.lhs)) {
        if (++steps > budget_) throw NonTermination("rewriting exceeded step budget");
        cur = rule.rhs * cur * rule.lhs.inverse();
        changed = true;
        break;
      }
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------

ChartMap ChartMap::identity() {
  ChartMap m;
  m.m[0][0] = Expr{};
  m.m[1][1] = Expr{};
  return m;
}

ChartMap ChartMap::diagonal(Expr a, Expr d, GroupWord base, bool antiholo) {
  ChartMap m;
  m.base = base;
  m.antiholo = antiholo;
  m.m[0][0] = std::move(a);
  m.m[1][1] = std::move(d);
  return m;
}

ChartMap ChartMap::antidiagonal(Expr b, Expr c, GroupWord base, bool antiholo) {
  ChartMap m;
  m.base = base;
  m.antiholo = antiholo;
  m.m[0][1] = std::move(b);
  m.m[1][0] = std::move(c);
  return m;
}

namespace {

std::optional<Expr> mul_opt(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

std::optional<Expr> add_opt(const std::optional<Expr>& a, const std::optional<Expr>& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->powers() == b->powers()) {
    if (a->sign() != b->sign()) return std::nullopt;  // cancellation
    throw std::domain_error("compose: sum of equal monomials is not representable");
  }
  throw std::domain_error("compose: non-monomial matrix entry");
}

}  // namespace

ChartMap compose(const ChartMap& a, const ChartMap& b) {
  ChartMap r;
  r.base = a.base * b.base;
  r.antiholo = a.antiholo != b.antiholo;
  auto lhs = [&](int i, int k) -> std::optional<Expr> {
    if (!a.m[i][k]) return std::nullopt;
    return a.m[i][k]->precompose(b.base);
  };
  auto rhs = [&](int k, int j) -> std::optional<Expr> {
    if (!b.m[k][j]) return std::nullopt;
    return a.antiholo ? b.m[k][j]->conjugate() : *b.m[k][j];
  };
  bool any = false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r.m[i][j] = add_opt(mul_opt(lhs(i, 0), rhs(0, j)), mul_opt(lhs(i, 1), rhs(1, j)));
      any = any || r.m[i][j].has_value();
    }
  if (!any) throw std::domain_error("compose: identically-zero matrix");
  return r;
}

ChartMap inverse(const ChartMap& m) {
  auto transform = [&](const Expr& e) {
    Expr t = e.inverse().precompose(m.base);
    return m.antiholo ? t.conjugate() : t;
  };
  ChartMap r;
  r.base = m.base;  // generators are involutions
  r.antiholo = m.antiholo;
  const bool diag = m.m[0][0] && m.m[1][1] && !m.m[0][1] && !m.m[1][0];
  const bool anti = !m.m[0][0] && !m.m[1][1] && m.m[0][1] && m.m[1][0];
  if (diag) {
    r.m[0][0] = transform(*m.m[0][0]);
    r.m[1][1] = transform(*m.m[1][1]);
  } else if (anti) {
    r.m[0][1] = transform(*m.m[1][0]);
    r.m[1][0] = transform(*m.m[0][1]);
  } else {
    throw std::domain_error("inverse: matrix is not monomial-shaped");
  }
  return r;
}

bool is_projective_identity(const ChartMap& m, const std::vector<Hypothesis>& hyps) {
  if (!m.base.is_identity() || m.antiholo)
    throw std::invalid_argument("is_projective_identity requires a holomorphic map over id");
  if (m.m[0][1] || m.m[1][0]) return false;
  if (!m.m[0][0] || !m.m[1][1]) return false;
  RewriteSystem rs(hyps);
  return rs.normal_form(*m.m[0][0] * m.m[1][1]->inverse()).is_one();
}

bool projectively_equal(const ChartMap& m, const ChartMap& target,
                        const std::vector<Hypothesis>& hyps) {
  if (m.base != target.base || m.antiholo != target.antiholo) return false;
  std::vector<Expr> ratios;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (m.m[i][j].has_value() != target.m[i][j].has_value()) return false;
      if (m.m[i][j]) ratios.push_back(*m.m[i][j] * target.m[i][j]->inverse());
    }
  if (ratios.empty()) return false;
  RewriteSystem rs(hyps);
  for (size_t i = 1; i < ratios.size(); ++i)
    if (!rs.normal_form(ratios[0].inverse() * ratios[i]).is_one()) return false;
  return true;
}

bool verify_involution(const ChartMap& c, const std::vector<Hypothesis>& hyps) {
  return is_projective_identity(compose(c, c), hyps);
}

bool verify_conjugation(const ChartMap& phi, const ChartMap& cminus, const ChartMap& cplus,
                        const std::vector<Hypothesis>& hyps) {
  return projectively_equal(compose(inverse(phi), compose(cminus, phi)), cplus, hyps);
}

StructureSign step2_conjugation_target(int d_sign) {
  if (d_sign == 0) throw std::invalid_argument("d must be a nonzero real scalar");
  Expr d = Expr::atom("d", kId, false, true);
  Expr delta = Expr::atom("delta", kId, false, true);
  std::vector<Hypothesis> hyps{
      {d.conjugate(), d},          // d real
      {delta.conjugate(), delta},  // delta real
      {delta.pow(2) * d, Expr::constant(d_sign > 0 ? 1 : -1)},  // delta^2 = 1/|d|
  };
  ChartMap big_phi = ChartMap::diagonal(Expr{}, d);
  ChartMap psi = ChartMap::diagonal(Expr{}, delta);
  ChartMap conjugated = compose(inverse(psi), compose(compose(charts::c_plus(), big_phi), psi));
  if (projectively_equal(conjugated, charts::c_plus(), hyps)) return StructureSign::Plus;
  if (projectively_equal(conjugated, charts::c_minus(), hyps)) return StructureSign::Minus;
  throw std::logic_error("step-2 normalization matched neither structure");
}

bool verify_step2_normalization(int d_sign) {
  return step2_conjugation_target(d_sign) ==
         (d_sign > 0 ? StructureSign::Plus : StructureSign::Minus);
}

int gluing_exponent(bool projective, int n_i, int n_cb_pi) {
  return projective ? -n_cb_pi - n_i : n_cb_pi - n_i;
}

namespace charts {

Expr f(GroupWord w, bool conj) { return Expr::atom("f", w, conj); }

ChartMap c_plus() {
  return ChartMap::antidiagonal(Expr{}, f(kCb), kCb, /*antiholo=*/true);
}

ChartMap c_minus() {
  return ChartMap::antidiagonal(Expr{}, -f(kCb), kCb, /*antiholo=*/true);
}

ChartMap phi_g() {
  return ChartMap::diagonal(Expr::atom("g", kPhi), Expr{}, kPhi);
}

ChartMap phi_h() {
  return ChartMap::antidiagonal(Expr{}, Expr::atom("h", kPhi), kPhi);
}

ChartMap phi_lambda() {
  Expr lambda = Expr::atom("lambda", kId, false, true);
  Expr s = Expr::atom("s");
  return ChartMap::antidiagonal(lambda * s, s);
}

Hypothesis f_reality() { return {f(), f(kCb, true)}; }

Hypothesis case_a(int sign) {
  Expr lhs = f(kPhi) * Expr::atom("g", kPhi) * Expr::atom("g", kCbPhi, true);
  return {lhs, Expr::constant(sign) * f()};
}

Hypothesis case_b(int sign) {
  Expr lhs = Expr::atom("h", kPhi) * Expr::atom("h", kCbPhi, true);
  return {lhs, Expr::constant(sign) * f() * f(kPhi)};
}

}  // namespace charts

}  // namespace ruled::sym
