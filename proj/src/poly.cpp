#include "mfkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mfkit {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("VarTable: empty variable name");
    if (!seen.insert(n).second) throw Error("VarTable: duplicate variable " + n);
  }
}

std::shared_ptr<const VarTable> VarTable::standard() {
  static auto t = std::make_shared<const VarTable>(
      std::vector<std::string>{"Y1", "Y2", "Y3", "Y4"});
  return t;
}

int VarTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind == OrderKind::lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex: degree first, ties by the rightmost nonzero difference,
  // smaller exponent there wins.
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Poly Poly::constant(VarTablePtr table, CycNum c) {
  Poly p(std::move(table));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.table_->size(), 0), std::move(c));
  return p;
}

Poly Poly::variable(VarTablePtr table, std::size_t i, int exp) {
  Poly p(std::move(table));
  if (i >= p.table_->size()) throw Error("Poly: variable index out of range");
  if (exp < 0) throw Error("Poly: negative exponent");
  Exponents e(p.table_->size(), 0);
  e[i] = exp;
  p.terms_.emplace(std::move(e), CycNum(1));
  return p;
}

Poly Poly::term(VarTablePtr table, Exponents e, CycNum c) {
  Poly p(std::move(table));
  if (e.size() != p.table_->size()) throw Error("Poly: bad exponent vector size");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

CycNum Poly::constant_value() const {
  if (terms_.empty()) return CycNum(0);
  if (!is_constant()) throw Error("Poly: not a constant");
  return terms_.begin()->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

bool Poly::uses_var(std::size_t v) const {
  for (const auto& [e, c] : terms_)
    if (e[v] != 0) return true;
  return false;
}

CycNum Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void Poly::add_term(const Exponents& e, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_same_table(const Poly& other) const {
  if (table_ == other.table_) return;
  if (!table_ || !other.table_ || !(*table_ == *other.table_))
    throw Error("Poly: variable-table mismatch");
}

Poly operator+(const Poly& p, const Poly& q) {
  p.check_same_table(q);
  Poly r = p;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& p, const Poly& q) {
  p.check_same_table(q);
  Poly r = p;
  for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
  return r;
}

Poly operator-(const Poly& p) {
  Poly r(p.table_);
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  p.check_same_table(q);
  Poly r(p.table_);
  Exponents e(p.table_ ? p.table_->size() : 0, 0);
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

Poly operator*(const CycNum& c, const Poly& p) {
  Poly r(p.table_);
  if (c.is_zero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(table_, CycNum(1));
  Poly base = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

Poly Poly::substitute(const std::map<std::size_t, Poly>& assignments) const {
  for (const auto& [v, q] : assignments) {
    if (v >= table_->size()) throw Error("substitute: variable index out of range");
    check_same_table(q);
  }
  Poly result(table_);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(table_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = assignments.find(i);
      Poly base = it != assignments.end() ? it->second : Poly::variable(table_, i);
      term = term * base.pow(static_cast<unsigned>(e[i]));
    }
    result = result + term;
  }
  return result;
}

std::vector<Poly> Poly::coeff_decompose(std::size_t v) const {
  if (v >= table_->size()) throw Error("coeff_decompose: variable index out of range");
  int maxpow = 0;
  for (const auto& [e, c] : terms_) maxpow = std::max(maxpow, e[v]);
  std::vector<Poly> out(static_cast<std::size_t>(maxpow) + 1, Poly(table_));
  for (const auto& [e, c] : terms_) {
    Exponents stripped = e;
    int k = stripped[v];
    stripped[v] = 0;
    out[static_cast<std::size_t>(k)].add_term(stripped, c);
  }
  return out;
}

static bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::optional<Poly> Poly::exact_div(const Poly& q) const {
  check_same_table(q);
  if (q.is_zero()) throw Error("exact_div: division by zero polynomial");
  MonomialOrder order{OrderKind::grevlex};
  const Exponents& lq = q.leading_exponents(order);
  const CycNum lqc_inv = q.leading_coeff(order).inv();
  Poly rem = *this;
  Poly quot(table_);
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents(order);
    if (!divides(lq, lr)) return std::nullopt;
    Exponents shift(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) shift[i] = lr[i] - lq[i];
    CycNum c = rem.leading_coeff(order) * lqc_inv;
    Poly t = Poly::term(table_, shift, c);
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

const Exponents& Poly::leading_exponents(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("Poly: leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best->first;
}

const CycNum& Poly::leading_coeff(const MonomialOrder& order) const {
  return terms_.at(leading_exponents(order));
}

std::string monomial_str(const VarTable& table, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += table.name(i);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string Poly::str(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, CycNum>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
  std::string s;
  for (auto* t : sorted) {
    std::string coef = t->second.str();
    std::string mono = monomial_str(*table_, t->first);
    std::string piece;
    if (mono.empty()) {
      piece = coef;
    } else if (coef == "1") {
      piece = mono;
    } else if (coef == "-1") {
      piece = "-" + mono;
    } else {
      piece = coef + "*" + mono;
    }
    if (s.empty()) {
      s = piece;
    } else if (piece[0] == '-') {
      s += "-" + piece.substr(1);
    } else {
      s += "+" + piece;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, VarTablePtr table)
      : text_(text), table_(std::move(table)) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expression() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      Int k = integer();
      if (k < 0 || k > 1000) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expression();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (eat('/')) {
        Int den = integer();
        if (den == 0) fail("zero denominator");
        return Poly::constant(table_, CycNum(Rat(num, den)));
      }
      return Poly::constant(table_, CycNum(Rat(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (name == "e") return Poly::constant(table_, CycNum::eps());
      int idx = table_->index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return Poly::variable(table_, static_cast<std::size_t>(idx));
    }
    fail("expected a factor");
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected an integer");
    return Int(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  const std::string& text_;
  VarTablePtr table_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text, VarTablePtr table) {
  return Parser(text, std::move(table)).parse();
}

Poly f4(const VarTablePtr& table) {
  Poly p(table);
  for (int i = 1; i <= 4; ++i) {
    int idx = table->index("Y" + std::to_string(i));
    if (idx < 0) throw Error("f4: table lacks Y" + std::to_string(i));
    p = p + Poly::variable(table, static_cast<std::size_t>(idx), 3);
  }
  return p;
}

}  // namespace mfkit
