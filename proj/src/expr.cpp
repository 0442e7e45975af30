#include "qn/expr.hpp"

#include <cctype>
#include <sstream>

#include "qn/braid.hpp"
#include "qn/integral.hpp"

namespace qn {

bool operator==(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.value != b.value || a.kind != b.kind || a.idx != b.idx || a.name != b.name ||
      a.flags != b.flags || a.flag != b.flag || a.kids.size() != b.kids.size())
    return false;
  for (size_t k = 0; k < a.kids.size(); ++k)
    if (!(*a.kids[k] == *b.kids[k])) return false;
  return true;
}

namespace {

using Op = Expr::Op;

std::shared_ptr<Expr> node(Op op) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  return e;
}

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::E: return "E";
    case GenKind::F: return "F";
    case GenKind::Eb: return "Eb";
    case GenKind::Fb: return "Fb";
    case GenKind::K: return "K";
    case GenKind::Kb: return "Kb";
  }
  return "?";
}

class Parser {
 public:
  Parser(const std::string& s, int n) : s_(s), n_(n) {}

  ExprPtr run() {
    ExprPtr e = expr();
    ws();
    if (p_ != s_.size()) fail("unexpected input", {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  const std::string& s_;
  int n_;
  size_t p_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> exp) {
    std::ostringstream os;
    os << msg << " at offset " << p_ << ", expected one of:";
    for (auto& x : exp) os << " " << x;
    throw SyntaxError(os.str(), p_, std::move(exp));
  }
  void ws() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(char c) {
    ws();
    return p_ < s_.size() && s_[p_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail("missing token", {std::string("'") + c + "'"});
  }
  long integer(bool allow_sign) {
    ws();
    bool neg = false;
    if (allow_sign && p_ < s_.size() && s_[p_] == '-') {
      neg = true;
      ++p_;
      ws();
    }
    if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("missing integer", {"integer"});
    long v = 0;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      v = v * 10 + (s_[p_++] - '0');
      if (v > 1000000000L) fail("integer too large", {"integer"});
    }
    return neg ? -v : v;
  }
  std::string ident() {
    ws();
    size_t b = p_;
    while (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_]))) ++p_;
    return s_.substr(b, p_ - b);
  }

  ExprPtr expr() {
    auto sum = node(Op::Sum);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    sum->kids.push_back(term());
    sum->flags.push_back(neg);
    for (;;) {
      if (accept('+')) neg = false;
      else if (accept('-')) neg = true;
      else break;
      sum->kids.push_back(term());
      sum->flags.push_back(neg);
    }
    if (sum->kids.size() == 1 && !sum->flags[0]) return sum->kids[0];
    return sum;
  }

  ExprPtr term() {
    auto prod = node(Op::Product);
    prod->kids.push_back(postfix());
    prod->flags.push_back(false);
    for (;;) {
      bool div;
      if (accept('*')) div = false;
      else if (accept('/')) div = true;
      else break;
      prod->kids.push_back(postfix());
      prod->flags.push_back(div);
    }
    if (prod->kids.size() == 1) return prod->kids[0];
    return prod;
  }

  ExprPtr postfix() {
    ExprPtr base = atom();
    while (accept('^')) {
      if (accept('(')) {
        auto d = node(Op::DivPow);
        d->value = integer(true);
        expect(')');
        d->kids.push_back(base);
        base = d;
      } else {
        auto pw = node(Op::Pow);
        pw->value = integer(true);
        pw->kids.push_back(base);
        base = pw;
      }
    }
    return base;
  }

  void check_root(GenKind k, const std::vector<int>& ix) {
    auto bad = [&](const std::string& why) {
      std::ostringstream os;
      os << kind_name(k) << "[";
      for (size_t a = 0; a < ix.size(); ++a) os << (a ? "," : "") << ix[a];
      os << "]: " << why;
      throw IndexError(os.str());
    };
    for (int x : ix)
      if (x < 1) bad("indices start at 1");
    if (k == GenKind::K || k == GenKind::Kb) {
      if (n_ > 0 && ix[0] > n_) bad("index exceeds n=" + std::to_string(n_));
      return;
    }
    if (ix.size() == 1) {
      if (n_ > 0 && ix[0] >= n_) bad("simple root index must be below n=" + std::to_string(n_));
      return;
    }
    if (ix[0] == ix[1]) bad("i = j is not a root");
    if ((k == GenKind::F || k == GenKind::Fb) && ix[0] > ix[1]) bad("F[i,j] needs i < j (it denotes E[j,i])");
    if (n_ > 0 && (ix[0] > n_ || ix[1] > n_)) bad("index exceeds n=" + std::to_string(n_));
  }

  ExprPtr atom() {
    ws();
    if (p_ >= s_.size()) fail("unexpected end of input", {"integer", "'v'", "generator", "'('"});
    char c = s_[p_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Op::Int);
      e->value = integer(false);
      return e;
    }
    if (c == '(') {
      ++p_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    size_t start = p_;
    std::string id = ident();
    if (id == "v") return node(Op::V);
    if (id == "T" || id == "Tinv") {
      auto e = node(Op::Braid);
      e->flag = id == "Tinv";
      expect('(');
      long i = integer(false);
      if (i < 1 || (n_ > 0 && i >= n_)) throw IndexError("braid index " + std::to_string(i) + " out of range");
      e->idx = {int(i)};
      expect(',');
      e->kids.push_back(expr());
      expect(')');
      return e;
    }
    if (id == "Omega") {
      auto e = node(Op::Omega);
      expect('(');
      e->kids.push_back(expr());
      expect(')');
      return e;
    }
    if (id == "qint" || id == "qfact" || id == "qbinom") {
      auto e = node(Op::Func);
      e->name = id;
      expect('(');
      e->idx.push_back(int(integer(true)));
      if (id == "qbinom") {
        expect(',');
        e->idx.push_back(int(integer(true)));
      }
      expect(')');
      if (id != "qint" && e->idx.back() < 0) throw std::domain_error(id + " needs a nonnegative argument");
      return e;
    }
    if (id == "KB") {
      auto e = node(Op::KBracket);
      expect('[');
      long i = integer(false), j = 0;
      if (accept(',')) j = integer(false);
      expect(';');
      long cc = integer(true);
      expect(',');
      long t = integer(false);
      expect(']');
      auto bad = [&](long x) { return x < 1 || (n_ > 0 && x > n_); };
      if (bad(i) || (j && bad(j))) throw IndexError("KB index out of range");
      if (j && j == i) throw IndexError("KB[i,j;c,t] needs i != j");
      e->idx = {int(i), int(cc), int(t)};
      if (j) e->idx = {int(i), int(j), int(cc), int(t)};
      return e;
    }
    GenKind k;
    if (id == "E") k = GenKind::E;
    else if (id == "F") k = GenKind::F;
    else if (id == "Eb") k = GenKind::Eb;
    else if (id == "Fb") k = GenKind::Fb;
    else if (id == "K") k = GenKind::K;
    else if (id == "Kb") k = GenKind::Kb;
    else {
      p_ = start;
      fail(id.empty() ? "unexpected character" : "unknown name '" + id + "'",
           {"integer", "'v'", "'('", "E", "F", "Eb", "Fb", "K", "Kb", "KB", "T", "Tinv", "Omega", "qint", "qfact",
            "qbinom"});
    }
    auto e = node(Op::Gen);
    e->kind = k;
    expect('[');
    e->idx.push_back(int(integer(false)));
    if (k != GenKind::K && k != GenKind::Kb && accept(',')) e->idx.push_back(int(integer(false)));
    expect(']');
    check_root(k, e->idx);
    return e;
  }
};

bool is_atom(const Expr& e) {
  return e.op == Op::Int || e.op == Op::V || e.op == Op::Gen || e.op == Op::KBracket || e.op == Op::Braid ||
         e.op == Op::Omega || e.op == Op::Func;
}

void render_to(std::ostream& os, const Expr& e);

void render_wrapped(std::ostream& os, const Expr& e, bool wrap) {
  if (wrap) os << "(";
  render_to(os, e);
  if (wrap) os << ")";
}

void render_to(std::ostream& os, const Expr& e) {
  switch (e.op) {
    case Op::Int: os << e.value; break;
    case Op::V: os << "v"; break;
    case Op::Gen:
      os << kind_name(e.kind) << "[" << e.idx[0];
      if (e.idx.size() > 1) os << "," << e.idx[1];
      os << "]";
      break;
    case Op::KBracket:
      if (e.idx.size() == 4) os << "KB[" << e.idx[0] << "," << e.idx[1] << ";" << e.idx[2] << "," << e.idx[3] << "]";
      else os << "KB[" << e.idx[0] << ";" << e.idx[1] << "," << e.idx[2] << "]";
      break;
    case Op::Sum:
      for (size_t k = 0; k < e.kids.size(); ++k) {
        if (k == 0) {
          if (e.flags[0]) os << "-";
        } else {
          os << (e.flags[k] ? " - " : " + ");
        }
        render_wrapped(os, *e.kids[k], e.kids[k]->op == Op::Sum);
      }
      break;
    case Op::Product:
      for (size_t k = 0; k < e.kids.size(); ++k) {
        if (k) os << (e.flags[k] ? "/" : "*");
        render_wrapped(os, *e.kids[k], e.kids[k]->op == Op::Sum || e.kids[k]->op == Op::Product);
      }
      break;
    case Op::Pow:
      render_wrapped(os, *e.kids[0], !is_atom(*e.kids[0]));
      os << "^" << e.value;
      break;
    case Op::DivPow:
      render_wrapped(os, *e.kids[0], !is_atom(*e.kids[0]));
      os << "^(" << e.value << ")";
      break;
    case Op::Braid:
      os << (e.flag ? "Tinv(" : "T(") << e.idx[0] << ", ";
      render_to(os, *e.kids[0]);
      os << ")";
      break;
    case Op::Omega:
      os << "Omega(";
      render_to(os, *e.kids[0]);
      os << ")";
      break;
    case Op::Func:
      os << e.name << "(" << e.idx[0];
      if (e.idx.size() > 1) os << "," << e.idx[1];
      os << ")";
      break;
  }
}

}  // namespace

ExprPtr parse(const std::string& text, int n) { return Parser(text, n).run(); }

std::string render(const ExprPtr& e) {
  std::ostringstream os;
  render_to(os, *e);
  return os.str();
}

RatFunc Evaluator::scalar_of(const Element& x, const char* what) const {
  if (x.is_zero()) return RatFunc(0);
  if (x.size() == 1 && x.terms.begin()->first.empty()) return x.terms.begin()->second;
  throw std::domain_error(std::string(what) + " needs a scalar, got " + render(eng_.alpha(), x));
}

Element Evaluator::eval(const ExprPtr& ep) {
  const Expr& e = *ep;
  const Alphabet& A = eng_.alpha();
  switch (e.op) {
    case Op::Int: return Element(RatFunc(e.value));
    case Op::V: return Element(RatFunc::v(1));
    case Op::Gen: {
      Letter l;
      bool odd = e.kind == GenKind::Eb || e.kind == GenKind::Fb;
      switch (e.kind) {
        case GenKind::K: l = Kl(A, e.idx[0]); break;
        case GenKind::Kb: l = KBl(A, e.idx[0]); break;
        case GenKind::E:
        case GenKind::Eb:
          l = e.idx.size() == 1 ? E(A, e.idx[0], e.idx[0] + 1, odd) : E(A, e.idx[0], e.idx[1], odd);
          break;
        default:
          l = e.idx.size() == 1 ? E(A, e.idx[0] + 1, e.idx[0], odd) : E(A, e.idx[1], e.idx[0], odd);
      }
      return eng_.normalize(Word{l});
    }
    case Op::KBracket:
      if (e.idx.size() == 4) return kbracket_expand(eng_, e.idx[0], e.idx[1], e.idx[2], e.idx[3]);
      return kbracket_expand(eng_, e.idx[0], e.idx[1], e.idx[2]);
    case Op::Sum: {
      Element r;
      for (size_t k = 0; k < e.kids.size(); ++k) {
        if (e.flags[k]) r -= eval(e.kids[k]);
        else r += eval(e.kids[k]);
      }
      return r;
    }
    case Op::Product: {
      Element r = eval(e.kids[0]);
      for (size_t k = 1; k < e.kids.size(); ++k) {
        Element x = eval(e.kids[k]);
        if (e.flags[k]) {
          RatFunc d = scalar_of(x, "division");
          if (d.is_zero()) throw std::domain_error("division by zero");
          r *= d.inverse();
        } else if (x.size() == 1 && x.terms.begin()->first.empty()) {
          r *= x.terms.begin()->second;
        } else {
          r = eng_.multiply(r, x);
        }
      }
      return r;
    }
    case Op::Pow: {
      Element b = eval(e.kids[0]);
      if (e.value >= 0) return eng_.pow(b, int(e.value));
      if (b.size() == 1) {
        auto& [m, c] = *b.terms.begin();
        bool cartan = true;
        for (auto& [s, x] : m.f) cartan = cartan && A.info(s).kind == Kind::K;
        if (cartan) {
          Mono inv = m;
          for (auto& f : inv.f) f.second = -f.second;
          return eng_.pow(Element::mono(inv, c.inverse()), int(-e.value));
        }
      }
      throw std::domain_error("negative power of a non-invertible element " + render(A, b));
    }
    case Op::DivPow: {
      if (e.value < 0) return Element();
      Element b = eval(e.kids[0]);
      return eng_.pow(b, int(e.value)) * RatFunc(quantum_factorial(e.value)).inverse();
    }
    case Op::Braid: return br_.apply(e.idx[0], e.flag, eval(e.kids[0]));
    case Op::Omega: return br_.omega(eval(e.kids[0]));
    case Op::Func:
      if (e.name == "qint") return Element(RatFunc(quantum_int(e.idx[0])));
      if (e.name == "qfact") return Element(RatFunc(quantum_factorial(e.idx[0])));
      return Element(RatFunc(gauss_binom(e.idx[0], e.idx[1])));
  }
  return Element();
}

// ---------------------------------------------------------------- templates

namespace {

struct IntExpr {
  const std::string& s;
  const std::vector<std::pair<std::string, long>>& vars;
  size_t p = 0;

  void ws() {
    while (p < s.size() && s[p] == ' ') ++p;
  }
  long sum() {
    long v = prod();
    for (;;) {
      ws();
      if (p < s.size() && s[p] == '+') ++p, v += prod();
      else if (p < s.size() && s[p] == '-') ++p, v -= prod();
      else return v;
    }
  }
  long prod() {
    long v = unary();
    for (;;) {
      ws();
      if (p < s.size() && s[p] == '*') ++p, v *= unary();
      else return v;
    }
  }
  long unary() {
    ws();
    if (p < s.size() && s[p] == '-') return ++p, -unary();
    if (p < s.size() && s[p] == '(') {
      ++p;
      long v = sum();
      ws();
      if (p >= s.size() || s[p] != ')') throw std::invalid_argument("template: missing ')' in {" + s + "}");
      ++p;
      return v;
    }
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      long v = 0;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) v = v * 10 + (s[p++] - '0');
      return v;
    }
    size_t b = p;
    while (p < s.size() && std::isalnum(static_cast<unsigned char>(s[p]))) ++p;
    std::string id = s.substr(b, p - b);
    for (auto& [k, x] : vars)
      if (k == id) return x;
    throw std::invalid_argument("template: unknown variable '" + id + "' in {" + s + "}");
  }
};

}  // namespace

std::string fill(const std::string& tmpl, const std::vector<std::pair<std::string, long>>& vars) {
  std::string out;
  for (size_t k = 0; k < tmpl.size(); ++k) {
    if (tmpl[k] != '{') {
      out += tmpl[k];
      continue;
    }
    size_t e = tmpl.find('}', k);
    if (e == std::string::npos) throw std::invalid_argument("template: unclosed '{'");
    std::string body = tmpl.substr(k + 1, e - k - 1);
    IntExpr ie{body, vars};
    long v = ie.sum();
    out += std::to_string(v);
    k = e;
  }
  return out;
}

}  // namespace qn
