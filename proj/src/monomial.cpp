#include "oddholes/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddholes {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.size() > 64)
    throw std::invalid_argument("more than 64 variables");
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(int nvars) {
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(int nvars, int i, int power) {
  std::vector<int> e(nvars, 0);
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable out of range");
  e[i] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > 0) s.add(i);
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<int> e(e_);
  for (int i = 0; i < nvars(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& o) const {
  std::vector<int> e(e_);
  for (int i = 0; i < nvars(); ++i) e[i] = std::max(e[i], o.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd_with(const Monomial& o) const {
  std::vector<int> e(e_);
  for (int i = 0; i < nvars(); ++i) e[i] = std::min(e[i], o.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& o) const {
  std::vector<int> e(e_);
  for (int i = 0; i < nvars(); ++i) {
    e[i] -= o.e_[i];
    if (e[i] < 0) throw std::invalid_argument("quotient by a non-divisor");
  }
  return Monomial(std::move(e));
}

std::string format_exponents(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    if (i) out += ' ';
    out += std::to_string(m.exponent(i));
  }
  return out;
}

std::string format_human(const Monomial& m,
                         const std::vector<std::string>& names) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::vector<std::string> variable_names(
    const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  names.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& lab = labels[i];
    const bool plain =
        lab == std::to_string(i + 1);
    names.push_back(plain ? "x" + lab : "x[" + lab + "]");
  }
  return names;
}

namespace {

bool all_numeric(const std::vector<std::string>& tokens) {
  for (const auto& t : tokens) {
    if (t.empty()) return false;
    std::size_t k = t[0] == '-' ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
  }
  return true;
}

}  // namespace

Monomial parse_monomial(const std::string& text, int nvars,
                        const std::vector<std::string>& names) {
  std::vector<std::string> tokens;
  {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw std::invalid_argument("empty monomial");

  // Numeric tokens are an exponent vector when the count fits the ring;
  // the one collision, "1" in a one-variable ring, reads as x1.
  if (all_numeric(tokens) && static_cast<int>(tokens.size()) == nvars) {
    std::vector<int> e;
    for (const auto& t : tokens) e.push_back(std::stoi(t));
    return Monomial(std::move(e));
  }

  const std::string& body = tokens[0];
  if (tokens.size() == 1 && body == "1") return Monomial::unit(nvars);
  if (tokens.size() > 1 || all_numeric(tokens))
    throw std::invalid_argument("expected " + std::to_string(nvars) +
                                " exponents");
  std::vector<int> e(nvars, 0);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find('*', pos);
    if (next == std::string::npos) next = body.size();
    std::string factor = body.substr(pos, next - pos);
    pos = next + 1;
    int power = 1;
    if (std::size_t caret = factor.find('^'); caret != std::string::npos) {
      const std::string p = factor.substr(caret + 1);
      if (p.empty() || !all_numeric({p}))
        throw std::invalid_argument("malformed power in '" + factor + "'");
      power = std::stoi(p);
      factor = factor.substr(0, caret);
    }
    auto it = std::find(names.begin(), names.end(), factor);
    if (it == names.end())
      throw std::invalid_argument("unknown variable '" + factor + "'");
    e[it - names.begin()] += power;
  }
  return Monomial(std::move(e));
}

}  // namespace oddholes
