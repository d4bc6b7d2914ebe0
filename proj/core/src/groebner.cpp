#include "bei/groebner.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bei {

GroebnerBasis groebner_basis(const Graph& g) {
  GroebnerBasis basis;
  basis.n = g.n;
  basis.paths = enumerate_admissible_paths(g);
  basis.elements.reserve(basis.paths.size());
  for (const auto& p : basis.paths) {
    const Monomial u = path_monomial(p, g.n);
    const Monomial lead = multiply(u, multiply(Monomial::x(p.from(), g.n), Monomial::y(p.to(), g.n)));
    const Monomial trail = multiply(u, multiply(Monomial::x(p.to(), g.n), Monomial::y(p.from(), g.n)));
    basis.elements.emplace_back(lead, trail);
  }
  return basis;
}

MonomialIdeal initial_ideal(const Graph& g) {
  const GroebnerBasis basis = groebner_basis(g);
  std::vector<Monomial> leads;
  leads.reserve(basis.elements.size());
  for (const auto& b : basis.elements) leads.push_back(b.lead);
  return minimal_generators(2 * g.n, std::move(leads));
}

MonomialIdeal closed_form_initial_kmn(int m, int n) {
  if (n < 1 || m < n)
    throw Error("complete bipartite closed form needs m >= n >= 1, got m=" + std::to_string(m) +
                " n=" + std::to_string(n));
  const int N = m + n;
  std::vector<Monomial> gens;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) gens.push_back(multiply(Monomial::x(i, N), Monomial::y(m + j, N)));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = 1; k <= n; ++k)
        gens.push_back(multiply(multiply(Monomial::x(i, N), Monomial::x(m + k, N)), Monomial::y(j, N)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= m; ++k)
        gens.push_back(multiply(multiply(Monomial::x(m + i, N), Monomial::y(k, N)), Monomial::y(m + j, N)));
  return minimal_generators(2 * N, std::move(gens));
}

MonomialIdeal closed_form_initial_cycle(int n) {
  if (n < 3) throw Error("cycle closed form needs n >= 3, got " + std::to_string(n));
  std::vector<Monomial> gens;
  for (int i = 1; i < n; ++i) gens.push_back(multiply(Monomial::x(i, n), Monomial::y(i + 1, n)));
  gens.push_back(multiply(Monomial::x(1, n), Monomial::y(n, n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (j - i > n - 2) continue;
      Monomial mono = multiply(Monomial::x(i, n), Monomial::y(j, n));
      for (int k = j + 1; k <= n; ++k) mono = multiply(mono, Monomial::x(k, n));
      for (int k = 1; k < i; ++k) mono = multiply(mono, Monomial::y(k, n));
      gens.push_back(mono);
    }
  }
  return minimal_generators(2 * n, std::move(gens));
}

VerifyReport verify_basis(const Graph& g, const std::vector<Polynomial>& basis, const VerifyCaps& caps) {
  VerifyReport rep;
  rep.basis_size = static_cast<int>(basis.size());
  for (const auto& f : basis)
    if (f.is_zero()) throw Error("basis contains the zero polynomial");

  const long long pairs = static_cast<long long>(basis.size()) * (basis.size() - 1) / 2;
  if (pairs > caps.max_spairs)
    throw CapError("S-pair count " + std::to_string(pairs) + " exceeds cap " + std::to_string(caps.max_spairs));
  rep.spair_count = pairs;

  rep.spairs_ok = true;
  for (size_t a = 0; a < basis.size() && rep.spairs_ok; ++a) {
    for (size_t b = a + 1; b < basis.size(); ++b) {
      const Polynomial s = s_polynomial(basis[a], basis[b]);
      const Polynomial nf = reduce(s, std::span<const Polynomial>(basis));
      if (nf.is_zero()) {
        ++rep.spairs_reduced_to_zero;
      } else {
        rep.spairs_ok = false;
        rep.first_failure = "S-pair of element " + std::to_string(a + 1) + " (" + basis[a].str() +
                            ") and element " + std::to_string(b + 1) + " (" + basis[b].str() +
                            ") has nonzero normal form " + nf.str();
        break;
      }
    }
  }

  rep.reduced_ok = true;
  for (size_t a = 0; a < basis.size() && rep.reduced_ok; ++a) {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& [t, c] : basis[a].terms()) {
        if (divides(basis[b].leading_monomial(), t)) {
          rep.reduced_ok = false;
          if (rep.first_failure.empty())
            rep.first_failure = "term " + t.str() + " of element " + std::to_string(a + 1) +
                                " is divisible by the lead of element " + std::to_string(b + 1) + " (" +
                                basis[b].leading_monomial().str() + ")";
          break;
        }
      }
      if (!rep.reduced_ok) break;
    }
  }

  // ideal match: the edge binomials generate the target ideal, so both
  // containments are tested by normal forms
  rep.ideal_match_ok = true;
  std::vector<Binomial> edge_binomials;
  for (auto [u, v] : g.edges)
    edge_binomials.emplace_back(multiply(Monomial::x(u, g.n), Monomial::y(v, g.n)),
                                multiply(Monomial::x(v, g.n), Monomial::y(u, g.n)));
  for (const auto& eb : edge_binomials) {
    const Polynomial nf = reduce(Polynomial(eb), std::span<const Polynomial>(basis));
    if (!nf.is_zero()) {
      rep.ideal_match_ok = false;
      if (rep.first_failure.empty())
        rep.first_failure = "edge binomial " + eb.str() + " has nonzero normal form " + nf.str() +
                            " against the basis";
      break;
    }
  }
  if (rep.ideal_match_ok) {
    const GroebnerBasis gamma = groebner_basis(g);
    for (size_t a = 0; a < basis.size(); ++a) {
      const Polynomial nf = reduce(basis[a], std::span<const Binomial>(gamma.elements));
      if (!nf.is_zero()) {
        rep.ideal_match_ok = false;
        if (rep.first_failure.empty())
          rep.first_failure = "element " + std::to_string(a + 1) + " (" + basis[a].str() +
                              ") is not in the edge ideal: normal form " + nf.str();
        break;
      }
    }
  }

  rep.pass = rep.spairs_ok && rep.reduced_ok && rep.ideal_match_ok;
  return rep;
}

VerifyReport verify_groebner(const Graph& g, const VerifyCaps& caps) {
  const GroebnerBasis basis = groebner_basis(g);
  std::vector<Polynomial> polys;
  polys.reserve(basis.elements.size());
  for (const auto& b : basis.elements) polys.emplace_back(b);
  return verify_basis(g, polys, caps);
}

namespace {

Monomial parse_monomial_token(const std::string& tok, int nvars, int lineno) {
  if (tok == "1") return Monomial::one(nvars);
  const int n = nvars / 2;
  std::vector<int> e(nvars, 0);
  std::istringstream ts(tok);
  std::string factor;
  while (std::getline(ts, factor, '*')) {
    if (factor.empty()) throw Error("line " + std::to_string(lineno) + ": empty factor in '" + tok + "'");
    const char kind = factor[0];
    if (kind != 'x' && kind != 'y')
      throw Error("line " + std::to_string(lineno) + ": factor '" + factor + "' must start with x or y");
    size_t caret = factor.find('^');
    int exp = 1;
    std::string idx_str = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
    const int idx = std::stoi(idx_str);
    if (idx < 1 || idx > n || exp < 1)
      throw Error("line " + std::to_string(lineno) + ": bad factor '" + factor + "' for n=" + std::to_string(n));
    e[(kind == 'x' ? 0 : n) + idx - 1] += exp;
  }
  return Monomial(std::move(e));
}

Polynomial parse_polynomial_line(const std::string& line, int nvars, int lineno) {
  Polynomial p;
  std::string compact;
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  size_t pos = 0;
  int sign = 1;
  while (pos < compact.size()) {
    if (compact[pos] == '+') {
      sign = 1;
      ++pos;
      continue;
    }
    if (compact[pos] == '-') {
      sign = -1;
      ++pos;
      continue;
    }
    size_t end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) end = compact.size();
    std::string term = compact.substr(pos, end - pos);
    pos = end;
    long long coef = 1;
    size_t tstart = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      size_t numend = 0;
      coef = std::stoll(term, &numend);
      tstart = numend;
      if (tstart < term.size() && term[tstart] == '*') ++tstart;
    }
    const Monomial m = (tstart >= term.size()) ? Monomial::one(nvars)
                                               : parse_monomial_token(term.substr(tstart), nvars, lineno);
    p.add_term(m, sign * coef);
    sign = 1;
  }
  return p;
}

}  // namespace

std::vector<Polynomial> parse_basis_file(std::istream& in, int& n_out) {
  std::string line;
  int n = -1, lineno = 0;
  std::vector<Polynomial> out;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    if (n < 0) {
      std::istringstream ls(line);
      if (!(ls >> n) || n < 1) throw Error("line " + std::to_string(lineno) + ": expected vertex count");
      continue;
    }
    Polynomial p = parse_polynomial_line(line, 2 * n, lineno);
    if (p.is_zero()) throw Error("line " + std::to_string(lineno) + ": polynomial is zero");
    out.push_back(std::move(p));
  }
  if (n < 0) throw Error("basis file has no vertex count line");
  n_out = n;
  return out;
}

std::vector<Polynomial> load_basis_file(const std::string& path, int& n_out) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open basis file: " + path);
  return parse_basis_file(in, n_out);
}

}  // namespace bei
