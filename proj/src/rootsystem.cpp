#include "hopfcoh/rootsystem.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfcoh {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i] + 1;
  out << "}";
  return out.str();
}

std::vector<std::vector<int>> components_of(const CartanMatrix& m) {
  int n = m.rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] == -1 && m(v, w) != 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

// Positive-definiteness of the symmetrized matrix via leading principal
// minors, exact over Q.
bool positive_definite(std::vector<std::vector<Rational>> s) {
  int n = static_cast<int>(s.size());
  for (int k = 0; k < n; ++k) {
    if (s[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = s[i][k] / s[k][k];
      for (int j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return true;
}

// Label an indecomposable finite-type component (vertices vs of m).
std::string component_label(const CartanMatrix& m, const std::vector<int>& vs) {
  int n = static_cast<int>(vs.size());
  if (n == 1) return "A1";

  auto mult = [&](int i, int j) { return m(vs[i], vs[j]) * m(vs[j], vs[i]); };
  std::vector<std::vector<int>> adj(n);
  int max_mult = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mult(i, j) > 0) {
        adj[i].push_back(j);
        max_mult = std::max(max_mult, mult(i, j));
      }

  auto fail = [&]() -> std::string {
    throw NotFiniteType("component " + vertex_list(vs) + " is not of finite type");
  };

  if (max_mult >= 3) return (n == 2 && max_mult == 3) ? "G2" : fail();

  std::vector<int> degree(n);
  for (int i = 0; i < n; ++i) degree[i] = static_cast<int>(adj[i].size());
  int branch = -1, nbranch = 0;
  for (int i = 0; i < n; ++i) {
    if (degree[i] > 3) fail();
    if (degree[i] == 3) {
      branch = i;
      ++nbranch;
    }
  }
  if (nbranch > 1) fail();

  if (max_mult == 2) {
    if (branch != -1) fail();
    // A path with exactly one double edge: B/C when at an end, F4 in the middle.
    std::vector<std::pair<int, int>> dbl;
    for (int i = 0; i < n; ++i)
      for (int j : adj[i])
        if (i < j && mult(i, j) == 2) dbl.emplace_back(i, j);
    if (dbl.size() != 1) fail();
    // Walk the path from one end.
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) start = i;
    if (start == -1) fail();
    std::vector<int> path{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    while (static_cast<int>(path.size()) < n) {
      int v = path.back(), next = -1;
      for (int w : adj[v])
        if (!seen[w]) next = w;
      if (next == -1) fail();
      seen[next] = true;
      path.push_back(next);
    }
    auto is_dbl = [&](int i, int j) { return mult(i, j) == 2; };
    if (n == 2) return "B2";
    if (n == 4 && is_dbl(path[1], path[2])) return "F4";
    // Orient so the double edge joins the last two path vertices.
    if (is_dbl(path[0], path[1])) std::reverse(path.begin(), path.end());
    if (!is_dbl(path[n - 2], path[n - 1])) fail();
    // Row convention: the short root's row carries the -2 entry.
    int last = vs[path[n - 1]], prev = vs[path[n - 2]];
    return (m.a[last][prev] == -2 ? "B" : "C") + std::to_string(n);
  }

  // Simply laced: path or one degree-3 node.
  if (branch == -1) return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int s : adj[branch]) {
    int len = 1, prev = branch, v = s;
    while (degree[v] == 2) {
      int next = adj[v][0] == prev ? adj[v][1] : adj[v][0];
      prev = v;
      v = next;
      ++len;
    }
    if (degree[v] != 1) fail();
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) fail();
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return "E6";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return "E7";
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return "E8";
  return fail();
}

}  // namespace

void CartanMatrix::check_well_formed() const {
  int n = rank();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw std::invalid_argument("Cartan matrix is not square");
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("Cartan zero pattern is not symmetric");
    }
  }
}

std::vector<Rational> symmetrizer(const CartanMatrix& m) {
  int n = m.rank();
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : components_of(m)) {
    d[comp.front()] = 1;
    std::vector<int> stack{comp.front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == v || m(v, w) == 0) continue;
        Rational dw = d[v] * Rational(m(v, w)) / Rational(m(w, v));
        if (d[w] == 0) {
          d[w] = dw;
          stack.push_back(w);
        } else if (d[w] != dw) {
          throw NotFiniteType("component " + vertex_list(comp) + " is not symmetrizable");
        }
      }
    }
    // Scale the component to least positive integers.
    mpz_class den_lcm(1);
    for (int v : comp) {
      mpz_class den = d[v].get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    mpz_class num_gcd(0);
    for (int v : comp) {
      mpz_class num = Rational(d[v] * Rational(den_lcm)).get_num();
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    for (int v : comp) d[v] = d[v] * Rational(den_lcm) / Rational(num_gcd);
  }
  return d;
}

std::vector<DynkinComponent> classify(const CartanMatrix& m) {
  m.check_well_formed();
  std::vector<Rational> d = symmetrizer(m);
  int n = m.rank();
  std::vector<DynkinComponent> out;
  for (const auto& comp : components_of(m)) {
    std::vector<std::vector<Rational>> s(comp.size(), std::vector<Rational>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp.size(); ++j)
        s[i][j] = d[comp[i]] * Rational(m(comp[i], comp[j]));
    if (!positive_definite(s))
      throw NotFiniteType("component " + vertex_list(comp) + " is not of finite type");
    out.push_back({component_label(m, comp), comp});
  }
  (void)n;
  return out;
}

int height(const Root& r) {
  return std::accumulate(r.coords.begin(), r.coords.end(), 0);
}

Root simple_root(int theta, int i) {
  Root r{std::vector<int>(theta, 0)};
  r.coords[i] = 1;
  return r;
}

Root reflect(const CartanMatrix& m, int i, const Root& r) {
  Root out = r;
  long pairing = 0;
  for (int j = 0; j < m.rank(); ++j) pairing += static_cast<long>(m(i, j)) * r.coords[j];
  out.coords[i] -= static_cast<int>(pairing);
  return out;
}

namespace {

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (int c : r.coords) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

// Greedy reduced word for w0 within one component: repeatedly right-multiply
// by the least simple reflection s_i with w(alpha_i) still positive.
std::vector<int> component_word(const CartanMatrix& m, const std::vector<int>& comp) {
  int n = m.rank();
  std::vector<Root> image(n);  // w(alpha_j) for j in comp
  for (int j : comp) image[j] = simple_root(n, j);
  std::vector<int> word;
  while (true) {
    int pick = -1;
    for (int i : comp) {
      if (is_positive(image[i])) {
        pick = i;
        break;
      }
    }
    if (pick == -1) break;
    word.push_back(pick);
    // w <- w s_pick: new w(alpha_j) = w(alpha_j) - a_{pick,j} w(alpha_pick)
    Root wp = image[pick];
    for (int j : comp) {
      int c = m(pick, j);
      if (c == 0 && j != pick) continue;
      for (int t = 0; t < n; ++t) image[j].coords[t] -= c * wp.coords[t];
    }
  }
  return word;
}

}  // namespace

std::vector<int> longest_word(const CartanMatrix& m) {
  classify(m);  // validates finite type
  std::vector<int> word;
  for (const auto& comp : components_of(m)) {
    std::vector<int> w = component_word(m, comp);
    word.insert(word.end(), w.begin(), w.end());
  }
  return word;
}

std::vector<Root> positive_roots(const CartanMatrix& m) {
  std::vector<int> word = longest_word(m);
  std::vector<Root> roots;
  roots.reserve(word.size());
  for (size_t j = 0; j < word.size(); ++j) {
    Root v = simple_root(m.rank(), word[j]);
    for (size_t t = j; t-- > 0;) v = reflect(m, word[t], v);
    roots.push_back(std::move(v));
  }
  return roots;
}

}  // namespace hopfcoh
