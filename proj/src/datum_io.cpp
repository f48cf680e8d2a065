#include "hopfcoh/datum_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "lexer.hpp"

namespace hopfcoh {

namespace {

using detail::Lexer;

std::vector<long> parse_int_list(Lexer& lex) {
  std::vector<long> out;
  lex.expect_punct('[');
  if (lex.accept_punct(']')) return out;
  while (true) {
    out.push_back(static_cast<long>(lex.expect_int()));
    if (lex.accept_punct(']')) return out;
    lex.expect_punct(',');
  }
}

std::vector<std::vector<long>> parse_int_matrix(Lexer& lex) {
  std::vector<std::vector<long>> out;
  lex.expect_punct('[');
  if (lex.accept_punct(']')) return out;
  while (true) {
    out.push_back(parse_int_list(lex));
    if (lex.accept_punct(']')) return out;
    lex.expect_punct(',');
  }
}

}  // namespace

CartanDatum parse_datum(std::string_view text) {
  Lexer lex(text);
  std::optional<std::vector<long>> orders;
  std::optional<std::vector<std::vector<long>>> cartan, g, chi;
  std::vector<std::tuple<long, long, CycNum>> lambda;
  std::vector<std::pair<long, CycNum>> mu;
  std::optional<unsigned long> q_order;

  while (lex.kind() != Lexer::Kind::End) {
    if (lex.kind() != Lexer::Kind::Ident) lex.fail("expected a key");
    std::string key = lex.ident();
    lex.advance();
    lex.expect_punct('=');
    if (key == "group.orders") {
      orders = parse_int_list(lex);
    } else if (key == "cartan") {
      cartan = parse_int_matrix(lex);
    } else if (key == "g") {
      g = parse_int_matrix(lex);
    } else if (key == "chi") {
      chi = parse_int_matrix(lex);
    } else if (key == "lambda") {
      lex.expect_punct('[');
      if (!lex.accept_punct(']')) {
        while (true) {
          lex.expect_punct('(');
          long i = lex.expect_int();
          lex.expect_punct(',');
          long j = lex.expect_int();
          lex.expect_punct(',');
          CycNum v = detail::parse_scalar_tokens(lex);
          lex.expect_punct(')');
          lambda.emplace_back(i, j, v);
          if (lex.accept_punct(']')) break;
          lex.expect_punct(',');
        }
      }
    } else if (key == "mu") {
      lex.expect_punct('[');
      if (!lex.accept_punct(']')) {
        while (true) {
          lex.expect_punct('(');
          long k = lex.expect_int();
          lex.expect_punct(',');
          CycNum v = detail::parse_scalar_tokens(lex);
          lex.expect_punct(')');
          mu.emplace_back(k, v);
          if (lex.accept_punct(']')) break;
          lex.expect_punct(',');
        }
      }
    } else if (key == "q_order") {
      long v = lex.expect_int();
      if (v < 1) lex.fail("q_order must be positive");
      q_order = static_cast<unsigned long>(v);
    } else {
      lex.fail("unknown key '" + key + "'");
    }
  }

  if (!orders) throw ParseError("missing key group.orders", 1, 1);
  if (!cartan) throw ParseError("missing key cartan", 1, 1);
  if (!g) throw ParseError("missing key g", 1, 1);
  if (!chi) throw ParseError("missing key chi", 1, 1);

  CartanDatum d;
  d.group.orders = *orders;
  int theta = static_cast<int>(cartan->size());
  d.cartan.a.resize(static_cast<size_t>(theta));
  for (int i = 0; i < theta; ++i) {
    if (static_cast<int>((*cartan)[static_cast<size_t>(i)].size()) != theta)
      throw ParseError("cartan matrix is not square", 1, 1);
    for (long v : (*cartan)[static_cast<size_t>(i)])
      d.cartan.a[static_cast<size_t>(i)].push_back(static_cast<int>(v));
  }
  if (static_cast<int>(g->size()) != theta || static_cast<int>(chi->size()) != theta)
    throw ParseError("g and chi must have one row per Cartan vertex", 1, 1);
  for (int i = 0; i < theta; ++i) {
    d.g.push_back(group_reduce(d.group, (*g)[static_cast<size_t>(i)]));
    d.chi.push_back(char_reduce(d.group, (*chi)[static_cast<size_t>(i)]));
  }
  unsigned long L = d.group.cyclotomic_order();
  if (q_order) {
    d.q_order = q_order;
    L = std::lcm(L, *q_order);
  }
  for (auto& [i, j, v] : lambda) {
    if (i < 1 || j < 1 || i > theta || j > theta || i >= j)
      throw ParseError("lambda indices must satisfy 1 <= i < j <= theta", 1, 1);
    d.lambda[{static_cast<int>(i) - 1, static_cast<int>(j) - 1}] = v.lifted(std::lcm(v.order(), L));
  }
  for (auto& [k, v] : mu) {
    if (k < 1) throw ParseError("mu root index must be positive", 1, 1);
    d.mu[static_cast<int>(k) - 1] = v.lifted(std::lcm(v.order(), L));
  }
  return d;
}

CartanDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open datum file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

namespace {

void write_matrix(std::ostream& out, const std::vector<std::vector<long>>& rows) {
  out << "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    out << (i ? ", " : "") << "[";
    for (size_t j = 0; j < rows[i].size(); ++j) out << (j ? ", " : "") << rows[i][j];
    out << "]";
  }
  out << "]";
}

}  // namespace

std::string serialize_datum(const CartanDatum& d) {
  std::ostringstream out;
  out << "group.orders = [";
  for (size_t i = 0; i < d.group.orders.size(); ++i)
    out << (i ? ", " : "") << d.group.orders[i];
  out << "]\n";
  std::vector<std::vector<long>> rows;
  for (const auto& r : d.cartan.a) rows.push_back(std::vector<long>(r.begin(), r.end()));
  out << "cartan = ";
  write_matrix(out, rows);
  out << "\n";
  rows.clear();
  for (const auto& e : d.g) rows.push_back(e.exps);
  out << "g = ";
  write_matrix(out, rows);
  out << "\n";
  rows.clear();
  for (const auto& c : d.chi) rows.push_back(c.exps);
  out << "chi = ";
  write_matrix(out, rows);
  out << "\n";
  if (!d.lambda.empty()) {
    out << "lambda = [";
    bool first = true;
    for (const auto& [key, v] : d.lambda) {
      out << (first ? "" : ", ") << "(" << key.first + 1 << ", " << key.second + 1 << ", "
          << v.str() << ")";
      first = false;
    }
    out << "]\n";
  }
  if (!d.mu.empty()) {
    out << "mu = [";
    bool first = true;
    for (const auto& [k, v] : d.mu) {
      out << (first ? "" : ", ") << "(" << k + 1 << ", " << v.str() << ")";
      first = false;
    }
    out << "]\n";
  }
  if (d.q_order) out << "q_order = " << *d.q_order << "\n";
  return out.str();
}

}  // namespace hopfcoh
