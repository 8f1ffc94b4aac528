#include "ipath/cnf.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "text_util.hpp"

namespace ipath {

CnfFormula::CnfFormula(std::uint32_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count), clauses_(std::move(clauses)) {
  if (clauses_.empty()) throw PreconditionError("formula has no clauses");
  occurrences_.resize(variable_count_);
  for (std::uint32_t c = 0; c < clauses_.size(); ++c) {
    for (std::uint32_t s = 0; s < 3; ++s) {
      const Literal& l = clauses_[c].slot[s];
      if (l.variable == 0 || l.variable > variable_count_)
        throw PreconditionError("clause " + std::to_string(c + 1) +
                                " references variable " + std::to_string(l.variable) +
                                " outside 1.." + std::to_string(variable_count_));
      occurrences_[l.variable - 1].push_back(Occurrence{c, s});
    }
    for (std::uint32_t s = 0; s < 3; ++s)
      for (std::uint32_t t = s + 1; t < 3; ++t)
        if (clauses_[c].slot[s].variable == clauses_[c].slot[t].variable &&
            clauses_[c].slot[s].negated != clauses_[c].slot[t].negated)
          throw PreconditionError("clause " + std::to_string(c + 1) +
                                  " contains a variable in both polarities");
  }
  for (std::uint32_t v = 1; v <= variable_count_; ++v)
    if (occurrences_[v - 1].empty())
      throw PreconditionError("variable " + std::to_string(v) +
                              " occurs in no clause");
}

CnfFormula normalize_cnf(std::uint32_t variable_count,
                         const std::vector<RawClause>& raw) {
  std::vector<Clause> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawClause& rc = raw[i];
    if (rc.empty())
      throw PreconditionError("clause " + std::to_string(i + 1) + " is empty");
    if (rc.size() > 3)
      throw PreconditionError("clause " + std::to_string(i + 1) +
                              " has more than three literals");
    bool tautology = false;
    for (std::size_t a = 0; a < rc.size() && !tautology; ++a)
      for (std::size_t b = a + 1; b < rc.size(); ++b)
        if (rc[a].variable == rc[b].variable && rc[a].negated != rc[b].negated) {
          tautology = true;
          break;
        }
    if (tautology) continue;  // satisfied by every assignment
    Clause c;
    for (std::size_t s = 0; s < 3; ++s)
      c.slot[s] = s < rc.size() ? rc[s] : rc.front();
    out.push_back(c);
  }
  if (out.empty()) {
    if (!raw.empty())
      throw TriviallySatisfiableError(
          "every clause is a tautology; the formula is satisfied by any assignment");
    throw PreconditionError("formula has no clauses");
  }
  return CnfFormula(variable_count, std::move(out));
}

bool literal_true(const Literal& l, const Assignment& a) {
  return a.value(l.variable) != l.negated;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  return !first_falsified(f, a).has_value();
}

std::optional<std::uint32_t> first_falsified(const CnfFormula& f,
                                             const Assignment& a) {
  for (std::uint32_t c = 0; c < f.clause_count(); ++c) {
    const Clause& cl = f.clauses()[c];
    if (!literal_true(cl.slot[0], a) && !literal_true(cl.slot[1], a) &&
        !literal_true(cl.slot[2], a))
      return c;
  }
  return std::nullopt;
}

DimacsCnf parse_dimacs(std::istream& in) {
  DimacsCnf out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint32_t declared_clauses = 0;
  RawClause current;
  bool in_clause = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty() || t.front() == 'c' || t.front() == '#') continue;
    if (t.front() == 'p') {
      auto toks = detail::split_ws(t);
      if (have_header) throw ParseError(lineno, "duplicate 'p' header");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(lineno, "expected 'p cnf <variables> <clauses>'");
      out.variable_count =
          detail::parse_number<std::uint32_t>(toks[2], lineno, "variable count");
      declared_clauses =
          detail::parse_number<std::uint32_t>(toks[3], lineno, "clause count");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before 'p cnf' header");
    for (const auto& tok : detail::split_ws(t)) {
      long long v = detail::parse_number<long long>(tok, lineno, "literal");
      if (v == 0) {
        if (!in_clause && current.empty())
          throw ParseError(lineno, "empty clause");
        out.clauses.push_back(current);
        current.clear();
        in_clause = false;
        continue;
      }
      std::uint64_t var = static_cast<std::uint64_t>(v < 0 ? -v : v);
      if (var > out.variable_count)
        throw ParseError(lineno, "literal " + tok + " outside declared variables");
      if (current.size() == 3)
        throw ParseError(lineno, "clause has more than three literals");
      current.push_back(Literal{static_cast<std::uint32_t>(var), v < 0});
      in_clause = true;
    }
  }
  if (in_clause) throw ParseError(lineno, "unterminated clause (missing 0)");
  if (!have_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (out.clauses.size() != declared_clauses)
    throw ParseError(lineno, "declared " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(out.clauses.size()));
  return out;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variable_count() << " " << f.clause_count() << "\n";
  for (const auto& c : f.clauses()) {
    for (const auto& l : c.slot) out << (l.negated ? "-" : "") << l.variable << " ";
    out << "0\n";
  }
}

}  // namespace ipath
