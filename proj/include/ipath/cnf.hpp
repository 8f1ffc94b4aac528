#ifndef IPATH_CNF_HPP
#define IPATH_CNF_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ipath/errors.hpp"

namespace ipath {

/// Every clause of the input was a tautology: any assignment satisfies it,
/// so there is nothing to reduce.
class TriviallySatisfiableError : public Error {
public:
  using Error::Error;
};

/// 1-based variable index plus polarity.
struct Literal {
  std::uint32_t variable{};
  bool negated{};
  bool operator==(const Literal&) const = default;
};

/// Exactly three literal slots; repetition is legal (short clauses are
/// padded by repeating a literal), complementary pairs are not.
struct Clause {
  std::array<Literal, 3> slot;
};

/// A (clause index, slot index) position where a variable occurs.
struct Occurrence {
  std::uint32_t clause{};
  std::uint32_t slot{};
  bool operator==(const Occurrence&) const = default;
};

/// Normalized 3-CNF.  Every clause has exactly 3 slots, none is a
/// tautology, and every variable occurs somewhere.
class CnfFormula {
public:
  CnfFormula(std::uint32_t variable_count, std::vector<Clause> clauses);

  std::uint32_t variable_count() const { return variable_count_; }
  std::uint32_t clause_count() const { return static_cast<std::uint32_t>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  /// Occurrence slots of a variable, ordered by (clause, slot) ascending.
  /// One entry per slot: a clause that repeats a literal shows up once per
  /// repetition, which is what the gadget construction keys on.
  const std::vector<Occurrence>& occurrences(std::uint32_t variable) const {
    return occurrences_[variable - 1];
  }

private:
  std::uint32_t variable_count_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<Occurrence>> occurrences_;
};

using RawClause = std::vector<Literal>;

/// Pads 1..2-literal clauses by repeating the first literal, drops
/// tautological clauses (satisfied under every assignment), and checks the
/// CnfFormula invariants.  Errors on empty clauses, on formulas left empty
/// by tautology removal (trivially satisfiable), and on unused variables.
CnfFormula normalize_cnf(std::uint32_t variable_count,
                         const std::vector<RawClause>& raw);

/// Total truth assignment; value(v) for variables 1..n.
struct Assignment {
  std::vector<bool> values;
  bool value(std::uint32_t variable) const { return values[variable - 1]; }
};

bool literal_true(const Literal& l, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);
/// 0-based index of the first clause `a` falsifies, if any.
std::optional<std::uint32_t> first_falsified(const CnfFormula& f, const Assignment& a);

/// DIMACS CNF reader ('c' comments, 'p cnf <n> <m>' header, clauses as
/// 0-terminated literal runs).  Clauses with more than three literals are
/// rejected.  Returns the raw clauses; normalization is a separate step.
struct DimacsCnf {
  std::uint32_t variable_count{};
  std::vector<RawClause> clauses;
};
DimacsCnf parse_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

}  // namespace ipath

#endif
