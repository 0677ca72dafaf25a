#pragma once

/// Finite binary operations presented as Cayley tables, their basic
/// predicates, and the plain-text table format.
///
/// Text format (whitespace separated, LF line endings when serialized):
///
///     # optional comment lines
///     n
///     <n rows of n entries, each an integer in [0, n)>
///     @names a b c ...        (optional, n display names)
///
/// entry(x, y) is the product x*y with the row picking the left factor.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magma {

/// Elements are dense 0-based indices into the table.
using Elem = int;

/// Ceiling for user-facing table construction (parsing, direct products).
inline constexpr int kDefaultOrderCap = 64;

/// Input rejected by the table reader; carries the 1-based position.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, int column, const std::string& message);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

/// A construction or search was asked to exceed a configured size cap.
class cap_exceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Immutable multiplication table of a finite binary operation. Element
/// names are display metadata only; they do not take part in equality.
class CayleyTable {
  public:
    CayleyTable(int order, std::vector<Elem> entries,
                std::vector<std::string> names = {});

    static CayleyTable from_rows(const std::vector<std::vector<Elem>>& rows,
                                 std::vector<std::string> names = {});

    int order() const noexcept { return order_; }

    /// The product x*y (x picks the row, y the column).
    Elem at(Elem x, Elem y) const {
        return entries_[static_cast<std::size_t>(x) * order_ + y];
    }

    const std::vector<Elem>& entries() const noexcept { return entries_; }

    bool has_names() const noexcept { return !names_.empty(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Display string for one element: its name if present, else its index.
    std::string display(Elem x) const;

    /// Same order and same entries; names are ignored.
    friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

  private:
    int order_;
    std::vector<Elem> entries_;
    std::vector<std::string> names_;
};

/// Reads a table from the text format above. Throws parse_error with a
/// 1-based line/column for malformed input.
CayleyTable parse_table(std::string_view text, int order_cap = kDefaultOrderCap);
CayleyTable parse_table(std::istream& in, int order_cap = kDefaultOrderCap);

/// Canonical text serialization: single spaces, LF newlines, names line
/// present exactly when the table has names. parse(serialize(t)) == t.
std::string serialize_table(const CayleyTable& t);

// --- basic predicates ----------------------------------------------------

struct TripleWitness {
    Elem x, y, z;
};
struct PairWitness {
    Elem x, y;
};

/// First (x, y, z) with (x*y)*z != x*(y*z), in scan order; nullopt when
/// the operation is associative.
std::optional<TripleWitness> associativity_witness(const CayleyTable& t);
bool is_associative(const CayleyTable& t);

/// First (x, y) with x*y != y*x.
std::optional<PairWitness> commutativity_witness(const CayleyTable& t);
bool is_commutative(const CayleyTable& t);

/// The two-sided identity element, if one exists (it is then unique).
std::optional<Elem> identity_of(const CayleyTable& t);

/// True when the table is a Latin square: every row and every column is a
/// permutation.
bool is_quasigroup(const CayleyTable& t);

/// All x with x*x == x, ascending.
std::vector<Elem> idempotents(const CayleyTable& t);

/// True when every row is injective, i.e. a*c1 == a*c2 forces c1 == c2.
/// At finite order this makes every equation a*x == b uniquely solvable.
bool has_unique_division(const CayleyTable& t);

struct ClassificationReport {
    bool associative = false;
    bool commutative = false;
    std::optional<Elem> identity;
    bool quasigroup = false;
    bool loop = false;   ///< quasigroup with identity
    bool group = false;  ///< associative loop
    std::vector<Elem> idempotent_elements;
};

ClassificationReport classify(const CayleyTable& t);

/// Componentwise product on pairs, indexed (x1, x2) -> x1 * b.order() + x2.
/// Throws cap_exceeded when the product order would exceed `order_cap`.
CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b,
                           int order_cap = kDefaultOrderCap);

}  // namespace magma
