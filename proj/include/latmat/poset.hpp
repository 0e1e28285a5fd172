#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latmat/rational.hpp"

namespace latmat {

// Opaque element label, unique within one poset.
using ElementId = std::string;

/*
 * A finite partially ordered set with a fully materialized order table.
 * The carrier is stored in a fixed linear extension: leq(a, b) with a != b
 * implies a comes before b. All instances are immutable after construction;
 * the Möbius memo is shared and safe for concurrent use.
 */
class FinitePoset {
public:
    // Reflexive-transitive closure of the given relation pairs. The carrier is
    // reordered into a deterministic linear extension (stable topological
    // sort, ties broken by declaration order). Throws CycleError if the
    // closure violates antisymmetry, UnknownElementError for undeclared ids,
    // DuplicateElementError / EmptySetError on malformed element lists.
    static FinitePoset build(const std::vector<ElementId>& elements,
                             const std::vector<std::pair<ElementId, ElementId>>& relations);

    // For carriers whose relation is already reflexive and transitive
    // (divisor lattices, chains, set families under inclusion). `labels`
    // must already be listed in a linear extension of `leq`; this is checked.
    static FinitePoset from_leq(std::vector<ElementId> labels, std::vector<char> leq);

    std::size_t size() const { return labels_.size(); }
    const std::vector<ElementId>& carrier() const { return labels_; }
    const ElementId& label(std::size_t i) const { return labels_[i]; }
    std::size_t index_of(const ElementId& id) const;  // UnknownElementError
    bool contains(const ElementId& id) const { return index_.count(id) != 0; }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool leq(const ElementId& a, const ElementId& b) const { return leq(index_of(a), index_of(b)); }

    // Greatest lower / least upper bound; nullopt when none exists or the
    // maximal (minimal) common bound is not unique.
    std::optional<std::size_t> meet_opt(std::size_t a, std::size_t b) const;
    std::optional<std::size_t> join_opt(std::size_t a, std::size_t b) const;
    std::size_t meet(std::size_t a, std::size_t b) const;  // NoBoundError
    std::size_t join(std::size_t a, std::size_t b) const;  // NoBoundError

    // Möbius function of this poset: 0 unless a <= b, 1 on the diagonal,
    // otherwise -sum over the half-open interval. Memoized per source row.
    const Int& mobius(std::size_t a, std::size_t b) const;

    // Subposet on the given strictly increasing carrier indices.
    FinitePoset induced(std::span<const std::size_t> members) const;

    // Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

private:
    FinitePoset() = default;
    void index_labels();
    static FinitePoset finish(std::vector<ElementId> labels, std::vector<char> leq);

    struct MobiusCache {
        std::mutex mutex;
        std::vector<std::shared_ptr<const std::vector<Int>>> rows;
    };

    std::vector<ElementId> labels_;
    std::unordered_map<ElementId, std::size_t> index_;
    std::vector<char> leq_;  // row-major size() x size()
    std::shared_ptr<MobiusCache> mobius_cache_;
};

/*
 * A sequence of distinct carrier elements sorted compatibly with the order:
 * members are kept in increasing carrier-index order, so x_i <= x_j implies
 * i <= j. The host poset must outlive the subset.
 */
class OrderedSubset {
public:
    static OrderedSubset from_labels(const FinitePoset& host, const std::vector<ElementId>& ids);
    static OrderedSubset from_indices(const FinitePoset& host, std::vector<std::size_t> indices);

    const FinitePoset& host() const { return *host_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::size_t operator[](std::size_t k) const { return members_[k]; }
    const std::vector<std::size_t>& indices() const { return members_; }
    std::vector<ElementId> labels() const;

    bool contains_host_index(std::size_t idx) const;
    // Position of a host index within the subset, if present.
    std::optional<std::size_t> position_of(std::size_t idx) const;
    bool same_members(const OrderedSubset& other) const;

private:
    OrderedSubset(const FinitePoset& host, std::vector<std::size_t> members)
        : host_(&host), members_(std::move(members)) {}

    const FinitePoset* host_;
    std::vector<std::size_t> members_;  // strictly increasing carrier indices
};

// Join of all members, when it exists in the host.
std::optional<std::size_t> join_of_all(const OrderedSubset& s);

// Smallest superset of s closed under pairwise join. Throws NoBoundError if a
// required join does not exist in the host.
OrderedSubset join_closure(const OrderedSubset& s);

// P_S: every host element y with y <= vee(S) and x_i <= y for some member x_i.
// Throws NoBoundError if vee(S) does not exist.
OrderedSubset upper_part(const OrderedSubset& s);

struct ClosureFlags {
    bool is_meet_closed = false;
    bool is_join_closed = false;
    bool is_lower_closed = false;
    bool is_upper_closed = false;
    bool is_upper_closed_up_to_join = false;
};

ClosureFlags closure_predicates(const OrderedSubset& s);

/*
 * A (possibly partial) map from carrier elements to exact rationals.
 * Evaluating an undefined point throws MissingValueError.
 */
class PosetFunction {
public:
    explicit PosetFunction(const FinitePoset& host);

    const FinitePoset& host() const { return *host_; }
    void set(std::size_t idx, Rat value);
    void set(const ElementId& id, Rat value);
    bool defined(std::size_t idx) const { return values_[idx].has_value(); }
    const Rat& at(std::size_t idx) const;

    // Pointwise 1/f. Points where f is zero or undefined stay undefined;
    // callers that must divide check zeros first (ZeroValueError).
    PosetFunction reciprocal() const;

    // f(n) = n on integer-labeled carriers (ParseError otherwise).
    static PosetFunction identity(const FinitePoset& host);
    static PosetFunction constant(const FinitePoset& host, const Rat& value);
    // f(n) = n + t on integer-labeled carriers.
    static PosetFunction linear_shift(const FinitePoset& host, const Rat& t);
    // Lines of "<element> <rational>"; '#' comments and blanks ignored.
    static PosetFunction from_lines(const FinitePoset& host, std::istream& in);

private:
    const FinitePoset* host_;
    std::vector<std::optional<Rat>> values_;
};

// Line-oriented poset text format:
//   elem <id>
//   rel <a> <b>      (declares a <= b)
// Blank lines and '#' comments are ignored; ids are non-whitespace tokens.
FinitePoset parse_poset_text(std::istream& in);
std::string poset_to_text(const FinitePoset& p);

}  // namespace latmat
