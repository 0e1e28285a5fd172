#include "latmat/poset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "latmat/error.hpp"

namespace latmat {

// ---------------------------------------------------------------------------
// FinitePoset

void FinitePoset::index_labels() {
    index_.clear();
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], i);
        if (!inserted) throw DuplicateElementError("duplicate element '" + labels_[i] + "'");
    }
}

FinitePoset FinitePoset::finish(std::vector<ElementId> labels, std::vector<char> leq) {
    const std::size_t n = labels.size();
    if (n == 0) throw EmptySetError("poset carrier must be nonempty");
    for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq[i * n + j]) continue;
            if (leq[j * n + i])
                throw CycleError("antisymmetry violated between '" + labels[i] + "' and '" + labels[j] + "'");
            if (i > j)
                throw Error(ErrorCategory::input,
                            "carrier order is not a linear extension at '" + labels[i] + "' <= '" + labels[j] + "'");
        }
    }
    FinitePoset p;
    p.labels_ = std::move(labels);
    p.leq_ = std::move(leq);
    p.index_labels();
    p.mobius_cache_ = std::make_shared<MobiusCache>();
    p.mobius_cache_->rows.resize(n);
    return p;
}

FinitePoset FinitePoset::build(const std::vector<ElementId>& elements,
                               const std::vector<std::pair<ElementId, ElementId>>& relations) {
    const std::size_t n = elements.size();
    if (n == 0) throw EmptySetError("poset needs at least one element");

    std::unordered_map<ElementId, std::size_t> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = pos.emplace(elements[i], i);
        if (!inserted) throw DuplicateElementError("duplicate element '" + elements[i] + "'");
    }

    std::vector<char> rel(n * n, 0);
    for (const auto& [a, b] : relations) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia == pos.end()) throw UnknownElementError("undeclared element '" + a + "'");
        if (ib == pos.end()) throw UnknownElementError("undeclared element '" + b + "'");
        rel[ia->second * n + ib->second] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;

    // Warshall transitive closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!rel[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (rel[k * n + j]) rel[i * n + j] = 1;
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rel[i * n + j] && rel[j * n + i])
                throw CycleError("cycle through '" + elements[i] + "' and '" + elements[j] + "'");

    // Stable topological order: repeatedly emit the first declared element
    // whose strict predecessors have all been emitted.
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<char> emitted(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n && pick == n; ++i) {
            if (emitted[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && rel[j * n + i] && !emitted[j]) {
                    ready = false;
                    break;
                }
            }
            if (ready) pick = i;
        }
        emitted[pick] = 1;
        order.push_back(pick);
    }

    std::vector<ElementId> labels(n);
    std::vector<char> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = elements[order[i]];
        for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = rel[order[i] * n + order[j]];
    }
    return finish(std::move(labels), std::move(leq));
}

FinitePoset FinitePoset::from_leq(std::vector<ElementId> labels, std::vector<char> leq) {
    if (leq.size() != labels.size() * labels.size())
        throw DimensionError("order table size does not match carrier");
    return finish(std::move(labels), std::move(leq));
}

std::size_t FinitePoset::index_of(const ElementId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElementError("unknown element '" + id + "'");
    return it->second;
}

std::optional<std::size_t> FinitePoset::meet_opt(std::size_t a, std::size_t b) const {
    const std::size_t n = size();
    std::optional<std::size_t> candidate;
    for (std::size_t z = 0; z < n; ++z)
        if (leq(z, a) && leq(z, b)) candidate = z;  // last hit has the largest index
    if (!candidate) return std::nullopt;
    for (std::size_t z = 0; z < n; ++z)
        if (leq(z, a) && leq(z, b) && !leq(z, *candidate)) return std::nullopt;
    return candidate;
}

std::optional<std::size_t> FinitePoset::join_opt(std::size_t a, std::size_t b) const {
    const std::size_t n = size();
    std::optional<std::size_t> candidate;
    for (std::size_t z = 0; z < n; ++z) {
        if (leq(a, z) && leq(b, z)) {
            candidate = z;  // first hit has the smallest index
            break;
        }
    }
    if (!candidate) return std::nullopt;
    for (std::size_t z = 0; z < n; ++z)
        if (leq(a, z) && leq(b, z) && !leq(*candidate, z)) return std::nullopt;
    return candidate;
}

std::size_t FinitePoset::meet(std::size_t a, std::size_t b) const {
    auto m = meet_opt(a, b);
    if (!m) throw NoBoundError("no meet of '" + label(a) + "' and '" + label(b) + "'");
    return *m;
}

std::size_t FinitePoset::join(std::size_t a, std::size_t b) const {
    auto j = join_opt(a, b);
    if (!j) throw NoBoundError("no join of '" + label(a) + "' and '" + label(b) + "'");
    return *j;
}

const Int& FinitePoset::mobius(std::size_t a, std::size_t b) const {
    const std::size_t n = size();
    std::shared_ptr<const std::vector<Int>> row;
    {
        std::lock_guard<std::mutex> lock(mobius_cache_->mutex);
        row = mobius_cache_->rows[a];
    }
    if (!row) {
        auto fresh = std::make_shared<std::vector<Int>>(n, Int(0));
        auto& r = *fresh;
        r[a] = 1;
        for (std::size_t v = a + 1; v < n; ++v) {
            if (!leq(a, v)) continue;
            Int acc(0);
            for (std::size_t z = a; z < v; ++z)
                if (leq(a, z) && leq(z, v)) acc += r[z];
            r[v] = -acc;
        }
        std::lock_guard<std::mutex> lock(mobius_cache_->mutex);
        if (!mobius_cache_->rows[a]) mobius_cache_->rows[a] = std::move(fresh);
        row = mobius_cache_->rows[a];
    }
    return (*row)[b];
}

FinitePoset FinitePoset::induced(std::span<const std::size_t> members) const {
    const std::size_t k = members.size();
    std::vector<ElementId> labels(k);
    std::vector<char> sub(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        labels[i] = label(members[i]);
        for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = leq(members[i], members[j]) ? 1 : 0;
    }
    return finish(std::move(labels), std::move(sub));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::cover_pairs() const {
    const std::size_t n = size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!leq(a, b)) continue;
            bool covered = true;
            for (std::size_t z = a + 1; z < b && covered; ++z)
                if (leq(a, z) && leq(z, b)) covered = false;
            if (covered) covers.emplace_back(a, b);
        }
    }
    return covers;
}

// ---------------------------------------------------------------------------
// OrderedSubset

OrderedSubset OrderedSubset::from_labels(const FinitePoset& host, const std::vector<ElementId>& ids) {
    std::vector<std::size_t> idx;
    idx.reserve(ids.size());
    for (const auto& id : ids) idx.push_back(host.index_of(id));
    return from_indices(host, std::move(idx));
}

OrderedSubset OrderedSubset::from_indices(const FinitePoset& host, std::vector<std::size_t> indices) {
    for (std::size_t i : indices)
        if (i >= host.size()) throw UnknownElementError("subset index out of range");
    std::sort(indices.begin(), indices.end());
    for (std::size_t k = 1; k < indices.size(); ++k)
        if (indices[k] == indices[k - 1])
            throw DuplicateElementError("duplicate subset element '" + host.label(indices[k]) + "'");
    return OrderedSubset(host, std::move(indices));
}

std::vector<ElementId> OrderedSubset::labels() const {
    std::vector<ElementId> out;
    out.reserve(members_.size());
    for (std::size_t i : members_) out.push_back(host_->label(i));
    return out;
}

bool OrderedSubset::contains_host_index(std::size_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
}

std::optional<std::size_t> OrderedSubset::position_of(std::size_t idx) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), idx);
    if (it == members_.end() || *it != idx) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

bool OrderedSubset::same_members(const OrderedSubset& other) const {
    return host_ == other.host_ && members_ == other.members_;
}

// ---------------------------------------------------------------------------
// Closures and predicates

std::optional<std::size_t> join_of_all(const OrderedSubset& s) {
    if (s.empty()) return std::nullopt;
    const FinitePoset& p = s.host();
    const std::size_t n = p.size();
    std::optional<std::size_t> candidate;
    for (std::size_t z = 0; z < n && !candidate; ++z) {
        bool upper = true;
        for (std::size_t k = 0; k < s.size() && upper; ++k) upper = p.leq(s[k], z);
        if (upper) candidate = z;
    }
    if (!candidate) return std::nullopt;
    for (std::size_t z = 0; z < n; ++z) {
        bool upper = true;
        for (std::size_t k = 0; k < s.size() && upper; ++k) upper = p.leq(s[k], z);
        if (upper && !p.leq(*candidate, z)) return std::nullopt;
    }
    return candidate;
}

OrderedSubset join_closure(const OrderedSubset& s) {
    const FinitePoset& p = s.host();
    std::vector<char> present(p.size(), 0);
    std::vector<std::size_t> pool = s.indices();
    for (std::size_t i : pool) present[i] = 1;

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = pool.size();
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = a + 1; b < count; ++b) {
                std::size_t j = p.join(pool[a], pool[b]);
                if (!present[j]) {
                    present[j] = 1;
                    pool.push_back(j);
                    grew = true;
                }
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (present[i]) out.push_back(i);
    return OrderedSubset::from_indices(p, std::move(out));
}

OrderedSubset upper_part(const OrderedSubset& s) {
    const FinitePoset& p = s.host();
    auto vee = join_of_all(s);
    if (!vee) throw NoBoundError("the join of the subset does not exist in the host poset");
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.leq(y, *vee)) continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (p.leq(s[k], y)) {
                out.push_back(y);
                break;
            }
        }
    }
    return OrderedSubset::from_indices(p, std::move(out));
}

ClosureFlags closure_predicates(const OrderedSubset& s) {
    const FinitePoset& p = s.host();
    ClosureFlags flags;
    flags.is_meet_closed = true;
    flags.is_join_closed = true;
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a; b < s.size(); ++b) {
            auto m = p.meet_opt(s[a], s[b]);
            if (!m || !s.contains_host_index(*m)) flags.is_meet_closed = false;
            auto j = p.join_opt(s[a], s[b]);
            if (!j || !s.contains_host_index(*j)) flags.is_join_closed = false;
        }
    }

    flags.is_lower_closed = true;
    flags.is_upper_closed = true;
    for (std::size_t k = 0; k < s.size(); ++k) {
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (p.leq(y, s[k]) && !s.contains_host_index(y)) flags.is_lower_closed = false;
            if (p.leq(s[k], y) && !s.contains_host_index(y)) flags.is_upper_closed = false;
        }
    }

    flags.is_upper_closed_up_to_join = false;
    if (auto vee = join_of_all(s)) {
        bool ok = true;
        for (std::size_t y = 0; y < p.size() && ok; ++y) {
            if (!p.leq(y, *vee) || s.contains_host_index(y)) continue;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (p.leq(s[k], y)) {
                    ok = false;
                    break;
                }
            }
        }
        flags.is_upper_closed_up_to_join = ok;
    }
    return flags;
}

// ---------------------------------------------------------------------------
// PosetFunction

PosetFunction::PosetFunction(const FinitePoset& host) : host_(&host), values_(host.size()) {}

void PosetFunction::set(std::size_t idx, Rat value) {
    if (idx >= values_.size()) throw UnknownElementError("function point out of range");
    values_[idx] = std::move(value);
}

void PosetFunction::set(const ElementId& id, Rat value) { set(host_->index_of(id), std::move(value)); }

const Rat& PosetFunction::at(std::size_t idx) const {
    if (idx >= values_.size() || !values_[idx])
        throw MissingValueError("function undefined at '" +
                                (idx < host_->size() ? host_->label(idx) : ElementId("?")) + "'");
    return *values_[idx];
}

PosetFunction PosetFunction::reciprocal() const {
    PosetFunction out(*host_);
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] && *values_[i] != 0) out.values_[i] = Rat(1) / *values_[i];
    return out;
}

PosetFunction PosetFunction::identity(const FinitePoset& host) {
    PosetFunction out(host);
    for (std::size_t i = 0; i < host.size(); ++i) out.values_[i] = Rat(parse_integer(host.label(i)));
    return out;
}

PosetFunction PosetFunction::constant(const FinitePoset& host, const Rat& value) {
    PosetFunction out(host);
    for (std::size_t i = 0; i < host.size(); ++i) out.values_[i] = value;
    return out;
}

PosetFunction PosetFunction::linear_shift(const FinitePoset& host, const Rat& t) {
    PosetFunction out(host);
    for (std::size_t i = 0; i < host.size(); ++i) out.values_[i] = Rat(parse_integer(host.label(i))) + t;
    return out;
}

PosetFunction PosetFunction::from_lines(const FinitePoset& host, std::istream& in) {
    PosetFunction out(host);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tok(line);
        std::string id, value, extra;
        if (!(tok >> id) || id[0] == '#') continue;
        if (!(tok >> value)) throw ParseError("function line " + std::to_string(lineno) + ": missing value");
        if (tok >> extra) throw ParseError("function line " + std::to_string(lineno) + ": trailing tokens");
        std::size_t idx = host.index_of(id);
        if (out.values_[idx]) throw DuplicateElementError("function value for '" + id + "' given twice");
        out.values_[idx] = parse_rational(value);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

FinitePoset parse_poset_text(std::istream& in) {
    std::vector<ElementId> elements;
    std::vector<std::pair<ElementId, ElementId>> relations;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tok(line);
        std::string kw;
        if (!(tok >> kw) || kw[0] == '#') continue;
        if (kw == "elem") {
            std::string id, extra;
            if (!(tok >> id)) throw ParseError("poset line " + std::to_string(lineno) + ": elem needs an id");
            if (tok >> extra) throw ParseError("poset line " + std::to_string(lineno) + ": trailing tokens");
            elements.push_back(id);
        } else if (kw == "rel") {
            std::string a, b, extra;
            if (!(tok >> a >> b)) throw ParseError("poset line " + std::to_string(lineno) + ": rel needs two ids");
            if (tok >> extra) throw ParseError("poset line " + std::to_string(lineno) + ": trailing tokens");
            relations.emplace_back(a, b);
        } else {
            throw ParseError("poset line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
        }
    }
    return FinitePoset::build(elements, relations);
}

std::string poset_to_text(const FinitePoset& p) {
    std::ostringstream out;
    for (const auto& id : p.carrier()) out << "elem " << id << "\n";
    for (const auto& [a, b] : p.cover_pairs()) out << "rel " << p.label(a) << " " << p.label(b) << "\n";
    return out.str();
}

}  // namespace latmat
