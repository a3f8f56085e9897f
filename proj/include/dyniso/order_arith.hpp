#ifndef DYNISO_ORDER_ARITH_HPP
#define DYNISO_ORDER_ARITH_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyniso/errors.hpp"

namespace dyniso {

// Dense handle for a universe element. The handle equals the element's rank
// in the maintained total order, because elements are only ever appended.
using VertexId = int;

inline constexpr VertexId kNoVertex = -1;

// Universe U, total order O and bounded summation Sum over touched symbols.
//
// A symbol enters the universe the first time it appears in an insertion
// request and is appended as the new maximum of the order. Ranks are stable
// afterwards and elements never leave, even when their last incident edge is
// deleted. Sum(t,x,y) holds exactly when rank(t) = rank(x) + rank(y); sums
// past the current maximum do not exist.
class OrderArith {
public:
    // Interns both endpoints of an insertion request, a first then b.
    // Idempotent per element.
    void register_pair(const std::string& a, const std::string& b);

    bool contains(const std::string& symbol) const;

    VertexId id_of(const std::string& symbol) const;
    const std::string& symbol_of(VertexId x) const;

    int size() const { return static_cast<int>(by_rank_.size()); }

    bool leq(VertexId x, VertexId y) const;

    // Element of rank rank(x)+rank(y), when that rank exists.
    std::optional<VertexId> add(VertexId x, VertexId y) const;

    // t with Sum(x,t,y), i.e. t = x - y in rank arithmetic.
    std::optional<VertexId> subtract(VertexId x, VertexId y) const;

    bool sum_holds(VertexId t, VertexId x, VertexId y) const;

    int ordinal(VertexId x) const;

    long long order_tuple_count() const;
    long long sum_tuple_count() const;

private:
    void check(VertexId x) const;
    void intern(const std::string& s);

    std::vector<std::string> by_rank_;
    std::unordered_map<std::string, VertexId> rank_of_;
};

}  // namespace dyniso

#endif
