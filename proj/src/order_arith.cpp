#include "dyniso/order_arith.hpp"

namespace dyniso {

void OrderArith::register_pair(const std::string& a, const std::string& b) {
    intern(a);
    intern(b);
}

void OrderArith::intern(const std::string& s) {
    if (rank_of_.count(s)) return;
    rank_of_.emplace(s, static_cast<VertexId>(by_rank_.size()));
    by_rank_.push_back(s);
}

bool OrderArith::contains(const std::string& symbol) const {
    return rank_of_.count(symbol) != 0;
}

VertexId OrderArith::id_of(const std::string& symbol) const {
    auto it = rank_of_.find(symbol);
    if (it == rank_of_.end()) throw UnknownElementError("unknown element: " + symbol);
    return it->second;
}

const std::string& OrderArith::symbol_of(VertexId x) const {
    check(x);
    return by_rank_[static_cast<std::size_t>(x)];
}

void OrderArith::check(VertexId x) const {
    if (x < 0 || x >= size()) throw UnknownElementError("element id out of universe");
}

bool OrderArith::leq(VertexId x, VertexId y) const {
    check(x);
    check(y);
    return x <= y;
}

std::optional<VertexId> OrderArith::add(VertexId x, VertexId y) const {
    check(x);
    check(y);
    VertexId t = x + y;
    if (t >= size()) return std::nullopt;
    return t;
}

std::optional<VertexId> OrderArith::subtract(VertexId x, VertexId y) const {
    check(x);
    check(y);
    if (x < y) return std::nullopt;
    return x - y;
}

bool OrderArith::sum_holds(VertexId t, VertexId x, VertexId y) const {
    if (t < 0 || t >= size() || x < 0 || x >= size() || y < 0 || y >= size()) return false;
    return t == x + y;
}

int OrderArith::ordinal(VertexId x) const {
    check(x);
    return x;
}

long long OrderArith::order_tuple_count() const {
    long long n = size();
    return n * (n + 1) / 2;
}

long long OrderArith::sum_tuple_count() const {
    // One witness t per pair (x,y) with rank(x)+rank(y) <= max rank.
    long long n = size();
    return n * (n + 1) / 2;
}

}  // namespace dyniso
