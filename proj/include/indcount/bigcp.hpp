//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "indcount/graph.hpp"
#include "indcount/integer.hpp"
#include "indcount/subgraph_enum.hpp"

namespace indcount {

// A bounded induced graph counting polynomial is presented to the engine
// only through its coefficient oracle: e_i(G) = sum over graphs F with at
// most alpha*i vertices of lambda(F, i) * ind(F, G). lambda must be an
// isomorphism invariant of F and vanish when |V(F)| > alpha*i.
template <typename T>
concept LambdaOracle = requires(const T& oracle, const Graph& f, int i) {
  { oracle.alpha() } -> std::convertible_to<int>;
  { oracle.lambda(f, i) } -> std::convertible_to<Integer>;
};

/// Type-erased oracle.
class BigcpInstance {
 public:
  using LambdaFn = std::function<Integer(const Graph&, int)>;

  BigcpInstance(int alpha, LambdaFn lambda, std::string beta_note = {})
      : alpha_(alpha), lambda_(std::move(lambda)),
        beta_note_(std::move(beta_note)) {
    if (alpha_ < 1) throw InputError("BigcpInstance: alpha must be >= 1");
  }

  int alpha() const { return alpha_; }
  Integer lambda(const Graph& f, int i) const { return lambda_(f, i); }
  const std::string& beta_note() const { return beta_note_; }

 private:
  int alpha_;
  LambdaFn lambda_;
  std::string beta_note_;
};

static_assert(LambdaOracle<BigcpInstance>);

/// The independence polynomial: lambda(F, i) = 1 iff F is edgeless on i
/// vertices, so e_i counts independent sets of size i.
inline BigcpInstance independence_instance() {
  return BigcpInstance(
      1,
      [](const Graph& f, int i) -> Integer {
        return (f.order() == i && f.edge_count() == 0) ? 1 : 0;
      },
      "O(i): vertex and edge count");
}

// ---------------------------------------------------------------------------
// Newton identities between coefficients e_0..e_m (e_0 = 1) and the inverse
// power sums p_1..p_m of the roots. Power sums are returned 0-based:
// result[k - 1] holds p_k.

/// p_k = -k e_k - sum_{i=1}^{k-1} e_i p_{k-i}; coefficients past the end of
/// `e` are zero.
inline std::vector<Integer> newton_power_sums_from_coeffs(
    std::span<const Integer> e, int m) {
  if (e.empty() || e[0] != 1)
    throw InputError("newton_power_sums_from_coeffs: e_0 must be 1");
  auto coeff = [&](int i) -> Integer {
    return i < static_cast<int>(e.size()) ? e[i] : Integer(0);
  };
  std::vector<Integer> p(static_cast<std::size_t>(std::max(m, 0)));
  for (int k = 1; k <= m; ++k) {
    Integer value = -k * coeff(k);
    for (int i = 1; i < k; ++i) value -= coeff(i) * p[k - i - 1];
    p[k - 1] = std::move(value);
  }
  return p;
}

/// Inverse of the above: k e_k = -sum_{i=0}^{k-1} e_i p_{k-i}. Throws
/// InvariantError if a division by k leaves a remainder, which means the
/// power sums do not come from an integer polynomial.
inline std::vector<Integer> newton_coeffs_from_power_sums(
    std::span<const Integer> p) {
  const int m = static_cast<int>(p.size());
  std::vector<Integer> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Integer sum = 0;
    for (int i = 0; i < k; ++i) sum += e[i] * p[k - i - 1];
    Integer quotient, remainder;
    boost::multiprecision::divide_qr(Integer(-sum), Integer(k), quotient,
                                     remainder);
    if (remainder != 0) {
      throw InvariantError("newton_coeffs_from_power_sums: non-exact division "
                           "by " + std::to_string(k));
    }
    e[k] = std::move(quotient);
  }
  return e;
}

/// e_0..e_m and p_1..p_m of one polynomial (p stored 0-based).
struct CoefficientSequence {
  std::vector<Integer> e;
  std::vector<Integer> p;
};

// ---------------------------------------------------------------------------

/// a_{S,k} for every connected S with |S| <= alpha*k, k = 1..m. Entries are
/// addressed by the subset's id in the index the table was built from; that
/// index must outlive the table.
class CoefficientTable {
 public:
  using Id = ConnectedSubsetIndex::Id;

  CoefficientTable(const ConnectedSubsetIndex& index, int max_power,
                   int alpha, std::size_t rows)
      : index_(&index), max_power_(max_power), alpha_(alpha),
        rows_(rows), values_(rows * static_cast<std::size_t>(max_power)) { }

  int max_power() const { return max_power_; }
  int alpha() const { return alpha_; }
  std::size_t rows() const { return rows_; }

  bool has_entry(Id id, int k) const {
    return id < rows_ && k >= 1 && k <= max_power_
           && static_cast<int>(index_->at(id).size()) <= alpha_ * k;
  }

  const Integer& at(Id id, int k) const {
    if (!has_entry(id, k))
      throw InvariantError("CoefficientTable: no entry for requested key");
    return values_[slot(id, k)];
  }

  std::optional<Integer> find(const VertexSubset& s, int k) const {
    auto id = index_->find(s);
    if (!id || !has_entry(*id, k)) return std::nullopt;
    return values_[slot(*id, k)];
  }

  /// p_k = sum of a_{S,k} over all listed S with |S| <= alpha*k.
  Integer power_sum(int k) const {
    Integer total = 0;
    const std::size_t limit = index_->up_to_size(alpha_ * k).size();
    for (Id id = 0; id < std::min(limit, rows_); ++id)
      total += values_[slot(id, k)];
    return total;
  }

  const ConnectedSubsetIndex& index() const { return *index_; }

 private:
  template <LambdaOracle Oracle>
  friend CoefficientTable compute_coefficient_table(
      const Graph&, int, const Oracle&, const ConnectedSubsetIndex&);

  std::size_t slot(Id id, int k) const {
    return id * static_cast<std::size_t>(max_power_) + (k - 1);
  }

  const ConnectedSubsetIndex* index_;
  int max_power_;
  int alpha_;
  std::size_t rows_;
  std::vector<Integer> values_;
};

namespace detail {

/// Calls `visit(u, t)` for every pair of submasks of `full` with
/// u | t == full: first u, then t = (full & ~u) | w for each w within u.
/// There are 3^popcount(full) such pairs.
template <typename Visit>
void for_each_cover(std::uint32_t full, Visit visit) {
  std::uint32_t u = 0;
  while (true) {
    const std::uint32_t rest = full & ~u;
    std::uint32_t w = u;
    while (true) {
      visit(u, rest | w);
      if (w == 0) break;
      w = (w - 1) & u;
    }
    if (u == full) break;
    u = (u - full) & full;  // next submask in increasing order
  }
}

inline bool mask_connected(std::uint32_t mask,
                           std::span<const std::uint32_t> adjacency) {
  if (mask == 0) return false;
  std::uint32_t reached = mask & (~mask + 1);
  std::uint32_t frontier = reached;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= adjacency[std::countr_zero(f)];
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

// Labelled shape of the subgraph induced by `mask`: its size followed by the
// adjacency bits of each vertex pair in local order.
inline std::string shape_code(std::uint32_t mask,
                              std::span<const std::uint32_t> adjacency) {
  std::vector<int> members;
  for (std::uint32_t f = mask; f; f &= f - 1)
    members.push_back(std::countr_zero(f));
  std::string code(1, static_cast<char>(members.size()));
  unsigned char byte = 0;
  int bits = 0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (adjacency[members[a]] >> members[b] & 1U)
        byte |= static_cast<unsigned char>(1U << bits);
      if (++bits == 8) {
        code.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  }
  if (bits) code.push_back(static_cast<char>(byte));
  return code;
}

inline Graph graph_from_shape(const std::string& code) {
  const int n = static_cast<unsigned char>(code[0]);
  std::vector<Edge> edges;
  int bit = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++bit) {
      auto byte = static_cast<unsigned char>(code[1 + bit / 8]);
      if (byte >> (bit % 8) & 1U) edges.emplace_back(a, b);
    }
  }
  return build_graph(n, edges);
}

}  // namespace detail

/// Fills a_{S,k} for every S in `index` with |S| <= alpha*m by
///
///   a_{H,k} = -k lambda(H, k)
///             - sum_{i<k} sum_{U cup T = V(H)} lambda(H[U], i) a_{H[T], k-i}
///
/// where H = G[S]. Only connected T carry a nonzero coefficient, so they
/// are looked up in the index; any miss means the index is incomplete.
/// Subsets are visited in id order (by size), and each subset's row is
/// filled for all k at once: every term references either a strictly
/// smaller subset or the same subset at a smaller power.
template <LambdaOracle Oracle>
CoefficientTable compute_coefficient_table(const Graph& g, int m,
                                           const Oracle& oracle,
                                           const ConnectedSubsetIndex& index) {
  const int alpha = oracle.alpha();
  if (m < 0) throw InputError("compute_coefficient_table: negative m");
  const int max_size = alpha * m;
  if (m > 0 && index.bound() < max_size)
    throw InputError("compute_coefficient_table: index bound "
                     + std::to_string(index.bound()) + " below alpha*m = "
                     + std::to_string(max_size));
  if (max_size > 30)
    throw InputError("compute_coefficient_table: alpha*m above 30 is not "
                     "supported");

  const std::size_t rows = m == 0 ? 0 : index.up_to_size(max_size).size();
  CoefficientTable table(index, std::max(m, 1), alpha, rows);
  if (m == 0) return table;

  // lambda(F, i) for i = 0..m, keyed by the labelled shape of F.
  std::unordered_map<std::string, std::vector<Integer>> lambda_cache;
  auto lambdas_for = [&](const std::string& code) -> const std::vector<Integer>& {
    auto it = lambda_cache.find(code);
    if (it != lambda_cache.end()) return it->second;
    Graph f = detail::graph_from_shape(code);
    std::vector<Integer> values(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i)
      if (f.order() <= alpha * i) values[i] = oracle.lambda(f, i);
    return lambda_cache.emplace(code, std::move(values)).first->second;
  };

  std::vector<std::uint32_t> adjacency;
  std::vector<char> connected;
  std::vector<std::size_t> ids;
  std::vector<const std::vector<Integer>*> lambdas;
  std::vector<std::vector<std::uint32_t>> active;  // per i: masks with lambda != 0
  constexpr std::size_t kNoId = static_cast<std::size_t>(-1);

  for (CoefficientTable::Id sid = 0; sid < rows; ++sid) {
    const VertexSubset& subset = index.at(sid);
    const int s = static_cast<int>(subset.size());
    const std::uint32_t full = (s == 32) ? ~0U : ((1U << s) - 1);
    const std::size_t masks = std::size_t{1} << s;

    adjacency.assign(s, 0);
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (g.adjacent(subset[a], subset[b])) {
          adjacency[a] |= 1U << b;
          adjacency[b] |= 1U << a;
        }

    connected.assign(masks, 0);
    ids.assign(masks, kNoId);
    lambdas.assign(masks, nullptr);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const int size = std::popcount(mask);
      if (size <= alpha * (m - 1) || mask == full) {
        lambdas[mask] = &lambdas_for(detail::shape_code(mask, adjacency));
      }
      if (mask != 0 && detail::mask_connected(mask, adjacency)) {
        connected[mask] = 1;
        if (mask == full) {
          ids[mask] = sid;
        } else if (size <= alpha * (m - 1)) {
          std::vector<Vertex> members;
          for (std::uint32_t f = mask; f; f &= f - 1)
            members.push_back(subset[std::countr_zero(f)]);
          auto id = index.find(VertexSubset::from_sorted(std::move(members)));
          if (!id)
            throw InvariantError("compute_coefficient_table: connected subset "
                                 "missing from the enumeration");
          ids[mask] = *id;
        }
      }
      if (mask == full) break;
    }

    active.assign(static_cast<std::size_t>(m) + 1, {});
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (lambdas[mask]) {
        for (int i = 1; i < m; ++i)
          if ((*lambdas[mask])[i] != 0) active[i].push_back(mask);
      }
      if (mask == full) break;
    }

    const int k_min = (s + alpha - 1) / alpha;
    for (int k = k_min; k <= m; ++k) {
      Integer value = -k * (*lambdas[full])[k];
      for (int i = 1; i < k; ++i) {
        const int t_cap = alpha * (k - i);
        for (std::uint32_t u : active[i]) {
          const std::uint32_t rest = full & ~u;
          if (std::popcount(rest) > t_cap) continue;
          Integer inner = 0;
          std::uint32_t w = u;
          while (true) {
            const std::uint32_t t = rest | w;
            if (connected[t] && std::popcount(t) <= t_cap)
              inner += table.values_[table.slot(ids[t], k - i)];
            if (w == 0) break;
            w = (w - 1) & u;
          }
          if (inner != 0) value -= (*lambdas[u])[i] * inner;
        }
      }
      table.values_[table.slot(sid, k)] = std::move(value);
    }
  }
  return table;
}

/// e_1..e_m of the polynomial described by `oracle`, using a prebuilt
/// connected-subset index of bound at least alpha*m.
template <LambdaOracle Oracle>
CoefficientSequence compute_bigcp_coefficients(
    const Graph& g, int m, const Oracle& oracle,
    const ConnectedSubsetIndex& index) {
  CoefficientTable table = compute_coefficient_table(g, m, oracle, index);
  CoefficientSequence out;
  out.p.reserve(static_cast<std::size_t>(std::max(m, 0)));
  for (int k = 1; k <= m; ++k) out.p.push_back(table.power_sum(k));
  out.e = newton_coeffs_from_power_sums(out.p);
  return out;
}

template <LambdaOracle Oracle>
CoefficientSequence compute_bigcp_coefficients(const Graph& g, int m,
                                               const Oracle& oracle) {
  if (m <= 0) return compute_bigcp_coefficients(g, 0, oracle,
                                                ConnectedSubsetIndex{});
  ConnectedSubsetIndex index =
      enumerate_connected_subsets(g, oracle.alpha() * m);
  return compute_bigcp_coefficients(g, m, oracle, index);
}

}  // namespace indcount
