#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mzspace {

/// G = Z_{n_1} x ... x Z_{n_k}. The factorization is kept as written: Z2 x Z3 and Z6 are
/// distinct specs (isomorphic groups).
struct GroupSpec {
  std::vector<std::uint32_t> orders;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses "Z2 x Z3 x Z4" (case-insensitive, 'x' separated). Throws InputError.
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

std::uint64_t group_order(const GroupSpec& spec);
std::uint64_t group_exponent(const GroupSpec& spec);

/// Residue tuple (a_1, ..., a_k) with 0 <= a_i < n_i.
using GroupElement = std::vector<std::uint32_t>;

/// Mixed-radix enumeration, last coordinate fastest; index 0 is the identity.
std::vector<GroupElement> enumerate(const GroupSpec& spec);

/// Index-addressed view of a finite abelian group. Indices are 0-based here; the external
/// (report/CLI) convention is 1-based, matching g_1 = 1_G.
class AbelianGroup {
 public:
  explicit AbelianGroup(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::size_t identity() const noexcept { return 0; }

  GroupElement element(std::size_t index) const;
  std::size_t index_of(const GroupElement& g) const;

  std::size_t op(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::uint64_t m) const;
  std::uint64_t element_order(std::size_t a) const;

  /// "g[j]" with 1-based j.
  static std::string label(std::size_t index) { return "g[" + std::to_string(index + 1) + "]"; }

 private:
  GroupSpec spec_;
  std::size_t order_;
  std::uint64_t exponent_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // n x n product table when n is small
};

/// Sylow decomposition G = H x G~ for a prime p, with |H| = p^a and p not dividing |G~| = d.
/// Each factor Z_{n_i} = Z_{p^{a_i}} x Z_{d_i} is split by the CRT isomorphism; factors of order
/// 1 are dropped from the part specs (a trivial part is written Z1).
struct SylowSplit {
  std::uint64_t p = 0;
  GroupSpec p_part;        // H
  GroupSpec p_prime_part;  // G~
  std::size_t p_part_order = 1;
  std::size_t p_prime_part_order = 1;
  /// coset_index[k * |H| + q] = index in G of g~_k * h_q (all 0-based). The pair (0, 0) is 1_G.
  std::vector<std::size_t> coset_index;

  std::size_t index(std::size_t k, std::size_t q) const { return coset_index[k * p_part_order + q]; }
};

SylowSplit sylow_split(const GroupSpec& spec, std::uint64_t p);

/// A subgroup of product form H = prod Z_{m_i} with m_i | n_i, embedded by a_i -> a_i * (n_i / m_i).
struct SubgroupEmbedding {
  GroupSpec spec;
  std::vector<std::size_t> into_parent;  // H index -> G index
};

/// Throws InputError when some m_i does not divide n_i.
SubgroupEmbedding product_subgroup(const GroupSpec& parent, const GroupSpec& orders);

/// G/H for a product-form subgroup: spec prod Z_{n_i/m_i}, coset b represented by b in G.
struct QuotientPresentation {
  GroupSpec spec;
  std::vector<std::size_t> representative;  // G/H index -> G index of a representative
};

QuotientPresentation product_quotient(const GroupSpec& parent, const GroupSpec& subgroup_orders);

}  // namespace mzspace
