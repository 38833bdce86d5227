#include "mzspace/abelian_group.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "mzspace/errors.hpp"
#include "mzspace/number_theory.hpp"

namespace mzspace {

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find('x', pos);
    std::string_view factor = std::string_view(s).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (factor.size() < 2 || factor.front() != 'z') {
      throw InputError("malformed group specification '" + std::string(text) + "'");
    }
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(factor.data() + 1, factor.data() + factor.size(), n);
    if (ec != std::errc() || ptr != factor.data() + factor.size() || n == 0) {
      throw InputError("malformed group specification '" + std::string(text) + "'");
    }
    spec.orders.push_back(n);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  std::uint64_t total = 1;
  for (auto n : spec.orders) {
    total *= n;
    if (total > (1ULL << 24)) throw InputError("group order too large");
  }
  return spec;
}

std::string to_string(const GroupSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.orders.size(); ++i) {
    if (i > 0) out += " x ";
    out += "Z" + std::to_string(spec.orders[i]);
  }
  return out.empty() ? "Z1" : out;
}

std::uint64_t group_order(const GroupSpec& spec) {
  std::uint64_t n = 1;
  for (auto o : spec.orders) n *= o;
  return n;
}

std::uint64_t group_exponent(const GroupSpec& spec) {
  std::uint64_t e = 1;
  for (auto o : spec.orders) e = lcm_u64(e, o);
  return e;
}

std::vector<GroupElement> enumerate(const GroupSpec& spec) {
  AbelianGroup g(spec);
  std::vector<GroupElement> out;
  out.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back(g.element(i));
  return out;
}

AbelianGroup::AbelianGroup(GroupSpec spec)
    : spec_(std::move(spec)), order_(group_order(spec_)), exponent_(group_exponent(spec_)) {
  for (auto o : spec_.orders) {
    if (o == 0) throw InputError("cyclic factor orders must be positive");
  }
  strides_.assign(spec_.orders.size(), 1);
  for (std::size_t i = spec_.orders.size(); i-- > 1;) strides_[i - 1] = strides_[i] * spec_.orders[i];

  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    GroupElement g = element(a);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = (spec_.orders[i] - g[i]) % spec_.orders[i];
    inverse_[a] = index_of(g);
  }
  if (order_ <= 1024) {
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a) {
      GroupElement x = element(a);
      for (std::size_t b = 0; b < order_; ++b) {
        GroupElement y = element(b);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + y[i]) % spec_.orders[i];
        table_[a * order_ + b] = static_cast<std::uint32_t>(index_of(y));
      }
    }
  }
}

GroupElement AbelianGroup::element(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("group element index out of range");
  GroupElement g(spec_.orders.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<std::uint32_t>(index / strides_[i] % spec_.orders[i]);
  return g;
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const {
  if (g.size() != spec_.orders.size()) throw std::invalid_argument("group element has wrong arity");
  std::size_t index = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] >= spec_.orders[i]) throw std::invalid_argument("group element residue out of range");
    index += g[i] * strides_[i];
  }
  return index;
}

std::size_t AbelianGroup::op(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order_ + b];
  std::size_t index = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i) {
    std::size_t n = spec_.orders[i];
    index += ((a / strides_[i] % n + b / strides_[i] % n) % n) * strides_[i];
  }
  return index;
}

std::size_t AbelianGroup::power(std::size_t a, std::uint64_t m) const {
  GroupElement g = element(a);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(g[i]) * (m % spec_.orders[i]) % spec_.orders[i]);
  }
  return index_of(g);
}

std::uint64_t AbelianGroup::element_order(std::size_t a) const {
  GroupElement g = element(a);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < g.size(); ++i) order = lcm_u64(order, spec_.orders[i] / gcd_u64(spec_.orders[i], g[i]));
  return order;
}

SylowSplit sylow_split(const GroupSpec& spec, std::uint64_t p) {
  if (!is_prime(p)) throw InputError("sylow_split: " + std::to_string(p) + " is not prime");
  SylowSplit split;
  split.p = p;
  const std::size_t k = spec.orders.size();
  std::vector<std::uint64_t> p_parts(k);
  std::vector<std::uint64_t> d_parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto [pa, d] = split_prime_part(spec.orders[i], p);
    p_parts[i] = pa;
    d_parts[i] = d;
    if (pa > 1) split.p_part.orders.push_back(static_cast<std::uint32_t>(pa));
    if (d > 1) split.p_prime_part.orders.push_back(static_cast<std::uint32_t>(d));
  }
  if (split.p_part.orders.empty()) split.p_part.orders.push_back(1);
  if (split.p_prime_part.orders.empty()) split.p_prime_part.orders.push_back(1);

  AbelianGroup g(spec);
  AbelianGroup h(split.p_part);
  AbelianGroup gt(split.p_prime_part);
  split.p_part_order = h.order();
  split.p_prime_part_order = gt.order();

  // CRT: x in Z_{n_i} with x = u mod p^{a_i} and x = v mod d_i.
  auto crt = [](std::uint64_t u, std::uint64_t pa, std::uint64_t v, std::uint64_t d) {
    std::uint64_t n = pa * d;
    for (std::uint64_t x = v; x < n; x += d) {
      if (x % pa == u) return x;
    }
    return std::uint64_t{0};
  };

  split.coset_index.resize(g.order());
  for (std::size_t kk = 0; kk < gt.order(); ++kk) {
    GroupElement tilde = gt.element(kk);
    for (std::size_t q = 0; q < h.order(); ++q) {
      GroupElement hq = h.element(q);
      GroupElement x(k, 0);
      std::size_t hi = 0;
      std::size_t di = 0;
      for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (p_parts[i] > 1) u = hq[hi++];
        if (d_parts[i] > 1) v = tilde[di++];
        x[i] = static_cast<std::uint32_t>(crt(u, p_parts[i], v, d_parts[i]));
      }
      split.coset_index[kk * h.order() + q] = g.index_of(x);
    }
  }
  return split;
}

SubgroupEmbedding product_subgroup(const GroupSpec& parent, const GroupSpec& orders) {
  if (orders.orders.size() != parent.orders.size()) {
    throw InputError("subgroup must list one order per cyclic factor of " + to_string(parent));
  }
  for (std::size_t i = 0; i < orders.orders.size(); ++i) {
    if (parent.orders[i] % orders.orders[i] != 0) {
      throw InputError("subgroup order " + std::to_string(orders.orders[i]) + " does not divide " +
                       std::to_string(parent.orders[i]));
    }
  }
  SubgroupEmbedding emb;
  emb.spec = orders;
  AbelianGroup g(parent);
  AbelianGroup h(orders);
  emb.into_parent.resize(h.order());
  for (std::size_t j = 0; j < h.order(); ++j) {
    GroupElement x = h.element(j);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= parent.orders[i] / orders.orders[i];
    emb.into_parent[j] = g.index_of(x);
  }
  return emb;
}

QuotientPresentation product_quotient(const GroupSpec& parent, const GroupSpec& subgroup_orders) {
  product_subgroup(parent, subgroup_orders);  // validates divisibility
  QuotientPresentation qp;
  for (std::size_t i = 0; i < parent.orders.size(); ++i) {
    qp.spec.orders.push_back(parent.orders[i] / subgroup_orders.orders[i]);
  }
  AbelianGroup g(parent);
  AbelianGroup quotient(qp.spec);
  qp.representative.resize(quotient.order());
  for (std::size_t j = 0; j < quotient.order(); ++j) qp.representative[j] = g.index_of(quotient.element(j));
  return qp;
}

}  // namespace mzspace
