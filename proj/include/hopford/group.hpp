#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopford {

/// Build recipe for the supported group families. semidirect_qp(q, p, r) is
/// Z_q x| Z_p with s a s^{-1} = a^r; elements are enumerated as s^i a^j in
/// lexicographic (i, j) order. Products enumerate pairs, left factor major.
struct GroupSpec {
    enum class Kind { Cyclic, SemidirectQP, Product };
    Kind kind = Kind::Cyclic;
    unsigned k = 1;              // Cyclic order
    unsigned q = 0, p = 0, r = 0;  // SemidirectQP parameters
    std::string gen1 = "g", gen2;  // generator names (gen1 = s, gen2 = a for semidirect)
    std::shared_ptr<GroupSpec> left, right;  // Product factors

    static GroupSpec cyclic(unsigned k, std::string gen = "g");
    static GroupSpec semidirect_qp(unsigned q, unsigned p, unsigned r, std::string s = "s",
                                   std::string a = "a");
    static GroupSpec product(GroupSpec l, GroupSpec r);
};

/// Finite group as an explicit multiplication table. Invariants checked at
/// build time: Latin square, identity/inverses, associativity (all triples
/// for order <= 64, seed-fixed samples above).
struct FiniteGroup {
    unsigned order = 0;
    std::vector<std::string> labels;
    std::vector<uint32_t> table;  // row-major order x order
    std::vector<uint32_t> inverse;
    uint32_t identity = 0;
    std::optional<GroupSpec> spec;  // build provenance, used by all_irreps

    uint32_t mul(uint32_t g, uint32_t h) const { return table[size_t(g) * order + h]; }
    uint32_t inv(uint32_t g) const { return inverse[g]; }
    uint32_t pow(uint32_t g, long e) const;

    unsigned element_order(uint32_t g) const;
    /// Exponent of the group: lcm of all element orders.
    unsigned exponent() const;
    /// Closure of the generating set under multiplication; sorted indices.
    std::vector<uint32_t> subgroup_generated(const std::vector<uint32_t>& gens) const;
    bool is_abelian() const;
};

FiniteGroup build_group(const GroupSpec& spec);

/// Element index helpers for semidirect_qp groups: s^i a^j <-> i*q + j.
inline uint32_t sd_index(unsigned q, unsigned i, unsigned j) { return i * q + j; }
/// Element index in a product group from factor indices.
inline uint32_t prod_index(const FiniteGroup& right_factor, uint32_t l, uint32_t r) {
    return l * right_factor.order + r;
}

}  // namespace hopford
