#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopford/group.hpp"
#include "hopford/linalg.hpp"

namespace hopford {

struct Term {
    uint32_t idx;
    CycNumber coeff;
};

struct TensorTerm {
    uint32_t a, b;
    CycNumber coeff;
};

/// Where an algebra came from. Downstream machinery that needs irreducible
/// representations (Wedderburn data, character saturation) keys off this.
struct Provenance {
    enum class Kind { Custom, GroupAlgebra, TwistedGroupAlgebra, DualGroupAlgebra };
    Kind kind = Kind::Custom;
    std::optional<GroupSpec> group_spec;
    unsigned p = 0, q = 0, r = 0, zeta_exp = 1;  // twist parameters when twisted
};

/// Finite-dimensional Hopf algebra given by exact structure-constant tensors
/// over a cyclotomic field. Group-algebra-backed instances keep the group
/// table instead of materializing dim^2 multiplication triples; accessors
/// below hide the difference.
class HopfAlgebraData {
public:
    FieldPtr field;
    uint32_t dim = 0;
    std::vector<std::string> labels;

    std::optional<FiniteGroup> group;  // set when multiplication is table-backed
    bool group_mult = false;           // x_i x_j = x_{table(i,j)}
    bool group_comult = false;         // Delta(x_i) = x_i (x) x_i
    bool group_antipode = false;       // S(x_i) = x_{i^{-1}}
    bool algebra_only = false;         // no coalgebra data (synthetic controls)

    std::vector<std::vector<Term>> mult;        // [i*dim+j], used when !group_mult
    std::vector<CycNumber> unit;                // dense coordinates of 1
    std::vector<std::vector<TensorTerm>> comult;  // per basis element, used when !group_comult
    std::vector<CycNumber> counit;              // dense covector
    std::vector<std::vector<Term>> antipode;    // column j = S(x_j), used when !group_antipode

    Provenance provenance;

    template <class F>
    void for_mult(uint32_t i, uint32_t j, F&& f) const {
        if (group_mult) {
            f(group->mul(i, j), one_);
        } else {
            for (const Term& t : mult[size_t(i) * dim + j]) f(t.idx, t.coeff);
        }
    }
    template <class F>
    void for_comult(uint32_t i, F&& f) const {
        if (group_comult) {
            f(i, i, one_);
        } else {
            for (const TensorTerm& t : comult[i]) f(t.a, t.b, t.coeff);
        }
    }
    template <class F>
    void for_antipode(uint32_t j, F&& f) const {
        if (group_antipode) {
            f(group->inv(j), one_);
        } else {
            for (const Term& t : antipode[j]) f(t.idx, t.coeff);
        }
    }

    void cache_one() { one_ = field->one(); }
    const CycNumber& one_coeff() const { return one_; }

    /// Materialize explicit mult triples (used by negative controls that
    /// perturb an entry, and by serialization).
    void densify_mult();
    void densify_comult();
    void densify_antipode();

private:
    CycNumber one_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

struct AlgElem {
    const HopfAlgebraData* parent = nullptr;
    Vec coords;
};

/// Sparse element of a tensor power H^(x)arity: packed key = sum leg_t * dim^(arity-1-t).
class SparseMulti {
public:
    SparseMulti(uint32_t dim, unsigned arity) : dim_(dim), arity_(arity) {}

    uint32_t dim() const { return dim_; }
    unsigned arity() const { return arity_; }
    const std::vector<std::pair<uint64_t, CycNumber>>& terms() const { return terms_; }
    std::vector<std::pair<uint64_t, CycNumber>>& terms_mut() { return terms_; }

    uint64_t pack(const std::vector<uint32_t>& legs) const;
    std::vector<uint32_t> unpack(uint64_t key) const;

    void add_term(uint64_t key, const CycNumber& c);  // accumulate, keeps sorted on flush
    void flush();                                     // sort + combine + drop zeros
    bool operator==(const SparseMulti& o) const;
    bool is_zero() const { return terms_.empty(); }

    SparseMulti& scale(const Rational& c);

private:
    uint32_t dim_;
    unsigned arity_;
    std::vector<std::pair<uint64_t, CycNumber>> terms_;  // sorted by key after flush
    bool dirty_ = false;
};

using SparseTensor = SparseMulti;  // arity 2 in most call sites

struct TensorElem {
    const HopfAlgebraData* parent = nullptr;
    SparseMulti t{0, 2};
};

// ---- construction ----

HopfPtr group_algebra(FiniteGroup g, FieldPtr field);
HopfPtr dual_hopf(const HopfAlgebraData& h);

// ---- element arithmetic ----

Vec mult_elem(const HopfAlgebraData& h, const Vec& x, const Vec& y);
Vec antipode_elem(const HopfAlgebraData& h, const Vec& x);
CycNumber counit_elem(const HopfAlgebraData& h, const Vec& x);
SparseMulti comult_elem(const HopfAlgebraData& h, const Vec& x);
SparseMulti tensor_of(const HopfAlgebraData& h, const Vec& x, const Vec& y);
Vec basis_vec(const HopfAlgebraData& h, uint32_t i);
Vec dense_of(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg_count = 1);

/// Componentwise product in H^(x)arity.
SparseMulti mult2(const HopfAlgebraData& h, const SparseMulti& x, const SparseMulti& y);
/// Evaluate a covector against leg `leg`, contracting the tensor.
SparseMulti eval_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg, const Vec& covector);
/// Apply antipode / comultiplication to one leg.
SparseMulti antipode_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg);
SparseMulti comult_leg(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg);
SparseMulti mul_legs(const HopfAlgebraData& h, const SparseMulti& t, unsigned leg);
SparseMulti swap_legs(const HopfAlgebraData& h, const SparseMulti& t, unsigned l1, unsigned l2);

// ---- Sweedler recipes as data ----

/// One step of a typed recipe H^(x)m -> H^(x)n built from (co)multiplication,
/// the antipode, evaluation against fixed covectors, and leg permutation.
/// Recipes are plain data so that character-supported elements can be
/// enumerated, serialized and replayed.
struct RecipeStep {
    enum class Kind { Comult, Antipode, Eval, MulLegs, Swap };
    Kind kind;
    unsigned leg = 0, leg2 = 0;
    Vec covector;        // Eval only
    std::string label;   // covector name, for audit payloads
};

SparseMulti apply_recipe(const HopfAlgebraData& h, const std::vector<Vec>& inputs,
                         const std::vector<RecipeStep>& steps);

// ---- verification ----

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string mode;     // "exhaustive" or "sampled"
    std::string witness;  // human-readable failure detail, empty on pass
};

struct AxiomReport {
    std::vector<CheckResult> checks;
    uint64_t seed = 0;
    unsigned samples = 0;
    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
    unsigned exhaustive_limit = 40;  // full pair/triple checks up to this dimension
    unsigned samples = 2000;
    uint64_t seed = 0x48504f5244ull;
};

AxiomReport verify_axioms(const HopfAlgebraData& h, const VerifyOptions& opts = {});

// ---- subobjects ----

/// Basis (reduced echelon, deterministic) of the unital subalgebra generated
/// by the given elements.
std::vector<Vec> subalgebra_closure(const HopfAlgebraData& h, const std::vector<Vec>& gens);
bool is_hopf_subalgebra(const HopfAlgebraData& h, const std::vector<Vec>& basis);
/// Restrict all structure maps to a subspace that is a Hopf subalgebra.
HopfPtr sub_hopf_algebra(const HopfAlgebraData& h, const std::vector<Vec>& basis,
                         const std::vector<std::string>& labels = {});

}  // namespace hopford
