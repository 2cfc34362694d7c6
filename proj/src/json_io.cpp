#include "hopford/json_io.hpp"

#include <stdexcept>

namespace hopford {

Json coeff_to_json(const CycNumber& c) {
    Json arr = Json::array();
    for (const std::string& s : serialize_coords(c)) arr.push_back(s);
    return arr;
}

CycNumber coeff_from_json(const FieldPtr& field, const Json& j) {
    std::vector<std::string> strs;
    for (const auto& s : j) strs.push_back(s.get<std::string>());
    return parse_coords(field, strs);
}

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const CycNumber& c : v) arr.push_back(coeff_to_json(c));
    return arr;
}

Vec vec_from_json(const FieldPtr& field, const Json& j) {
    Vec v;
    for (const auto& c : j) v.push_back(coeff_from_json(field, c));
    return v;
}

Json tensor_to_json(const SparseMulti& t) {
    SparseMulti s = t;
    s.flush();
    Json arr = Json::array();
    for (const auto& [key, c] : s.terms()) {
        Json entry = Json::array();
        for (uint32_t leg : s.unpack(key)) entry.push_back(leg);
        entry.push_back(coeff_to_json(c));
        arr.push_back(entry);
    }
    return arr;
}

SparseMulti tensor_from_json(const FieldPtr& field, unsigned dim, const Json& j) {
    SparseMulti t(dim, 2);
    for (const auto& entry : j) {
        if (entry.size() != 3) throw std::invalid_argument("tensor_from_json: bad entry");
        uint64_t key = uint64_t(entry[0].get<uint32_t>()) * dim + entry[1].get<uint32_t>();
        t.add_term(key, coeff_from_json(field, entry[2]));
    }
    t.flush();
    return t;
}

Json group_spec_to_json(const GroupSpec& s) {
    Json j;
    switch (s.kind) {
        case GroupSpec::Kind::Cyclic:
            j["kind"] = "cyclic";
            j["k"] = s.k;
            j["gen"] = s.gen1;
            break;
        case GroupSpec::Kind::SemidirectQP:
            j["kind"] = "semidirect_qp";
            j["q"] = s.q;
            j["p"] = s.p;
            j["r"] = s.r;
            j["gen_s"] = s.gen1;
            j["gen_a"] = s.gen2;
            break;
        case GroupSpec::Kind::Product:
            j["kind"] = "product";
            j["left"] = group_spec_to_json(*s.left);
            j["right"] = group_spec_to_json(*s.right);
            break;
    }
    return j;
}

GroupSpec group_spec_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic")
        return GroupSpec::cyclic(j.at("k").get<unsigned>(), j.value("gen", "g"));
    if (kind == "semidirect_qp")
        return GroupSpec::semidirect_qp(j.at("q").get<unsigned>(), j.at("p").get<unsigned>(),
                                        j.at("r").get<unsigned>(), j.value("gen_s", "s"),
                                        j.value("gen_a", "a"));
    if (kind == "product")
        return GroupSpec::product(group_spec_from_json(j.at("left")),
                                  group_spec_from_json(j.at("right")));
    throw std::invalid_argument("group_spec_from_json: unknown kind '" + kind + "'");
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["order"] = g.order;
    j["identity"] = g.identity;
    j["labels"] = g.labels;
    Json table = Json::array();
    for (unsigned i = 0; i < g.order; ++i) {
        Json row = Json::array();
        for (unsigned k = 0; k < g.order; ++k) row.push_back(g.table[size_t(i) * g.order + k]);
        table.push_back(row);
    }
    j["table"] = table;
    j["inverse"] = g.inverse;
    if (g.spec) j["spec"] = group_spec_to_json(*g.spec);
    return j;
}

namespace {

const char* provenance_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::GroupAlgebra: return "group_algebra";
        case Provenance::Kind::TwistedGroupAlgebra: return "twisted_group_algebra";
        case Provenance::Kind::DualGroupAlgebra: return "dual_group_algebra";
        default: return "custom";
    }
}

Provenance::Kind provenance_kind(const std::string& s) {
    if (s == "group_algebra") return Provenance::Kind::GroupAlgebra;
    if (s == "twisted_group_algebra") return Provenance::Kind::TwistedGroupAlgebra;
    if (s == "dual_group_algebra") return Provenance::Kind::DualGroupAlgebra;
    return Provenance::Kind::Custom;
}

}  // namespace

Json hopf_to_json(const HopfAlgebraData& h) {
    Json j;
    j["format"] = "hopford-algebra-v1";
    j["field"] = h.field->conductor();
    j["dim"] = h.dim;
    j["labels"] = h.labels;
    j["unit"] = vec_to_json(h.unit);
    j["counit"] = vec_to_json(h.counit);
    Json mult = Json::array();
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t jx = 0; jx < h.dim; ++jx)
            h.for_mult(i, jx, [&](uint32_t k, const CycNumber& c) {
                mult.push_back(Json::array({i, jx, k, coeff_to_json(c)}));
            });
    j["mult"] = mult;
    if (!h.algebra_only) {
        Json comult = Json::array();
        for (uint32_t i = 0; i < h.dim; ++i)
            h.for_comult(i, [&](uint32_t a, uint32_t b, const CycNumber& c) {
                comult.push_back(Json::array({i, a, b, coeff_to_json(c)}));
            });
        j["comult"] = comult;
        Json anti = Json::array();
        for (uint32_t col = 0; col < h.dim; ++col)
            h.for_antipode(col, [&](uint32_t row, const CycNumber& c) {
                anti.push_back(Json::array({row, col, coeff_to_json(c)}));
            });
        j["antipode"] = anti;
    } else {
        j["algebra_only"] = true;
    }
    Json prov;
    prov["kind"] = provenance_name(h.provenance.kind);
    if (h.provenance.group_spec) prov["group_spec"] = group_spec_to_json(*h.provenance.group_spec);
    if (h.provenance.kind == Provenance::Kind::TwistedGroupAlgebra) {
        prov["p"] = h.provenance.p;
        prov["q"] = h.provenance.q;
        prov["r"] = h.provenance.r;
        prov["zeta_exp"] = h.provenance.zeta_exp;
    }
    j["provenance"] = prov;
    return j;
}

HopfPtr hopf_from_json(const Json& j) {
    if (j.value("format", "") != "hopford-algebra-v1")
        throw std::invalid_argument("hopf_from_json: unknown format");
    auto h = std::make_shared<HopfAlgebraData>();
    h->field = CycField::get(j.at("field").get<unsigned>());
    h->dim = j.at("dim").get<uint32_t>();
    h->labels = j.at("labels").get<std::vector<std::string>>();
    h->unit = vec_from_json(h->field, j.at("unit"));
    h->counit = vec_from_json(h->field, j.at("counit"));
    h->mult.assign(size_t(h->dim) * h->dim, {});
    for (const auto& e : j.at("mult")) {
        uint32_t i = e[0].get<uint32_t>(), jx = e[1].get<uint32_t>(), k = e[2].get<uint32_t>();
        h->mult[size_t(i) * h->dim + jx].push_back(Term{k, coeff_from_json(h->field, e[3])});
    }
    h->algebra_only = j.value("algebra_only", false);
    if (!h->algebra_only) {
        h->comult.assign(h->dim, {});
        for (const auto& e : j.at("comult")) {
            uint32_t i = e[0].get<uint32_t>(), a = e[1].get<uint32_t>(), b = e[2].get<uint32_t>();
            h->comult[i].push_back(TensorTerm{a, b, coeff_from_json(h->field, e[3])});
        }
        h->antipode.assign(h->dim, {});
        for (const auto& e : j.at("antipode")) {
            uint32_t row = e[0].get<uint32_t>(), col = e[1].get<uint32_t>();
            h->antipode[col].push_back(Term{row, coeff_from_json(h->field, e[2])});
        }
    }
    if (j.contains("provenance")) {
        const Json& prov = j.at("provenance");
        h->provenance.kind = provenance_kind(prov.value("kind", "custom"));
        if (prov.contains("group_spec"))
            h->provenance.group_spec = group_spec_from_json(prov.at("group_spec"));
        h->provenance.p = prov.value("p", 0u);
        h->provenance.q = prov.value("q", 0u);
        h->provenance.r = prov.value("r", 0u);
        h->provenance.zeta_exp = prov.value("zeta_exp", 1u);
    }
    h->cache_one();
    // Reattach the group table when the provenance carries a spec and the
    // explicit tensors agree with it exactly; a perturbed file stays explicit.
    if (h->provenance.group_spec && (h->provenance.kind == Provenance::Kind::GroupAlgebra ||
                                     h->provenance.kind == Provenance::Kind::TwistedGroupAlgebra)) {
        FiniteGroup g = build_group(*h->provenance.group_spec);
        bool match = g.order == h->dim;
        for (uint32_t i = 0; i < h->dim && match; ++i)
            for (uint32_t jx = 0; jx < h->dim && match; ++jx) {
                const auto& terms = h->mult[size_t(i) * h->dim + jx];
                match = terms.size() == 1 && terms[0].idx == g.mul(i, jx) && terms[0].coeff.is_one();
            }
        if (match) {
            h->group = std::move(g);
            h->group_mult = true;
            h->mult.clear();
            if (h->provenance.kind == Provenance::Kind::GroupAlgebra) {
                // plain group algebra: collapse the coalgebra to table form too
                bool co_match = true;
                for (uint32_t i = 0; i < h->dim && co_match; ++i) {
                    const auto& terms = h->comult[i];
                    co_match = terms.size() == 1 && terms[0].a == i && terms[0].b == i &&
                               terms[0].coeff.is_one();
                }
                bool s_match = true;
                for (uint32_t col = 0; col < h->dim && s_match; ++col) {
                    const auto& terms = h->antipode[col];
                    s_match = terms.size() == 1 && terms[0].idx == h->group->inv(col) &&
                              terms[0].coeff.is_one();
                }
                if (co_match && s_match) {
                    h->group_comult = h->group_antipode = true;
                    h->comult.clear();
                    h->antipode.clear();
                }
            }
        }
    }
    return h;
}

Json twist_to_json(const TwistData& t) {
    Json j;
    j["J"] = tensor_to_json(t.J);
    j["Jinv"] = tensor_to_json(t.Jinv);
    j["U"] = vec_to_json(t.U);
    j["Uinv"] = vec_to_json(t.Uinv);
    return j;
}

TwistData twist_from_json(HopfPtr parent, const Json& j) {
    TwistData t;
    t.parent = parent;
    t.J = tensor_from_json(parent->field, parent->dim, j.at("J"));
    t.Jinv = tensor_from_json(parent->field, parent->dim, j.at("Jinv"));
    t.U = vec_from_json(parent->field, j.at("U"));
    t.Uinv = vec_from_json(parent->field, j.at("Uinv"));
    return t;
}

Json axiom_report_to_json(const AxiomReport& rep) {
    Json j;
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = c.pass ? "pass" : "fail";
        e["mode"] = c.mode;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace hopford
