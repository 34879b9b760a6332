#include "ternary/report.hpp"

#include "ternary/errors.hpp"

namespace ternary {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

Json to_json(const Mat& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const OpMap& map) { return to_json(map.matrix()); }

Json to_json(const WitnessPair& pair) { return {{"a", to_json(pair.a)}, {"b", to_json(pair.b)}}; }

Json to_json(const ImplementingTriple& rst) {
    return {{"r", to_json(rst.r)}, {"s", to_json(rst.s)}, {"t", to_json(rst.t)}};
}

Json to_json(const ZReport& report) {
    Json out{{"verdict", to_string(report.verdict)}, {"pairs_examined", report.pairs_examined}};
    if (report.witness) out["witness"] = to_json(*report.witness);
    if (report.value) out["value"] = to_json(*report.value);
    if (report.certificate) out["certificate"] = to_json(*report.certificate);
    return out;
}

Json to_json(const StepReport& report) {
    Json out = Json::object();
    for (const auto& step : report.steps) {
        out[step.name] = step.passed ? Json("pass") : Json("fail: " + step.failure);
    }
    return out;
}

Json to_json(const CompletionSystem& system) {
    Json out{{"unknowns", system.unknowns},
             {"equations", system.equations},
             {"rank", system.rank},
             {"augmented_rank", system.augmented_rank},
             {"feasible", system.feasible()}};
    if (system.gamma) out["gamma"] = to_json(*system.gamma);
    return out;
}

Json to_json(const NoGammaCertificate& cert) {
    return {{"system", to_json(cert.full)},
            {"rank_gap", cert.full.rank_gap()},
            {"gamma_U_from_A_eq_I", to_json(cert.forced_by_left_identity)},
            {"gamma_U_from_B_eq_I", to_json(cert.forced_by_right_identity)},
            {"span_I_V_subsystem", to_json(cert.subalgebra)}};
}

Json to_json(const ExampleZReport& report) {
    return {{"radical_pairs", report.radical_pairs},
            {"radical_cube_triples", report.cube_triples},
            {"invertible_checked", report.invertible_checked},
            {"grid_pairs", report.grid_pairs},
            {"grid_zero_product_pairs", report.grid_zero_product},
            {"verdict", "holds"}};
}

Json to_json(const ContrastCase& c) {
    Json out{{"label", c.label},
             {"delta", to_json(c.delta)},
             {"tau", to_json(c.tau)},
             {"z", to_json(c.z)},
             {"rst_rank", c.rst_rank},
             {"rst_augmented_rank", c.rst_augmented_rank},
             {"rst_feasible", c.rst_rank == c.rst_augmented_rank}};
    if (c.extracted) {
        out["extracted"] = to_json(*c.extracted);
        out["ternary_verified"] = c.ternary_verified;
    }
    return out;
}

Json to_json(const AlgebraCensus& c) {
    return {{"dim", c.dim},
            {"center_dim", c.center_dim},
            {"radical_dim", c.radical_dim},
            {"semisimple_dim", c.semisimple_dim()}};
}

Json structure_constants(const FiniteAlgebra& alg) {
    Json table = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const auto& prod = alg.product(i, j);
            if (prod.empty()) continue;
            Json terms = Json::object();
            for (const auto& e : prod) terms[alg.label(e.col)] = e.value.str();
            table.push_back({{"left", alg.label(i)}, {"right", alg.label(j)}, {"product", std::move(terms)}});
        }
    }
    return {{"basis", alg.labels()}, {"unity", to_json(alg.unity())}, {"products", std::move(table)}};
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of scalars");
    Vec out;
    for (const auto& s : j) {
        if (!s.is_string() && !s.is_number_integer()) throw InputError("scalar must be a string or integer");
        out.push_back(s.is_string() ? Scalar::parse(s.get<std::string>()) : Scalar(s.get<long>()));
    }
    return out;
}

OpMap opmap_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rows");
    std::vector<Vec> rows;
    for (const auto& row : j) rows.push_back(vec_from_json(row));
    return OpMap(Mat::from_rows(rows));
}

}  // namespace ternary
