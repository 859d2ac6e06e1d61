#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "xdl/annihilator.hpp"
#include "xdl/dimension.hpp"
#include "xdl/io.hpp"
#include "xdl/subspace.hpp"

namespace xdl::report {

using json = nlohmann::ordered_json;

inline std::string factored_string(std::uint64_t n) {
    if (n == 1) return "1";
    const Factorization f = factorize(n);
    std::string out;
    for (const auto& [q, e] : f.factors) {
        if (!out.empty()) out += "*";
        out += std::to_string(q);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline json vector_json(const RVector& x) {
    json arr = json::array();
    for (const auto& e : x.entries()) arr.push_back(rational_to_string(e));
    return arr;
}

inline json matrix_json(const RMatrix& A) {
    json rows = json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(rational_to_string(A(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(rows)}};
}

inline json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_string(c));
    return json{{"text", poly_to_string(p)}, {"coeffs", std::move(coeffs)}};
}

inline json subspace_json(const Subspace& S) {
    json basis = json::array();
    for (const auto& v : S.basis()) basis.push_back(vector_json(v));
    return json{{"ambient", S.ambient()}, {"dim", S.dim()}, {"basis", std::move(basis)}};
}

inline json profile_json(const DimensionProfile& prof) {
    json kp = json::array();
    for (const auto& e : prof.k_primes)
        kp.push_back(json{{"prime", e.prime}, {"mu", e.mu}, {"beta", e.beta},
                          {"tau", e.tau}, {"eta", e.eta}});
    json mp = json::array();
    for (const auto& e : prof.m_primes)
        mp.push_back(json{{"prime", e.prime}, {"nu", e.nu}, {"theta", e.theta}});
    return json{{"m", prof.m},
                {"k", prof.k},
                {"p", prof.p},
                {"alpha", prof.alpha},
                {"k_primes", std::move(kp)},
                {"d", prof.d},
                {"m_primes", std::move(mp)},
                {"p1", prof.p1},
                {"r_star", prof.r_star},
                {"r_star_factored", factored_string(prof.r_star)},
                {"t_star_bound", prof.t_star_bound}};
}

inline const char* relation_name(SubspaceRelation r) {
    switch (r) {
        case SubspaceRelation::Equal: return "equal";
        case SubspaceRelation::FirstInSecond: return "first-in-second";
        case SubspaceRelation::SecondInFirst: return "second-in-first";
        default: return "incomparable";
    }
}

// ---------------------------------------------------------------------------
// Command documents
// ---------------------------------------------------------------------------

inline json dims_document(std::uint64_t m, std::uint64_t k, std::uint64_t p, std::size_t t_max) {
    const DimensionProfile prof = build_profile(m, k, p);
    const DimTrajectory traj = dim_trajectory(m, k, p, t_max);
    json rows = json::array();
    for (std::size_t t = 0; t < traj.dims.size(); ++t) {
        json row{{"t", t}, {"r", traj.dims[t]}, {"factored", factored_string(traj.dims[t])}};
        row["closed_form"] = t == 0 ? json(nullptr) : json(closed_form_dim(prof, t));
        rows.push_back(std::move(row));
    }
    return json{{"command", "dims"},
                {"m", m},
                {"k", k},
                {"p", p},
                {"t_max", t_max},
                {"table", std::move(rows)},
                {"r_star", prof.r_star},
                {"r_star_factored", factored_string(prof.r_star)},
                {"t_star_bound", prof.t_star_bound},
                {"minimal_invariant_time", minimal_invariant_time(m, k, p)}};
}

inline json profile_document(std::uint64_t m, std::uint64_t k, std::uint64_t p) {
    json doc = profile_json(build_profile(m, k, p));
    doc["command"] = "profile";
    doc["minimal_invariant_time"] = minimal_invariant_time(m, k, p);
    return doc;
}

inline json reachdim_document(std::uint64_t m, std::uint64_t k, std::uint64_t p, std::uint64_t r) {
    const ReachDimVerdict v = is_reachable_dim(m, k, p, r);
    json times = json::array();
    for (unsigned t : v.witness_times) times.push_back(t);
    return json{{"command", "reachdim"},
                {"m", m},
                {"k", k},
                {"p", p},
                {"r", r},
                {"reachable", v.reachable},
                {"witness_times", std::move(times)},
                {"includes_time_zero", v.includes_time_zero},
                {"is_invariant_dim", v.is_invariant_dim},
                {"all_times_from", v.is_invariant_dim ? json(v.min_invariant_time) : json(nullptr)}};
}

inline json basis_document(const RMatrix& A, std::size_t p, std::size_t t) {
    const Subspace S = reach_basis(A, p, t);
    return json{{"command", "basis"}, {"p", p}, {"t", t}, {"subspace", subspace_json(S)}};
}

inline json member_verdict_json(const ReachVerdict& v) {
    json doc{{"reachable", v.reachable},
             {"rank_with", v.rank_with},
             {"rank_without", v.rank_without}};
    if (!v.diagnostic.empty()) doc["diagnostic"] = v.diagnostic;
    return doc;
}

inline json member_document(const RMatrix& A, std::size_t p, const RVector& x,
                            std::optional<std::size_t> t, std::size_t t_max) {
    json doc{{"command", "member"}, {"p", p}, {"vector", vector_json(x)}};
    if (t) {
        const Subspace S = reach_basis(A, p, *t);
        json v = member_verdict_json(is_member(S, x));
        v["t"] = *t;
        doc["verdict"] = std::move(v);
    } else {
        json verdicts = json::array();
        for (std::size_t tt = 0; tt <= t_max; ++tt) {
            const Subspace S = reach_basis(A, p, tt);
            json v = member_verdict_json(is_member(S, x));
            v["t"] = tt;
            verdicts.push_back(std::move(v));
        }
        doc["t_max"] = t_max;
        doc["verdicts"] = std::move(verdicts);
        json times = json::array();
        for (std::size_t tt : scan_reachability(A, p, x, t_max)) times.push_back(tt);
        doc["reachable_times"] = std::move(times);
    }
    return doc;
}

struct AnnihilatorRequest {
    std::optional<RVector> vector;    // minimal annihilator of one vector
    std::optional<std::size_t> space; // minimal annihilator of V_n
    std::optional<std::size_t> p;     // minimal annihilator of the reachable union
};

inline json annihilator_document(const RMatrix& A, const AnnihilatorRequest& req) {
    json doc{{"command", "annihilator"}};
    if (req.vector) {
        doc["target"] = "vector";
        doc["vector"] = vector_json(*req.vector);
        doc["annihilator"] = poly_json(min_annihilator_vector(A, *req.vector));
    } else if (req.space) {
        doc["target"] = "space";
        doc["n"] = *req.space;
        doc["annihilator"] = poly_json(min_annihilator_space(A, *req.space));
    } else if (req.p) {
        const std::uint64_t m = A.rows();
        const std::uint64_t k = A.cols() / A.rows();
        doc["target"] = "union";
        doc["p"] = *req.p;
        doc["t_star"] = minimal_invariant_time(m, k, *req.p);
        doc["annihilator"] = poly_json(min_annihilator_union(A, *req.p));
    } else {
        throw std::invalid_argument("annihilator: one of vector/space/union must be requested");
    }
    return doc;
}

/// Full analysis for one system (A, V_p): profile, dimension table, reachable
/// bases, minimal annihilators, the union-properness verdict and the
/// relations between the post-invariant reachable subspaces. A failing
/// section is reported in place; the remaining sections are still emitted.
inline json report_document(const RMatrix& A, std::size_t p) {
    detail::require_dimension_bounded(A, "report");
    const std::uint64_t m = A.rows();
    const std::uint64_t k = A.cols() / A.rows();

    json doc{{"command", "report"}, {"matrix", matrix_json(A)}, {"p", p}};
    auto section = [&doc](const char* name, auto&& fn) {
        try {
            doc[name] = fn();
        } catch (const std::exception& e) {
            doc[name] = json{{"error", e.what()}};
        }
    };

    const DimensionProfile prof = build_profile(m, k, p);
    const unsigned t_star = minimal_invariant_time(m, k, p);
    const std::size_t t_hi = t_star + 2;

    section("profile", [&] { return profile_json(prof); });
    section("dims", [&] {
        json d = dims_document(m, k, p, t_hi);
        d.erase("command");
        return d;
    });
    section("bases", [&] {
        json arr = json::array();
        for (std::size_t t = 0; t <= t_hi; ++t)
            arr.push_back(json{{"t", t}, {"subspace", subspace_json(reach_basis(A, p, t))}});
        return arr;
    });
    section("annihilators", [&] {
        json qi = json::array();
        Poly q_union = Poly::one();
        for (std::size_t i = 0; i < p; ++i) {
            const Poly qi_poly =
                min_annihilator_vector(A, power_vprod(A, t_star, unit_vector(p, i)));
            qi.push_back(json{{"i", i + 1}, {"q", poly_json(qi_poly)}});
            q_union = poly_lcm(q_union, qi_poly);
        }
        const Poly f = min_annihilator_space(A, static_cast<std::size_t>(prof.r_star));
        json ann{{"q_i", std::move(qi)},
                 {"q_union", poly_json(q_union)},
                 {"f_space", poly_json(f)}};
        if (poly_divides(q_union, f)) {
            const Poly quotient = poly_divmod(f, q_union).first;
            ann["f_over_q"] = poly_json(quotient);
            ann["f_equals_quotient_times_q"] = (quotient * q_union == f);
        } else {
            ann["f_over_q"] = nullptr;
        }
        return ann;
    });
    section("union_proper", [&] {
        return json(union_proper_test(A, p) == UnionVerdict::ProperSubset ? "proper-subset"
                                                                          : "inconclusive");
    });
    section("relations", [&] {
        json arr = json::array();
        std::vector<Subspace> spaces;
        for (std::size_t t = t_star; t <= t_hi; ++t) spaces.push_back(reach_basis(A, p, t));
        for (std::size_t a = 0; a < spaces.size(); ++a)
            for (std::size_t b = a + 1; b < spaces.size(); ++b) {
                const RelationReport rel = subspace_relate(spaces[a], spaces[b]);
                arr.push_back(json{{"t1", t_star + a},
                                   {"t2", t_star + b},
                                   {"relation", relation_name(rel.relation)},
                                   {"intersection_dim", rel.intersection_dim}});
            }
        return arr;
    });
    return doc;
}

// ---------------------------------------------------------------------------
// Text / CSV rendering
// ---------------------------------------------------------------------------

inline std::string render_dims_text(const json& doc) {
    std::string out = "dims: m=" + doc["m"].dump() + " k=" + doc["k"].dump() +
                      " p=" + doc["p"].dump() + "\n";
    out += "t\tr(t)\tclosed\tfactored\n";
    for (const auto& row : doc["table"]) {
        out += row["t"].dump() + "\t" + row["r"].dump() + "\t";
        out += row["closed_form"].is_null() ? "-" : row["closed_form"].dump();
        out += "\t" + row["factored"].get<std::string>() + "\n";
    }
    out += "r* = " + doc["r_star"].dump() + " (" + doc["r_star_factored"].get<std::string>() +
           ")\n";
    out += "t* bound = " + doc["t_star_bound"].dump() + "\n";
    out += "minimal t* = " + doc["minimal_invariant_time"].dump() + "\n";
    return out;
}

inline std::string render_dims_csv(const json& doc) {
    std::string out = "t,r,closed,factored\n";
    for (const auto& row : doc["table"]) {
        out += row["t"].dump() + "," + row["r"].dump() + ",";
        out += row["closed_form"].is_null() ? "-" : row["closed_form"].dump();
        out += "," + row["factored"].get<std::string>() + "\n";
    }
    return out;
}

/// Generic key/value text rendering used by the non-tabular commands.
inline void render_value_text(const json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                out += indent + key + ":\n";
                render_value_text(val, indent + "  ", out);
            } else {
                out += indent + key + " = " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
            }
        }
    } else if (v.is_array()) {
        bool scalar_list = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) scalar_list = false;
        if (scalar_list) {
            std::string line;
            for (const auto& e : v) {
                if (!line.empty()) line += " ";
                line += e.is_string() ? e.get<std::string>() : e.dump();
            }
            out += indent + "[" + line + "]\n";
        } else {
            std::size_t idx = 0;
            for (const auto& e : v) {
                out += indent + "- [" + std::to_string(idx++) + "]\n";
                render_value_text(e, indent + "  ", out);
            }
        }
    } else {
        out += indent + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
}

inline std::string render_text(const json& doc) {
    if (doc.contains("command") && doc["command"] == "dims") return render_dims_text(doc);
    std::string out;
    render_value_text(doc, "", out);
    return out;
}

} // namespace xdl::report
