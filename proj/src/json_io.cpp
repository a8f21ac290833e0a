#include "diamond/json_io.hpp"

#include <fstream>
#include <sstream>

namespace diamond {

json encode_scalar(const GaussianRational& v, Scalars field) {
    if (field == Scalars::rational) {
        if (!v.is_real()) {
            throw std::invalid_argument("encode_scalar: imaginary value in rational context");
        }
        return v.re().str();
    }
    return json{{"im", v.im().str()}, {"re", v.re().str()}};
}

GaussianRational decode_scalar(const json& j) {
    if (j.is_string()) {
        return GaussianRational(Rational::from_string(j.get<std::string>()));
    }
    if (j.is_object()) {
        if (!j.contains("re") || !j.contains("im")) {
            throw std::invalid_argument("decode_scalar: object needs \"re\" and \"im\"");
        }
        return GaussianRational(Rational::from_string(j.at("re").get<std::string>()),
                                Rational::from_string(j.at("im").get<std::string>()));
    }
    throw std::invalid_argument("decode_scalar: expected string or {re,im} object");
}

json encode_algebra(const AlgebraTable& a) {
    json table = json::array();
    for (const auto& [pair, terms] : a.table) {  // map order = sorted by (i,j)
        for (const auto& [k, coeff] : terms) {
            table.push_back(json::array({pair.first, pair.second, k,
                                         encode_scalar(coeff, a.field)}));
        }
    }
    return json{{"dim", a.dim},
                {"field", scalars_name(a.field)},
                {"labels", a.labels},
                {"table", std::move(table)}};
}

AlgebraTable decode_algebra(const json& j) {
    AlgebraTable a;
    a.dim = j.at("dim").get<int>();
    auto field = scalars_from_name(j.at("field").get<std::string>());
    if (!field) throw std::invalid_argument("decode_algebra: unknown field tag");
    a.field = *field;
    a.labels = j.at("labels").get<std::vector<std::string>>();
    std::map<std::pair<int, int>, std::map<int, GaussianRational>> acc;
    for (const json& entry : j.at("table")) {
        if (!entry.is_array() || entry.size() != 4) {
            throw std::invalid_argument("decode_algebra: table entries are [i,j,k,scalar]");
        }
        acc[{entry[0].get<int>(), entry[1].get<int>()}][entry[2].get<int>()] =
            decode_scalar(entry[3]);
    }
    for (const auto& [pair, terms] : acc) {
        SparseVec v;
        for (const auto& [k, coeff] : terms) v.emplace_back(k, coeff);
        a.set_bracket(pair.first, pair.second, std::move(v));
    }
    a.validate();
    return a;
}

json encode_rep(const MatrixRep& rep) {
    json images = json::object();
    for (int b = 0; b < rep.algebra.dim; ++b) {
        json matrix = json::array();
        for (int r = 0; r < rep.order; ++r) {
            json row = json::array();
            for (int c = 0; c < rep.order; ++c) {
                row.push_back(encode_scalar(rep.images[b].at(r, c), rep.algebra.field));
            }
            matrix.push_back(std::move(row));
        }
        images[rep.algebra.labels[b]] = std::move(matrix);
    }
    return json{{"algebra", rep.algebra.labels},
                {"images", std::move(images)},
                {"order", rep.order}};
}

MatrixRep decode_rep(const json& j, AlgebraTable algebra) {
    MatrixRep rep;
    rep.order = j.at("order").get<int>();
    auto labels = j.at("algebra").get<std::vector<std::string>>();
    if (labels != algebra.labels) {
        throw std::invalid_argument("decode_rep: label list does not match the algebra");
    }
    rep.algebra = std::move(algebra);
    const json& images = j.at("images");
    rep.images.assign(rep.algebra.dim, ExactMatrix(rep.order, rep.order));
    for (int b = 0; b < rep.algebra.dim; ++b) {
        const json& matrix = images.at(rep.algebra.labels[b]);
        if (static_cast<int>(matrix.size()) != rep.order) {
            throw std::invalid_argument("decode_rep: image row count != order");
        }
        for (int r = 0; r < rep.order; ++r) {
            const json& row = matrix[r];
            if (static_cast<int>(row.size()) != rep.order) {
                throw std::invalid_argument("decode_rep: image column count != order");
            }
            for (int c = 0; c < rep.order; ++c) {
                rep.images[b].at(r, c) = decode_scalar(row[c]);
            }
        }
    }
    return rep;
}

json encode_action(const ModuleAction& act) {
    json entries = json::array();
    for (const auto& [key, row] : act.action) {
        json vec = json::array();
        Vec dense = sparse_to_dense(row, act.module_dim);
        for (const GaussianRational& v : dense) {
            vec.push_back(encode_scalar(v, act.algebra.field));
        }
        entries.push_back(json::array({key.first, key.second, std::move(vec)}));
    }
    return json{{"entries", std::move(entries)}, {"module_dim", act.module_dim}};
}

ModuleAction decode_action(const json& j, AlgebraTable algebra) {
    ModuleAction act;
    act.module_dim = j.at("module_dim").get<int>();
    act.algebra = std::move(algebra);
    for (const json& entry : j.at("entries")) {
        if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) {
            throw std::invalid_argument("decode_action: entries are [v,e,[vector]]");
        }
        const int v = entry[0].get<int>(), e = entry[1].get<int>();
        if (v < 0 || v >= act.module_dim || e < 0 || e >= act.algebra.dim) {
            throw std::invalid_argument("decode_action: index out of range");
        }
        if (static_cast<int>(entry[2].size()) != act.module_dim) {
            throw std::invalid_argument("decode_action: vector length != module_dim");
        }
        Vec dense(act.module_dim);
        for (int t = 0; t < act.module_dim; ++t) dense[t] = decode_scalar(entry[2][t]);
        act.set_action(v, e, sparse_from_dense(dense));
    }
    return act;
}

json encode_omega(const ExtensionProblem& p, const Cocycle& c) {
    if (!c.shape_matches(p)) throw std::invalid_argument("encode_omega: shape mismatch");
    json out = json::array();
    for (int i = 0; i < c.dim; ++i) {
        for (int j = 0; j < c.dim; ++j) {
            Vec w = c.omega(i, j);
            if (vec_is_zero(w)) continue;
            json vec = json::array();
            for (const GaussianRational& v : w) {
                vec.push_back(encode_scalar(v, p.quotient.field));
            }
            out.push_back(json::array({i, j, std::move(vec)}));
        }
    }
    return out;
}

Cocycle decode_omega(const ExtensionProblem& p, const json& j) {
    Cocycle c = Cocycle::zero(p);
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) {
            throw std::invalid_argument("decode_omega: entries are [i,j,[vector]]");
        }
        const int i = entry[0].get<int>(), jj = entry[1].get<int>();
        if (i < 0 || i >= c.dim || jj < 0 || jj >= c.dim) {
            throw std::invalid_argument("decode_omega: index out of range");
        }
        if (static_cast<int>(entry[2].size()) != c.module_dim) {
            throw std::invalid_argument("decode_omega: vector length != module_dim");
        }
        for (int t = 0; t < c.module_dim; ++t) c.set(i, jj, t, decode_scalar(entry[2][t]));
    }
    return c;
}

json encode_cohomology(const ExtensionProblem& p, const CohomologyReport& rep) {
    json reps = json::array();
    for (const Cocycle& c : rep.representatives) reps.push_back(encode_omega(p, c));
    return json{{"coboundary_dim", rep.coboundaries.dim()},
                {"cocycle_dim", rep.cocycles.dim()},
                {"quotient_dim", rep.quotient_dim},
                {"representatives", std::move(reps)}};
}

std::string to_canonical_string(const json& j) { return j.dump(2) + "\n"; }

json parse_json(const std::string& text) { return json::parse(text); }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_canonical_string(j);
}

}  // namespace diamond
