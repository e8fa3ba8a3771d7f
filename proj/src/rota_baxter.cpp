#include "otrid/rota_baxter.hpp"

#include "json.hpp"
#include "otrid/error.hpp"
#include "otrid/prng.hpp"

namespace otrid {

using nlohmann::ordered_json;

OmegaRBAlgebra::OmegaRBAlgebra(int dim, int omega_size, std::vector<Vec> mult,
                               std::vector<std::vector<Rational>> operators,
                               std::vector<Rational> weights)
    : dim_(dim), omega_size_(omega_size), mult_(std::move(mult)), operators_(std::move(operators)),
      weights_(std::move(weights)) {
    if (dim_ < 1 || omega_size_ < 1) throw Error(Errc::invalid, "rb algebra: dim and |Omega| must be >= 1");
    if (mult_.size() != static_cast<size_t>(dim_) * dim_)
        throw Error(Errc::invalid, "rb algebra: multiplication table must be dim x dim");
    if (operators_.size() != static_cast<size_t>(omega_size_) ||
        weights_.size() != static_cast<size_t>(omega_size_))
        throw Error(Errc::invalid, "rb algebra: one operator and one weight per omega");
    for (const auto& m : operators_)
        if (m.size() != static_cast<size_t>(dim_) * dim_)
            throw Error(Errc::invalid, "rb algebra: operator matrices must be dim x dim");
    for (const auto& v : mult_)
        for (const auto& [k, c] : v.terms())
            if (k < 0 || k >= dim_) throw Error(Errc::invalid, "rb algebra: basis index out of range");
}

OmegaRBAlgebra::Vec OmegaRBAlgebra::mult(const Vec& a, const Vec& b) const {
    return Vec::bilinear([&](int i, int j) { return mult_basis(i, j); }, a, b);
}

OmegaRBAlgebra::Vec OmegaRBAlgebra::apply(int omega, const Vec& v) const {
    if (omega < 0 || omega >= omega_size_) throw Error(Errc::domain, "rb operator: omega out of range");
    const auto& m = operators_[omega];
    Vec out;
    for (const auto& [j, c] : v.terms())
        for (int i = 0; i < dim_; ++i) out.add_term(i, m[i * dim_ + j] * c);
    return out;
}

RBReport check_rb(const OmegaRBAlgebra& alg, const OmegaTable& t) {
    RBReport rep;
    const int d = alg.dim();
    auto show = [](const OmegaRBAlgebra::Vec& v) {
        return v.str([](int k) { return "e" + std::to_string(k); });
    };
    using Vec = OmegaRBAlgebra::Vec;

    // base associativity on basis triples (i, j, k packed into alpha for the report)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec lhs = alg.mult(alg.mult_basis(i, j), Vec::single(k));
                Vec rhs = alg.mult(Vec::single(i), alg.mult_basis(j, k));
                if (lhs != rhs) rep.violations.push_back({"assoc", i, j, k, 0, show(lhs), show(rhs)});
            }

    const int n = t.size();
    if (n != alg.omega_size())
        throw Error(Errc::domain, "check_rb: table size and operator family size differ");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Rational lambda = alg.weight(t.star(a, b));  // lambda_{a,b} = mu_{a*b}
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Vec x = Vec::single(i), y = Vec::single(j);
                    Vec lhs = alg.mult(alg.apply(a, x), alg.apply(b, y));
                    Vec rhs = alg.apply(t.ra(a, b), alg.mult(alg.apply(t.rt(a, b), x), y));
                    rhs = rhs + alg.apply(t.la(a, b), alg.mult(x, alg.apply(t.lt(a, b), y)));
                    rhs = rhs + alg.apply(t.dot(a, b), alg.mult(x, y).scaled(lambda));
                    if (lhs != rhs) rep.violations.push_back({"rb", a, b, i, j, show(lhs), show(rhs)});
                }
        }
    rep.passed = rep.violations.empty();
    return rep;
}

std::string RBReport::to_json() const {
    ordered_json j;
    j["passed"] = passed;
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json jv;
        jv["kind"] = v.kind;
        if (v.kind == "rb") {
            jv["alpha"] = v.alpha;
            jv["beta"] = v.beta;
            jv["basis_pair"] = {v.i, v.j};
        } else {
            jv["basis_triple"] = {v.alpha, v.beta, v.i};
        }
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

RBInducedAlgebra::RBInducedAlgebra(const OmegaTable& t, const OmegaRBAlgebra& alg, bool waive_checks)
    : table_(&t), alg_(&alg) {
    if (t.size() != alg.omega_size())
        throw Error(Errc::domain, "induced structure: table size and operator family size differ");
    if (!waive_checks) {
        if (!check_rb(alg, t).passed)
            throw Error(Errc::invalid, "induced structure: the family identity fails (run rb verify)");
        if (!table_passes(t, CheckLevel::Ets))
            throw Error(Errc::invalid, "induced structure: the table is not an ETS");
    }
}

RBInducedAlgebra::Elem RBInducedAlgebra::product(Prod op, int omega, const Elem& a, const Elem& b) const {
    switch (op) {
        case Prod::Prec: return alg_->mult(a, alg_->apply(omega, b));
        case Prod::Succ: return alg_->mult(alg_->apply(omega, a), b);
        default: return alg_->mult(a, b).scaled(alg_->weight(omega));
    }
}

std::vector<std::array<OmegaRBAlgebra::Vec, 3>> rb_random_triples(int dim, int samples, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::array<OmegaRBAlgebra::Vec, 3>> out;
    out.reserve(samples);
    auto rand_vec = [&]() {
        OmegaRBAlgebra::Vec v;
        for (int i = 0; i < dim; ++i) {
            long long num = rng.range(-3, 3);
            long long den = rng.range(1, 3);
            v.add_term(i, Rational(BigInt(num), BigInt(den)));
        }
        return v;
    };
    for (int s = 0; s < samples; ++s) out.push_back({rand_vec(), rand_vec(), rand_vec()});
    return out;
}

namespace {

Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw Error(Errc::parse, "rb JSON: rationals are integers or 'p/q' strings");
}

}  // namespace

std::string OmegaRBAlgebra::to_json() const {
    ordered_json j;
    j["dim"] = dim_;
    ordered_json mult = ordered_json::array();
    for (int i = 0; i < dim_; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < dim_; ++k) {
            ordered_json cell = ordered_json::array();
            for (const auto& [b, c] : mult_basis(i, k).terms())
                cell.push_back(ordered_json::array({c.str(), b}));
            row.push_back(cell);
        }
        mult.push_back(row);
    }
    j["mult"] = mult;
    ordered_json ops = ordered_json::object();
    ordered_json ws = ordered_json::object();
    for (int w = 0; w < omega_size_; ++w) {
        ordered_json m = ordered_json::array();
        for (int i = 0; i < dim_; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < dim_; ++k) row.push_back(operators_[w][i * dim_ + k].str());
            m.push_back(row);
        }
        ops[std::to_string(w)] = m;
        ws[std::to_string(w)] = weights_[w].str();
    }
    j["operators"] = ops;
    j["weights"] = ws;
    return j.dump(2);
}

OmegaRBAlgebra OmegaRBAlgebra::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::parse, std::string("rb JSON: ") + e.what());
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw Error(Errc::parse, "rb JSON: missing integer 'dim'");
    int d = j["dim"].get<int>();
    if (!j.contains("mult") || !j["mult"].is_array() || static_cast<int>(j["mult"].size()) != d)
        throw Error(Errc::parse, "rb JSON: 'mult' must be a dim x dim array");
    std::vector<Vec> mult(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        const auto& row = j["mult"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw Error(Errc::parse, "rb JSON: 'mult' must be a dim x dim array");
        for (int k = 0; k < d; ++k) {
            Vec v;
            for (const auto& pair : row[k]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer())
                    throw Error(Errc::parse, "rb JSON: mult entries are [coeff, basis] pairs");
                v.add_term(pair[1].get<int>(), rational_from_json(pair[0]));
            }
            mult[i * d + k] = std::move(v);
        }
    }
    if (!j.contains("operators") || !j.contains("weights"))
        throw Error(Errc::parse, "rb JSON: missing 'operators' or 'weights'");
    int omega = static_cast<int>(j["operators"].size());
    std::vector<std::vector<Rational>> ops(omega);
    std::vector<Rational> ws(omega);
    for (auto& [key, m] : j["operators"].items()) {
        int w;
        try {
            w = std::stoi(key);
        } catch (...) {
            throw Error(Errc::parse, "rb JSON: operator keys must be omega indices");
        }
        if (w < 0 || w >= omega) throw Error(Errc::parse, "rb JSON: operator keys must be 0..|Omega|-1");
        if (!m.is_array() || static_cast<int>(m.size()) != d)
            throw Error(Errc::parse, "rb JSON: operators must be dim x dim matrices");
        auto& mat = ops[w];
        mat.resize(static_cast<size_t>(d) * d);
        for (int i = 0; i < d; ++i) {
            if (!m[i].is_array() || static_cast<int>(m[i].size()) != d)
                throw Error(Errc::parse, "rb JSON: operators must be dim x dim matrices");
            for (int k = 0; k < d; ++k) mat[i * d + k] = rational_from_json(m[i][k]);
        }
    }
    if (static_cast<int>(j["weights"].size()) != omega)
        throw Error(Errc::parse, "rb JSON: weights must match operators");
    for (auto& [key, val] : j["weights"].items()) {
        int w;
        try {
            w = std::stoi(key);
        } catch (...) {
            throw Error(Errc::parse, "rb JSON: weight keys must be omega indices");
        }
        if (w < 0 || w >= omega) throw Error(Errc::parse, "rb JSON: weight keys must be 0..|Omega|-1");
        ws[w] = rational_from_json(val);
    }
    return OmegaRBAlgebra(d, omega, std::move(mult), std::move(ops), std::move(ws));
}

}  // namespace otrid
