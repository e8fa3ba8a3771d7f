#include "otrid/typed_words.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace otrid {

using nlohmann::ordered_json;

MatchingAlgebra::MatchingAlgebra(int dim, int omega_size, std::vector<Vec> tables)
    : dim_(dim), omega_size_(omega_size), tables_(std::move(tables)) {
    if (dim_ < 1 || omega_size_ < 1) throw Error(Errc::invalid, "matching algebra: dim and |Omega| must be >= 1");
    if (tables_.size() != static_cast<size_t>(omega_size_) * dim_ * dim_)
        throw Error(Errc::invalid, "matching algebra: wrong number of structure vectors");
    for (const auto& v : tables_)
        for (const auto& [k, c] : v.terms())
            if (k < 0 || k >= dim_) throw Error(Errc::invalid, "matching algebra: basis index out of range");
}

MatchingAlgebra::Vec MatchingAlgebra::star(int omega, const Vec& a, const Vec& b) const {
    if (omega < 0 || omega >= omega_size_) throw Error(Errc::domain, "star: omega out of range");
    return Vec::bilinear([&](int i, int j) { return star_basis(omega, i, j); }, a, b);
}

bool MatchingAlgebra::symmetric() const {
    for (int w = 0; w < omega_size_; ++w)
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                if (star_basis(w, i, j) != star_basis(w, j, i)) return false;
    return true;
}

MatchingAlgebra MatchingAlgebra::scalar(int omega_size) {
    std::vector<Vec> t(omega_size, Vec::single(0));
    return MatchingAlgebra(1, omega_size, std::move(t));
}

MatchingAlgebra MatchingAlgebra::pointwise(int dim, int omega_size) {
    std::vector<Vec> t;
    t.reserve(static_cast<size_t>(omega_size) * dim * dim);
    for (int w = 0; w < omega_size; ++w)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) t.push_back(i == j ? Vec::single(i) : Vec());
    return MatchingAlgebra(dim, omega_size, std::move(t));
}

MatchingAlgebra MatchingAlgebra::free_truncation(int letters, int omega_size) {
    int dim = letters + letters * letters * omega_size;
    auto composite = [&](int i, int w, int j) { return letters + (i * omega_size + w) * letters + j; };
    std::vector<Vec> t;
    t.reserve(static_cast<size_t>(omega_size) * dim * dim);
    for (int w = 0; w < omega_size; ++w)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                t.push_back(i < letters && j < letters ? Vec::single(composite(i, w, j))
                                                       : Vec::single(letters));
    return MatchingAlgebra(dim, omega_size, std::move(t));
}

MatchingReport check_matching(const MatchingAlgebra& alg) {
    MatchingReport rep;
    const int d = alg.dim();
    const int n = alg.omega_size();
    auto show = [](const MatchingAlgebra::Vec& v) {
        return v.str([](int k) { return "e" + std::to_string(k); });
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (int k = 0; k < d; ++k) {
                        auto lhs = alg.star(b, alg.star_basis(a, i, j), MatchingAlgebra::Vec::single(k));
                        auto rhs = alg.star(a, MatchingAlgebra::Vec::single(i), alg.star_basis(b, j, k));
                        if (lhs != rhs)
                            rep.violations.push_back({a, b, i, j, k, show(lhs), show(rhs)});
                    }
    rep.passed = rep.violations.empty();
    return rep;
}

std::string MatchingReport::to_json() const {
    ordered_json j;
    j["passed"] = passed;
    j["violations"] = ordered_json::array();
    for (const auto& v : violations) {
        ordered_json jv;
        jv["alpha"] = v.alpha;
        jv["beta"] = v.beta;
        jv["basis_triple"] = {v.i, v.j, v.k};
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2);
}

namespace {

Rational coeff_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw Error(Errc::parse, "coefficient must be an integer or a 'p/q' string");
}

}  // namespace

std::string MatchingAlgebra::to_json() const {
    ordered_json j;
    j["dim"] = dim_;
    ordered_json star = ordered_json::object();
    for (int w = 0; w < omega_size_; ++w) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < dim_; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < dim_; ++jj) {
                ordered_json cell = ordered_json::array();
                for (const auto& [k, c] : star_basis(w, i, jj).terms())
                    cell.push_back(ordered_json::array({c.str(), k}));
                row.push_back(cell);
            }
            rows.push_back(row);
        }
        star[std::to_string(w)] = rows;
    }
    j["star"] = star;
    return j.dump(2);
}

MatchingAlgebra MatchingAlgebra::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Errc::parse, std::string("algebra JSON: ") + e.what());
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw Error(Errc::parse, "algebra JSON: missing integer 'dim'");
    if (!j.contains("star") || !j["star"].is_object())
        throw Error(Errc::parse, "algebra JSON: missing object 'star'");
    int d = j["dim"].get<int>();
    int omega = static_cast<int>(j["star"].size());
    std::vector<Vec> tables(static_cast<size_t>(omega) * d * d);
    for (auto& [key, rows] : j["star"].items()) {
        int w;
        try {
            w = std::stoi(key);
        } catch (...) {
            throw Error(Errc::parse, "algebra JSON: star keys must be omega indices");
        }
        if (w < 0 || w >= omega)
            throw Error(Errc::parse, "algebra JSON: star keys must be 0..|Omega|-1 without gaps");
        if (!rows.is_array() || static_cast<int>(rows.size()) != d)
            throw Error(Errc::invalid, "algebra JSON: star tables must be dim x dim");
        for (int i = 0; i < d; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != d)
                throw Error(Errc::invalid, "algebra JSON: star tables must be dim x dim");
            for (int jj = 0; jj < d; ++jj) {
                Vec v;
                for (const auto& pair : rows[i][jj]) {
                    if (!pair.is_array() || pair.size() != 2 || !pair[1].is_number_integer())
                        throw Error(Errc::parse, "algebra JSON: structure entries are [coeff, basis] pairs");
                    v.add_term(pair[1].get<int>(), coeff_from_json(pair[0]));
                }
                tables[(static_cast<size_t>(w) * d + i) * d + jj] = std::move(v);
            }
        }
    }
    return MatchingAlgebra(d, omega, std::move(tables));
}

std::string TypedWord::str() const {
    std::string s = std::to_string(letters[0]);
    for (size_t i = 0; i < types.size(); ++i)
        s += " :" + std::to_string(types[i]) + " " + std::to_string(letters[i + 1]);
    return s;
}

TypedWord parse_word(const std::string& text, int dim, int omega_size) {
    std::istringstream in(text);
    std::string tok;
    TypedWord w;
    bool expect_letter = true;
    while (in >> tok) {
        if (expect_letter) {
            if (tok.empty() || tok[0] == ':')
                throw Error(Errc::parse, "word: expected a letter index, got '" + tok + "'");
            int v;
            try {
                v = std::stoi(tok);
            } catch (...) {
                throw Error(Errc::parse, "word: bad letter '" + tok + "'");
            }
            if (v < 0 || v >= dim) throw Error(Errc::domain, "word: letter index out of range");
            w.letters.push_back(v);
        } else {
            if (tok.size() < 2 || tok[0] != ':')
                throw Error(Errc::parse, "word: expected ':<type>', got '" + tok + "'");
            int v;
            try {
                v = std::stoi(tok.substr(1));
            } catch (...) {
                throw Error(Errc::parse, "word: bad type '" + tok + "'");
            }
            if (v < 0 || v >= omega_size) throw Error(Errc::domain, "word: type index out of range");
            w.types.push_back(v);
        }
        expect_letter = !expect_letter;
    }
    if (w.letters.empty() || w.letters.size() != w.types.size() + 1)
        throw Error(Errc::parse, "word: letters and types must alternate, ending with a letter");
    return w;
}

WordAlgebra::WordAlgebra(const OmegaTable& t, const MatchingAlgebra& alg, bool require_checks)
    : table_(&t), alg_(&alg) {
    if (require_checks) {
        if (!table_passes(t, CheckLevel::Ets))
            throw Error(Errc::invalid, "word products: the table is not an ETS");
        if (!check_matching(alg).passed)
            throw Error(Errc::invalid, "word products: the algebra is not matching associative");
    }
}

WordComb WordAlgebra::lift(const MatchingAlgebra::Vec& v) const {
    WordComb out;
    for (const auto& [k, c] : v.terms()) out.add_term(TypedWord{{k}, {}}, c);
    return out;
}

WordComb WordAlgebra::prepend(const MatchingAlgebra::Vec& head, int type, const WordComb& tail) const {
    WordComb out;
    for (const auto& [hk, hc] : head.terms()) {
        for (const auto& [w, wc] : tail.terms()) {
            TypedWord nw;
            nw.letters.reserve(w.letters.size() + 1);
            nw.letters.push_back(hk);
            nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.end());
            nw.types.reserve(w.types.size() + 1);
            nw.types.push_back(type);
            nw.types.insert(nw.types.end(), w.types.begin(), w.types.end());
            out.add_term(std::move(nw), hc * wc);
        }
    }
    return out;
}

WordComb WordAlgebra::basis_product(Prod op, int omega, const TypedWord& a, const TypedWord& b) const {
    const OmegaTable& t = *table_;
    if (omega < 0 || omega >= t.size()) throw Error(Errc::domain, "word product: omega out of range");
    auto head = [](const TypedWord& w) { return MatchingAlgebra::Vec::single(w.letters[0]); };
    auto tail = [](const TypedWord& w) {
        return TypedWord{std::vector<int>(w.letters.begin() + 1, w.letters.end()),
                         std::vector<int>(w.types.begin() + 1, w.types.end())};
    };

    if (op == Prod::Prec) {
        if (a.length() == 1) return prepend(head(a), omega, WordComb::single(b));
        int a1 = a.types[0];
        TypedWord at = tail(a);
        WordComb out = prepend(head(a), t.ra(a1, omega), basis_product(Prod::Succ, t.rt(a1, omega), at, b));
        out = out + prepend(head(a), t.la(a1, omega), basis_product(Prod::Prec, t.lt(a1, omega), at, b));
        out = out + prepend(head(a), t.dot(a1, omega), basis_product(Prod::Circ, t.star(a1, omega), at, b));
        return out;
    }
    if (op == Prod::Succ) {
        if (b.length() == 1) return prepend(head(b), omega, WordComb::single(a));
        int b1 = b.types[0];
        TypedWord bt = tail(b);
        WordComb out = prepend(head(b), t.ra(omega, b1), basis_product(Prod::Succ, t.rt(omega, b1), a, bt));
        out = out + prepend(head(b), t.la(omega, b1), basis_product(Prod::Prec, t.lt(omega, b1), a, bt));
        out = out + prepend(head(b), t.dot(omega, b1), basis_product(Prod::Circ, t.star(omega, b1), a, bt));
        return out;
    }
    // circ
    MatchingAlgebra::Vec merged = alg_->star_basis(omega, a.letters[0], b.letters[0]);
    if (a.length() == 1 && b.length() == 1) return lift(merged);
    if (a.length() == 1) return prepend(merged, b.types[0], WordComb::single(tail(b)));
    if (b.length() == 1) return prepend(merged, a.types[0], WordComb::single(tail(a)));
    int a1 = a.types[0], b1 = b.types[0];
    TypedWord at = tail(a), bt = tail(b);
    WordComb out = prepend(merged, t.ra(a1, b1), basis_product(Prod::Succ, t.rt(a1, b1), at, bt));
    out = out + prepend(merged, t.la(a1, b1), basis_product(Prod::Prec, t.lt(a1, b1), at, bt));
    out = out + prepend(merged, t.dot(a1, b1), basis_product(Prod::Circ, t.star(a1, b1), at, bt));
    return out;
}

WordComb WordAlgebra::product(Prod op, int omega, const WordComb& a, const WordComb& b) const {
    return WordComb::bilinear(
        [&](const TypedWord& x, const TypedWord& y) { return basis_product(op, omega, x, y); }, a, b);
}

WordComb WordAlgebra::product_with_unit(Prod op, int omega, const std::optional<WordComb>& a,
                                        const std::optional<WordComb>& b) const {
    if (!a && !b) throw Error(Errc::domain, "word product: both operands are the empty word");
    if (!a) return op == Prod::Succ ? *b : WordComb();
    if (!b) return op == Prod::Prec ? *a : WordComb();
    return product(op, omega, *a, *b);
}

BigInt quasi_shuffle_term_count(int m, int n) {
    if (m < 0 || n < 0) throw Error(Errc::domain, "Delannoy: m, n must be >= 0");
    std::vector<std::vector<BigInt>> d(m + 1, std::vector<BigInt>(n + 1, BigInt(1)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) d[i][j] = d[i - 1][j] + d[i][j - 1] + d[i - 1][j - 1];
    return d[m][n];
}

std::vector<TypedWord> enumerate_words(int length, int dim, int omega_size) {
    if (length < 1) throw Error(Errc::domain, "enumerate words: length must be >= 1");
    std::vector<TypedWord> out;
    TypedWord w;
    w.letters.assign(length, 0);
    w.types.assign(length - 1, 0);
    for (;;) {
        out.push_back(w);
        int i = length - 1;
        while (i >= 0 && ++w.letters[i] == dim) w.letters[i--] = 0;
        if (i >= 0) continue;
        i = length - 2;
        while (i >= 0 && ++w.types[i] == omega_size) w.types[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace otrid
