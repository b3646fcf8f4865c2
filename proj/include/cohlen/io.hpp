#pragma once

#include <json.hpp>

#include "cohlen/coh_function.hpp"
#include "cohlen/complex.hpp"

namespace cohlen {

using json = nlohmann::ordered_json;

/* ---- fields ------------------------------------------------------------- */

inline json field_to_json(const Field &f)
{
    json j;
    switch (f.kind()) {
    case FieldKind::prime:
        j["kind"] = "prime";
        j["p"] = f.characteristic();
        break;
    case FieldKind::extension:
        j["kind"] = "extension";
        j["p"] = f.characteristic();
        j["modulus"] = f.ext_modulus();
        break;
    case FieldKind::rationals:
        j["kind"] = "rationals";
        break;
    }
    return j;
}

inline Field field_from_json(const json &j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "prime")
        return Field::prime(j.at("p").get<int64_t>());
    if (kind == "extension")
        return Field::extension(j.at("p").get<int64_t>(), j.at("modulus").get<std::vector<int64_t>>());
    if (kind == "rationals")
        return Field::rationals();
    throw error("field_from_json: unknown kind " + kind);
}

inline json elem_to_json(const Field &f, const FieldElem &e)
{
    switch (f.kind()) {
    case FieldKind::prime:
        return std::get<int64_t>(e.v);
    case FieldKind::extension:
        return std::get<ExtVec>(e.v);
    case FieldKind::rationals:
        return std::get<Rational>(e.v).to_string();
    }
    throw error("unreachable");
}

inline FieldElem elem_from_json(const Field &f, const json &j)
{
    switch (f.kind()) {
    case FieldKind::prime:
        return f.from_int(j.get<int64_t>());
    case FieldKind::extension:
        return f.from_coeffs(j.get<std::vector<int64_t>>());
    case FieldKind::rationals:
        if (j.is_number_integer())
            return f.from_int(j.get<int64_t>());
        return FieldElem{Rational::from_string(j.get<std::string>())};
    }
    throw error("unreachable");
}

/* ---- coefficient algebras ----------------------------------------------- */

inline json algebra_to_json(const CoeffAlgebra &a)
{
    switch (a.kind()) {
    case AlgKind::dual_numbers:
        return "dual_numbers";
    case AlgKind::poly_ring:
        return "poly_ring";
    case AlgKind::poly_quotient: {
        json j;
        j["kind"] = "poly_quotient";
        json coeffs = json::array();
        const Poly &m = a.modulus();
        for (int i = 0; i <= m.degree(); ++i)
            coeffs.push_back(elem_to_json(a.base_field(), m.coeff(static_cast<size_t>(i))));
        j["modulus"] = coeffs;
        return j;
    }
    }
    throw error("unreachable");
}

inline CoeffAlgebra algebra_from_json(const json &j, const Field &base)
{
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "dual_numbers")
            return CoeffAlgebra::dual_numbers(base);
        if (s == "poly_ring")
            return CoeffAlgebra::poly_ring(base);
        throw error("algebra_from_json: unknown algebra " + s);
    }
    std::string kind = j.at("kind").get<std::string>();
    require(kind == "poly_quotient", "algebra_from_json: unknown algebra kind " + kind);
    std::vector<FieldElem> coeffs;
    for (const auto &c : j.at("modulus"))
        coeffs.push_back(elem_from_json(base, c));
    return CoeffAlgebra::poly_quotient(base, Poly(base, coeffs));
}

/* ---- complexes ----------------------------------------------------------- */

inline json alg_elem_to_json(const CoeffAlgebra &a, const AlgElem &e)
{
    const Field &k = a.base_field();
    if (a.kind() == AlgKind::dual_numbers) {
        const DualElem &d = std::get<DualElem>(e.v);
        return json::array({elem_to_json(k, d.a), elem_to_json(k, d.b)});
    }
    const Poly &p = std::get<Poly>(e.v);
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(elem_to_json(k, p.coeff(static_cast<size_t>(i))));
    return coeffs;
}

inline AlgElem alg_elem_from_json(const CoeffAlgebra &a, const json &j)
{
    const Field &k = a.base_field();
    require(j.is_array(), "alg_elem_from_json: entry must be an array");
    if (a.kind() == AlgKind::dual_numbers) {
        require(j.size() == 2, "alg_elem_from_json: dual entry needs [a, b]");
        return a.dual(elem_from_json(k, j[0]), elem_from_json(k, j[1]));
    }
    std::vector<FieldElem> coeffs;
    for (const auto &c : j)
        coeffs.push_back(elem_from_json(k, c));
    return a.from_poly(Poly(k, coeffs));
}

/* the document {algebra, field, ranks: {degree: count},
   diffs: {degree: [[entry]]}}; keys ordered for byte-stable output */
inline json complex_to_json(const PerfectComplex &x)
{
    const CoeffAlgebra &a = x.algebra();
    json j;
    j["algebra"] = algebra_to_json(a);
    j["field"] = field_to_json(a.base_field());
    json ranks = json::object();
    for (int d = x.support_min(); d <= x.support_max(); ++d)
        if (x.rank(d) > 0)
            ranks[std::to_string(d)] = x.rank(d);
    j["ranks"] = ranks;
    json diffs = json::object();
    for (int d = x.support_min(); d < x.support_max(); ++d) {
        AlgMatrix m = x.diff(d);
        if (m.rows() == 0 || m.cols() == 0 || m.is_zero())
            continue;
        json rows = json::array();
        for (size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (size_t c = 0; c < m.cols(); ++c)
                row.push_back(alg_elem_to_json(a, m.at(r, c)));
            rows.push_back(row);
        }
        diffs[std::to_string(d)] = rows;
    }
    j["diffs"] = diffs;
    return j;
}

inline PerfectComplex complex_from_json(const json &j)
{
    Field base = field_from_json(j.at("field"));
    CoeffAlgebra alg = algebra_from_json(j.at("algebra"), base);
    std::map<int, size_t> ranks;
    for (auto it = j.at("ranks").begin(); it != j.at("ranks").end(); ++it)
        ranks[std::stoi(it.key())] = it.value().get<size_t>();
    std::map<int, AlgMatrix> diffs;
    if (j.contains("diffs"))
        for (auto it = j.at("diffs").begin(); it != j.at("diffs").end(); ++it) {
            int d = std::stoi(it.key());
            const json &rows = it.value();
            size_t nrows = rows.size();
            size_t ncols = nrows > 0 ? rows[0].size() : 0;
            AlgMatrix m(alg, nrows, ncols);
            for (size_t r = 0; r < nrows; ++r) {
                require(rows[r].size() == ncols, "complex_from_json: ragged differential");
                for (size_t c = 0; c < ncols; ++c)
                    m.set(r, c, alg_elem_from_json(alg, rows[r][c]));
            }
            diffs.emplace(d, std::move(m));
        }
    PerfectComplex x = PerfectComplex::from_maps(alg, ranks, diffs);
    if (auto viol = x.validate())
        throw error("complex_from_json: d^2 != 0 at degree " + std::to_string(viol->degree) +
                    " entry (" + std::to_string(viol->row) + "," + std::to_string(viol->col) + ")");
    return x;
}

/* canonical serialized form: two-space indent, trailing newline */
inline std::string complex_to_text(const PerfectComplex &x)
{
    return complex_to_json(x).dump(2) + "\n";
}

/* ---- tables --------------------------------------------------------------- */

inline json barcode_to_json(const Barcode &bc)
{
    json bars = json::array();
    for (const auto &[key, mult] : bc.bars()) {
        json bar;
        bar["n"] = key.first;
        bar["r"] = key.second;
        bar["multiplicity"] = mult;
        bars.push_back(bar);
    }
    return bars;
}

/* chi-table rows (probe label, shift, value) as CSV */
struct ChiTableRow {
    std::string probe;
    int shift;
    size_t value;
};

inline std::string chi_table_csv(const std::vector<ChiTableRow> &rows)
{
    std::string out = "probe,shift,value\n";
    for (const auto &r : rows)
        out += r.probe + "," + std::to_string(r.shift) + "," + std::to_string(r.value) + "\n";
    return out;
}

} // namespace cohlen
