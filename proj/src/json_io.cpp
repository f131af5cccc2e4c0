#include "platt/json_io.hpp"

#include "platt/errors.hpp"

#include <utility>

namespace platt {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) parse_fail(std::string("field \"") + key + "\" must be an integer");
    return v.get<long>();
}

Scalar scalar_from_json(const json& v) {
    if (!v.is_string()) parse_fail("scalar entries must be strings");
    try {
        return scalar_from_string(v.get<std::string>());
    } catch (const std::exception&) {
        parse_fail("malformed scalar \"" + v.get<std::string>() + "\"");
    }
}

std::vector<Matrix> matrices_from_json(const json& v, std::size_t count) {
    if (!v.is_array() || v.size() != count) parse_fail("wrong number of matrices");
    std::vector<Matrix> out;
    for (const json& m : v) out.push_back(matrix_from_json(m));
    return out;
}

} // namespace

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx < m.cols(); ++jx)
            row.push_back(scalar_to_string(m.at(i, jx)));
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

Matrix matrix_from_json(const json& j) {
    long r = long_field(j, "rows"), c = long_field(j, "cols");
    if (r < 0 || c < 0) parse_fail("negative matrix dimensions");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(r))
        parse_fail("entry row count mismatch");
    Matrix m(r, c);
    for (long i = 0; i < r; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(c))
            parse_fail("entry column count mismatch");
        for (long jx = 0; jx < c; ++jx) m.at(i, jx) = scalar_from_json(row.at(jx));
    }
    return m;
}

json module_to_json(const FGModule& m) {
    json out;
    out["free"] = m.free_rank;
    out["torsion"] = m.torsion;
    return out;
}

FGModule module_from_json(const json& j, long p) {
    long free = long_field(j, "free");
    const json& tor = field(j, "torsion");
    if (free < 0 || !tor.is_array()) parse_fail("malformed module descriptor");
    FGModule m = FGModule::free_module(p, free);
    for (const json& e : tor) {
        if (!e.is_number_integer() || e.get<int>() <= 0)
            parse_fail("torsion exponents must be positive integers");
        m.torsion.push_back(e.get<int>());
    }
    return m;
}

json lattice_to_json(const GLattice& m) {
    json out;
    out["p"] = m.p;
    out["n"] = m.n;
    out["rank"] = m.rank;
    out["action"] = matrix_to_json(m.action);
    return out;
}

GLattice lattice_from_json(const json& j) {
    long p = long_field(j, "p");
    long n = long_field(j, "n");
    long rank = long_field(j, "rank");
    Matrix action = matrix_from_json(field(j, "action"));
    if (action.rows() != static_cast<std::size_t>(rank) || action.rows() != action.cols())
        parse_fail("action matrix does not match the declared rank");
    try {
        return GLattice::make(p, static_cast<int>(n), std::move(action));
    } catch (const Error& e) {
        parse_fail(std::string("invalid lattice: ") + e.what());
    }
}

json mackey_to_json(const Mackey& x) {
    json out;
    out["p"] = x.p;
    out["n"] = x.n;
    json levels = json::array(), res = json::array(), tr = json::array(),
         gamma = json::array();
    for (int k = 0; k <= x.n; ++k) {
        levels.push_back(module_to_json(x.level[k]));
        gamma.push_back(matrix_to_json(x.gamma[k].mat));
    }
    for (int k = 0; k < x.n; ++k) {
        res.push_back(matrix_to_json(x.res[k].mat));
        tr.push_back(matrix_to_json(x.tr[k].mat));
    }
    out["levels"] = std::move(levels);
    out["res"] = std::move(res);
    out["tr"] = std::move(tr);
    out["gamma"] = std::move(gamma);
    return out;
}

Mackey mackey_from_json(const json& j, bool validate) {
    long p = long_field(j, "p");
    int n = static_cast<int>(long_field(j, "n"));
    if (n < 0) parse_fail("negative n");
    const json& levels = field(j, "levels");
    if (!levels.is_array() || levels.size() != static_cast<std::size_t>(n + 1))
        parse_fail("wrong number of levels");
    Mackey x{p, n, {}, {}, {}, {}};
    for (const json& l : levels) x.level.push_back(module_from_json(l, p));
    auto res = matrices_from_json(field(j, "res"), n);
    auto tr = matrices_from_json(field(j, "tr"), n);
    auto gamma = matrices_from_json(field(j, "gamma"), n + 1);
    try {
        for (int k = 0; k <= n; ++k)
            x.gamma.push_back(ModuleMap::make(x.level[k], x.level[k], std::move(gamma[k])));
        for (int k = 0; k < n; ++k) {
            x.res.push_back(ModuleMap::make(x.level[k], x.level[k + 1], std::move(res[k])));
            x.tr.push_back(ModuleMap::make(x.level[k + 1], x.level[k], std::move(tr[k])));
        }
        if (validate) mackey_validate(x);
    } catch (const Error& e) {
        parse_fail(std::string("invalid Mackey functor: ") + e.what());
    }
    return x;
}

json gentle_to_json(const GentleFunctor& f) {
    json out;
    out["p"] = f.p;
    out["n"] = f.n;
    json levels = json::array(), res = json::array(), tr = json::array();
    for (int k = 0; k <= f.n; ++k) levels.push_back(module_to_json(f.vertex[k]));
    for (int k = 0; k < f.n; ++k) {
        res.push_back(matrix_to_json(f.up[k].mat));
        tr.push_back(matrix_to_json(f.down[k].mat));
    }
    out["levels"] = std::move(levels);
    out["res"] = std::move(res);
    out["tr"] = std::move(tr);
    return out;
}

GentleFunctor gentle_from_json(const json& j) {
    long p = long_field(j, "p");
    int n = static_cast<int>(long_field(j, "n"));
    if (n < 0) parse_fail("negative n");
    const json& levels = field(j, "levels");
    if (!levels.is_array() || levels.size() != static_cast<std::size_t>(n + 1))
        parse_fail("wrong number of levels");
    GentleFunctor f{p, n, {}, {}, {}};
    for (const json& l : levels) f.vertex.push_back(module_from_json(l, p));
    auto up = matrices_from_json(field(j, "res"), n);
    auto down = matrices_from_json(field(j, "tr"), n);
    try {
        for (int k = 0; k < n; ++k) {
            f.up.push_back(ModuleMap::make(f.vertex[k], f.vertex[k + 1], std::move(up[k])));
            f.down.push_back(ModuleMap::make(f.vertex[k + 1], f.vertex[k], std::move(down[k])));
        }
        gentle_validate(f);
    } catch (const Error& e) {
        parse_fail(std::string("invalid gentle functor: ") + e.what());
    }
    return f;
}

json presentation_to_json(const PermPresentation& pres) {
    json out;
    out["p"] = pres.p;
    out["n"] = pres.n;
    out["omega0"] = pres.omega0;
    out["omega1"] = pres.omega1;
    out["inject"] = matrix_to_json(pres.inject);
    out["project"] = matrix_to_json(pres.project);
    return out;
}

PermPresentation presentation_from_json(const json& j) {
    PermPresentation pres;
    pres.p = long_field(j, "p");
    pres.n = static_cast<int>(long_field(j, "n"));
    const json& o0 = field(j, "omega0");
    const json& o1 = field(j, "omega1");
    if (!o0.is_array() || !o1.is_array() ||
        o0.size() != static_cast<std::size_t>(pres.n + 1) || o0.size() != o1.size())
        parse_fail("orbit count vectors must list levels 0..n");
    for (const json& e : o0) pres.omega0.push_back(e.get<long>());
    for (const json& e : o1) pres.omega1.push_back(e.get<long>());
    pres.inject = matrix_from_json(field(j, "inject"));
    pres.project = matrix_from_json(field(j, "project"));
    return pres;
}

} // namespace platt
