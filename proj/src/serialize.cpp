#include "pom/serialize.hpp"

#include <cmath>
#include <stdexcept>

namespace pom {

namespace {

Json complex_to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("setup json: complex entries must be [re, im] pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::size_t integer_sqrt(std::size_t v) {
    const std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
    if (r * r != v) throw std::invalid_argument("setup json: matrix entry count is not a square");
    return r;
}

std::vector<Observable> observables_from_json(const nlohmann::json& j) {
    std::vector<Observable> out;
    for (const auto& item : j) out.push_back(Observable{matrix_from_json(item)});
    return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(complex_to_json(m(r, c)));
    return out;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("setup json: matrix must be an array");
    const std::size_t dim = integer_sqrt(j.size());
    ComplexMatrix m(dim, dim);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[idx++]);
    return m;
}

Json setup_to_json(const MeasurementSetup& setup) {
    Json out;
    out["n"] = setup.n;
    out["dim"] = setup.state.dim_a * setup.state.dim_b;
    Json state = Json::array();
    for (const Complex& a : setup.state.amplitudes) state.push_back(complex_to_json(a));
    out["state"] = std::move(state);
    Json alice = Json::array();
    for (const Observable& o : setup.alice) alice.push_back(matrix_to_json(o.matrix));
    out["alice"] = std::move(alice);
    Json bob = Json::array();
    for (const Observable& o : setup.bob) bob.push_back(matrix_to_json(o.matrix));
    out["bob"] = std::move(bob);
    return out;
}

MeasurementSetup setup_from_json(const nlohmann::json& j) {
    const nlohmann::json* body = &j;
    if (j.contains("results") && j["results"].contains("state")) body = &j["results"];
    for (const char* key : {"n", "dim", "state", "alice", "bob"})
        if (!body->contains(key))
            throw std::invalid_argument(std::string("setup json: missing key '") + key + "'");

    MeasurementSetup setup;
    setup.n = (*body)["n"].get<int>();
    const std::size_t dim = (*body)["dim"].get<std::size_t>();

    for (const auto& item : (*body)["state"]) setup.state.amplitudes.push_back(complex_from_json(item));
    if (setup.state.amplitudes.size() != dim)
        throw std::invalid_argument("setup json: state length disagrees with dim");

    setup.alice = observables_from_json((*body)["alice"]);
    setup.bob = observables_from_json((*body)["bob"]);
    if (setup.alice.empty() || setup.bob.empty())
        throw std::invalid_argument("setup json: observable lists must be non-empty");

    setup.state.dim_a = setup.alice.front().matrix.rows();
    setup.state.dim_b = setup.bob.front().matrix.rows();
    if (setup.state.dim_a * setup.state.dim_b != dim)
        throw std::invalid_argument("setup json: observable dimensions disagree with dim");
    return setup;
}

}  // namespace pom
