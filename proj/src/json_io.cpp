#include "mcm/json_io.hpp"

#include "mcm/errors.hpp"

namespace mcm {

Json matrix_to_json(const ExactMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["field"] = m.field().name();
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(rat_to_string(m.at(i, k)));
    j["entries"] = std::move(entries);
    return j;
}

ExactMatrix matrix_from_json(const Json& j) {
    try {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        FieldSpec field = FieldSpec::from_name(j.at("field").get<std::string>());
        const Json& entries = j.at("entries");
        if (entries.size() != rows * cols) throw BadInput("matrix entries length mismatch");
        ExactMatrix m(rows, cols, field);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const Json& e = entries[idx++];
                if (e.is_number_integer())
                    m.set(i, k, Rat(e.get<long>()));
                else
                    m.set(i, k, rat_from_string(e.get<std::string>()));
            }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw BadInput(std::string("bad matrix json: ") + e.what());
    }
}

Json extint_to_json(const ExtInt& v) {
    if (v.is_finite()) return Json(v.value());
    return Json(v.str());
}

}  // namespace mcm
