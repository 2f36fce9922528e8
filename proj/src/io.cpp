#include "griffin/io.hpp"

#include "griffin/errors.hpp"

namespace griffin {

namespace {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw InvalidInput("bad coefficient \"" + text + "\"");
    q.canonicalize();
    if (q.get_den() == 0) throw InvalidInput("zero denominator in \"" + text + "\"");
    return q;
}

// Accepts "3", "-2/5" and plain decimals such as "0.25".
Rational coefficient_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InvalidInput("coefficient must be a string or integer");
    const std::string text = j.get<std::string>();
    const auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::string denominator = "1" + std::string(text.size() - dot - 1, '0');
    return parse_rational(digits + "/" + denominator);
}

int get_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& t : p.sorted_terms(MonomialOrder::grevlex())) {
        out.push_back({{"coeff", t.coeff.get_str()}, {"exp", t.exponent.entries()}});
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j, int ambient) {
    if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exp")) {
            throw InvalidInput("each term needs \"coeff\" and \"exp\"");
        }
        const WeakComposition exp = composition_from_json(term.at("exp"));
        if (static_cast<int>(exp.size()) != ambient) {
            throw InvalidInput("exponent length " + std::to_string(exp.size()) + " does not match n = " +
                               std::to_string(ambient));
        }
        terms.push_back({ExponentVector(exp), coefficient_from_json(term.at("coeff"))});
    }
    return Polynomial::from_terms(ambient, terms);
}

Json composition_to_json(const WeakComposition& alpha) { return Json(alpha); }

WeakComposition composition_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("composition JSON must be an array");
    WeakComposition out;
    for (const auto& e : j) {
        const int v = get_int(e, "composition entry");
        if (v < 0) throw InvalidInput("composition entries must be non-negative");
        out.push_back(v);
    }
    return out;
}

Json diagram_to_json(const ContainerDiagram& sigma) {
    Json boxes = Json::array();
    for (const auto& b : sigma.boxes()) {
        if (b.value != 0) boxes.push_back({b.row, b.col, b.value});
    }
    Json floats = Json::array();
    for (const auto& f : sigma.floats()) floats.push_back({f.value, f.col});
    return Json{{"shape", sigma.lambda().conjugate().parts()}, {"boxes", boxes}, {"floats", floats}};
}

ContainerDiagram diagram_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("shape")) throw InvalidInput("diagram JSON needs \"shape\"");
        std::vector<int> shape;
        for (const auto& e : j.at("shape")) shape.push_back(get_int(e, "shape entry"));
        const Partition lambda = Partition(shape).conjugate();
        std::vector<BoxEntry> boxes;
        for (const auto& b : j.value("boxes", Json::array())) {
            if (!b.is_array() || b.size() != 3) throw InvalidInput("boxes are [row, col, value]");
            boxes.push_back({get_int(b[0], "row"), get_int(b[1], "col"), get_int(b[2], "value")});
        }
        std::vector<FloatEntry> floats;
        for (const auto& f : j.value("floats", Json::array())) {
            if (!f.is_array() || f.size() != 2) throw InvalidInput("floats are [value, col]");
            floats.push_back({get_int(f[0], "value"), get_int(f[1], "col")});
        }
        return ContainerDiagram::from_cells(lambda, boxes, floats);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed diagram JSON: ") + e.what());
    }
}

Json certificate_to_json(const TrackedPolynomial& t) {
    Json out = Json::array();
    for (const auto& [key, cofactor] : t.combination) {
        out.push_back({{"d", key.d}, {"set", key.set}, {"cofactor", polynomial_to_json(cofactor)}});
    }
    return out;
}

}  // namespace griffin
