#include "wco/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace wco {

namespace {

double finite_number(const json& j, const std::string& what) {
    if (!j.is_number()) throw std::invalid_argument(what + ": expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument(what + ": NaN/Inf rejected");
    return v;
}

}  // namespace

PointSpace space_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("points") || !doc.contains("mass") ||
        !doc.contains("phi") || !doc.contains("w"))
        throw std::invalid_argument("space document: need points/mass/phi/w");

    std::vector<std::string> points;
    for (const auto& p : doc.at("points")) {
        if (!p.is_string()) throw std::invalid_argument("space document: point labels are strings");
        points.push_back(p.get<std::string>());
    }
    std::vector<double> mass;
    std::vector<std::string> phi;
    std::vector<Complex> w;
    for (const auto& label : points) {
        if (!doc.at("mass").contains(label))
            throw std::invalid_argument("space document: missing mass for " + label);
        double m = finite_number(doc.at("mass").at(label), "mass of " + label);
        if (m <= 0.0) throw std::invalid_argument("nonpositive mass at point " + label);
        mass.push_back(m);

        if (!doc.at("phi").contains(label))
            throw std::invalid_argument("space document: missing phi for " + label);
        phi.push_back(doc.at("phi").at(label).get<std::string>());

        if (!doc.at("w").contains(label))
            throw std::invalid_argument("space document: missing w for " + label);
        const json& z = doc.at("w").at(label);
        if (!z.is_array() || z.size() != 2)
            throw std::invalid_argument("space document: w entries are [re, im]");
        w.emplace_back(finite_number(z[0], "w of " + label), finite_number(z[1], "w of " + label));
    }
    return build_space(points, mass, phi, w);
}

PointSpace load_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json doc = json::parse(in);
    return space_from_json(doc);
}

json space_to_json(const PointSpace& s) {
    json doc;
    doc["points"] = json::array();
    doc["mass"] = json::object();
    doc["phi"] = json::object();
    doc["w"] = json::object();
    for (int i = 0; i < s.size(); ++i) {
        const std::string& l = s.label(i);
        doc["points"].push_back(l);
        doc["mass"][l] = s.mass(i);
        doc["phi"][l] = s.label(s.phi(i));
        doc["w"][l] = {s.weight(i).real(), s.weight(i).imag()};
    }
    return doc;
}

json field_to_json(const PointSpace& s, const ScalarField& f) {
    json out = json::object();
    for (int i = 0; i < s.size(); ++i) {
        if (std::isinf(f[i]))
            out[s.label(i)] = "inf";
        else
            out[s.label(i)] = f[i];
    }
    return out;
}

json weight_to_json(const PointSpace& s, const WeightFunction& w) {
    json out = json::object();
    for (int i = 0; i < s.size(); ++i) out[s.label(i)] = {w[i].real(), w[i].imag()};
    return out;
}

json verdict_to_json(const Verdict& v) {
    json out;
    out["status"] = status_name(v.status);
    if (v.witness) {
        json w;
        w["point"] = v.witness->point;
        w["values"] = json::object();
        for (const auto& [k, val] : v.witness->values) {
            if (std::isinf(val))
                w["values"][k] = "inf";
            else
                w["values"][k] = val;
        }
        out["witness"] = w;
    }
    if (v.constant) {
        if (std::isinf(*v.constant))
            out["constant"] = "inf";
        else
            out["constant"] = *v.constant;
    }
    out["details"] = v.details;
    return out;
}

json matrix_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wco
